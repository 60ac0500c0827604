/*
 * Copyright 2026 The teamlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs every acceptance criterion once and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "teamlogic/harness.hpp"

using namespace teamlogic;

namespace {

struct Result {
  bool ok = false;
  std::string details;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string summary(const CheckReport& r) {
  std::ostringstream os;
  os << r.check << ": " << to_string(r.verdict) << ", " << r.passed << "/" << r.instances
     << " passed";
  if (r.failed) os << ", " << r.failed << " failed";
  if (r.inconclusive) os << ", " << r.inconclusive << " inconclusive";
  if (r.index) os << ", first bad index " << *r.index;
  if (!r.detail.empty()) os << ", " << r.detail;
  return os.str();
}

// Runs the named suites at seed 1 with their default sizes. All must pass.
Result suites(std::initializer_list<const char*> names, double time_limit = 0) {
  Result res{true, ""};
  const auto t0 = Clock::now();
  for (const char* name : names) {
    RunOptions o;
    o.seed = 1;
    const CheckReport r = run_property(name, o);
    res.ok = res.ok && r.verdict == Verdict::Pass;
    if (!res.details.empty()) res.details += "; ";
    res.details += summary(r);
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "; " << dt << " s";
  if (time_limit > 0) {
    os << " (limit " << time_limit << " s)";
    res.ok = res.ok && dt < time_limit;
  }
  res.details += os.str();
  return res;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Result determinism() {
  Result res{true, ""};
  std::size_t compared = 0;
  for (const std::string& name : property_names()) {
    const std::string base = std::string(TL_BINARY) + " check " + name + " --budget 25 --seed 7";
    int s1 = 0, s2 = 0, s3 = 0;
    const std::string a = run_command(base, s1);
    const std::string b = run_command(base, s2);
    const std::string c = run_command(base + " --workers 2", s3);
    if (a.empty() || a != b || a != c || s1 != s2 || s1 != s3) {
      res.ok = false;
      res.details += "tl check " + name + " differs; ";
    }
    RunOptions o1;
    o1.seed = 7;
    o1.budget = 25;
    RunOptions o2 = o1;
    o2.workers = 2;
    if (run_property(name, o1).to_json().dump() != run_property(name, o2).to_json().dump()) {
      res.ok = false;
      res.details += "in-process " + name + " differs across workers; ";
    }
    ++compared;
  }
  res.details += std::to_string(compared) + " checks compared over 3 CLI runs and 2 worker counts";
  return res;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* description;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "maximal-subteam engine agrees with the lax oracle",
       [] { return suites({"maxsub-agreement"}, 300); }},
      {2, "flatness of first-order formulas", [] { return suites({"flatness"}); }},
      {3, "locality under lax semantics and a pinned lax/strict divergence",
       [] { return suites({"locality", "lax-strict-divergence"}); }},
      {4, "prenex pass preserves meaning, universal count and atoms",
       [] { return suites({"prenex"}); }},
      {5, "universal collapse leaves at most one universal quantifier",
       [] { return suites({"one-forall"}); }},
      {6, "negated reachability encoding matches BFS", [] { return suites({"neg-tc"}); }},
      {7, "interval-halving cut properties for m <= 3",
       [] { return suites({"mid-properties"}, 10); }},
      {8, "swap strategy preserves atomic types and universal closure",
       [] { return suites({"ef-type", "swap-closure"}); }},
      {9, "union closure of inclusion formulas", [] { return suites({"union-closure"}); }},
      {10, "check reports are byte-identical across runs", determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.ok) ++failures;
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << c.number << " " << c.description << " ("
              << r.details << ")" << std::endl;
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
