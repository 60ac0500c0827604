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


#include <gtest/gtest.h>

#include "teamlogic/error.hpp"
#include "teamlogic/evaluator.hpp"
#include "teamlogic/incmax.hpp"

using namespace teamlogic;

namespace {

Structure cycle3() {
  Signature sig;
  sig.relations["E"] = 2;
  sig.constants = {"c"};
  return Structure(sig, 3, {{"E", {{0, 1}, {1, 2}, {2, 0}, {1, 1}}}}, {{"c", 1}});
}

// Largest satisfying subteam by trying all 2^|X| subteams with the
// reference evaluator.
Team brute_force_max(const Structure& m, const Team& x, const Formula& f) {
  std::optional<Team> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
    Team y = x.select_mask(mask);
    if (eval_lax(m, y, f).verdict && (!best || y.size() > best->size())) best = y;
  }
  return *best;
}

std::vector<Team> all_teams_xy(Element dom, std::size_t max_rows) {
  std::vector<Tuple> cells;
  for (Element a = 0; a < dom; ++a)
    for (Element b = 0; b < dom; ++b) cells.push_back({a, b});
  std::vector<Team> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_rows) continue;
    std::vector<Tuple> rows;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if ((mask >> i) & 1U) rows.push_back(cells[i]);
    out.emplace_back(std::vector<std::string>{"x", "y"}, rows);
  }
  return out;
}

const char* kFormulas[] = {
    "inc(x; y)",
    "inc(x, y; y, x)",
    "E(x, y) | inc(y; x)",
    "inc(x; y) & (x = y | E(x, y))",
    "exists z. (inc(z; x) & E(z, y))",
    "forall z. (inc(z; x) | z = y)",
    "exists x. (inc(x; y) & !E(x, y))",
    "forall y. exists z. (inc(z; y) & inc(x; z))",
    "(inc(x; y) & x != y) | (inc(y; x) & E(y, x))",
    "inc(#c; x) | x = #c",
};

}  // namespace

TEST(Incmax, PinnedExample) {
  Structure m({}, 3, {}, {});
  Team x({"x", "y"}, {{0, 1}, {1, 0}, {2, 0}});
  EXPECT_EQ(max_subteam(m, x, parse("inc(x; y)")), Team({"x", "y"}, {{0, 1}, {1, 0}}));
}

TEST(Incmax, LiteralIsRowFilter) {
  Structure m = cycle3();
  Team x({"x", "y"}, {{0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(max_subteam(m, x, parse("E(x, y)")), Team({"x", "y"}, {{0, 1}, {1, 1}}));
}

TEST(Incmax, FragmentViolation) {
  Structure m = cycle3();
  Team x({"x", "y"}, {{0, 1}});
  try {
    max_subteam(m, x, parse("dep(x; y)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Fragment);
    EXPECT_NE(std::string(e.what()).find("fragment violation"), std::string::npos);
  }
}

TEST(Incmax, EmptyTeam) {
  EXPECT_TRUE(eval_inclusion(cycle3(), Team({"x", "y"}), parse("inc(x; y) & E(x, x)")));
}

TEST(Incmax, MatchesBruteForceMaximum) {
  Structure m = cycle3();
  for (const char* text : kFormulas) {
    Formula f = parse(text);
    for (const Team& x : all_teams_xy(3, 3)) {
      Team got = max_subteam(m, x, f);
      ASSERT_EQ(got, brute_force_max(m, x, f)) << text;
      ASSERT_EQ(eval_inclusion(m, x, f), eval_lax(m, x, f).verdict) << text;
    }
  }
}

TEST(Incmax, MonotoneAndIdempotent) {
  Structure m = cycle3();
  auto teams = all_teams_xy(3, 4);
  for (const char* text : kFormulas) {
    Formula f = parse(text);
    for (const Team& x : teams) {
      Team mx = max_subteam(m, x, f);
      ASSERT_EQ(max_subteam(m, mx, f), mx) << text;
      ASSERT_TRUE(eval_lax(m, mx, f).verdict) << text;
      Team wider = team_union(x, Team({"x", "y"}, {{2, 2}}));
      ASSERT_TRUE(mx.is_subteam_of(max_subteam(m, wider, f))) << text;
    }
  }
}

TEST(Incmax, StatsStayWithinBound) {
  Structure m = cycle3();
  Team x({"x", "y"}, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  IncmaxStats stats;
  max_subteam(m, x, parse("forall z. exists w. (inc(w; z) & E(z, w))"), &stats);
  EXPECT_GT(stats.sweeps, 0u);
  EXPECT_GE(stats.max_rows, 12u);
}
