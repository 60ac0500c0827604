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

#include "teamlogic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "teamlogic/error.hpp"
#include "teamlogic/evaluator.hpp"
#include "teamlogic/generators.hpp"
#include "teamlogic/harness.hpp"
#include "teamlogic/incmax.hpp"
#include "teamlogic/json_io.hpp"
#include "teamlogic/transform.hpp"

using namespace teamlogic;

struct tl_structure {
  Structure value;
};
struct tl_team {
  Team value;
};
struct tl_formula {
  Formula value;
};

namespace {

thread_local std::string last_error;

tl_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Invalid: return TL_ERR_INVALID;
    case ErrorKind::Parse: return TL_ERR_PARSE;
    case ErrorKind::Fragment: return TL_ERR_FRAGMENT;
    case ErrorKind::ResourceLimit: return TL_ERR_RESOURCE;
    case ErrorKind::Io: return TL_ERR_IO;
  }
  return TL_ERR_INTERNAL;
}

template <typename F>
tl_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return TL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TL_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TL_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorKind::Invalid, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const Json& j) {
  if (out) *out = dup(j.dump());
}

Json with_schema(Json j) {
  j["schema"] = 1;
  return j;
}

std::vector<std::string> names(const char* const* list, std::size_t k, const char* what) {
  need(list, what);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) {
    need(list[i], what);
    out.emplace_back(list[i]);
  }
  return out;
}

tl_verdict verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return TL_PASS;
    case Verdict::Fail: return TL_FAIL;
    case Verdict::Inconclusive: return TL_INCONCLUSIVE;
  }
  return TL_INCONCLUSIVE;
}

}  // namespace

extern "C" {

const char* tl_version(void) { return "0.1.0"; }

const char* tl_last_error(void) { return last_error.c_str(); }

void tl_string_free(char* s) { std::free(s); }

tl_status tl_structure_from_json(const char* json, tl_structure** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new tl_structure{structure_from_json(parse_json(json))};
  });
}

tl_status tl_structure_to_json(const tl_structure* s, char** out) {
  return guard([&] {
    need(s, "structure");
    need(out, "out");
    put(out, with_schema(structure_to_json(s->value)));
  });
}

void tl_structure_free(tl_structure* s) { delete s; }

tl_status tl_team_from_json(const char* json, tl_team** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new tl_team{team_from_json(parse_json(json))};
  });
}

tl_status tl_team_to_json(const tl_team* t, char** out) {
  return guard([&] {
    need(t, "team");
    need(out, "out");
    put(out, with_schema(team_to_json(t->value)));
  });
}

void tl_team_free(tl_team* t) { delete t; }

tl_status tl_formula_parse(const char* text, tl_formula** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new tl_formula{parse(text)};
  });
}

tl_status tl_formula_render(const tl_formula* f, char** out) {
  return guard([&] {
    need(f, "formula");
    need(out, "out");
    *out = dup(render(f->value));
  });
}

void tl_formula_free(tl_formula* f) { delete f; }

tl_status tl_edge_formula(int k, tl_formula** out) {
  return guard([&] {
    need(out, "out");
    require(k >= 1, "edge formula needs k >= 1");
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= k; ++i) {
      xs.push_back("x" + std::to_string(i));
      ys.push_back("y" + std::to_string(i));
    }
    *out = new tl_formula{edge_formula(k, xs, ys)};
  });
}

void tl_eval_options_init(tl_eval_options* opts) {
  if (opts == nullptr) return;
  *opts = tl_eval_options{TL_SEM_LAX, 0, 0, 0, 0};
}

tl_status tl_eval(const tl_structure* m, const tl_team* team, const tl_formula* f,
                  const tl_eval_options* opts, int* verdict, char** report) {
  return guard([&] {
    need(m, "structure");
    need(team, "team");
    need(f, "formula");
    need(verdict, "verdict");
    tl_eval_options o;
    tl_eval_options_init(&o);
    if (opts) o = *opts;
    Json j{{"schema", 1}};
    if (o.semantics == TL_SEM_MAXSUB) {
      IncmaxStats stats;
      const Team y = max_subteam(m->value, team->value, f->value, &stats);
      *verdict = y == team->value;
      j["semantics"] = "maxsub";
      j["verdict"] = *verdict != 0;
      j["max_subteam"] = team_to_json(y);
      j["stats"] = {{"sweeps", stats.sweeps}, {"outer_iterations", stats.outer_iterations},
                    {"max_rows", stats.max_rows}};
    } else {
      EvalOptions eo;
      eo.semantics = o.semantics == TL_SEM_STRICT ? Semantics::Strict : Semantics::Lax;
      if (o.max_enumerations) eo.budget.max_enumerations = o.max_enumerations;
      if (o.max_rows) eo.budget.max_rows = o.max_rows;
      eo.literal_cind = o.literal_cind != 0;
      eo.want_trace = o.want_trace != 0;
      const EvalResult r = evaluate(m->value, team->value, f->value, eo);
      *verdict = r.verdict;
      j["semantics"] = o.semantics == TL_SEM_STRICT ? "strict" : "lax";
      j["verdict"] = r.verdict;
      j["stats"] = {{"enumerations", r.stats.enumerations},
                    {"max_rows", r.stats.max_rows},
                    {"memo_hits", r.stats.memo_hits},
                    {"memo_entries", r.stats.memo_entries}};
      if (r.trace) j["trace"] = witness_to_json(*r.trace);
    }
    put(report, j);
  });
}

tl_status tl_classify(const tl_formula* f, char** out) {
  return guard([&] {
    need(f, "formula");
    need(out, "out");
    put(out, with_schema(profile_to_json(classify(f->value))));
  });
}

tl_status tl_translate(const char* pass, const tl_formula* f, const tl_neg_tc_args* args,
                       tl_formula** output, char** report) {
  return guard([&] {
    need(pass, "pass");
    need(f, "formula");
    const std::string p = pass;
    auto run = [&]() -> TranslationReport {
      if (p == "prenex") return prenex(f->value);
      if (p == "one-forall") return collapse_universals(f->value);
      if (p == "elim-terms") return eliminate_terms_in_inclusions(f->value);
      if (p == "neg-tc") {
        need(args, "neg-tc arguments");
        return neg_tc_encoding(f->value, names(args->xs, args->k, "xs"), names(args->ys, args->k, "ys"),
                               names(args->b, args->k, "b"), names(args->c, args->k, "c"));
      }
      throw Error(ErrorKind::Invalid, "unknown pass '" + p + "'");
    };
    const TranslationReport r = run();
    if (output) *output = new tl_formula{r.output};
    put(report, with_schema(translation_to_json(r)));
  });
}

tl_status tl_gen_two_path(int k, int n, tl_structure** out) {
  return guard([&] {
    need(out, "out");
    *out = new tl_structure{two_path_structure(k, n)};
  });
}

tl_status tl_gen_clique_path(int k, int n, int paths, tl_structure** out) {
  return guard([&] {
    need(out, "out");
    *out = new tl_structure{clique_path_graph(k, n, paths)};
  });
}

tl_status tl_gen_random_graph(uint32_t nodes, double edge_prob, uint64_t seed, tl_structure** out) {
  return guard([&] {
    need(out, "out");
    *out = new tl_structure{random_graph(nodes, edge_prob, seed)};
  });
}

const char* tl_property_name(size_t i) {
  const auto& names = property_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

tl_status tl_check(const char* property, uint64_t budget, uint64_t seed, unsigned workers,
                   tl_verdict* verdict, char** report) {
  return guard([&] {
    need(property, "property");
    need(verdict, "verdict");
    RunOptions o;
    o.seed = seed;
    if (budget) o.budget = budget;
    o.workers = workers == 0 ? 1 : workers;
    const CheckReport r = run_property(property, o);
    *verdict = verdict_code(r.verdict);
    put(report, r.to_json());
  });
}

tl_status tl_replay(const char* report_json, tl_verdict* verdict, char** report) {
  return guard([&] {
    need(report_json, "report");
    need(verdict, "verdict");
    const CheckReport r = replay_report(parse_json(report_json));
    *verdict = verdict_code(r.verdict);
    put(report, r.to_json());
  });
}

}  // extern "C"
