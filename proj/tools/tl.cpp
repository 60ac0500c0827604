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

// Command-line front end. Talks to the library only through teamlogic.h.
//
// Exit codes: 0 pass/true, 1 fail/false, 2 inconclusive or budget
// exhausted, 3 usage or input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "teamlogic.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Failure {
  int code;
  std::string message;
};

void check(tl_status st) {
  if (st == TL_OK) return;
  throw Failure{st == TL_ERR_RESOURCE ? kExitInconclusive : kExitUsage, tl_last_error()};
}

std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read '" + arg + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct StrDel {
  void operator()(char* s) const { tl_string_free(s); }
};
using Str = std::unique_ptr<char, StrDel>;

struct StructureDel {
  void operator()(tl_structure* s) const { tl_structure_free(s); }
};
struct TeamDel {
  void operator()(tl_team* t) const { tl_team_free(t); }
};
struct FormulaDel {
  void operator()(tl_formula* f) const { tl_formula_free(f); }
};
using StructurePtr = std::unique_ptr<tl_structure, StructureDel>;
using TeamPtr = std::unique_ptr<tl_team, TeamDel>;
using FormulaPtr = std::unique_ptr<tl_formula, FormulaDel>;

StructurePtr load_structure(const std::string& arg) {
  tl_structure* s = nullptr;
  check(tl_structure_from_json(file_or_inline(arg).c_str(), &s));
  return StructurePtr(s);
}

TeamPtr load_team(const std::string& arg) {
  tl_team* t = nullptr;
  check(tl_team_from_json(file_or_inline(arg).c_str(), &t));
  return TeamPtr(t);
}

FormulaPtr load_formula(const std::string& arg) {
  tl_formula* f = nullptr;
  check(tl_formula_parse(file_or_inline(arg).c_str(), &f));
  return FormulaPtr(f);
}

void emit(char* raw) {
  Str s(raw);
  std::cout << s.get() << "\n";
}

std::vector<std::string> numbered(const std::string& base, int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back(base + std::to_string(i));
  return out;
}

std::vector<const char*> c_strs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

int verdict_exit(tl_verdict v) {
  switch (v) {
    case TL_PASS: return kExitPass;
    case TL_FAIL: return kExitFail;
    default: return kExitInconclusive;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team-semantics model checker for inclusion, dependence and independence logic", "tl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tl_version());

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a team");
  std::string sem = "lax", structure_arg, team_arg, formula_arg;
  std::uint64_t budget = 0;
  bool trace = false, literal_cind = false;
  eval->add_option("--sem", sem, "lax, strict or maxsub")->check(CLI::IsMember({"lax", "strict", "maxsub"}));
  eval->add_option("--structure", structure_arg, "Structure JSON file or inline JSON")->required();
  eval->add_option("--team", team_arg, "Team JSON file or inline JSON")->required();
  eval->add_option("--formula", formula_arg, "Formula file (.tl) or inline formula")->required();
  eval->add_option("--budget", budget, "Maximum candidate subteams tried");
  eval->add_flag("--trace", trace, "Include the witness tree");
  eval->add_flag("--literal-cind", literal_cind, "Literal reading of the conditional independence clause");

  // translate
  auto* translate = app.add_subcommand("translate", "Run a translation pass");
  std::string pass;
  int edge_k = 0;
  std::vector<std::string> xs, ys, bs, cs;
  std::string tr_formula;
  translate->add_option("--pass", pass, "prenex, one-forall, neg-tc or elim-terms")
      ->required()
      ->check(CLI::IsMember({"prenex", "one-forall", "neg-tc", "elim-terms"}));
  translate->add_option("--formula", tr_formula, "Formula file (.tl) or inline formula");
  translate->add_option("--edge-k", edge_k, "neg-tc: use Edge_k as the formula");
  translate->add_option("--xs", xs, "neg-tc: source variables")->delimiter(',');
  translate->add_option("--ys", ys, "neg-tc: target variables")->delimiter(',');
  translate->add_option("--b", bs, "neg-tc: start constants")->delimiter(',');
  translate->add_option("--c", cs, "neg-tc: goal constants")->delimiter(',');

  // classify
  auto* classify = app.add_subcommand("classify", "Fragment profile of a formula");
  std::string cl_formula;
  classify->add_option("--formula", cl_formula, "Formula file (.tl) or inline formula")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a structure");
  gen->require_subcommand(1);
  int gk = 1, gn = 2, gpaths = 2;
  auto* two_path = gen->add_subcommand("two-path", "Two-path structure A(k, n)");
  two_path->add_option("--k", gk)->required();
  two_path->add_option("--n", gn)->required();
  auto* clique = gen->add_subcommand("clique-path", "Clique-path graph");
  clique->add_option("--k", gk)->required();
  clique->add_option("--n", gn)->required();
  clique->add_option("--paths", gpaths)->check(CLI::Range(1, 2));
  auto* rgraph = gen->add_subcommand("random-graph", "Seeded random digraph");
  std::uint32_t nodes = 1;
  double prob = 0.5;
  std::uint64_t gseed = 0;
  rgraph->add_option("--nodes", nodes)->required();
  rgraph->add_option("--p", prob)->required()->check(CLI::Range(0.0, 1.0));
  rgraph->add_option("--seed", gseed)->required();

  // check
  auto* chk = app.add_subcommand("check", "Run a property suite");
  std::string property;
  std::uint64_t cbudget = 0, cseed = 1;
  unsigned workers = 1;
  bool list = false;
  std::vector<std::string> known;
  for (std::size_t i = 0; tl_property_name(i) != nullptr; ++i) known.emplace_back(tl_property_name(i));
  chk->add_option("property", property, "Property name")->check(CLI::IsMember(known));
  chk->add_option("--budget", cbudget, "Instance count (0: documented scale)");
  chk->add_option("--seed", cseed, "Seed");
  chk->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
  chk->add_flag("--list", list, "List property names");

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run the counterexample of a check report");
  std::string report_arg;
  replay->add_option("report", report_arg, "Report file or inline JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) {
      auto m = load_structure(structure_arg);
      auto t = load_team(team_arg);
      auto f = load_formula(formula_arg);
      tl_eval_options o;
      tl_eval_options_init(&o);
      o.semantics = sem == "strict" ? TL_SEM_STRICT : sem == "maxsub" ? TL_SEM_MAXSUB : TL_SEM_LAX;
      o.max_enumerations = budget;
      o.want_trace = trace;
      o.literal_cind = literal_cind;
      int verdict = 0;
      char* report = nullptr;
      check(tl_eval(m.get(), t.get(), f.get(), &o, &verdict, &report));
      emit(report);
      return verdict ? kExitPass : kExitFail;
    }
    if (*translate) {
      FormulaPtr f;
      if (!tr_formula.empty()) {
        f = load_formula(tr_formula);
      } else if (pass == "neg-tc" && edge_k > 0) {
        tl_formula* raw = nullptr;
        check(tl_edge_formula(edge_k, &raw));
        f.reset(raw);
      } else {
        throw Failure{kExitUsage, "--formula is required (or --edge-k for neg-tc)"};
      }
      tl_neg_tc_args args{};
      std::vector<const char*> cx, cy, cb, cc;
      if (pass == "neg-tc") {
        const int k = edge_k > 0 ? edge_k : static_cast<int>(xs.size());
        if (k <= 0) throw Failure{kExitUsage, "neg-tc needs --edge-k or --xs"};
        if (xs.empty()) xs = numbered("x", k);
        if (ys.empty()) ys = numbered("y", k);
        if (bs.empty()) bs = numbered("b", k);
        if (cs.empty()) cs = numbered("c", k);
        const auto sk = static_cast<std::size_t>(k);
        if (xs.size() != sk || ys.size() != sk || bs.size() != sk || cs.size() != sk) {
          throw Failure{kExitUsage, "neg-tc: --xs, --ys, --b and --c need k entries each"};
        }
        cx = c_strs(xs), cy = c_strs(ys), cb = c_strs(bs), cc = c_strs(cs);
        args = tl_neg_tc_args{sk, cx.data(), cy.data(), cb.data(), cc.data()};
      }
      char* report = nullptr;
      check(tl_translate(pass.c_str(), f.get(), pass == "neg-tc" ? &args : nullptr, nullptr, &report));
      emit(report);
      return kExitPass;
    }
    if (*classify) {
      auto f = load_formula(cl_formula);
      char* out = nullptr;
      check(tl_classify(f.get(), &out));
      emit(out);
      return kExitPass;
    }
    if (*gen) {
      tl_structure* raw = nullptr;
      if (*two_path) check(tl_gen_two_path(gk, gn, &raw));
      if (*clique) check(tl_gen_clique_path(gk, gn, gpaths, &raw));
      if (*rgraph) check(tl_gen_random_graph(nodes, prob, gseed, &raw));
      StructurePtr s(raw);
      char* out = nullptr;
      check(tl_structure_to_json(s.get(), &out));
      emit(out);
      return kExitPass;
    }
    if (*chk) {
      if (list) {
        for (const auto& name : known) std::cout << name << "\n";
        return kExitPass;
      }
      if (property.empty()) throw Failure{kExitUsage, "check: property name required"};
      tl_verdict v = TL_INCONCLUSIVE;
      char* report = nullptr;
      check(tl_check(property.c_str(), cbudget, cseed, workers, &v, &report));
      emit(report);
      return verdict_exit(v);
    }
    if (*replay) {
      tl_verdict v = TL_INCONCLUSIVE;
      char* report = nullptr;
      check(tl_replay(file_or_inline(report_arg).c_str(), &v, &report));
      emit(report);
      return verdict_exit(v);
    }
  } catch (const Failure& f) {
    std::cerr << "tl: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}
