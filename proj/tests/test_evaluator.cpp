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
#include "teamlogic/generators.hpp"

using namespace teamlogic;

namespace {

Structure plain(Element n) { return Structure({}, n, {}, {}); }

Structure edges2(std::set<Tuple> edges) {
  Signature sig;
  sig.relations["E"] = 2;
  return Structure(sig, 2, {{"E", std::move(edges)}}, {});
}

Structure path3() {
  Signature sig;
  sig.relations["E"] = 2;
  sig.constants = {"c"};
  return Structure(sig, 3, {{"E", {{0, 1}, {1, 2}}}}, {{"c", 2}});
}

bool lax(const Structure& m, const Team& t, const char* f) { return eval_lax(m, t, parse(f)).verdict; }
bool strict(const Structure& m, const Team& t, const char* f) {
  return eval_strict(m, t, parse(f)).verdict;
}

}  // namespace

TEST(Atoms, InclusionAndDependence) {
  Structure m = plain(2);
  EXPECT_TRUE(lax(m, Team({"x", "y"}, {{0, 1}, {1, 0}}), "inc(x; y)"));
  EXPECT_FALSE(lax(m, Team({"x", "y"}, {{0, 0}, {1, 0}}), "inc(x; y)"));
  EXPECT_FALSE(lax(m, Team({"x", "y"}, {{0, 0}, {0, 1}}), "dep(x; y)"));
  EXPECT_TRUE(lax(m, Team({"x", "y"}, {{0, 0}, {1, 0}}), "dep(x; y)"));
  EXPECT_TRUE(lax(m, Team({"x", "y"}, {{0, 1}, {1, 1}}), "dep(; y)"));
}

TEST(Atoms, Independence) {
  Structure m = plain(2);
  EXPECT_FALSE(lax(m, Team({"x", "y"}, {{0, 0}, {1, 1}}), "ind(x; y)"));
  EXPECT_TRUE(lax(m, Team({"x", "y"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), "ind(x; y)"));
  EXPECT_TRUE(lax(m, Team({"x", "y", "z"}, {{0, 1, 0}, {0, 1, 1}}), "cind(x; y; z)"));
  EXPECT_FALSE(lax(m, Team({"x", "y", "z"}, {{0, 0, 0}, {0, 1, 1}}), "cind(x; y; z)"));
}

TEST(Atoms, LiteralConditionalIndependenceReading) {
  Structure m = plain(2);
  Team t({"x", "y", "z"}, {{0, 1, 0}, {1, 1, 1}});
  Formula f = parse("cind(x; y; z)");
  EXPECT_TRUE(eval_atom(m, t, f, false));
  EXPECT_FALSE(eval_atom(m, t, f, true));
  // Premise never holds when the first two tuples differ in length.
  Team u({"x", "y", "z"}, {{0, 0, 0}, {0, 1, 1}});
  EXPECT_TRUE(eval_atom(m, u, parse("cind(x; y, z; z)"), true));
}

TEST(Atoms, ConstantsAndRelations) {
  Structure m = path3();
  EXPECT_TRUE(lax(m, Team({"x"}, {{1}}), "E(x, #c)"));
  EXPECT_FALSE(lax(m, Team({"x"}, {{1}, {0}}), "E(x, #c)"));
  EXPECT_TRUE(lax(m, Team({"x"}, {{0}, {2}}), "!E(x, #c)"));
  EXPECT_TRUE(lax(m, Team({"x"}, {{2}}), "inc(#c; x)"));
}

TEST(Eval, EmptyTeamSatisfiesEverything) {
  Structure m = path3();
  for (const char* f : {"E(x, x)", "x != x", "inc(x; y) & dep(y; x)", "forall z. exists w. inc(z; w) | ind(x; z)"}) {
    EXPECT_TRUE(eval_lax(m, Team({"x", "y"}), parse(f)).verdict) << f;
    EXPECT_TRUE(eval_strict(m, Team({"x", "y"}), parse(f)).verdict) << f;
  }
}

TEST(Eval, LaxStrictDivergence) {
  Structure m = plain(2);
  Team t({"y", "z"}, {{0, 1}});
  const char* f = "exists x. (inc(y; x) & inc(z; x))";
  EXPECT_TRUE(lax(m, t, f));
  EXPECT_FALSE(strict(m, t, f));
}

TEST(Eval, UniversalDuplicatesTeam) {
  Structure m = path3();
  EXPECT_TRUE(lax(m, Team::unit(), "forall x. exists y. (E(x, y) | x = #c)"));
  EXPECT_FALSE(lax(m, Team::unit(), "forall x. exists y. E(x, y)"));
  EXPECT_TRUE(lax(m, Team::unit(), "forall x. exists y. inc(x; y) & dep(x; y)"));
}

TEST(Eval, QuantifierShadowing) {
  Structure m = plain(2);
  Team t({"x"}, {{0}});
  EXPECT_TRUE(lax(m, t, "forall x. inc(x; x)"));
  EXPECT_TRUE(lax(m, Team({"x", "y"}, {{0, 0}}), "forall x. inc(y; x)"));
  EXPECT_FALSE(lax(m, Team({"x", "y"}, {{0, 0}}), "forall x. x = y"));
}

TEST(Eval, RejectsUnboundFreeVariable) {
  EXPECT_THROW(eval_lax(plain(2), Team({"x"}, {{0}}), parse("x = y")), Error);
  EXPECT_THROW(eval_lax(path3(), Team({"x"}, {{0}}), parse("x = #nope")), Error);
}

TEST(Eval, BudgetExhaustionRaisesResourceLimit) {
  Structure m = plain(3);
  std::vector<Tuple> rows;
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) rows.push_back({a, b});
  EvalOptions o;
  o.budget.max_enumerations = 50;
  o.union_pruning = false;
  try {
    eval_lax(m, Team({"x", "y"}, rows), parse("exists z. (inc(z; x) & dep(x, y; z) & inc(y; z))"), o);
    FAIL() << "expected resource limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(Eval, PruningDoesNotChangeVerdicts) {
  Structure m = path3();
  Team t({"x", "y"}, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
  const char* formulas[] = {
      "exists z. (inc(z; x) & E(y, z))",
      "(dep(x; y) & inc(y; x)) | (E(x, y) & ind(x; y))",
      "forall z. (z = x | inc(z; y))",
      "exists z. dep(x; z) & (E(z, y) | z = y)",
      "(inc(x; y) | E(x, y)) & dep(y; x)",
  };
  for (const char* f : formulas) {
    for (Semantics sem : {Semantics::Lax, Semantics::Strict}) {
      EvalOptions fast;
      fast.semantics = sem;
      EvalOptions slow = fast;
      slow.locality_pruning = slow.flat_pruning = slow.closure_pruning = slow.union_pruning = false;
      slow.symmetry_pruning = slow.guard_splitting = slow.quantifier_distribution = false;
      EXPECT_EQ(evaluate(m, t, parse(f), fast).verdict, evaluate(m, t, parse(f), slow).verdict) << f;
    }
  }
}

TEST(Eval, LaxShortcutsAgreeWithPlainSearch) {
  const char* formulas[] = {
      "exists u. exists v. exists z. forall w. ((u = v & dep(x; z)) | (u != v & (w = y | inc(w; x))))",
      "exists u. exists v. forall w. ((u = v & inc(w; x)) | (u != v & E(w, y)))",
      "exists u. exists v. ((u = v & E(x, y)) | (u != v & inc(y; x)))",
      "forall u. exists v. ((u = v & inc(x; y)) | (u != v & dep(y; x)))",
      "exists u. (u = x | ind(x; y))",
      "forall z. exists w. (inc(x, z; x, z) & (inc(y, w; x, y) | dep(; w)))",
      "exists w. ((x = y & inc(w; x)) | dep(y; w))",
      "forall w. (inc(w; x) & (x = y | E(x, y)))",
  };
  const Structure models[] = {edges2({{0, 1}}), edges2({{0, 0}, {1, 0}, {1, 1}})};
  const Team teams[] = {Team({"x", "y"}, {{0, 1}, {1, 0}}), Team({"x", "y"}, {{0, 0}, {1, 1}}),
                        Team({"x", "y"}, {{1, 1}})};
  for (const char* text : formulas) {
    const Formula f = parse(text);
    for (const auto& m : models) {
      for (const auto& t : teams) {
        EvalOptions fast;
        EvalOptions slow;
        slow.symmetry_pruning = slow.guard_splitting = slow.union_pruning = false;
        slow.quantifier_distribution = false;
        EXPECT_EQ(eval_lax(m, t, f, fast).verdict, eval_lax(m, t, f, slow).verdict) << text;
      }
    }
  }
}

TEST(Witness, ReplayAcceptsGeneratedTraces) {
  Structure m = path3();
  Team t({"x", "y"}, {{0, 1}, {1, 2}, {2, 0}});
  const char* formulas[] = {
      "exists z. (inc(z; x) & inc(x; z))",
      "(E(x, y) & inc(x; y)) | (x = #c & inc(y; x))",
      "forall z. exists w. (inc(z; w) & dep(z; w))",
  };
  for (const char* text : formulas) {
    Formula f = parse(text);
    for (Semantics sem : {Semantics::Lax, Semantics::Strict}) {
      EvalOptions o;
      o.semantics = sem;
      o.want_trace = true;
      auto r = evaluate(m, t, f, o);
      if (!r.verdict) continue;
      ASSERT_TRUE(r.trace.has_value());
      EXPECT_TRUE(replay_witness(m, f, *r.trace, sem)) << text;
    }
  }
}

TEST(Witness, ReplayRejectsTamperedSplit) {
  Structure m = plain(2);
  Team t({"x", "y"}, {{0, 1}, {1, 0}});
  Formula f = parse("inc(x; y) | x = y");
  EvalOptions o;
  o.want_trace = true;
  auto r = evaluate(m, t, f, o);
  ASSERT_TRUE(r.verdict);
  Witness w = *r.trace;
  w.aux[0] = Team({"x", "y"}, {{0, 1}});
  EXPECT_FALSE(replay_witness(m, f, w));
}

TEST(EvalFo, TarskiSemantics) {
  Structure m = path3();
  Assignment s({"x"}, {1});
  EXPECT_TRUE(eval_fo(m, s, parse("exists y. E(x, y)")));
  EXPECT_FALSE(eval_fo(m, s, parse("forall y. E(x, y)")));
  EXPECT_THROW(eval_fo(m, s, parse("inc(x; x)")), Error);
}
