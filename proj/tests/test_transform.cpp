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

#include <algorithm>

#include "teamlogic/error.hpp"
#include "teamlogic/evaluator.hpp"
#include "teamlogic/generators.hpp"
#include "teamlogic/transform.hpp"

using namespace teamlogic;

namespace {

Structure graph(Element n, std::set<Tuple> edges) {
  Signature sig;
  sig.relations["E"] = 2;
  return Structure(sig, n, {{"E", std::move(edges)}}, {});
}

// All teams over the given variables with at most `max_rows` rows.
std::vector<Team> small_teams(const std::vector<std::string>& vs, Element dom, std::size_t max_rows) {
  std::vector<Tuple> cells(1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<Tuple> next;
    for (const auto& c : cells)
      for (Element a = 0; a < dom; ++a) {
        Tuple t = c;
        t.push_back(a);
        next.push_back(t);
      }
    cells = next;
  }
  std::vector<Team> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_rows) continue;
    std::vector<Tuple> rows;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if ((mask >> i) & 1U) rows.push_back(cells[i]);
    out.emplace_back(vs, rows);
  }
  return out;
}

void expect_equivalent(const Formula& a, const Formula& b, const std::vector<Structure>& models,
                       const std::vector<std::string>& vs) {
  for (const auto& m : models) {
    for (const Team& t : small_teams(vs, m.domain_size(), 3)) {
      ASSERT_EQ(eval_lax(m, t, a).verdict, eval_lax(m, t, b).verdict)
          << render(a) << "  vs  " << render(b) << " on " << t.size() << " rows";
    }
  }
}

std::vector<std::string> rendered_atoms(const Formula& f) {
  std::vector<std::string> out;
  for (const auto& a : atoms(f)) out.push_back(render(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Structure> models() {
  return {graph(2, {{0, 1}}), graph(2, {{0, 0}, {1, 0}}), graph(3, {{0, 1}, {1, 2}, {2, 2}})};
}

}  // namespace

TEST(NnfNegate, Examples) {
  EXPECT_EQ(nnf_negate(parse("E(x, y)")), parse("!E(x, y)"));
  EXPECT_EQ(nnf_negate(parse("E(x, y) & x = y")), parse("!E(x, y) | x != y"));
  EXPECT_EQ(nnf_negate(parse("exists z. E(x, z)")), parse("forall z. !E(x, z)"));
  EXPECT_THROW(nnf_negate(parse("inc(x; y)")), Error);
}

TEST(NnfNegate, DoubleNegationIsTarskiEquivalent) {
  Structure m = graph(3, {{0, 1}, {1, 2}});
  Formula f = parse("forall z. (E(x, z) | exists w. (w = z & !E(w, y)))");
  Formula g = nnf_negate(nnf_negate(f));
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      Assignment s({"x", "y"}, {a, b});
      EXPECT_EQ(eval_fo(m, s, f), eval_fo(m, s, g));
      EXPECT_NE(eval_fo(m, s, f), eval_fo(m, s, nnf_negate(f)));
    }
}

TEST(Prenex, ExistentialsAcrossDisjunction) {
  auto r = prenex(parse("(exists x. inc(x; y)) | exists x. E(x, y)"));
  EXPECT_EQ(r.output, parse("exists x. exists x1. (inc(x; y) | E(x1, y))"));
  EXPECT_TRUE(r.selector_literals.empty());
  EXPECT_EQ(r.renamed.at("x1"), "x");
}

TEST(Prenex, UniversalUnderDisjunctionUsesSelectors) {
  Formula f = parse("(forall x. inc(x; y)) | E(y, y)");
  auto r = prenex(f);
  EXPECT_EQ(r.output, parse("exists u1. exists v1. forall x. ((u1 = v1 & inc(x; y)) | (u1 != v1 & E(y, y)))"));
  EXPECT_EQ(r.selector_literals.size(), 2u);
  EXPECT_EQ(r.before.forall_count, r.after.forall_count);
  expect_equivalent(f, r.output, models(), {"y"});
}

TEST(Prenex, AlreadyPrenexIsUnchanged) {
  Formula f = parse("forall x. exists y. (inc(x; y) & E(x, y))");
  EXPECT_EQ(prenex(f).output, f);
}

TEST(Prenex, PreservesMeaningAndAtoms) {
  const char* inputs[] = {
      "inc(x; y) & exists x. (E(x, y) | inc(y; x))",
      "(forall z. inc(z; x)) | (exists z. E(z, y) & inc(x; y))",
      "(exists z. dep(x; z)) | forall z. (z = y | inc(z; x))",
      "(forall z. E(x, z)) & forall z. inc(z; y)",
      "(exists z. (inc(z; x) | z = y)) | forall w. (w = x | E(w, x))",
  };
  for (const char* text : inputs) {
    Formula f = parse(text);
    auto r = prenex(f);
    EXPECT_TRUE(is_prenex(r.output)) << text;
    EXPECT_EQ(r.before.forall_count, r.after.forall_count) << text;
    EXPECT_EQ(free_variables(r.output), free_variables(f)) << text;
    // Atoms of the output, with renamings undone and selectors dropped.
    std::map<std::string, Term> back;
    for (const auto& [now, was] : r.renamed) back[now] = Term::var(was);
    std::vector<std::string> got;
    for (const auto& a : atoms(r.output)) {
      if (std::find(r.selector_literals.begin(), r.selector_literals.end(), a) != r.selector_literals.end())
        continue;
      got.push_back(render(substitute(a, back)));
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, rendered_atoms(f)) << text;
    expect_equivalent(f, r.output, models(), {"x", "y"});
  }
}

TEST(CollapseUniversals, PinnedShapes) {
  auto one = collapse_universals(parse("forall x1. exists x2. E(x1, x2)"));
  EXPECT_EQ(one.output, parse("exists x1. exists x2. forall y1. (inc(y1; x1) & E(x1, x2))"));
  auto two = collapse_universals(parse("forall x1. forall x2. E(x1, x2)"));
  EXPECT_EQ(two.output,
            parse("exists x1. exists x2. forall y1. (inc(y1; x1) & inc(x1, y1; x1, x2) & E(x1, x2))"));
  Formula none = parse("exists x. inc(x; y)");
  EXPECT_EQ(collapse_universals(none).output, none);
}

TEST(CollapseUniversals, FreeVariablesPrefixAtoms) {
  auto r = collapse_universals(parse("forall x. inc(x; z)"));
  EXPECT_EQ(r.output, parse("exists x. forall y1. (inc(z, y1; z, x) & inc(x; z))"));
}

TEST(CollapseUniversals, Equivalence) {
  const char* inputs[] = {
      "forall x. exists w. (inc(w; x) & E(x, w))",
      "forall x. forall w. (E(x, w) | inc(x; w))",
      "exists w. forall x. (inc(x; w) | x = w)",
      "forall x. inc(x; y)",
      "forall x. exists w. forall v. (E(x, v) | inc(v; w))",
  };
  for (const char* text : inputs) {
    Formula f = parse(text);
    auto r = collapse_universals(f);
    EXPECT_LE(r.after.forall_count, 1) << text;
    expect_equivalent(f, r.output, {graph(2, {{0, 1}}), graph(2, {{0, 0}, {0, 1}, {1, 1}})}, {"y"});
  }
}

TEST(CollapseUniversals, Errors) {
  EXPECT_THROW(collapse_universals(parse("x = y & forall z. z = z")), Error);
  try {
    collapse_universals(parse("forall x. dep(y; x)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Fragment);
  }
}

TEST(ElimTerms, Examples) {
  auto r = eliminate_terms_in_inclusions(parse("inc(#b1; z)"));
  EXPECT_EQ(r.output, parse("exists u1. (u1 = #b1 & inc(u1; z))"));
  EXPECT_TRUE(inclusion_args_are_variables(r.output));
  Formula plain = parse("inc(x; z) & E(x, #b1)");
  EXPECT_EQ(eliminate_terms_in_inclusions(plain).output, plain);
}

TEST(ElimTerms, Equivalence) {
  Signature sig;
  sig.relations["E"] = 2;
  sig.constants = {"a"};
  Structure m(sig, 3, {{"E", {{0, 1}, {2, 2}}}}, {{"a", 1}});
  for (const char* text : {"inc(#a; x) | E(x, y)", "inc(x, #a; y, y) & exists z. inc(#a, z; z, #a)"}) {
    Formula f = parse(text);
    expect_equivalent(f, eliminate_terms_in_inclusions(f).output, {m}, {"x", "y"});
  }
}

TEST(NegTc, ShapeAndFragment) {
  auto r = neg_tc_encoding(parse("E(x, y)"), {"x"}, {"y"}, {"b1"}, {"c1"});
  EXPECT_TRUE(free_variables(r.output).empty());
  EXPECT_TRUE(inclusion_args_are_variables(r.output));
  EXPECT_EQ(r.after.max_inc_arity, 1);
  EXPECT_EQ(r.after.forall_count, 1);
  auto r2 = neg_tc_encoding(edge_formula(2, {"x1", "x2"}, {"y1", "y2"}), {"x1", "x2"}, {"y1", "y2"},
                            {"b1", "b2"}, {"c1", "c2"});
  EXPECT_EQ(r2.after.max_inc_arity, 2);
  EXPECT_THROW(neg_tc_encoding(parse("E(x, y)"), {"x"}, {"y", "z"}, {"b1"}, {"c1"}), Error);
}

TEST(NegTc, PathExamples) {
  Formula phi = neg_tc_encoding(parse("E(x, y)"), {"x"}, {"y"}, {"b"}, {"c"}).output;
  Signature sig;
  sig.relations["E"] = 2;
  sig.constants = {"b", "c"};
  Structure path(sig, 3, {{"E", {{0, 1}, {1, 2}}}}, {{"b", 0}, {"c", 2}});
  EXPECT_FALSE(eval_lax(path, Team::unit(), phi).verdict);
  Structure cut(sig, 3, {{"E", {{0, 1}}}}, {{"b", 0}, {"c", 2}});
  EXPECT_TRUE(eval_lax(cut, Team::unit(), phi).verdict);
  Structure same(sig, 3, {{"E", {}}}, {{"b", 1}, {"c", 1}});
  EXPECT_FALSE(eval_lax(same, Team::unit(), phi).verdict);
}
