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
#include "teamlogic/syntax.hpp"

using namespace teamlogic;

TEST(Parse, RoundTripsThroughRender) {
  const char* inputs[] = {
      "inc(x; y)",
      "dep(x, y; z)",
      "dep(; z)",
      "cind(x; y; z)",
      "ind(x, y; z)",
      "exists x. (inc(y; x) & inc(z; x))",
      "forall x. exists y. (E(x, y) | x = y)",
      "(!E(x, y) | x != y) & R(x)",
      "inc(x, #c; y, z)",
      "exists x. forall y. (x = y | (!E(x, y) & inc(x; y)))",
  };
  for (const char* in : inputs) {
    Formula f = parse(in);
    std::string out = render(f);
    EXPECT_EQ(parse(out), f) << in << " -> " << out;
    EXPECT_EQ(render(parse(out)), out);
  }
}

TEST(Parse, TupleEqualitySugar) {
  EXPECT_EQ(parse("(x, y) = (z, w)"), parse("x = z & y = w"));
  EXPECT_EQ(parse("(x, y) != (z, w)"), parse("x != z | y != w"));
  EXPECT_EQ(parse("(x = y) & z = w"), parse("x = y & z = w"));
}

TEST(Parse, Errors) {
  try {
    parse("inc(x; )");
    FAIL() << "expected parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
  EXPECT_THROW(parse("inc(x, y; z)"), Error);
  EXPECT_THROW(parse("!inc(x; y)"), Error);
  EXPECT_THROW(parse("exists . x = y"), Error);
  EXPECT_THROW(parse("x = y &"), Error);
  EXPECT_THROW(parse("dep(x; #c)"), Error);
}

TEST(Syntax, FreeVariablesRespectShadowing) {
  Formula f = parse("inc(x; y) & exists x. (x = z)");
  EXPECT_EQ(free_variables(f), (std::set<std::string>{"x", "y", "z"}));
  EXPECT_EQ(free_variables(parse("forall x. exists y. inc(x; y)")), std::set<std::string>{});
}

TEST(Syntax, FragmentPredicates) {
  EXPECT_TRUE(is_first_order(parse("forall x. E(x, y) | x = y")));
  EXPECT_FALSE(is_first_order(parse("dep(x; y)")));
  EXPECT_TRUE(is_inclusion_fragment(parse("exists x. inc(x; y) & !E(x, y)")));
  EXPECT_FALSE(is_inclusion_fragment(parse("dep(x; y)")));
  EXPECT_TRUE(is_downward_closed(parse("dep(x; y) & exists z. E(z, z)")));
  EXPECT_FALSE(is_downward_closed(parse("ind(x; y)")));
  EXPECT_TRUE(is_prenex(parse("forall x. exists y. (inc(x; y) & x = y)")));
  EXPECT_FALSE(is_prenex(parse("x = y & exists z. z = x")));
}

TEST(Syntax, DepthCountsAtomsAsZero) {
  EXPECT_EQ(depth(parse("x = y")), 0);
  EXPECT_EQ(depth(parse("x = y & y = x")), 1);
  EXPECT_EQ(depth(parse("exists x. (x = y | forall y. y = x)")), 3);
}

TEST(Syntax, Classify) {
  auto p = classify(parse("forall x. forall y. exists z. (inc(x, y; z, z) & dep(x; z) & ind(x, y; x))"));
  EXPECT_EQ(p.forall_count, 2);
  EXPECT_EQ(p.max_inc_arity, 2);
  EXPECT_EQ(p.max_dep_arity, 1);
  EXPECT_EQ(p.max_ind_distinct_vars, 1);
  EXPECT_EQ(p.atoms_used, (std::set<std::string>{"dep", "inc", "ind"}));
}

TEST(Syntax, SubstituteSkipsBoundOccurrences) {
  Formula f = parse("inc(x; y) & exists x. E(x, y)");
  Formula g = substitute(f, {{"x", Term::var("u")}, {"y", Term::constant("c")}});
  EXPECT_EQ(g, parse("inc(u; #c) & exists x. E(x, #c)"));
}

TEST(Syntax, EdgeFormulaShape) {
  Formula e = edge_formula(2, {"x1", "x2"}, {"y1", "y2"});
  EXPECT_EQ(atoms(e).size(), 8u);
  EXPECT_TRUE(is_first_order(e));
  EXPECT_EQ(free_variables(e), (std::set<std::string>{"x1", "x2", "y1", "y2"}));
}

TEST(FreshNames, AvoidsReservedNames) {
  FreshNames names({"u", "u1", "x2"});
  EXPECT_EQ(names.fresh("u"), "u2");
  EXPECT_EQ(names.fresh("u"), "u3");
  EXPECT_EQ(names.fresh("x2"), "x2_1");
  EXPECT_EQ(names.introduced().size(), 3u);
}

TEST(Formula, ConstructorsValidate) {
  EXPECT_THROW(Formula::inc(vars({"x"}), vars({"y", "z"})), Error);
  EXPECT_THROW(Formula::conj_all({}), Error);
}
