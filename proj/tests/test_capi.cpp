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

#include <string>

#include "teamlogic.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tl_string_free(s);
  return out;
}

struct Handles {
  tl_structure* m = nullptr;
  tl_team* t = nullptr;
  tl_formula* f = nullptr;
  ~Handles() {
    tl_structure_free(m);
    tl_team_free(t);
    tl_formula_free(f);
  }
};

}  // namespace

TEST(CApi, EvalLaxStrictAndMaxsub) {
  Handles h;
  ASSERT_EQ(tl_structure_from_json(R"({"domain": 2})", &h.m), TL_OK);
  ASSERT_EQ(tl_team_from_json(R"({"vars": ["y","z"], "rows": [[0,1]]})", &h.t), TL_OK);
  ASSERT_EQ(tl_formula_parse("exists x. (inc(y; x) & inc(z; x))", &h.f), TL_OK);

  tl_eval_options o;
  tl_eval_options_init(&o);
  int verdict = -1;
  char* report = nullptr;
  ASSERT_EQ(tl_eval(h.m, h.t, h.f, &o, &verdict, &report), TL_OK);
  EXPECT_EQ(verdict, 1);
  const std::string text = take(report);
  EXPECT_NE(text.find("\"schema\":1"), std::string::npos);

  o.semantics = TL_SEM_STRICT;
  ASSERT_EQ(tl_eval(h.m, h.t, h.f, &o, &verdict, nullptr), TL_OK);
  EXPECT_EQ(verdict, 0);

  o.semantics = TL_SEM_MAXSUB;
  ASSERT_EQ(tl_eval(h.m, h.t, h.f, &o, &verdict, &report), TL_OK);
  EXPECT_EQ(verdict, 1);
  EXPECT_NE(take(report).find("max_subteam"), std::string::npos);
}

TEST(CApi, TraceIsReported) {
  Handles h;
  ASSERT_EQ(tl_structure_from_json(R"({"domain": 2})", &h.m), TL_OK);
  ASSERT_EQ(tl_team_from_json(R"({"vars": ["x"], "rows": [[0],[1]]})", &h.t), TL_OK);
  ASSERT_EQ(tl_formula_parse("exists y. inc(x; y)", &h.f), TL_OK);
  tl_eval_options o;
  tl_eval_options_init(&o);
  o.want_trace = 1;
  int verdict = 0;
  char* report = nullptr;
  ASSERT_EQ(tl_eval(h.m, h.t, h.f, &o, &verdict, &report), TL_OK);
  EXPECT_NE(take(report).find("\"trace\""), std::string::npos);
}

TEST(CApi, ErrorCodes) {
  tl_formula* f = nullptr;
  EXPECT_EQ(tl_formula_parse("inc(x, y; z)", &f), TL_ERR_PARSE);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::string(tl_last_error()).find("arity mismatch"), std::string::npos);

  tl_structure* m = nullptr;
  EXPECT_EQ(tl_structure_from_json("{not json", &m), TL_ERR_PARSE);
  EXPECT_EQ(tl_structure_from_json(nullptr, &m), TL_ERR_INVALID);

  Handles h;
  ASSERT_EQ(tl_structure_from_json(R"({"domain": 2})", &h.m), TL_OK);
  ASSERT_EQ(tl_team_from_json(R"({"vars": ["x"], "rows": [[0]]})", &h.t), TL_OK);
  ASSERT_EQ(tl_formula_parse("inc(x; y)", &h.f), TL_OK);
  int verdict = 0;
  EXPECT_EQ(tl_eval(h.m, h.t, h.f, nullptr, &verdict, nullptr), TL_ERR_INVALID);  // y unbound

  tl_formula* dep = nullptr;
  ASSERT_EQ(tl_formula_parse("dep(x; y)", &dep), TL_OK);
  tl_eval_options o;
  tl_eval_options_init(&o);
  o.semantics = TL_SEM_MAXSUB;
  tl_team* xy = nullptr;
  ASSERT_EQ(tl_team_from_json(R"({"vars": ["x","y"], "rows": [[0,1]]})", &xy), TL_OK);
  EXPECT_EQ(tl_eval(h.m, xy, dep, &o, &verdict, nullptr), TL_ERR_FRAGMENT);
  tl_team_free(xy);
  tl_formula_free(dep);
}

TEST(CApi, BudgetExhaustionIsResourceError) {
  Handles h;
  ASSERT_EQ(tl_structure_from_json(R"({"domain": 3})", &h.m), TL_OK);
  ASSERT_EQ(tl_team_from_json(R"({"vars": ["x","y"], "rows": [[0,1],[1,2],[2,0],[1,1]]})", &h.t), TL_OK);
  ASSERT_EQ(tl_formula_parse("ind(x; y) | ind(y; x) | ind(x; x)", &h.f), TL_OK);
  tl_eval_options o;
  tl_eval_options_init(&o);
  o.max_enumerations = 5;
  int verdict = 0;
  EXPECT_EQ(tl_eval(h.m, h.t, h.f, &o, &verdict, nullptr), TL_ERR_RESOURCE);
}

TEST(CApi, TranslateClassifyAndGenerate) {
  tl_formula* f = nullptr;
  ASSERT_EQ(tl_formula_parse("(exists z. inc(z; x)) | forall w. E(w, x)", &f), TL_OK);
  tl_formula* out = nullptr;
  char* report = nullptr;
  ASSERT_EQ(tl_translate("prenex", f, nullptr, &out, &report), TL_OK);
  EXPECT_NE(take(report).find("\"pass\":\"prenex\""), std::string::npos);
  char* text = nullptr;
  ASSERT_EQ(tl_formula_render(out, &text), TL_OK);
  EXPECT_EQ(take(text).rfind("exists", 0), 0u);
  tl_formula_free(out);
  EXPECT_EQ(tl_translate("bogus", f, nullptr, nullptr, nullptr), TL_ERR_INVALID);
  tl_formula_free(f);

  tl_formula* edge = nullptr;
  ASSERT_EQ(tl_edge_formula(1, &edge), TL_OK);
  const char* xs[] = {"x1"};
  const char* ys[] = {"y1"};
  const char* b[] = {"b1"};
  const char* c[] = {"c1"};
  tl_neg_tc_args args{1, xs, ys, b, c};
  ASSERT_EQ(tl_translate("neg-tc", edge, &args, &out, nullptr), TL_OK);
  ASSERT_EQ(tl_classify(out, &report), TL_OK);
  EXPECT_NE(take(report).find("\"max_inc_arity\":1"), std::string::npos);
  tl_formula_free(out);
  tl_formula_free(edge);

  tl_structure* g = nullptr;
  ASSERT_EQ(tl_gen_clique_path(2, 3, 2, &g), TL_OK);
  ASSERT_EQ(tl_structure_to_json(g, &report), TL_OK);
  EXPECT_NE(take(report).find("\"cp1\""), std::string::npos);
  tl_structure_free(g);
  EXPECT_EQ(tl_gen_two_path(0, 3, &g), TL_ERR_INVALID);
}

TEST(CApi, CheckAndReplay) {
  std::size_t n = 0;
  while (tl_property_name(n) != nullptr) ++n;
  EXPECT_EQ(n, 14u);

  tl_verdict v = TL_FAIL;
  char* report = nullptr;
  ASSERT_EQ(tl_check("mid-properties", 0, 1, 1, &v, &report), TL_OK);
  EXPECT_EQ(v, TL_PASS);
  const std::string text = take(report);
  ASSERT_EQ(tl_replay(text.c_str(), &v, &report), TL_OK);
  EXPECT_EQ(v, TL_PASS);
  take(report);

  EXPECT_EQ(tl_check("no-such", 0, 1, 1, &v, nullptr), TL_ERR_INVALID);
}
