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

#include <fstream>
#include <random>
#include <sstream>

#include "teamlogic/error.hpp"
#include "teamlogic/evaluator.hpp"
#include "teamlogic/generators.hpp"
#include "teamlogic/harness.hpp"
#include "teamlogic/json_io.hpp"
#include "teamlogic/sampling.hpp"
#include "teamlogic/transform.hpp"

using namespace teamlogic;

namespace {

Structure path_graph(Element n, std::set<Tuple> edges) {
  Signature sig;
  sig.relations["E"] = 2;
  return Structure(sig, n, {{"E", std::move(edges)}}, {});
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Sampling, RngIsDeterministicAndBounded) {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(5), 5u);
    const int v = r.between(2, 3);
    EXPECT_TRUE(v == 2 || v == 3);
  }
  EXPECT_NE(Rng::for_instance(1, 0).next(), Rng::for_instance(1, 1).next());
  EXPECT_NE(Rng::for_instance(1, 0).next(), Rng::for_instance(2, 0).next());
}

TEST(Sampling, RandomFormulaHonoursConfig) {
  FormulaConfig c;
  c.max_depth = 3;
  c.max_quantifiers = 1;
  c.allow_universal = false;
  c.w_fo = 0.5;
  c.w_inc = 0.5;
  c.w_dep = 0.0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::for_instance(3, i);
    const Formula f = random_formula(rng, c);
    EXPECT_LE(depth(f), 3);
    EXPECT_LE(classify(f).forall_count, 0);
    EXPECT_TRUE(is_inclusion_fragment(f)) << f;
    for (const auto& v : free_variables(f)) EXPECT_TRUE(v == "x" || v == "y") << f;
    int quantifiers = 0;
    const std::string text = render(f);
    for (std::size_t p = text.find("exists"); p != std::string::npos; p = text.find("exists", p + 1)) ++quantifiers;
    EXPECT_LE(quantifiers, 1) << f;
  }
}

TEST(Sampling, MinDepthExcludesAtomsAtTheTop) {
  FormulaConfig c;
  c.min_depth = 2;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_instance(5, i);
    const Formula f = random_formula(rng, c);
    EXPECT_FALSE(f.is_atom()) << f;
    if (f.is_binary()) {
      EXPECT_FALSE(f.lhs().is_atom()) << f;
      EXPECT_FALSE(f.rhs().is_atom()) << f;
    }
  }
}

TEST(Sampling, PrenexSentencesAreClosedAndBounded) {
  PrenexConfig c;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_instance(9, i);
    const Formula f = random_prenex_sentence(rng, c);
    EXPECT_TRUE(is_prenex(f)) << f;
    EXPECT_TRUE(free_variables(f).empty()) << f;
    EXPECT_LE(classify(f).forall_count, 2) << f;
    EXPECT_TRUE(is_inclusion_fragment(f)) << f;
  }
}

TEST(Sampling, Enumerators) {
  int count = 0;
  for_each_team({"x"}, 2, 2, [&](const Team&) { ++count; });
  EXPECT_EQ(count, 4);  // {}, {0}, {1}, {0,1}
  count = 0;
  std::set<Team> seen;
  for_each_team({"x", "y"}, 2, 3, [&](const Team& t) {
    ++count;
    seen.insert(t);
    EXPECT_LE(t.size(), 3u);
  });
  EXPECT_EQ(count, 15);
  EXPECT_EQ(seen.size(), 15u);
  EXPECT_EQ(all_rows(2, 3).size(), 9u);
  EXPECT_EQ(all_digraphs(2).size(), 16u);
  // 2 atoms; depth 1 adds 3 unordered pairs for each of & and |, and one
  // quantified copy of each atom.
  const auto fs = enumerate_formulas({parse("x = y"), parse("inc(x; y)")}, {{NodeKind::Exists, "y"}}, 1);
  EXPECT_EQ(fs.size(), 2u + 6u + 2u);
  std::set<std::string> rendered;
  for (const auto& f : fs) rendered.insert(render(f));
  EXPECT_EQ(rendered.size(), fs.size());
}

TEST(JsonIo, StructureAndTeamRoundTrip) {
  const Json spec_example = parse_json(R"({"domain": 4, "relations": {"E": [[0,1],[1,2]]}, "constants": {"b1": 0, "c1": 3}})");
  const Structure s = structure_from_json(spec_example);
  EXPECT_EQ(s.domain_size(), 4u);
  EXPECT_EQ(s.constant("c1"), 3u);
  EXPECT_TRUE(s.holds("E", Tuple{1, 2}));
  EXPECT_EQ(structure_from_json(structure_to_json(s)), s);

  Signature sig;
  sig.relations["R"] = 3;
  const Structure empty_rel(sig, 2, {}, {});
  EXPECT_EQ(structure_from_json(structure_to_json(empty_rel)), empty_rel);

  const Team t = team_from_json(parse_json(R"({"vars": ["x","y"], "rows": [[1,0],[0,1],[1,0]]})"));
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(team_to_json(t).dump(), R"({"rows":[[0,1],[1,0]],"vars":["x","y"]})");
  EXPECT_EQ(team_from_json(team_to_json(Team::unit())), Team::unit());
  EXPECT_THROW(team_from_json(parse_json(R"({"vars": ["x"], "rows": [[0,1]]})")), Error);
  EXPECT_THROW(parse_json("{"), Error);
  EXPECT_THROW(structure_from_json(parse_json(R"({"relations": {}})")), Error);
}

TEST(JsonIo, RandomGraphGolden) {
  Json golden = parse_json(slurp(std::string(TEAMLOGIC_SOURCE_DIR) + "/tests/golden/random_graph_5_p0.3_seed42.json"));
  golden.erase("schema");
  EXPECT_EQ(structure_to_json(random_graph(5, 0.3, 42)), golden);

  // The documented stream, replayed independently.
  std::mt19937_64 gen(42);
  std::set<Tuple> edges;
  for (Element u = 0; u < 5; ++u) {
    for (Element v = 0; v < 5; ++v) {
      if (static_cast<double>(gen() >> 11) * 0x1.0p-53 < 0.3) edges.insert({u, v});
    }
  }
  EXPECT_EQ(random_graph(5, 0.3, 42).tuples("E"), edges);
}

TEST(Reachability, Examples) {
  const Structure path = path_graph(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(tc_reachability_oracle(path, 1, {0}, {2}));
  EXPECT_FALSE(tc_reachability_oracle(path, 1, {2}, {0}));
  EXPECT_TRUE(tc_reachability_oracle(path, 1, {2}, {2}));

  const Structure g = clique_path_graph(2, 3, 2);
  auto tuple = [&](const char* a, const char* b) { return Tuple{g.constant(a), g.constant(b)}; };
  EXPECT_TRUE(tc_reachability_oracle(g, 2, tuple("b1", "b2"), tuple("c1", "c2")));
  EXPECT_TRUE(tc_reachability_oracle(g, 2, tuple("b1", "b2"), tuple("c2", "c1")));
  EXPECT_FALSE(tc_reachability_oracle(g, 2, tuple("b1", "b2"), tuple("cp1", "cp2")));
  EXPECT_THROW(tc_reachability_oracle(g, 2, {0}, tuple("c1", "c2")), Error);
}

TEST(Reachability, AgreesWithPlainBfsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Structure g = random_graph(5, 0.25, seed);
    for (Element b = 0; b < 5; ++b) {
      std::set<Element> seen{b};
      std::vector<Element> stack{b};
      while (!stack.empty()) {
        const Element u = stack.back();
        stack.pop_back();
        for (Element v = 0; v < 5; ++v) {
          if (g.holds("E", Tuple{u, v}) && seen.insert(v).second) stack.push_back(v);
        }
      }
      for (Element c = 0; c < 5; ++c) {
        EXPECT_EQ(tc_reachability_oracle(g, 1, {b}, {c}), seen.count(c) == 1) << seed << " " << b << " " << c;
      }
    }
  }
}

TEST(Equivalence, PrenexPassesAndContradictionFails) {
  const Formula f = parse("(exists z. inc(z; x) & E(z, y)) | dep(x; y)");
  EquivalenceConfig cfg;
  cfg.samples = 150;
  const CheckReport ok = check_equivalence(f, prenex(f).output, cfg);
  EXPECT_EQ(ok.verdict, Verdict::Pass) << ok.to_json().dump();
  EXPECT_EQ(ok.instances, 150u);

  const CheckReport bad = check_equivalence(f, Formula::conj(f, parse("x != x")), cfg);
  ASSERT_EQ(bad.verdict, Verdict::Fail);
  ASSERT_TRUE(bad.counterexample.has_value());
  const Json j = bad.to_json();
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(replay_report(j).verdict, Verdict::Fail);
  // The embedded counterexample alone, after a JSON round trip.
  EXPECT_EQ(replay_report(parse_json(j.dump())).verdict, Verdict::Fail);

  EXPECT_THROW(check_equivalence(parse("inc(x; y)"), parse("inc(x; x)"), cfg), Error);
}

TEST(Equivalence, ExhaustiveModeCoversAllTeams) {
  EquivalenceConfig cfg;
  cfg.exhaustive = true;
  cfg.domains = {2};
  cfg.max_team_rows = 3;
  cfg.structures_per_domain = 2;
  const Formula f = parse("forall z. (z = x | inc(z; y))");
  const CheckReport r = check_equivalence(f, collapse_universals(prenex(f).output).output, cfg);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.to_json().dump();
  EXPECT_EQ(r.instances, 2u * 15u);
}

TEST(Pietron, SmallFamilies) {
  PietronConfig all;
  all.max_nodes = 3;
  const CheckReport a = check_pietron(1, all);
  EXPECT_EQ(a.verdict, Verdict::Pass) << a.to_json().dump();
  EXPECT_EQ(a.instances, 2u * 1 + 16u * 4 + 512u * 9);

  PietronConfig rnd;
  rnd.family = PietronConfig::Family::RandomGraphs;
  rnd.graphs = 10;
  EXPECT_EQ(check_pietron(1, rnd).verdict, Verdict::Pass);

  PietronConfig cp;
  cp.family = PietronConfig::Family::CliquePaths;
  cp.max_n = 2;
  EXPECT_EQ(check_pietron(2, cp).verdict, Verdict::Pass);
}

TEST(Suites, BudgetExhaustionIsInconclusiveNeverPass) {
  Suite s;
  s.name = "synthetic";
  s.size = 3;
  s.make = [](std::uint64_t) { return Instance{}; };
  s.check = [](const Instance&) -> Outcome { throw Error(ErrorKind::ResourceLimit, "resource limit: test"); };
  const CheckReport r = run_suite(s, 1, 1);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_EQ(r.inconclusive, 3u);
  EXPECT_EQ(r.passed, 0u);
}

TEST(Suites, FailureWinsOverInconclusiveAndPicksLowestIndex) {
  Suite s;
  s.name = "synthetic";
  s.size = 10;
  s.make = [](std::uint64_t i) {
    Instance inst;
    inst.params = Json{{"i", i}};
    return inst;
  };
  s.check = [](const Instance& inst) -> Outcome {
    const auto i = inst.params.at("i").get<int>();
    if (i == 2) throw Error(ErrorKind::ResourceLimit, "resource limit: test");
    if (i == 7 || i == 4) return {Verdict::Fail, "bad", std::nullopt};
    return {};
  };
  for (unsigned workers : {1u, 3u}) {
    const CheckReport r = run_suite(s, 1, workers);
    EXPECT_EQ(r.verdict, Verdict::Fail);
    EXPECT_EQ(r.index, 4u);
    EXPECT_EQ(r.failed, 2u);
    EXPECT_EQ(r.inconclusive, 1u);
    EXPECT_EQ(r.passed, 7u);
  }
}

TEST(Suites, ReportsAreReproducible) {
  for (const auto& name : property_names()) {
    RunOptions o;
    o.seed = 11;
    o.budget = 20;
    const std::string first = run_property(name, o).to_json().dump();
    o.workers = 3;
    const std::string second = run_property(name, o).to_json().dump();
    EXPECT_EQ(first, second) << name;
    EXPECT_EQ(first.find("time"), std::string::npos) << name;
  }
}

TEST(Suites, SmallRunsPass) {
  for (const auto& name : property_names()) {
    RunOptions o;
    o.seed = 3;
    o.budget = 25;
    const CheckReport r = run_property(name, o);
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.to_json().dump();
  }
  EXPECT_THROW(run_property("no-such-property", {}), Error);
}

TEST(Suites, ReplayOfPassingReportPasses) {
  RunOptions o;
  o.budget = 5;
  const Json j = run_property("flatness", o).to_json();
  EXPECT_FALSE(j.contains("counterexample"));
  EXPECT_EQ(replay_report(j).verdict, Verdict::Pass);
  EXPECT_THROW(replay_report(Json{{"check", "bogus"}}), Error);
}

TEST(Suites, InstancesSurviveJsonRoundTrip) {
  for (const auto& name : {"prenex", "locality", "neg-tc", "elim-terms", "union-closure"}) {
    RunOptions o;
    o.budget = 5;
    const Suite s = make_suite(name, o);
    for (std::uint64_t i = 0; i < s.size; ++i) {
      const Instance inst = s.make(i);
      const Json once = instance_to_json(inst);
      EXPECT_EQ(instance_to_json(instance_from_json(once)), once) << name;
    }
  }
}
