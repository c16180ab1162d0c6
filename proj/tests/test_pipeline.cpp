#include <gtest/gtest.h>

#include <algorithm>

#include "clawpath/generators.hpp"
#include "clawpath/oracles.hpp"
#include "clawpath/pipeline.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace clawpath;

namespace {

using Ids = std::vector<VertexId>;

Instance random_instance(Rng& rng, Variant v, std::size_t max_n, std::size_t max_k) {
  while (true) {
    Graph g = fx::claw_free_graph(rng, max_n);
    std::size_t k = fx::pick(rng, 2, max_k);
    Ids ts = v == Variant::DisjointPaths ? fx::disjoint_terminals(g, k, rng) : random_terminals(g, k, rng);
    std::size_t want = v == Variant::DisjointPaths ? 2 * k : k;
    if (ts.size() == want) return {g, ts, v};
  }
}

bool brute(const Instance& inst) {
  switch (inst.variant) {
    case Variant::OrderedPath: return bf::ordered_path(inst.graph, inst.terminals).has_value();
    case Variant::Path: return bf::path_through(inst.graph, inst.terminals);
    case Variant::DisjointPaths: return bf::disjoint_paths(inst.graph, inst.pairs());
    case Variant::Cycle: return bf::cycle_through(inst.graph, inst.terminals);
  }
  return false;
}

}  // namespace

TEST(SolveOrdered, Examples) {
  Instance c6{cycle_graph(6), {0, 3}, Variant::OrderedPath};
  Answer a = solve_ordered(c6);
  ASSERT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.certificate->sequence.size(), 4u);
  EXPECT_TRUE(verify(c6, a));

  Instance split{build_graph(4, {{0, 1}, {2, 3}}), {0, 3}, Variant::OrderedPath};
  Answer b = solve_ordered(split);
  EXPECT_EQ(b.verdict, Verdict::No);
  EXPECT_FALSE(b.certificate);

  Instance one{path_graph(3), {1}, Variant::OrderedPath};
  EXPECT_EQ(solve_ordered(one).verdict, Verdict::Yes);
}

TEST(SolveOrdered, ClawsAreRejectedUnlessForced) {
  Instance star{star_graph(3), {1, 0, 2}, Variant::OrderedPath};
  EXPECT_THROW(solve_ordered(star), NotClawFree);
  PipelineConfig cfg;
  cfg.force_oracle = true;
  Answer a = solve_ordered(star, cfg);
  EXPECT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.stats.dispatch.at("oracle"), 1u);
}

TEST(SolveOrdered, OracleOnlyMode) {
  PipelineConfig cfg;
  cfg.oracle_only = true;
  Answer a = solve_ordered({path_graph(9), {0, 4, 6, 8}, Variant::OrderedPath}, cfg);
  EXPECT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.stats.dispatch.at("oracle"), 1u);
}

TEST(SolveOrdered, ExhaustionIsNotNo) {
  PipelineConfig cfg;
  cfg.budget = OracleBudget{2, std::chrono::seconds(10)};
  Graph g = line_graph_of(grid_graph(4, 4));
  Ids ts = {0, 5, g.vertices().back()};
  Answer a = solve_ordered({g, ts, Variant::OrderedPath}, cfg);
  EXPECT_EQ(a.verdict, Verdict::Exhausted);
  EXPECT_FALSE(a.certificate);
}

TEST(SolveOrdered, LargeKWarns) {
  Graph p = path_graph(40);
  Ids ts;
  for (VertexId v = 0; v < 40; v += 5) ts.push_back(v);
  ts.push_back(39);
  Answer a = solve_ordered({p, ts, Variant::OrderedPath});
  EXPECT_EQ(a.verdict, Verdict::Yes);
  ASSERT_FALSE(a.stats.warnings.empty());
  EXPECT_NE(a.stats.warnings.front().find("exceeds"), std::string::npos);
}

TEST(SolveOrdered, AgreesWithSubsetEnumeration) {
  Rng rng(71);
  for (std::size_t w : {3, 6}) {
    PipelineConfig cfg;
    cfg.window = w;
    cfg.debug_level = 1;
    for (int i = 0; i < 120; ++i) {
      Instance inst = random_instance(rng, Variant::OrderedPath, 14, 4);
      Answer a = solve_ordered(inst, cfg);
      ASSERT_NE(a.verdict, Verdict::Exhausted);
      EXPECT_EQ(a.verdict == Verdict::Yes, brute(inst));
      EXPECT_TRUE(verify(inst, a));
      EXPECT_EQ(a.stats.audit_failure_count(), 0u);
    }
  }
}

TEST(SolveKInAPath, Examples) {
  PipelineConfig forced;
  forced.force_oracle = true;
  EXPECT_EQ(solve_k_in_a_path({star_graph(3), {1, 2, 3}, Variant::Path}, forced).verdict, Verdict::No);
  Instance p7{path_graph(7), {6, 0, 3}, Variant::Path};
  Answer a = solve_k_in_a_path(p7);
  ASSERT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.certificate->sequence.size(), 7u);
  EXPECT_TRUE(verify(p7, a));
}

TEST(SolveDisjointPaths, Examples) {
  Instance c6{cycle_graph(6), {0, 1, 3, 4}, Variant::DisjointPaths};
  Answer a = solve_induced_disjoint_paths(c6);
  ASSERT_EQ(a.verdict, Verdict::Yes);
  EXPECT_TRUE(verify(c6, a));
  EXPECT_EQ(solve_induced_disjoint_paths({cycle_graph(4), {0, 2, 1, 3}, Variant::DisjointPaths}).verdict, Verdict::No);
}

TEST(SolveInducedCycle, Examples) {
  Instance c6{cycle_graph(6), {0, 3}, Variant::Cycle};
  Answer a = solve_induced_cycle(c6);
  ASSERT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.cycle.size(), 6u);
  EXPECT_TRUE(verify(c6, a));
  EXPECT_EQ(solve_induced_cycle({path_graph(5), {0, 2}, Variant::Cycle}).verdict, Verdict::No);
  EXPECT_EQ(solve_induced_cycle({complete_graph(4), {0, 1, 2}, Variant::Cycle}).verdict, Verdict::Yes);
}

class VariantSweep : public ::testing::TestWithParam<Variant> {};

TEST_P(VariantSweep, AgreesWithSubsetEnumeration) {
  Variant v = GetParam();
  Rng rng(72 + static_cast<int>(v));
  int yes_count = 0;
  for (int i = 0; i < 80; ++i) {
    Instance inst = random_instance(rng, v, v == Variant::Path ? 12 : 11, v == Variant::DisjointPaths ? 2 : 3);
    Answer a = solve(inst);
    ASSERT_NE(a.verdict, Verdict::Exhausted);
    bool want = brute(inst);
    EXPECT_EQ(a.verdict == Verdict::Yes, want) << to_string(v) << " n=" << inst.graph.order();
    EXPECT_TRUE(verify(inst, a));
    yes_count += want;
  }
  EXPECT_GT(yes_count, 0);
}

INSTANTIATE_TEST_SUITE_P(Variants, VariantSweep,
                         ::testing::Values(Variant::Path, Variant::DisjointPaths, Variant::Cycle),
                         [](const auto& info) {
                           std::string s = to_string(info.param);
                           s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
                           return s;
                         });

TEST(Verify, RejectsBadCertificates) {
  Instance p4{path_graph(4), {0, 3}, Variant::OrderedPath};
  Answer good;
  good.verdict = Verdict::Yes;
  good.certificate = PathCertificate{{0, 1, 2, 3}, true};
  EXPECT_TRUE(verify(p4, good));

  Instance k3{complete_graph(3), {0, 2}, Variant::OrderedPath};
  Answer chord;
  chord.verdict = Verdict::Yes;
  chord.certificate = PathCertificate{{0, 1, 2}, true};
  EXPECT_FALSE(verify(k3, chord));

  Instance c5{cycle_graph(5), {0, 2}, Variant::Cycle};
  Answer missing;
  missing.verdict = Verdict::Yes;
  missing.cycle = {0, 1, 3};
  EXPECT_FALSE(verify(c5, missing));
  missing.cycle = {0, 1, 2, 3, 4};
  EXPECT_TRUE(verify(c5, missing));

  Answer backwards = good;
  backwards.certificate->sequence = {3, 2, 1, 0};
  EXPECT_FALSE(verify(p4, backwards));
  Answer no;
  EXPECT_TRUE(verify(p4, no));
}

// ---- instances that reach the later steps ----

class LongInstances : public ::testing::TestWithParam<fx::LongFamily> {};

TEST_P(LongInstances, StructuredDispatchAndPostconditions) {
  Rng rng(73 + static_cast<int>(GetParam()));
  std::size_t seen[3] = {0, 0, 0};
  PipelineConfig cfg;
  cfg.window = 3;
  cfg.debug_level = 1;
  cfg.observer = [&](const std::string& step, const Instance& inst) {
    if (step == "step2") {
      ++seen[0];
      EXPECT_TRUE(bf::is_quasi_line(inst.graph));
    } else if (step == "step3") {
      ++seen[1];
      EXPECT_FALSE(bf::has_homogeneous_clique(inst.graph));
    } else if (step == "step4") {
      ++seen[2];
      std::vector<std::vector<VertexId>> ex;
      for (VertexId t : {inst.terminals.front(), inst.terminals.back()})
        if (inst.graph.degree(t) == 1) ex.push_back({t, inst.graph.neighbors(t).first()});
      EXPECT_FALSE(bf::has_homogeneous_pair(inst.graph, ex));
    }
  };
  for (int i = 0; i < 6; ++i) {
    Instance inst = fx::long_instance(GetParam(), rng);
    Answer a = solve_ordered(inst, cfg);
    ASSERT_NE(a.verdict, Verdict::Exhausted);
    EXPECT_EQ(a.verdict, oracle_ordered_path(inst.graph, inst.terminals).verdict);
    EXPECT_TRUE(verify(inst, a));
    EXPECT_EQ(a.stats.fallback_count(), 0u);
    EXPECT_EQ(a.stats.audit_failure_count(), 0u);
  }
  EXPECT_GT(seen[0], 0u);
  EXPECT_GT(seen[1], 0u);
  EXPECT_GT(seen[2], 0u);
}

INSTANTIATE_TEST_SUITE_P(Families, LongInstances,
                         ::testing::Values(fx::LongFamily::ProperInterval, fx::LongFamily::LadderLineGraph),
                         [](const auto& info) {
                           return info.param == fx::LongFamily::ProperInterval ? "ProperInterval" : "LadderLineGraph";
                         });

TEST(BranchOrder, VerdictDoesNotDependOnIt) {
  Rng rng(74);
  for (int i = 0; i < 4; ++i) {
    Instance inst = fx::long_instance(i % 2 ? fx::LongFamily::LadderLineGraph : fx::LongFamily::ProperInterval, rng);
    PipelineConfig base;
    base.window = 3;
    Verdict want = solve_ordered(inst, base).verdict;
    for (std::uint64_t seed : {1u, 2u}) {
      PipelineConfig cfg = base;
      cfg.shuffle_branches = true;
      cfg.seed = seed;
      EXPECT_EQ(solve_ordered(inst, cfg).verdict, want);
    }
    PipelineConfig par = base;
    par.parallel_branches = 3;
    Answer a = solve_ordered(inst, par);
    EXPECT_EQ(a.verdict, want);
    EXPECT_TRUE(verify(inst, a));
  }
}

TEST(Stats, MergeAddsCounts) {
  Stats a, b;
  a.dispatch["x"] = 1;
  a.fallbacks["r"] = 2;
  b.dispatch["x"] = 3;
  b.fallbacks["s"] = 1;
  b.branches = 4;
  b.warnings.push_back("w");
  a.merge(b);
  EXPECT_EQ(a.dispatch["x"], 4u);
  EXPECT_EQ(a.fallback_count(), 3u);
  EXPECT_EQ(a.branches, 4u);
  EXPECT_EQ(a.warnings.size(), 1u);
}
