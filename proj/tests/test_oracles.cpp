#include <gtest/gtest.h>

#include <algorithm>

#include "clawpath/generators.hpp"
#include "clawpath/oracles.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace clawpath;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> l) { return l; }

// Each leg of K_{1,3} subdivided once: centre 0, middles 1..3, leaves 4..6.
Graph subdivided_star() { return build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}); }

bool visits_in_order(const std::vector<VertexId>& seq, const std::vector<VertexId>& ts) {
  std::size_t next = 0;
  for (VertexId v : seq)
    if (next < ts.size() && v == ts[next]) ++next;
  return next == ts.size() && seq.front() == ts.front() && seq.back() == ts.back();
}

}  // namespace

TEST(OracleOrderedPath, Examples) {
  auto p5 = oracle_ordered_path(path_graph(5), ids({0, 2, 4}));
  ASSERT_EQ(p5.verdict, Verdict::Yes);
  EXPECT_EQ(p5.witness->sequence, ids({0, 1, 2, 3, 4}));

  EXPECT_EQ(oracle_ordered_path(complete_graph(4), ids({0, 1, 2})).verdict, Verdict::No);

  auto c6 = oracle_ordered_path(cycle_graph(6), ids({0, 3}));
  ASSERT_EQ(c6.verdict, Verdict::Yes);
  EXPECT_TRUE(is_induced_path(cycle_graph(6), *c6.witness));
  EXPECT_EQ(c6.witness->sequence.size(), 4u);
}

TEST(OracleOrderedPath, SingleTerminalAndUnknownTerminal) {
  auto one = oracle_ordered_path(path_graph(3), ids({1}));
  ASSERT_EQ(one.verdict, Verdict::Yes);
  EXPECT_EQ(one.witness->sequence, ids({1}));
  EXPECT_THROW(oracle_ordered_path(path_graph(3), ids({0, 9})), InputError);
  EXPECT_THROW(oracle_ordered_path(path_graph(3), ids({0, 0})), InputError);
}

TEST(OracleOrderedPath, BudgetExhaustionIsDistinct) {
  Graph g = grid_graph(5, 5);
  OracleBudget tiny{3, std::chrono::seconds(10)};
  auto r = oracle_ordered_path(g, ids({0, 12, 24}), tiny);
  EXPECT_EQ(r.verdict, Verdict::Exhausted);
  EXPECT_FALSE(r.witness);
}

TEST(OracleOrderedPath, AgreesWithSubsetEnumeration) {
  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_gnp(fx::pick(rng, 2, 10), std::uniform_real_distribution<double>(0.2, 0.7)(rng), rng);
    std::size_t k = fx::pick(rng, 2, std::min<std::size_t>(4, g.order()));
    auto ts = random_terminals(g, k, rng);
    auto r = oracle_ordered_path(g, ts);
    auto b = bf::ordered_path(g, ts);
    ASSERT_NE(r.verdict, Verdict::Exhausted);
    EXPECT_EQ(r.verdict == Verdict::Yes, b.has_value());
    if (r.witness) {
      EXPECT_TRUE(is_induced_path(g, *r.witness));
      EXPECT_TRUE(visits_in_order(r.witness->sequence, ts));
    }
  }
}

TEST(OracleOrderedPath, TwoTerminalsMeansConnected) {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_gnp(fx::pick(rng, 2, 12), 0.2, rng);
    auto ts = random_terminals(g, 2, rng);
    bool connected = distance(g, ts[0], ts[1]) != kUnreachable;
    EXPECT_EQ(oracle_ordered_path(g, ts).verdict == Verdict::Yes, connected);
  }
}

TEST(OracleOrderedPath, MonotoneUnderInducedSupergraph) {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_gnp(fx::pick(rng, 4, 11), 0.35, rng);
    auto ts = random_terminals(g, 3, rng);
    VertexSet keep = VertexSet::of(g.capacity(), ts);
    for (VertexId v : g.vertices())
      if (fx::flip(rng)) keep.insert(v);
    auto sub = oracle_ordered_path(g.induced(keep), ts);
    if (sub.verdict != Verdict::Yes) continue;
    EXPECT_TRUE(is_induced_path(g, *sub.witness));
    EXPECT_EQ(oracle_ordered_path(g, ts).verdict, Verdict::Yes);
  }
}

TEST(OracleOrderedPath, Deterministic) {
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_gnp(10, 0.35, rng);
    auto ts = random_terminals(g, 3, rng);
    auto a = oracle_ordered_path(g, ts), b = oracle_ordered_path(g, ts);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(OracleKInAPath, Examples) {
  EXPECT_EQ(oracle_k_in_a_path(cycle_graph(6), ids({0, 3})).verdict, Verdict::Yes);
  EXPECT_EQ(oracle_k_in_a_path(star_graph(3), ids({1, 2, 3})).verdict, Verdict::No);
  EXPECT_EQ(oracle_k_in_a_path(subdivided_star(), ids({4, 5, 6})).verdict, Verdict::No);
  EXPECT_FALSE(bf::path_through(subdivided_star(), ids({4, 5, 6})));
}

TEST(OracleKInAPath, AgreesWithSubsetEnumeration) {
  Rng rng(35);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(fx::pick(rng, 3, 10), 0.4, rng);
    auto ts = random_terminals(g, fx::pick(rng, 2, 4), rng);
    auto r = oracle_k_in_a_path(g, ts);
    EXPECT_EQ(r.verdict == Verdict::Yes, bf::path_through(g, ts));
    if (r.witness) {
      EXPECT_TRUE(is_induced_path(g, *r.witness));
      for (VertexId t : ts) EXPECT_NE(std::find(r.witness->sequence.begin(), r.witness->sequence.end(), t), r.witness->sequence.end());
    }
  }
}

TEST(OracleDisjointPaths, Examples) {
  std::vector<Edge> c6{{0, 1}, {3, 4}};
  auto a = oracle_disjoint_paths(cycle_graph(6), c6);
  ASSERT_EQ(a.verdict, Verdict::Yes);
  EXPECT_TRUE(are_mutually_induced(cycle_graph(6), *a.witness));

  std::vector<Edge> c4{{0, 2}, {1, 3}};
  EXPECT_EQ(oracle_disjoint_paths(cycle_graph(4), c4).verdict, Verdict::No);

  Graph two = build_graph(4, {{0, 1}, {2, 3}});
  std::vector<Edge> comp{{0, 1}, {2, 3}};
  EXPECT_EQ(oracle_disjoint_paths(two, comp).verdict, Verdict::Yes);
}

TEST(OracleDisjointPaths, AgreesWithSubsetEnumeration) {
  Rng rng(36);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(fx::pick(rng, 4, 10), 0.35, rng);
    std::size_t pairs = fx::pick(rng, 1, std::min<std::size_t>(3, g.order() / 2));
    auto ts = random_terminals(g, 2 * pairs, rng);
    Instance inst{g, ts, Variant::DisjointPaths};
    auto ps = inst.pairs();
    auto r = oracle_disjoint_paths(g, ps);
    EXPECT_EQ(r.verdict == Verdict::Yes, bf::disjoint_paths(g, ps));
    if (r.witness) {
      ASSERT_EQ(r.witness->size(), ps.size());
      EXPECT_TRUE(are_mutually_induced(g, *r.witness));
      for (std::size_t j = 0; j < ps.size(); ++j) {
        const auto& seq = (*r.witness)[j].sequence;
        EXPECT_TRUE(is_induced_path(g, (*r.witness)[j]));
        EXPECT_EQ(seq.front(), ps[j].first);
        EXPECT_EQ(seq.back(), ps[j].second);
      }
    }
  }
}

TEST(OracleInducedCycle, AgreesWithSubsetEnumeration) {
  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(fx::pick(rng, 3, 10), 0.4, rng);
    auto ts = random_terminals(g, fx::pick(rng, 1, 3), rng);
    auto r = oracle_induced_cycle(g, ts);
    EXPECT_EQ(r.verdict == Verdict::Yes, bf::cycle_through(g, ts));
    if (r.witness) {
      EXPECT_TRUE(is_induced_cycle(g, *r.witness));
      for (VertexId t : ts) EXPECT_NE(std::find(r.witness->begin(), r.witness->end(), t), r.witness->end());
    }
  }
  EXPECT_EQ(oracle_induced_cycle(complete_graph(3), ids({0, 1, 2})).verdict, Verdict::Yes);
  EXPECT_EQ(oracle_induced_cycle(complete_graph(4), ids({0, 1, 2, 3})).verdict, Verdict::No);
}

TEST(IsIrrelevant, Examples) {
  EXPECT_EQ(is_irrelevant(path_graph(4), 0, 3, 1), Verdict::No);
  Graph pendant = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  EXPECT_EQ(is_irrelevant(pendant, 0, 3, 4), Verdict::Yes);
  for (VertexId v : {2u, 3u, 4u}) EXPECT_EQ(is_irrelevant(cycle_graph(5), 0, 1, v), Verdict::Yes);
  EXPECT_THROW(is_irrelevant(path_graph(4), 0, 0, 1), InputError);
}

TEST(IsIrrelevant, AgreesWithSubsetEnumeration) {
  Rng rng(38);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(fx::pick(rng, 3, 10), 0.35, rng);
    auto ts = random_terminals(g, 3, rng);
    Verdict v = is_irrelevant(g, ts[0], ts[2], ts[1]);
    EXPECT_EQ(v == Verdict::No, bf::relevant(g, ts[0], ts[2], ts[1]));
  }
}

TEST(EnumerateOrderedPaths, VisitsEveryInducedPathOnce) {
  // In C6 there are exactly two induced paths from 0 to 3.
  SearchMeter meter(OracleBudget{});
  std::vector<std::vector<VertexId>> seen;
  Graph c6 = cycle_graph(6);
  enumerate_ordered_paths(c6, ids({0, 3}), c6.vertex_set(), meter, [&](const std::vector<VertexId>& p) {
    seen.push_back(p);
    return false;
  });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::vector<VertexId>>{{0, 1, 2, 3}, {0, 5, 4, 3}}));
}
