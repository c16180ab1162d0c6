#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "clawpath/generators.hpp"
#include "clawpath/recognizers.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace clawpath;

namespace {

Graph diamond() { return build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Some vertex order is umbrella-free (brute force over permutations).
bool has_proper_interval_order(const Graph& g) {
  auto order = g.vertices();
  std::sort(order.begin(), order.end());
  do {
    if (is_umbrella_free(g, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

TEST(FindClaw, Examples) {
  auto c = find_claw(star_graph(3));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->center, 0u);
  EXPECT_FALSE(find_claw(cycle_graph(5)));
  Graph p = petersen_graph();
  auto pc = find_claw(p);
  ASSERT_TRUE(pc);
  for (VertexId l : pc->leaves) EXPECT_TRUE(p.adjacent(pc->center, l));
  EXPECT_THROW(require_claw_free(p), NotClawFree);
}

TEST(FindClaw, AgreesWithFourSubsets) {
  Rng rng(101);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_gnp(fx::pick(rng, 1, 10), std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
    auto c = find_claw(g);
    EXPECT_EQ(c.has_value(), bf::has_claw(g));
    if (c) {
      auto [x, y, z] = c->leaves;
      EXPECT_TRUE(g.adjacent(c->center, x) && g.adjacent(c->center, y) && g.adjacent(c->center, z));
      EXPECT_FALSE(g.adjacent(x, y) || g.adjacent(x, z) || g.adjacent(y, z));
    }
  }
}

TEST(OddAntihole, WheelHubSeesC5) {
  Graph w = wheel_graph(5);
  auto h = find_odd_antihole_in_neighborhood(w, 0);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->size(), 5u);
  for (VertexId rim = 1; rim <= 5; ++rim) EXPECT_FALSE(find_odd_antihole_in_neighborhood(w, rim));
}

TEST(OddAntihole, AbsentInLineGraphs) {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_line_graph(fx::pick(rng, 3, 8), 0.5, rng);
    for (VertexId u : g.vertices()) EXPECT_FALSE(find_odd_antihole_in_neighborhood(g, u));
  }
}

TEST(OddAntihole, AgreesWithNeighbourhoodSubsets) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_gnp(fx::pick(rng, 5, 9), std::uniform_real_distribution<double>(0.4, 0.9)(rng), rng);
    for (VertexId u : g.vertices()) {
      auto h = find_odd_antihole_in_neighborhood(g, u);
      ASSERT_EQ(h.has_value(), bf::has_odd_antihole_in_neighborhood(g, u));
      if (h) {
        bf::Dense d(g);
        EXPECT_TRUE(bf::is_odd_antihole(d, d.of(*h)));
        for (VertexId x : *h) EXPECT_TRUE(g.adjacent(u, x));
      }
    }
  }
}

TEST(QuasiLine, Examples) {
  EXPECT_TRUE(is_quasi_line(cycle_graph(5)));
  EXPECT_FALSE(is_quasi_line(wheel_graph(5)));
  EXPECT_TRUE(is_quasi_line(line_graph_of(petersen_graph())));
  EXPECT_THROW(is_quasi_line(star_graph(3)), NotClawFree);
}

TEST(QuasiLine, LineGraphsAreQuasiLine) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_line_graph(fx::pick(rng, 2, 8), 0.5, rng);
    EXPECT_TRUE(is_quasi_line(g));
  }
}

TEST(QuasiLine, AgreesWithTwoCliqueDefinition) {
  Rng rng(10);
  int checked = 0;
  while (checked < 300) {
    Graph g = random_gnp(fx::pick(rng, 3, 9), std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng);
    if (find_claw(g)) continue;
    ++checked;
    EXPECT_EQ(is_quasi_line(g), bf::is_quasi_line(g));
  }
}

TEST(HomogeneousClique, Examples) {
  auto d = find_homogeneous_clique(diamond());
  ASSERT_TRUE(d);
  EXPECT_EQ(d->to_vector(), (std::vector<VertexId>{1, 2}));
  EXPECT_FALSE(find_homogeneous_clique(cycle_graph(5)));
  EXPECT_FALSE(bf::has_homogeneous_clique(cycle_graph(5)));
  auto k3 = find_homogeneous_clique(complete_graph(3));
  ASSERT_TRUE(k3);
  EXPECT_TRUE(is_homogeneous_clique(complete_graph(3), *k3));
}

TEST(HomogeneousClique, AgreesWithCliqueEnumeration) {
  Rng rng(12);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_gnp(fx::pick(rng, 1, 9), std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
    auto c = find_homogeneous_clique(g);
    EXPECT_EQ(c.has_value(), bf::has_homogeneous_clique(g));
    if (c) {
      bf::Dense d(g);
      EXPECT_TRUE(bf::is_homogeneous_clique(d, d.of(c->to_vector())));
    }
  }
}

TEST(HomogeneousPair, Examples) {
  auto p4 = find_homogeneous_pair(path_graph(4));
  ASSERT_TRUE(p4);
  EXPECT_TRUE(is_homogeneous_pair(path_graph(4), p4->a, p4->b));
  EXPECT_FALSE(find_homogeneous_pair(cycle_graph(5)));
  EXPECT_FALSE(find_homogeneous_pair(complete_graph(2)));
  EXPECT_TRUE(is_homogeneous_pair(path_graph(4), VertexSet(4, {0, 1}), VertexSet(4, {2})));
  EXPECT_FALSE(is_homogeneous_pair(path_graph(4), VertexSet(4, {0}), VertexSet(4, {1})));
}

TEST(HomogeneousPair, ExclusionsAreHonoured) {
  Graph p4 = path_graph(4);
  // Both ends of P4 carry a pair; excluding them leaves the middle options.
  std::vector<VertexSet> ex{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
  auto w = find_homogeneous_pair(p4, ex);
  std::vector<std::vector<VertexId>> exv{{0, 1}, {2, 3}};
  EXPECT_EQ(w.has_value(), bf::has_homogeneous_pair(p4, exv));
  if (w) {
    for (const auto& e : ex) EXPECT_FALSE(w->a == e || w->b == e);
  }
}

TEST(HomogeneousPair, AgreesWithDisjointCliquePairs) {
  Rng rng(13);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_gnp(fx::pick(rng, 2, 9), std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
    auto w = find_homogeneous_pair(g);
    EXPECT_EQ(w.has_value(), bf::has_homogeneous_pair(g)) << "n=" << g.order();
    if (w) {
      bf::Dense d(g);
      EXPECT_TRUE(bf::is_homogeneous_pair(d, d.of(w->a.to_vector()), d.of(w->b.to_vector())));
    }
  }
}

TEST(Simplicial, Examples) {
  auto p3 = find_simplicial_vertex(path_graph(3));
  ASSERT_TRUE(p3);
  EXPECT_NE(*p3, 1u);
  EXPECT_FALSE(find_simplicial_vertex(cycle_graph(4)));
  EXPECT_TRUE(find_simplicial_vertex(complete_graph(5)));
  EXPECT_FALSE(find_simplicial_vertex(path_graph(3), VertexSet(3, {0, 2})));
}

TEST(LinearInterval, Examples) {
  auto p5 = recognize_linear_interval(path_graph(5));
  ASSERT_TRUE(p5);
  EXPECT_TRUE(p5->represents(path_graph(5)));
  auto order = p5->order();
  EXPECT_TRUE(order == (std::vector<VertexId>{0, 1, 2, 3, 4}) || order == (std::vector<VertexId>{4, 3, 2, 1, 0}));
  EXPECT_FALSE(recognize_linear_interval(star_graph(3)));
  EXPECT_FALSE(recognize_linear_interval(cycle_graph(4)));
  EXPECT_FALSE(has_proper_interval_order(cycle_graph(4)));
}

TEST(LinearInterval, AgreesWithOrderEnumeration) {
  Rng rng(14);
  for (int i = 0; i < 250; ++i) {
    Graph g = random_gnp(fx::pick(rng, 1, 7), std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng);
    auto rep = recognize_linear_interval(g);
    EXPECT_EQ(rep.has_value(), has_proper_interval_order(g));
    if (rep) {
      EXPECT_TRUE(rep->represents(g));
      EXPECT_EQ(rep->flavor, Flavor::Linear);
    }
  }
}

TEST(LinearInterval, GeneratedGraphsRecognised) {
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_proper_interval(fx::pick(rng, 2, 20), rng, fx::flip(rng));
    auto rep = recognize_linear_interval(g);
    ASSERT_TRUE(rep);
    EXPECT_TRUE(rep->represents(g));
  }
}

TEST(CircularInterval, Examples) {
  auto c6 = recognize_circular_interval(cycle_graph(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->flavor, Flavor::Circular);
  EXPECT_TRUE(c6->represents(cycle_graph(6)));
  auto p3 = recognize_circular_interval(path_graph(3));
  ASSERT_TRUE(p3);
  EXPECT_TRUE(p3->represents(path_graph(3)));
  EXPECT_FALSE(recognize_circular_interval(wheel_graph(5)));
}

TEST(CircularInterval, GeneratedGraphsRecognised) {
  Rng rng(16);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_proper_circular(fx::pick(rng, 4, 12), rng);
    auto rep = recognize_circular_interval(g);
    ASSERT_TRUE(rep);
    EXPECT_TRUE(rep->represents(g));
  }
}

TEST(CircularInterval, ReturnedRepresentationsReExpand) {
  Rng rng(18);
  for (int i = 0; i < 150; ++i) {
    Graph g = fx::claw_free_graph(rng, 10);
    if (auto rep = recognize_circular_interval(g)) {
      EXPECT_TRUE(rep->represents(g));
    }
  }
}

TEST(LineGraphRoot, Examples) {
  auto p3 = line_graph_root(path_graph(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->edges().size(), 3u);
  EXPECT_EQ(p3->vertex_count(), 4u);
  EXPECT_TRUE(bf::same_edges(p3->line_graph(), path_graph(3)));

  auto k3 = line_graph_root(complete_graph(3));
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->vertex_count(), 4u);  // the star, not the triangle
  EXPECT_TRUE(bf::same_edges(k3->line_graph(), complete_graph(3)));

  auto c5 = line_graph_root(cycle_graph(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->vertex_count(), 5u);
  EXPECT_TRUE(bf::same_edges(c5->line_graph(), cycle_graph(5)));

  EXPECT_FALSE(line_graph_root(star_graph(3)));
  EXPECT_FALSE(line_graph_root(wheel_graph(5)));
}

TEST(LineGraphRoot, RoundTripOnRandomLineGraphs) {
  Rng rng(19);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_line_graph(fx::pick(rng, 2, 9), std::uniform_real_distribution<double>(0.2, 0.7)(rng), rng);
    auto root = line_graph_root(g);
    ASSERT_TRUE(root);
    EXPECT_TRUE(bf::same_edges(root->line_graph(), g));
  }
}

TEST(LineGraphRoot, NonLineGraphsRejectedOrRoundTrip) {
  Rng rng(20);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_gnp(fx::pick(rng, 2, 8), 0.5, rng);
    if (auto root = line_graph_root(g)) {
      EXPECT_TRUE(bf::same_edges(root->line_graph(), g));
    }
  }
}

TEST(Strips, RandomCompositionsRoundTrip) {
  Rng rng(21);
  int found = 0;
  for (int i = 0; i < 80; ++i) {
    StripComposition made = random_strip_composition(fx::pick(rng, 2, 4), 3, rng);
    ASSERT_TRUE(made.well_formed());
    Graph g = made.compose();
    StripOptions opts;
    opts.check_preconditions = false;
    auto comp = decompose_strips(g, opts);
    if (!comp) continue;
    ++found;
    EXPECT_TRUE(comp->well_formed());
    EXPECT_TRUE(bf::same_edges(comp->compose(), g));
  }
  EXPECT_GT(found, 0);
}

TEST(Strips, PreconditionsReported) {
  EXPECT_THROW(decompose_strips(complete_graph(4)), PreconditionError);
  EXPECT_THROW(decompose_strips(star_graph(3)), PreconditionError);
}

TEST(Strips, CycleIsAbsentOrValid) {
  Graph c6 = cycle_graph(6);
  StripOptions opts;
  opts.check_preconditions = false;
  if (auto comp = decompose_strips(c6, opts)) {
    EXPECT_TRUE(bf::same_edges(comp->compose(), c6));
  }
}
