#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/interval.hpp"
#include "clawpath/root_multigraph.hpp"
#include "clawpath/search.hpp"
#include "clawpath/strips.hpp"

namespace clawpath {

struct Claw {
  VertexId center;
  std::array<VertexId, 3> leaves;
};
std::optional<Claw> find_claw(const Graph& g);
// Throws NotClawFree with the witness when a claw exists.
void require_claw_free(const Graph& g);

// Vertices of N(u) whose complement is an odd hole (length >= 5), listed in
// hole order of the complement.
std::optional<std::vector<VertexId>> find_odd_antihole_in_neighborhood(const Graph& g, VertexId u);
// Induced cycle of exactly `length` vertices inside g[within], or nullopt.
std::optional<std::vector<VertexId>> find_induced_cycle_of_length(const Graph& g, const VertexSet& within,
                                                                  std::size_t length);

// Throws NotClawFree on claw input.
bool is_quasi_line(const Graph& g);

std::optional<VertexSet> find_homogeneous_clique(const Graph& g);
bool is_homogeneous_clique(const Graph& g, const VertexSet& a);

struct HomogeneousPairWitness {
  VertexSet a;
  VertexSet b;
};
bool is_homogeneous_pair(const Graph& g, const VertexSet& a, const VertexSet& b);
// A homogeneous pair in which neither clique equals an excluded set.
// Throws SearchExhausted if the search budget runs out.
std::optional<HomogeneousPairWitness> find_homogeneous_pair(const Graph& g, std::span<const VertexSet> excluded = {},
                                                             const OracleBudget& budget = {});

std::optional<VertexId> find_simplicial_vertex(const Graph& g, const VertexSet& exempt = {});

std::optional<IntervalRepresentation> recognize_linear_interval(const Graph& g);

inline constexpr OracleBudget kCircularBudget{2'000'000, std::chrono::seconds(20)};
// Non-linear inputs go through a budgeted search over circular orders;
// running out of budget throws SearchExhausted.
std::optional<IntervalRepresentation> recognize_circular_interval(const Graph& g,
                                                                  const OracleBudget& budget = kCircularBudget);

struct StripOptions {
  VertexSet exempt_simplicial;           // allowed to be simplicial (degree-one end terminals)
  std::vector<VertexSet> excluded_pairs;  // homogeneous pairs tolerated by the precondition check
  OracleBudget budget{5'000'000, std::chrono::seconds(20)};
  bool check_preconditions = true;
};
// Throws PreconditionError when g is not quasi-line, has a non-exempt
// simplicial vertex, or has a homogeneous pair not covered by the exclusions.
std::optional<StripComposition> decompose_strips(const Graph& g, const StripOptions& opts = {});

// Root multigraph with L(H) == g under the returned bijection, or nullopt.
std::optional<RootMultigraph> line_graph_root(const Graph& g, const OracleBudget& budget = {});

}  // namespace clawpath
