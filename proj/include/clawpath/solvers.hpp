#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/interval.hpp"
#include "clawpath/root_multigraph.hpp"
#include "clawpath/search.hpp"
#include "clawpath/strips.hpp"

namespace clawpath {

// Ordered path in a linear interval graph. Terminals must form an independent
// set whose positions increase; otherwise the answer is nullopt. Throws
// InputError when `rep` does not represent g.
std::optional<PathCertificate> solve_linear_interval(const Graph& g, const IntervalRepresentation& rep,
                                                     std::span<const VertexId> terminals);

enum class Orientation { Forward, Backward };

struct LinearCut {
  Graph graph;
  IntervalRepresentation rep;
};
// Walks the circle from t_1 in the given direction and deletes everything
// after t_k. nullopt when the interior terminals are not met in order before
// t_k. Throws PreconditionError when the remaining graph is not linear in the
// walked order.
std::optional<LinearCut> circular_to_linear(const Graph& g, const IntervalRepresentation& rep,
                                            std::span<const VertexId> terminals, Orientation o);

struct LineGraphConversion {
  Graph graph;
  std::vector<VertexId> terminals;  // same ids; the map is the identity on terminals
};
// Replaces each terminal-free strip by one shortest crossing path (or drops it
// when it has a dangling end). nullopt when the result is not a line graph.
std::optional<LineGraphConversion> strips_to_line_graph(const Graph& g, const StripComposition& comp,
                                                        std::span<const VertexId> terminals);

// Vertex-disjoint paths joining each pair in h, avoiding `blocked`. A pair
// (x, x) asks for the single-vertex path. Throws SearchExhausted via result.
SearchResult<std::vector<std::vector<RootVertex>>> solve_disjoint_paths_root(
    const RootMultigraph& h, std::span<const std::pair<RootVertex, RootVertex>> pairs,
    std::span<const RootVertex> blocked = {}, const OracleBudget& budget = {});

// Ordered path in a line graph through the root multigraph. Throws
// PreconditionError when g is not a line graph.
SearchResult<PathCertificate> solve_line_graph(const Graph& g, std::span<const VertexId> terminals,
                                               const OracleBudget& budget = {});
SearchResult<PathCertificate> solve_line_graph(const Graph& g, const RootMultigraph& root,
                                               std::span<const VertexId> terminals, const OracleBudget& budget = {});

}  // namespace clawpath
