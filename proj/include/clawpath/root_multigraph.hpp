#pragma once

#include <cstdint>
#include <vector>

#include "clawpath/graph.hpp"

namespace clawpath {

using RootVertex = std::uint32_t;

// One edge of a root multigraph; `line_vertex` is the vertex of the line
// graph that this edge corresponds to.
struct RootEdge {
  RootVertex u = 0;
  RootVertex v = 0;
  VertexId line_vertex = 0;
  friend bool operator==(const RootEdge&, const RootEdge&) = default;
};

// Loopless multigraph H with an explicit edge <-> line-vertex bijection.
class RootMultigraph {
 public:
  RootMultigraph() = default;
  RootMultigraph(std::size_t vertex_count, std::vector<RootEdge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<RootEdge>& edges() const { return edges_; }
  // Index into edges() for a line vertex, or npos.
  std::size_t edge_of(VertexId line_vertex) const;
  // Distinct neighbours of a root vertex.
  const std::vector<RootVertex>& neighbors(RootVertex x) const { return nbrs_[x]; }
  // Lowest line vertex among the parallel edges joining x and y, or npos.
  VertexId line_vertex_between(RootVertex x, RootVertex y) const;

  // L(H) with vertex ids equal to the line_vertex labels.
  Graph line_graph() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<RootEdge> edges_;
  std::vector<std::vector<RootVertex>> nbrs_;
  std::vector<std::size_t> index_;  // by line vertex
};

}  // namespace clawpath
