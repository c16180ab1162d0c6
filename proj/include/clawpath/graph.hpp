#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clawpath/errors.hpp"
#include "clawpath/vertex_set.hpp"

namespace clawpath {

using Edge = std::pair<VertexId, VertexId>;

// Where a vertex came from. Original vertices carry their own id; contracted
// vertices carry the ids they absorbed; synthetic vertices (connectors added
// by reductions) carry nothing.
struct Provenance {
  std::vector<VertexId> origins;
  bool synthetic = false;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return present_.size(); }
  std::size_t size() const { return edge_count_; }
  // All ids are strictly below capacity().
  std::size_t capacity() const { return adj_.size(); }

  bool contains(VertexId v) const { return present_.contains(v); }
  const VertexSet& vertex_set() const { return present_; }
  std::vector<VertexId> vertices() const { return present_.to_vector(); }

  const VertexSet& neighbors(VertexId v) const;
  VertexSet closed_neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return v < adj_.size() && adj_[v].contains(u); }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::vector<Edge> edges() const;
  const Provenance& provenance(VertexId v) const;

  bool is_clique(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;
  bool is_connected() const;
  // Vertices reachable from v using only vertices in `within` (v itself always included).
  VertexSet component_of(VertexId v, const VertexSet& within) const;
  VertexSet component_of(VertexId v) const { return component_of(v, present_); }
  std::vector<VertexSet> components() const;

  // Derived graphs. None of these mutate *this.
  Graph induced(const VertexSet& keep) const;
  Graph without(const VertexSet& drop) const;
  Graph without(VertexId v) const;
  Graph with_edges(std::span<const Edge> extra) const;
  // Adds a synthetic vertex with the given neighbours; id = capacity().
  std::pair<Graph, VertexId> with_vertex(const VertexSet& nbrs) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;
  VertexSet present_;
  std::vector<VertexSet> adj_;
  std::vector<Provenance> prov_;
  std::size_t edge_count_ = 0;
};

// Incremental construction; the only way to make a Graph from scratch.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t n);  // vertices 0..n-1 with identity provenance
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  void add_vertex(VertexId v, Provenance p);
  void add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);
  Graph build() && { return std::move(g_); }
  const Graph& peek() const { return g_; }

 private:
  void ensure(std::size_t cap);
  Graph g_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
std::size_t distance(const Graph& g, VertexId u, VertexId v);
// BFS layers from `src` restricted to `within`; kUnreachable outside.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId src, const VertexSet& within);
// A shortest u-v path inside `within` exploring neighbours in ascending id, or nullopt.
std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId u, VertexId v,
                                                    const VertexSet& within);

Graph contract_edge(const Graph& g, Edge e);

struct PathCertificate {
  std::vector<VertexId> sequence;
  bool oriented = true;
  friend bool operator==(const PathCertificate&, const PathCertificate&) = default;
};

enum class PathDefect { None, Empty, UnknownVertex, RepeatedVertex, MissingEdge, Chord };
const char* to_string(PathDefect d);

struct PathCheck {
  PathDefect defect = PathDefect::None;
  std::size_t at = 0;  // index of the offending position
  explicit operator bool() const { return defect == PathDefect::None; }
};

PathCheck check_induced_path(const Graph& g, std::span<const VertexId> seq);
inline bool is_induced_path(const Graph& g, const PathCertificate& cert) {
  return static_cast<bool>(check_induced_path(g, cert.sequence));
}
// Sequence is an induced cycle: length >= 3, consecutive (cyclically) adjacent, nothing else.
bool is_induced_cycle(const Graph& g, std::span<const VertexId> seq);
bool are_mutually_induced(const Graph& g, std::span<const PathCertificate> paths);

enum class Variant { OrderedPath, Path, DisjointPaths, Cycle };
const char* to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

struct Instance {
  Graph graph;
  std::vector<VertexId> terminals;
  Variant variant = Variant::OrderedPath;

  // Throws InputError when an invariant fails.
  void validate() const;
  std::vector<Edge> pairs() const;  // disjoint-paths reading of terminals
};

}  // namespace clawpath
