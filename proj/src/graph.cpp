#include "clawpath/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace clawpath {

namespace {
const VertexSet kEmpty;
const Provenance kNoProvenance;

void require_vertex(const Graph& g, VertexId v) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
}
}  // namespace

const VertexSet& Graph::neighbors(VertexId v) const { return v < adj_.size() ? adj_[v] : kEmpty; }

VertexSet Graph::closed_neighbors(VertexId v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u : present_)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const Provenance& Graph::provenance(VertexId v) const {
  return v < prov_.size() ? prov_[v] : kNoProvenance;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (VertexId v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_independent(const VertexSet& s) const {
  for (VertexId v : s)
    if (neighbors(v).intersects(s)) return false;
  return true;
}

VertexSet Graph::component_of(VertexId v, const VertexSet& within) const {
  VertexSet seen(capacity());
  seen.insert(v);
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    VertexSet fresh = (neighbors(x) & within) - seen;
    for (VertexId y : fresh) {
      seen.insert(y);
      stack.push_back(y);
    }
  }
  return seen;
}

bool Graph::is_connected() const {
  if (present_.empty()) return true;
  return component_of(present_.first()).size() == order();
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = present_;
  while (!left.empty()) {
    VertexSet c = component_of(left.first());
    left -= c;
    out.push_back(std::move(c));
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph h;
  h.present_ = present_ & keep;
  h.adj_.assign(adj_.size(), VertexSet(adj_.size()));
  h.prov_.resize(adj_.size());
  std::size_t deg_sum = 0;
  for (VertexId v : h.present_) {
    h.adj_[v] = adj_[v] & h.present_;
    h.prov_[v] = prov_[v];
    deg_sum += h.adj_[v].size();
  }
  h.edge_count_ = deg_sum / 2;
  return h;
}

Graph Graph::without(const VertexSet& drop) const { return induced(present_ - drop); }

Graph Graph::without(VertexId v) const {
  VertexSet d(capacity());
  d.insert(v);
  return without(d);
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  GraphBuilder b(*this);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return std::move(b).build();
}

std::pair<Graph, VertexId> Graph::with_vertex(const VertexSet& nbrs) const {
  GraphBuilder b(*this);
  auto id = static_cast<VertexId>(capacity());
  b.add_vertex(id, Provenance{{}, true});
  for (VertexId u : nbrs) b.add_edge(id, u);
  return {std::move(b).build(), id};
}

Graph Graph::complement() const {
  Graph h = *this;
  std::size_t deg_sum = 0;
  for (VertexId v : present_) {
    h.adj_[v] = present_ - adj_[v];
    h.adj_[v].erase(v);
    deg_sum += h.adj_[v].size();
  }
  h.edge_count_ = deg_sum / 2;
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  if (!(a.present_ == b.present_) || a.edge_count_ != b.edge_count_) return false;
  for (VertexId v : a.present_)
    if (!(a.adj_[v] == b.adj_[v])) return false;
  return true;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  ensure(n);
  for (VertexId v = 0; v < n; ++v) add_vertex(v, Provenance{{v}, false});
}

void GraphBuilder::ensure(std::size_t cap) {
  if (g_.adj_.size() < cap) {
    g_.adj_.resize(cap);
    g_.prov_.resize(cap);
  }
}

void GraphBuilder::add_vertex(VertexId v, Provenance p) {
  ensure(static_cast<std::size_t>(v) + 1);
  if (g_.present_.contains(v)) throw InputError("duplicate vertex " + std::to_string(v));
  g_.present_.insert(v);
  g_.adj_[v] = VertexSet(g_.adj_.size());
  g_.prov_[v] = std::move(p);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (!g_.present_.contains(u) || !g_.present_.contains(v))
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an unknown endpoint");
  if (g_.adj_[u].contains(v)) return;
  g_.adj_[u].insert(v);
  g_.adj_[v].insert(u);
  ++g_.edge_count_;
}

void GraphBuilder::remove_vertex(VertexId v) {
  if (!g_.present_.contains(v)) return;
  for (VertexId u : g_.adj_[v]) g_.adj_[u].erase(v);
  g_.edge_count_ -= g_.adj_[v].size();
  g_.adj_[v].clear();
  g_.present_.erase(v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  for (auto [u, v] : edges) {
    std::string e = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= n || v >= n) throw InputError("edge " + e + " has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw InputError("edge " + e + " is a self-loop");
  }
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (VertexId v : keep) require_vertex(g, v);
  return g.induced(keep);
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId src, const VertexSet& within) {
  std::vector<std::size_t> dist(g.capacity(), kUnreachable);
  dist[src] = 0;
  std::deque<VertexId> q{src};
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] != kUnreachable || !within.contains(y)) continue;
      dist[y] = dist[x] + 1;
      q.push_back(y);
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, VertexId u, VertexId v) {
  require_vertex(g, u);
  require_vertex(g, v);
  return bfs_distances(g, u, g.vertex_set())[v];
}

std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId u, VertexId v,
                                                    const VertexSet& within) {
  std::vector<VertexId> parent(g.capacity(), VertexSet::npos);
  parent[u] = u;
  std::deque<VertexId> q{u};
  while (!q.empty() && parent[v] == VertexSet::npos) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (parent[y] != VertexSet::npos || !(within.contains(y) || y == v)) continue;
      parent[y] = x;
      q.push_back(y);
    }
  }
  if (parent[v] == VertexSet::npos) return std::nullopt;
  std::vector<VertexId> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph contract_edge(const Graph& g, Edge e) {
  auto [u, v] = e;
  if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v))
    throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  VertexSet nb = (g.neighbors(u) | g.neighbors(v));
  nb.erase(u);
  nb.erase(v);
  Provenance p;
  for (VertexId x : {u, v}) {
    const auto& o = g.provenance(x).origins;
    p.origins.insert(p.origins.end(), o.begin(), o.end());
  }
  std::sort(p.origins.begin(), p.origins.end());
  GraphBuilder b(g);
  b.remove_vertex(u);
  b.remove_vertex(v);
  auto id = static_cast<VertexId>(g.capacity());
  b.add_vertex(id, std::move(p));
  for (VertexId x : nb) b.add_edge(id, x);
  return std::move(b).build();
}

const char* to_string(PathDefect d) {
  switch (d) {
    case PathDefect::None: return "ok";
    case PathDefect::Empty: return "empty sequence";
    case PathDefect::UnknownVertex: return "unknown vertex";
    case PathDefect::RepeatedVertex: return "repeated vertex";
    case PathDefect::MissingEdge: return "consecutive vertices not adjacent";
    case PathDefect::Chord: return "chord between non-consecutive vertices";
  }
  return "?";
}

PathCheck check_induced_path(const Graph& g, std::span<const VertexId> seq) {
  if (seq.empty()) return {PathDefect::Empty, 0};
  VertexSet seen(g.capacity());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.contains(seq[i])) return {PathDefect::UnknownVertex, i};
    if (seen.contains(seq[i])) return {PathDefect::RepeatedVertex, i};
    seen.insert(seq[i]);
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      bool adj = g.adjacent(seq[i], seq[j]);
      if (j == i + 1 && !adj) return {PathDefect::MissingEdge, i};
      if (j > i + 1 && adj) return {PathDefect::Chord, i};
    }
  }
  return {};
}

bool is_induced_cycle(const Graph& g, std::span<const VertexId> seq) {
  std::size_t n = seq.size();
  if (n < 3) return false;
  std::set<VertexId> seen(seq.begin(), seq.end());
  if (seen.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.contains(seq[i])) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  }
  return true;
}

bool are_mutually_induced(const Graph& g, std::span<const PathCertificate> paths) {
  std::vector<VertexSet> sets;
  for (const auto& p : paths) sets.push_back(VertexSet::of(g.capacity(), p.sequence));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    VertexSet closed(g.capacity());
    for (VertexId v : sets[i]) closed |= g.closed_neighbors(v);
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (closed.intersects(sets[j])) return false;
  }
  return true;
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::OrderedPath: return "ordered-path";
    case Variant::Path: return "path";
    case Variant::DisjointPaths: return "disjoint-paths";
    case Variant::Cycle: return "cycle";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  if (s == "ordered-path" || s == "ordered") return Variant::OrderedPath;
  if (s == "path") return Variant::Path;
  if (s == "disjoint-paths" || s == "disjoint") return Variant::DisjointPaths;
  if (s == "cycle") return Variant::Cycle;
  return std::nullopt;
}

void Instance::validate() const {
  std::set<VertexId> seen;
  for (VertexId t : terminals) {
    if (!graph.contains(t)) throw InputError("terminal " + std::to_string(t) + " is not a vertex");
    if (!seen.insert(t).second) throw InputError("terminal " + std::to_string(t) + " repeated");
  }
  if (variant == Variant::DisjointPaths && terminals.size() % 2 != 0)
    throw InputError("disjoint-paths instances need an even number of terminals");
  if (terminals.empty()) throw InputError("no terminals given");
}

std::vector<Edge> Instance::pairs() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < terminals.size(); i += 2) out.emplace_back(terminals[i], terminals[i + 1]);
  return out;
}

}  // namespace clawpath
