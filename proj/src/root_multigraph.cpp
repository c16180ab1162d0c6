#include "clawpath/root_multigraph.hpp"

#include <algorithm>

namespace clawpath {

RootMultigraph::RootMultigraph(std::size_t vertex_count, std::vector<RootEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), nbrs_(vertex_count) {
  VertexId max_line = 0;
  for (const auto& e : edges_) {
    if (e.u == e.v) throw InputError("root multigraph edges must not be loops");
    if (e.u >= vertex_count_ || e.v >= vertex_count_) throw InputError("root edge endpoint out of range");
    nbrs_[e.u].push_back(e.v);
    nbrs_[e.v].push_back(e.u);
    max_line = std::max(max_line, e.line_vertex);
  }
  for (auto& nb : nbrs_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  index_.assign(edges_.empty() ? 0 : max_line + 1, npos);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (index_[edges_[i].line_vertex] != npos) throw InputError("line vertex used by two root edges");
    index_[edges_[i].line_vertex] = i;
  }
}

std::size_t RootMultigraph::edge_of(VertexId line_vertex) const {
  return line_vertex < index_.size() ? index_[line_vertex] : npos;
}

VertexId RootMultigraph::line_vertex_between(RootVertex x, RootVertex y) const {
  VertexId best = static_cast<VertexId>(npos);
  for (const auto& e : edges_)
    if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) best = std::min(best, e.line_vertex);
  return best;
}

Graph RootMultigraph::line_graph() const {
  GraphBuilder b;
  for (const auto& e : edges_) b.add_vertex(e.line_vertex, Provenance{{e.line_vertex}, false});
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const auto &a = edges_[i], &c = edges_[j];
      if (a.u == c.u || a.u == c.v || a.v == c.u || a.v == c.v) b.add_edge(a.line_vertex, c.line_vertex);
    }
  return std::move(b).build();
}

}  // namespace clawpath
