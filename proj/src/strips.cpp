#include "clawpath/strips.hpp"

#include <algorithm>

namespace clawpath {

std::vector<VertexId> Strip::interior() const {
  VertexSet s = graph.vertex_set();
  s.erase(end_a);
  s.erase(end_b);
  return s.to_vector();
}

Graph StripComposition::compose() const {
  std::size_t offset = 0;
  for (const auto& s : strips) offset = std::max(offset, s.graph.capacity());
  auto base_id = [&](std::size_t end_index) { return static_cast<VertexId>(offset + end_index); };

  GraphBuilder b;
  for (std::size_t e = 0; e < 2 * strips.size(); ++e) b.add_vertex(base_id(e), Provenance{{}, true});
  for (const auto& clique : base_cliques)
    for (std::size_t x = 0; x < clique.size(); ++x)
      for (std::size_t y = x + 1; y < clique.size(); ++y) b.add_edge(base_id(clique[x]), base_id(clique[y]));

  for (std::size_t i = 0; i < strips.size(); ++i) {
    const Strip& s = strips[i];
    std::vector<VertexId> inner = s.interior();
    for (VertexId v : inner) b.add_vertex(v, s.graph.provenance(v));
    for (auto [u, v] : s.graph.edges())
      if (u != s.end_a && u != s.end_b && v != s.end_a && v != s.end_b) b.add_edge(u, v);
    VertexId ai = base_id(2 * i), bi = base_id(2 * i + 1);
    VertexSet na = b.peek().neighbors(ai), nb = b.peek().neighbors(bi);
    for (VertexId x : {ai, bi}) {
      na.erase(x);
      nb.erase(x);
    }
    VertexSet xa = s.side_a(), xb = s.side_b();
    xa.erase(s.end_b);
    xb.erase(s.end_a);
    for (VertexId u : na)
      for (VertexId v : xa) b.add_edge(u, v);
    for (VertexId u : nb)
      for (VertexId v : xb) b.add_edge(u, v);
    b.remove_vertex(ai);
    b.remove_vertex(bi);
  }
  return std::move(b).build();
}

bool StripComposition::well_formed() const {
  std::vector<int> seen(2 * strips.size(), 0);
  for (const auto& c : base_cliques)
    for (std::size_t e : c) {
      if (e >= seen.size() || seen[e]++) return false;
    }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(seen.size())) return false;
  for (const auto& s : strips) {
    if (!s.graph.contains(s.end_a) || !s.graph.contains(s.end_b) || s.end_a == s.end_b) return false;
    if (!s.graph.is_clique(s.side_a()) || !s.graph.is_clique(s.side_b())) return false;
    if (s.rep.flavor != Flavor::Linear || !s.rep.represents(s.graph)) return false;
    auto ord = s.rep.order();
    if (ord.front() != s.end_a || ord.back() != s.end_b) return false;
  }
  return true;
}

}  // namespace clawpath
