#include "clawpath/generators.hpp"

#include <algorithm>

#include "clawpath/interval.hpp"

namespace clawpath {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph from_intervals(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs, bool circular) {
  std::vector<Edge> edges;
  auto covers = [&](std::pair<std::size_t, std::size_t> a, std::size_t p) {
    if (!circular) return a.first <= p && p <= a.second;
    return (p + n - a.first) % n <= a.second;  // arc = start, length
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (const auto& a : arcs)
        if (covers(a, u) && covers(a, v)) {
          edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
          break;
        }
  return build_graph(n, edges);
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

Graph wheel_graph(std::size_t rim) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % rim + 1);
  }
  return build_graph(rim + 1, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return build_graph(10, e);
}

Graph icosahedron_graph() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    VertexId u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
    e.emplace_back(0, u);
    e.emplace_back(u, un);
    e.emplace_back(11, l);
    e.emplace_back(l, ln);
    e.emplace_back(u, l);
    e.emplace_back(u, ln);
  }
  return build_graph(12, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      auto id = static_cast<VertexId>(r * cols + c);
      if (c + 1 < cols) e.emplace_back(id, id + 1);
      if (r + 1 < rows) e.emplace_back(id, static_cast<VertexId>(id + cols));
    }
  return build_graph(rows * cols, e);
}

Graph line_graph_of(const Graph& root) {
  auto edges = root.edges();
  std::vector<Edge> le;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) le.emplace_back(i, j);
    }
  return build_graph(edges.size(), le);
}

Graph random_gnp(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, p)) e.emplace_back(i, j);
  return build_graph(n, e);
}

Graph random_line_graph(std::size_t root_vertices, double p, Rng& rng) {
  return line_graph_of(random_gnp(root_vertices, p, rng));
}

Graph random_proper_interval(std::size_t n, Rng& rng, bool connected) {
  std::vector<std::pair<std::size_t, std::size_t>> iv;
  if (connected && n > 1) {
    // Overlapping chain of intervals from the first point to the last.
    std::size_t s = 0;
    while (true) {
      std::size_t e = std::min(n - 1, s + uniform(rng, 1, 3));
      iv.emplace_back(s, e);
      if (e == n - 1) break;
      s = uniform(rng, s + 1, e);
    }
  }
  std::size_t extra = uniform(rng, 0, n / 2);
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t s = uniform(rng, 0, n - 1);
    iv.emplace_back(s, std::min(n - 1, s + uniform(rng, 0, 3)));
  }
  return from_intervals(n, iv, false);
}

Graph random_proper_circular(std::size_t n, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // (start, length)
  std::size_t s = 0;
  while (true) {
    std::size_t len = uniform(rng, 1, 3);
    arcs.emplace_back(s % n, len);
    if (s + len >= n) break;
    s = uniform(rng, s + 1, s + len);
  }
  std::size_t extra = uniform(rng, 0, n / 2);
  for (std::size_t i = 0; i < extra; ++i) arcs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, 3));
  return from_intervals(n, arcs, true);
}

StripComposition random_strip_composition(std::size_t strips, std::size_t max_interior, Rng& rng) {
  std::vector<std::size_t> sizes(strips);
  std::size_t total = 0;
  for (auto& m : sizes) total += m = uniform(rng, 1, max_interior);
  StripComposition comp;
  VertexId next = 0;
  for (std::size_t i = 0; i < strips; ++i) {
    std::size_t m = sizes[i];
    // Point 0 is a', point m+1 is b'; both are simplicial and extremal, and
    // adjacent ends would create claws once glued.
    Graph local = random_proper_interval(m + 2, rng, true);
    while (local.adjacent(0, static_cast<VertexId>(m + 1))) local = random_proper_interval(m + 2, rng, true);
    std::vector<VertexId> ids(m + 2);
    ids[0] = static_cast<VertexId>(total + 2 * i);
    ids[m + 1] = static_cast<VertexId>(total + 2 * i + 1);
    for (std::size_t j = 1; j <= m; ++j) ids[j] = next++;
    GraphBuilder b;
    for (std::size_t j = 0; j < m + 2; ++j)
      b.add_vertex(ids[j], Provenance{{ids[j]}, j == 0 || j == m + 1});
    for (auto [u, v] : local.edges()) b.add_edge(ids[u], ids[v]);
    Strip s;
    s.graph = std::move(b).build();
    s.end_a = ids[0];
    s.end_b = ids[m + 1];
    s.rep = linear_representation(s.graph, ids);
    comp.strips.push_back(std::move(s));
  }
  std::vector<std::size_t> ends(2 * strips);
  for (std::size_t e = 0; e < ends.size(); ++e) ends[e] = e;
  // Both ends of one strip in a base clique would glue two non-adjacent sides
  // into one neighbourhood; redraw until that does not happen.
  auto splits_strip = [](const std::vector<std::size_t>& c) {
    for (std::size_t x : c)
      if (std::find(c.begin(), c.end(), x ^ 1) != c.end()) return true;
    return false;
  };
  while (true) {
    comp.base_cliques.clear();
    std::shuffle(ends.begin(), ends.end(), rng);
    for (std::size_t at = 0; at < ends.size();) {
      std::size_t len = std::min(ends.size() - at, uniform(rng, 1, 3));
      comp.base_cliques.emplace_back(ends.begin() + at, ends.begin() + at + len);
      at += len;
    }
    if (std::none_of(comp.base_cliques.begin(), comp.base_cliques.end(), splits_strip)) return comp;
  }
}

const char* to_string(Family f) {
  switch (f) {
    case Family::LineGraph: return "line-graph";
    case Family::ProperInterval: return "proper-interval";
    case Family::ProperCircular: return "proper-circular";
    case Family::StripComposition: return "strip-composition";
  }
  return "?";
}

Graph random_family_graph(Family f, std::size_t max_n, Rng& rng) {
  while (true) {
    Graph g;
    switch (f) {
      case Family::LineGraph:
        g = random_line_graph(uniform(rng, 4, 8), std::uniform_real_distribution<double>(0.25, 0.6)(rng), rng);
        break;
      case Family::ProperInterval:
        g = random_proper_interval(uniform(rng, 4, max_n), rng, true);
        break;
      case Family::ProperCircular:
        g = random_proper_circular(uniform(rng, 5, max_n), rng);
        break;
      case Family::StripComposition:
        g = random_strip_composition(uniform(rng, 2, 5), 3, rng).compose();
        break;
    }
    if (g.order() >= 4 && g.order() <= max_n && g.is_connected()) return g;
  }
}

Graph random_ladder_line_graph(std::size_t length, Rng& rng) {
  std::vector<Edge> e;
  auto L = static_cast<VertexId>(length);
  for (VertexId i = 0; i + 1 < L; ++i) {
    e.emplace_back(i, i + 1);
    e.emplace_back(L + i, L + i + 1);
  }
  for (VertexId i = 0; i < L; ++i)
    if (coin(rng, 0.35)) e.emplace_back(i, L + i);
  std::size_t pendants = uniform(rng, 0, 4);
  for (std::size_t i = 0; i < pendants; ++i)
    e.emplace_back(static_cast<VertexId>(uniform(rng, 0, 2 * length - 1)), static_cast<VertexId>(2 * length + i));
  return line_graph_of(build_graph(2 * length + pendants, e));
}

std::vector<VertexId> spread_terminals(const Graph& g, std::size_t k, Rng& rng, double shuffle) {
  auto vs = g.vertices();
  if (vs.empty() || k == 0) return {};
  auto farthest = [&](VertexId from) {
    auto d = bfs_distances(g, from, g.vertex_set());
    VertexId best = from;
    for (VertexId v : vs)
      if (d[v] != kUnreachable && d[v] > d[best]) best = v;
    return best;
  };
  VertexId a = farthest(vs[uniform(rng, 0, vs.size() - 1)]);
  VertexId b = farthest(a);
  auto path = *shortest_path(g, a, b, g.vertex_set());
  if (path.size() < k) return {};
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(path[k == 1 ? 0 : i * (path.size() - 1) / (k - 1)]);
  if (k > 3 && coin(rng, shuffle)) std::shuffle(out.begin() + 1, out.end() - 1, rng);
  return out;
}

std::vector<VertexId> random_induced_path(const Graph& g, std::size_t min_len, Rng& rng) {
  auto vs = g.vertices();
  if (vs.empty()) return {};
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::vector<VertexId> path{vs[uniform(rng, 0, vs.size() - 1)]};
    while (true) {
      std::vector<VertexId> cand;
      for (VertexId x : g.neighbors(path.back())) {
        if (std::find(path.begin(), path.end(), x) != path.end()) continue;
        // x may touch only the current end of the path.
        VertexSet touch = g.neighbors(x);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) ok = !touch.contains(path[i]);
        if (ok) cand.push_back(x);
      }
      if (cand.empty() || (path.size() >= min_len && coin(rng, 0.3))) break;
      path.push_back(cand[uniform(rng, 0, cand.size() - 1)]);
    }
    if (path.size() >= min_len) return path;
  }
  return {};
}

std::vector<VertexId> random_terminals(const Graph& g, std::size_t k, Rng& rng, double planted) {
  if (coin(rng, planted)) {
    auto path = random_induced_path(g, k, rng);
    if (!path.empty()) {
      std::vector<std::size_t> pos(path.size());
      for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
      std::shuffle(pos.begin(), pos.end(), rng);
      pos.resize(k);
      std::sort(pos.begin(), pos.end());
      std::vector<VertexId> out;
      for (std::size_t p : pos) out.push_back(path[p]);
      return out;
    }
  }
  auto vs = g.vertices();
  std::shuffle(vs.begin(), vs.end(), rng);
  vs.resize(std::min(k, vs.size()));
  return vs;
}

}  // namespace clawpath
