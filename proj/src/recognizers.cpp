#include "clawpath/recognizers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace clawpath {

std::optional<Claw> find_claw(const Graph& g) {
  for (VertexId c : g.vertex_set()) {
    const VertexSet& nb = g.neighbors(c);
    for (VertexId a : nb) {
      VertexSet after_a = nb - g.closed_neighbors(a);
      for (VertexId b : after_a) {
        if (b < a) continue;
        VertexSet third = after_a - g.closed_neighbors(b);
        VertexId x = third.next(b + 1);
        if (x != VertexSet::npos) return Claw{c, {a, b, x}};
      }
    }
  }
  return std::nullopt;
}

void require_claw_free(const Graph& g) {
  if (auto c = find_claw(g)) throw NotClawFree(c->center, c->leaves);
}

namespace {

// Searches induced cycles in g[within] whose length satisfies `accept`.
// Each cycle is rooted at its smallest vertex; the path grows through larger ids only.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, const VertexSet& within, std::function<bool(std::size_t)> accept, std::size_t max_len)
      : g_(g), within_(within & g.vertex_set()), accept_(std::move(accept)), max_len_(max_len) {}

  std::optional<std::vector<VertexId>> run() {
    for (VertexId s : within_) {
      root_ = s;
      larger_ = within_;
      for (VertexId v : within_) {
        if (v > s) break;
        larger_.erase(v);
      }
      for (VertexId v1 : g_.neighbors(s) & larger_) {
        path_.assign({s, v1});
        if (extend(VertexSet(g_.capacity()))) return path_;
      }
    }
    return std::nullopt;
  }

 private:
  // blocked: closed neighbourhoods of path vertices strictly between the root and the last one.
  // A vertex adjacent to the root can only enter as the closing vertex.
  bool extend(const VertexSet& blocked) {
    if (path_.size() + 1 > max_len_) return false;
    VertexId last = path_.back();
    VertexSet cand = (g_.neighbors(last) & larger_) - blocked;
    for (VertexId p : path_) cand.erase(p);
    VertexSet next_blocked = blocked | g_.closed_neighbors(last);
    for (VertexId w : cand) {
      if (g_.adjacent(w, root_)) {
        if (accept_(path_.size() + 1)) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      if (extend(next_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  VertexSet within_;
  std::function<bool(std::size_t)> accept_;
  std::size_t max_len_;
  VertexId root_ = 0;
  VertexSet larger_;
  std::vector<VertexId> path_;
};

}  // namespace

std::optional<std::vector<VertexId>> find_induced_cycle_of_length(const Graph& g, const VertexSet& within,
                                                                  std::size_t length) {
  CycleSearch s(g, within, [length](std::size_t l) { return l == length; }, length);
  return s.run();
}

std::optional<std::vector<VertexId>> find_odd_antihole_in_neighborhood(const Graph& g, VertexId u) {
  if (!g.contains(u)) throw InputError("unknown vertex " + std::to_string(u));
  const VertexSet& nb = g.neighbors(u);
  Graph comp = g.induced(nb).complement();
  CycleSearch s(comp, nb, [](std::size_t l) { return l >= 5 && l % 2 == 1; }, nb.size() + 1);
  return s.run();
}

bool is_quasi_line(const Graph& g) {
  require_claw_free(g);
  for (VertexId u : g.vertex_set())
    if (find_odd_antihole_in_neighborhood(g, u)) return false;
  return true;
}

bool is_homogeneous_clique(const Graph& g, const VertexSet& a) {
  if (a.size() < 2 || !a.is_subset_of(g.vertex_set()) || !g.is_clique(a)) return false;
  std::size_t k = a.size();
  for (VertexId x : g.vertex_set() - a) {
    std::size_t c = g.neighbors(x).intersection_size(a);
    if (c != 0 && c != k) return false;
  }
  return true;
}

std::optional<VertexSet> find_homogeneous_clique(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
    nu.erase(v);
    nv.erase(u);
    if (!(nu == nv)) continue;
    VertexSet a(g.capacity(), {u, v});
    for (VertexId w : nu) {
      VertexSet grown = a;
      grown.insert(w);
      if (is_homogeneous_clique(g, grown)) a = grown;
    }
    return a;
  }
  return std::nullopt;
}

bool is_homogeneous_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty() || a.intersects(b)) return false;
  if (a.size() < 2 && b.size() < 2) return false;
  if (!a.is_subset_of(g.vertex_set()) || !b.is_subset_of(g.vertex_set())) return false;
  if (!g.is_clique(a) || !g.is_clique(b)) return false;
  for (VertexId x : g.vertex_set() - a - b) {
    std::size_t ca = g.neighbors(x).intersection_size(a), cb = g.neighbors(x).intersection_size(b);
    if ((ca != 0 && ca != a.size()) || (cb != 0 && cb != b.size())) return false;
  }
  return true;
}

namespace {

class PairSearch {
 public:
  PairSearch(const Graph& g, std::span<const VertexSet> excluded, const OracleBudget& budget)
      : g_(g), excluded_(excluded.begin(), excluded.end()), meter_(budget) {}

  std::optional<HomogeneousPairWitness> run() {
    for (auto [u, v] : g_.edges()) {
      for (VertexId z : g_.vertex_set()) {
        if (z == u || z == v) continue;
        VertexSet a(g_.capacity(), {u, v}), b(g_.capacity(), {z});
        if (repair(a, b)) return found_;
      }
    }
    return std::nullopt;
  }

 private:
  bool excluded(const VertexSet& s) const {
    return std::any_of(excluded_.begin(), excluded_.end(), [&](const VertexSet& x) { return x == s; });
  }

  bool repair(const VertexSet& a, const VertexSet& b) {
    meter_.tick();
    auto key = std::make_pair(a.to_vector(), b.to_vector());
    if (!seen_.insert(key).second) return false;
    VertexId bad = VertexSet::npos;
    for (VertexId x : g_.vertex_set() - a - b) {
      std::size_t ca = g_.neighbors(x).intersection_size(a), cb = g_.neighbors(x).intersection_size(b);
      if ((ca != 0 && ca != a.size()) || (cb != 0 && cb != b.size())) {
        bad = x;
        break;
      }
    }
    if (bad == VertexSet::npos) {
      if (excluded(a) || excluded(b)) return false;
      found_ = HomogeneousPairWitness{a, b};
      return true;
    }
    if (a.is_subset_of(g_.neighbors(bad))) {
      VertexSet na = a;
      na.insert(bad);
      if (repair(na, b)) return true;
    }
    if (b.is_subset_of(g_.neighbors(bad))) {
      VertexSet nb = b;
      nb.insert(bad);
      if (repair(a, nb)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> excluded_;
  SearchMeter meter_;
  std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>> seen_;
  HomogeneousPairWitness found_;
};

}  // namespace

std::optional<HomogeneousPairWitness> find_homogeneous_pair(const Graph& g, std::span<const VertexSet> excluded,
                                                             const OracleBudget& budget) {
  PairSearch s(g, excluded, budget);
  return s.run();
}

std::optional<VertexId> find_simplicial_vertex(const Graph& g, const VertexSet& exempt) {
  for (VertexId v : g.vertex_set() - exempt)
    if (g.is_clique(g.neighbors(v))) return v;
  return std::nullopt;
}

namespace {

// Lexicographic BFS on g[comp]. With `prev`, ties go to the vertex latest in prev (LexBFS+).
std::vector<VertexId> lex_bfs(const Graph& g, const VertexSet& comp, const std::vector<VertexId>* prev) {
  std::vector<VertexId> verts = comp.to_vector();
  std::size_t n = verts.size();
  std::vector<std::size_t> rank(g.capacity(), 0);
  if (prev)
    for (std::size_t i = 0; i < prev->size(); ++i) rank[(*prev)[i]] = i;
  std::vector<std::vector<std::size_t>> label(g.capacity());
  VertexSet done(g.capacity());
  std::vector<VertexId> order;
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = VertexSet::npos;
    for (VertexId v : verts) {
      if (done.contains(v)) continue;
      if (best == VertexSet::npos) {
        best = v;
        continue;
      }
      if (label[v] > label[best] || (label[v] == label[best] && prev && rank[v] > rank[best])) best = v;
    }
    done.insert(best);
    order.push_back(best);
    for (VertexId w : g.neighbors(best))
      if (comp.contains(w) && !done.contains(w)) label[w].push_back(n - step);
  }
  return order;
}

}  // namespace

std::optional<IntervalRepresentation> recognize_linear_interval(const Graph& g) {
  std::vector<VertexId> order;
  for (const VertexSet& comp : g.components()) {
    auto s1 = lex_bfs(g, comp, nullptr);
    auto s2 = lex_bfs(g, comp, &s1);
    auto s3 = lex_bfs(g, comp, &s2);
    if (!is_umbrella_free(g, s3)) return std::nullopt;
    order.insert(order.end(), s3.begin(), s3.end());
  }
  auto rep = linear_representation(g, order);
  if (!rep.represents(g)) return std::nullopt;
  return rep;
}

namespace {

class CircularSearch {
 public:
  CircularSearch(const Graph& g, const OracleBudget& budget) : g_(g), meter_(budget), n_(g.order()) {
    pos_.assign(g.capacity(), kNone);
  }

  std::optional<std::vector<VertexId>> run() {
    VertexId start = g_.vertex_set().first();
    place(start);
    if (extend()) return order_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // The positions {>= from} together with {<= upto} must end up a clique.
  struct Obligation {
    std::size_t upto, from;
  };

  void place(VertexId v) {
    pos_[v] = order_.size();
    order_.push_back(v);
  }
  void unplace() {
    pos_[order_.back()] = kNone;
    order_.pop_back();
  }

  bool segment_is_clique(std::size_t i, std::size_t p) const {
    for (std::size_t x = i; x <= p; ++x)
      for (std::size_t y = x + 1; y <= p; ++y)
        if (!g_.adjacent(order_[x], order_[y])) return false;
    return true;
  }

  bool consistent(std::size_t added_obligations) const {
    std::size_t p = order_.size() - 1;
    VertexId w = order_[p];
    for (std::size_t o = 0; o < obligations_.size() - added_obligations; ++o) {
      const auto& ob = obligations_[o];
      for (std::size_t x = 0; x <= ob.upto; ++x)
        if (!g_.adjacent(w, order_[x])) return false;
      for (std::size_t x = ob.from; x < p; ++x)
        if (!g_.adjacent(w, order_[x])) return false;
    }
    return true;
  }

  bool extend() {
    meter_.tick();
    if (order_.size() == n_) {
      return g_.adjacent(order_.back(), order_.front()) && is_circular_umbrella_free(g_, order_);
    }
    VertexId last = order_.back();
    for (VertexId w : g_.neighbors(last)) {
      if (pos_[w] != kNone) continue;
      place(w);
      std::size_t p = order_.size() - 1;
      std::size_t added = 0;
      bool ok = true;
      for (VertexId u : g_.neighbors(w)) {
        if (pos_[u] == kNone || u == w) continue;
        std::size_t i = pos_[u];
        if (segment_is_clique(i, p)) continue;
        // The outer arc from w round to u must be a clique; everything placed so far
        // in it is just {0..i} and {w}, so check those now and defer the rest.
        if (!segment_is_clique(0, i)) {
          ok = false;
          break;
        }
        for (std::size_t x = 0; x <= i && ok; ++x) ok = g_.adjacent(w, order_[x]);
        if (!ok) break;
        obligations_.push_back({i, p});
        ++added;
      }
      if (ok) ok = consistent(added);
      if (ok && extend()) return true;
      obligations_.resize(obligations_.size() - added);
      unplace();
    }
    return false;
  }

  const Graph& g_;
  SearchMeter meter_;
  std::size_t n_;
  std::vector<std::size_t> pos_;
  std::vector<VertexId> order_;
  std::vector<Obligation> obligations_;
};

}  // namespace

std::optional<IntervalRepresentation> recognize_circular_interval(const Graph& g, const OracleBudget& budget) {
  if (auto lin = recognize_linear_interval(g)) {
    auto rep = circular_representation(g, lin->order());
    if (rep.represents(g)) return rep;
  }
  // A circular order with a non-adjacent consecutive pair can be cut into a
  // linear one, so from here on consecutive vertices are adjacent. That rules
  // out disconnected graphs and graphs with claws.
  if (g.order() < 3 || !g.is_connected() || find_claw(g)) return std::nullopt;
  CircularSearch s(g, budget);
  auto order = s.run();
  if (!order) return std::nullopt;
  auto rep = circular_representation(g, *order);
  if (!rep.represents(g)) return std::nullopt;
  return rep;
}

namespace {

// Disjoint-set forest over (vertex, side) nodes, copied wholesale on backtrack.
struct Classes {
  std::vector<std::size_t> parent;
  std::vector<VertexSet> members;  // vertices owning a node in the class, valid at roots

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

class RootSearch {
 public:
  RootSearch(const Graph& g, const OracleBudget& budget) : g_(g), meter_(budget) {
    cap_ = g.capacity();
    side_.assign(cap_, std::vector<int>(cap_, -1));
    decided_ = VertexSet(cap_);
    Classes c;
    c.parent.resize(2 * cap_);
    std::iota(c.parent.begin(), c.parent.end(), 0);
    c.members.assign(2 * cap_, VertexSet(cap_));
    for (VertexId v : g.vertex_set()) {
      c.members[2 * v].insert(v);
      c.members[2 * v + 1].insert(v);
    }
    // Breadth-first vertex order keeps each new vertex attached to decided ones.
    VertexSet seen(cap_);
    for (VertexId s : g.vertex_set()) {
      if (seen.contains(s)) continue;
      std::vector<VertexId> q{s};
      seen.insert(s);
      for (std::size_t h = 0; h < q.size(); ++h)
        for (VertexId w : g.neighbors(q[h]))
          if (!seen.contains(w)) {
            seen.insert(w);
            q.push_back(w);
          }
      order_.insert(order_.end(), q.begin(), q.end());
    }
    start_ = std::move(c);
    comps_.resize(order_.size());
  }

  std::optional<RootMultigraph> run() {
    if (!assign(0, start_)) return std::nullopt;
    return result_;
  }

 private:
  bool assign(std::size_t idx, Classes& cls) {
    meter_.tick();
    if (idx == order_.size()) return finish(cls);
    VertexId v = order_[idx];
    const VertexSet& nb = g_.neighbors(v);
    // Components of the complement of g[N(v)], each 2-coloured.
    std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>> comps;
    VertexSet left = nb;
    while (!left.empty()) {
      VertexId s = left.first();
      std::vector<VertexId> part[2];
      std::vector<std::pair<VertexId, int>> stack{{s, 0}};
      VertexSet colored(cap_);
      std::vector<int> color(cap_, -1);
      colored.insert(s);
      color[s] = 0;
      while (!stack.empty()) {
        auto [x, c] = stack.back();
        stack.pop_back();
        part[c].push_back(x);
        VertexSet non_nb = nb - g_.closed_neighbors(x);
        for (VertexId y : non_nb) {
          if (color[y] == -1) {
            color[y] = 1 - c;
            colored.insert(y);
            stack.push_back({y, 1 - c});
          } else if (color[y] == c) {
            return false;  // neighbourhood is not two cliques
          }
        }
      }
      left -= colored;
      std::sort(part[0].begin(), part[0].end());
      std::sort(part[1].begin(), part[1].end());
      comps.emplace_back(part[0], part[1]);
    }
    comps_[idx] = std::move(comps);
    return orient(idx, 0, cls);
  }

  // Chooses the side of complement component `ci` of the current vertex, merging as it goes.
  bool orient(std::size_t idx, std::size_t ci, Classes& cls) {
    VertexId v = order_[idx];
    const auto& comps = comps_[idx];
    if (ci == comps.size()) {
      if (!loop_free(v, cls)) return false;
      decided_.insert(v);
      bool ok = assign(idx + 1, cls);
      decided_.erase(v);
      return ok;
    }
    for (int flip = 0; flip < 2; ++flip) {
      meter_.tick();
      for (VertexId x : comps[ci].first) side_[v][x] = flip;
      for (VertexId x : comps[ci].second) side_[v][x] = 1 - flip;
      Classes next = cls;
      bool ok = true;
      for (const auto* part : {&comps[ci].first, &comps[ci].second})
        for (VertexId u : *part)
          if (ok && decided_.contains(u)) ok = join(next, 2 * v + side_[v][u], 2 * u + side_[u][v]);
      if (ok && loop_free(v, next) && orient(idx, ci + 1, next)) return true;
    }
    return false;
  }

  bool join(Classes& cls, std::size_t x, std::size_t y) {
    std::size_t a = cls.find(x), b = cls.find(y);
    if (a == b) return true;
    // Every member of one class must be adjacent to every member of the other (or equal).
    for (VertexId p : cls.members[a])
      for (VertexId q : cls.members[b])
        if (p != q && !g_.adjacent(p, q)) return false;
    cls.parent[b] = a;
    cls.members[a] |= cls.members[b];
    return true;
  }

  bool loop_free(VertexId v, Classes& cls) {
    for (VertexId x : decided_ | VertexSet(cap_, {v}))
      if (cls.find(2 * x) == cls.find(2 * x + 1)) return false;
    return true;
  }

  bool finish(Classes& cls) {
    std::vector<std::size_t> id(2 * cap_, static_cast<std::size_t>(-1));
    std::size_t count = 0;
    std::vector<RootEdge> edges;
    for (VertexId v : g_.vertex_set()) {
      RootVertex ends[2];
      for (int s = 0; s < 2; ++s) {
        std::size_t r = cls.find(2 * v + s);
        if (id[r] == static_cast<std::size_t>(-1)) id[r] = count++;
        ends[s] = static_cast<RootVertex>(id[r]);
      }
      edges.push_back({ends[0], ends[1], v});
    }
    RootMultigraph h(count, std::move(edges));
    if (!(h.line_graph() == g_)) return false;
    result_ = std::move(h);
    return true;
  }

  const Graph& g_;
  SearchMeter meter_;
  std::size_t cap_ = 0;
  std::vector<std::vector<int>> side_;
  VertexSet decided_;
  std::vector<VertexId> order_;
  std::vector<std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>>> comps_;
  Classes start_;
  RootMultigraph result_;
};

}  // namespace

std::optional<RootMultigraph> line_graph_root(const Graph& g, const OracleBudget& budget) {
  if (g.order() == 0) return RootMultigraph(0, {});
  if (find_claw(g)) return std::nullopt;
  RootSearch s(g, budget);
  return s.run();
}

}  // namespace clawpath
