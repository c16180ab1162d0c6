#include "clawpath/solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "clawpath/recognizers.hpp"

namespace clawpath {

std::optional<PathCertificate> solve_linear_interval(const Graph& g, const IntervalRepresentation& rep,
                                                     std::span<const VertexId> terminals) {
  if (rep.flavor != Flavor::Linear || !rep.represents(g)) throw InputError("representation does not match the graph");
  // Ties in position are broken by id; the result must still be umbrella free.
  std::vector<VertexId> order = rep.order();
  if (!is_umbrella_free(g, order)) throw InputError("representation is not proper");
  std::size_t k = terminals.size();
  if (k == 0) throw InputError("no terminals");
  for (VertexId t : terminals)
    if (!g.contains(t)) throw InputError("unknown terminal " + std::to_string(t));
  if (k == 1) return PathCertificate{{terminals[0]}, true};
  if (k == 2 && g.adjacent(terminals[0], terminals[1])) return PathCertificate{{terminals[0], terminals[1]}, true};

  std::vector<std::size_t> idx(g.capacity(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
  if (idx[terminals.front()] > idx[terminals.back()]) {
    std::reverse(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
  }
  // Induced paths on three or more vertices are strictly monotone.
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (idx[terminals[i]] >= idx[terminals[i + 1]]) return std::nullopt;

  // BFS over (previous, current) with next ~ current, next !~ previous and no
  // terminal skipped; the order makes v_i !~ v_{i+2} enough for inducedness.
  const std::size_t n = order.size();
  const std::size_t none = n;
  auto next_terminal_idx = [&](std::size_t cur) {
    for (VertexId t : terminals)
      if (idx[t] > cur) return idx[t];
    return n;
  };
  auto key = [&](std::size_t prev, std::size_t cur) { return prev * (n + 1) + cur; };
  std::vector<std::size_t> parent((n + 1) * (n + 1), static_cast<std::size_t>(-1));
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  std::size_t start = idx[terminals.front()], goal = idx[terminals.back()];
  parent[key(none, start)] = key(none, start);
  queue.emplace_back(none, start);
  std::optional<std::pair<std::size_t, std::size_t>> hit;
  while (!queue.empty() && !hit) {
    auto [prev, cur] = queue.front();
    queue.pop_front();
    std::size_t limit = next_terminal_idx(cur);
    for (std::size_t nx = cur + 1; nx <= limit && nx < n; ++nx) {
      if (!g.adjacent(order[cur], order[nx])) break;  // later neighbours are contiguous
      if (prev != none && g.adjacent(order[prev], order[nx])) continue;
      std::size_t kk = key(cur, nx);
      if (parent[kk] != static_cast<std::size_t>(-1)) continue;
      parent[kk] = key(prev, cur);
      if (nx == goal) {
        hit = std::make_pair(cur, nx);
        break;
      }
      queue.emplace_back(cur, nx);
    }
  }
  if (!hit) return std::nullopt;
  std::vector<VertexId> seq;
  std::size_t at = key(hit->first, hit->second);
  while (true) {
    std::size_t cur = at % (n + 1), prev = at / (n + 1);
    seq.push_back(order[cur]);
    if (prev == none) break;
    at = parent[at];
  }
  std::reverse(seq.begin(), seq.end());
  PathCertificate cert{seq, true};
  if (!is_induced_path(g, cert)) throw std::logic_error("linear interval solver produced a non-induced path");
  return cert;
}

std::optional<LinearCut> circular_to_linear(const Graph& g, const IntervalRepresentation& rep,
                                            std::span<const VertexId> terminals, Orientation o) {
  if (terminals.empty()) throw InputError("no terminals");
  std::vector<VertexId> cyc = rep.order();
  std::size_t n = cyc.size();
  auto it = std::find(cyc.begin(), cyc.end(), terminals.front());
  if (it == cyc.end()) throw InputError("terminal not in representation");
  std::size_t s = static_cast<std::size_t>(it - cyc.begin());
  std::vector<VertexId> walked;
  std::size_t next = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t i = o == Orientation::Forward ? (s + step) % n : (s + n - step) % n;
    VertexId v = cyc[i];
    walked.push_back(v);
    if (step == 0) continue;
    if (next < terminals.size() && v == terminals[next]) {
      if (++next == terminals.size()) break;
    } else if (std::find(terminals.begin(), terminals.end(), v) != terminals.end()) {
      return std::nullopt;
    }
  }
  if (next != terminals.size() && terminals.size() > 1) return std::nullopt;
  if (terminals.size() == 1) walked.resize(1);
  Graph cut = g.induced(VertexSet::of(g.capacity(), walked));
  if (!is_umbrella_free(cut, walked)) throw PreconditionError("circular cut is not linear in the walked order");
  return LinearCut{cut, linear_representation(cut, walked)};
}

std::optional<LineGraphConversion> strips_to_line_graph(const Graph& g, const StripComposition& comp,
                                                        std::span<const VertexId> terminals) {
  VertexSet terms = VertexSet::of(g.capacity(), terminals);
  // Dangling means the end's clique meets no other strip.
  std::vector<bool> dangling(2 * comp.strips.size(), false);
  for (const auto& clique : comp.base_cliques)
    if (clique.size() == 1) dangling[clique.front()] = true;

  VertexSet keep(g.capacity());
  for (std::size_t i = 0; i < comp.strips.size(); ++i) {
    const Strip& s = comp.strips[i];
    VertexSet inner = VertexSet::of(g.capacity(), s.interior());
    if (inner.intersects(terms)) {
      keep |= inner;
      continue;
    }
    // A terminal-free strip can only be crossed.
    if (dangling[2 * i] || dangling[2 * i + 1]) continue;
    VertexSet xa = s.side_a() & inner, xb = s.side_b() & inner;
    std::optional<std::vector<VertexId>> best;
    for (VertexId x : xa) {
      auto dist = bfs_distances(g, x, inner);
      for (VertexId y : xb) {
        if (dist[y] == kUnreachable) continue;
        if (!best || dist[y] + 1 < best->size()) best = shortest_path(g, x, y, inner);
      }
    }
    if (!best) continue;
    for (VertexId v : *best) keep.insert(v);
  }
  Graph out = g.induced(keep);
  if (!line_graph_root(out)) return std::nullopt;
  return LineGraphConversion{std::move(out), std::vector<VertexId>(terminals.begin(), terminals.end())};
}

namespace {

class RootRouter {
 public:
  RootRouter(const RootMultigraph& h, std::span<const std::pair<RootVertex, RootVertex>> pairs,
             std::span<const RootVertex> blocked, const OracleBudget& budget)
      : h_(h), pairs_(pairs.begin(), pairs.end()), meter_(budget), used_(h.vertex_count(), 0) {
    for (RootVertex b : blocked) used_[b] = 1;
    for (auto [s, t] : pairs_) used_[s] = used_[t] = 1;
  }

  std::optional<std::vector<std::vector<RootVertex>>> run() {
    paths_.clear();
    if (route(0)) return paths_;
    return std::nullopt;
  }
  std::uint64_t nodes() const { return meter_.nodes(); }

 private:
  bool reachable(RootVertex from, RootVertex to) {
    std::vector<char> seen(h_.vertex_count(), 0);
    std::vector<RootVertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      RootVertex x = stack.back();
      stack.pop_back();
      for (RootVertex y : h_.neighbors(x)) {
        if (y == to) return true;
        if (seen[y] || used_[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    return from == to;
  }

  bool route(std::size_t i) {
    meter_.tick();
    if (i == pairs_.size()) return true;
    for (std::size_t j = i; j < pairs_.size(); ++j)
      if (!reachable(pairs_[j].first, pairs_[j].second)) return false;
    auto [s, t] = pairs_[i];
    paths_.push_back({s});
    bool ok = s == t ? route(i + 1) : extend(i, s, t);
    if (!ok) paths_.pop_back();
    return ok;
  }

  bool extend(std::size_t i, RootVertex cur, RootVertex t) {
    meter_.tick();
    for (RootVertex y : h_.neighbors(cur)) {
      if (y == t) {
        paths_.back().push_back(t);
        if (route(i + 1)) return true;
        paths_.back().pop_back();
        continue;
      }
      if (used_[y]) continue;
      used_[y] = 1;
      paths_.back().push_back(y);
      if (reachable(y, t) && extend(i, y, t)) return true;
      paths_.back().pop_back();
      used_[y] = 0;
    }
    return false;
  }

  const RootMultigraph& h_;
  std::vector<std::pair<RootVertex, RootVertex>> pairs_;
  SearchMeter meter_;
  std::vector<char> used_;
  std::vector<std::vector<RootVertex>> paths_;
};

}  // namespace

SearchResult<std::vector<std::vector<RootVertex>>> solve_disjoint_paths_root(
    const RootMultigraph& h, std::span<const std::pair<RootVertex, RootVertex>> pairs,
    std::span<const RootVertex> blocked, const OracleBudget& budget) {
  using Result = SearchResult<std::vector<std::vector<RootVertex>>>;
  std::vector<int> seen(h.vertex_count(), 0);
  for (auto [s, t] : pairs) {
    if (s >= h.vertex_count() || t >= h.vertex_count()) throw InputError("pair endpoint outside the root graph");
    if (seen[s]++ || (s != t && seen[t]++)) return Result::no();
  }
  for (RootVertex b : blocked)
    if (b < seen.size() && seen[b]) return Result::no();
  RootRouter router(h, pairs, blocked, budget);
  try {
    auto r = router.run();
    if (r) return Result::yes(std::move(*r), router.nodes());
    return Result::no(router.nodes());
  } catch (const SearchExhausted&) {
    return Result::exhausted(router.nodes());
  }
}

SearchResult<PathCertificate> solve_line_graph(const Graph& g, std::span<const VertexId> terminals,
                                               const OracleBudget& budget) {
  auto root = line_graph_root(g, budget);
  if (!root) throw PreconditionError("graph is not a line graph");
  return solve_line_graph(g, *root, terminals, budget);
}

SearchResult<PathCertificate> solve_line_graph(const Graph& g, const RootMultigraph& root,
                                               std::span<const VertexId> terminals, const OracleBudget& budget) {
  using Result = SearchResult<PathCertificate>;
  std::size_t k = terminals.size();
  if (k == 0) throw InputError("no terminals");
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.contains(terminals[i])) throw InputError("unknown terminal " + std::to_string(terminals[i]));
    for (std::size_t j = i + 1; j < k; ++j)
      if (terminals[i] == terminals[j]) throw InputError("repeated terminal");
  }
  if (k == 1) return Result::yes({{terminals[0]}, true});
  if (k == 2 && g.adjacent(terminals[0], terminals[1])) return Result::yes({{terminals[0], terminals[1]}, true});
  if (k > 20) throw InputError("too many terminals for endpoint guessing");

  std::vector<RootEdge> te(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t e = root.edge_of(terminals[i]);
    if (e == RootMultigraph::npos) throw InputError("terminal missing from the root graph");
    te[i] = root.edges()[e];
  }
  std::uint64_t nodes = 0;
  bool exhausted = false;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<RootVertex> p(k), q(k);
    for (std::size_t i = 0; i < k; ++i) {
      bool flip = (mask >> i) & 1;
      p[i] = flip ? te[i].v : te[i].u;
      q[i] = flip ? te[i].u : te[i].v;
    }
    // Endpoints are pairwise distinct except q_i = p_{i+1} (consecutive edges sharing a vertex).
    std::map<RootVertex, int> count;
    for (std::size_t i = 0; i < k; ++i) {
      ++count[p[i]];
      ++count[q[i]];
    }
    bool ok = true;
    for (std::size_t i = 0; i + 1 < k; ++i)
      if (q[i] == p[i + 1]) --count[q[i]];
    for (auto& [v, c] : count)
      if (c != 1) ok = false;
    if (!ok) continue;
    std::vector<std::pair<RootVertex, RootVertex>> pairs;
    std::vector<RootVertex> blocked;
    for (std::size_t i = 0; i < k; ++i) {
      if (i + 1 < k && q[i] != p[i + 1]) pairs.emplace_back(q[i], p[i + 1]);
      if (i + 1 < k && q[i] == p[i + 1]) blocked.push_back(q[i]);
    }
    blocked.push_back(p.front());
    blocked.push_back(q.back());
    auto r = solve_disjoint_paths_root(root, pairs, blocked, budget);
    nodes += r.nodes;
    if (r.verdict == Verdict::Exhausted) exhausted = true;
    if (r.verdict != Verdict::Yes) continue;

    std::vector<VertexId> seq;
    std::size_t next_pair = 0;
    for (std::size_t i = 0; i < k; ++i) {
      seq.push_back(terminals[i]);
      if (i + 1 == k || q[i] == p[i + 1]) continue;
      const auto& walk = (*r.witness)[next_pair++];
      for (std::size_t j = 0; j + 1 < walk.size(); ++j) seq.push_back(root.line_vertex_between(walk[j], walk[j + 1]));
    }
    PathCertificate cert{seq, true};
    if (!is_induced_path(g, cert)) throw std::logic_error("line graph solver produced a non-induced path");
    return Result::yes(std::move(cert), nodes);
  }
  return exhausted ? Result::exhausted(nodes) : Result::no(nodes);
}

}  // namespace clawpath
