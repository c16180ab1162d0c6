#pragma once

// Random instance and fixture generators shared by the tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "clawpath/generators.hpp"
#include "clawpath/graph.hpp"
#include "clawpath/recognizers.hpp"
#include "clawpath/reductions.hpp"

namespace fx {

using namespace clawpath;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool flip(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}
inline Instance relabel(const Instance& inst, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : inst.graph.edges()) edges.emplace_back(perm[u], perm[v]);
  Instance out{build_graph(inst.graph.capacity(), edges), {}, inst.variant};
  for (VertexId t : inst.terminals) out.terminals.push_back(perm[t]);
  return out;
}
inline VertexSet relabel(const VertexSet& s, const std::vector<VertexId>& perm) {
  VertexSet out(perm.size());
  for (VertexId v : s) out.insert(perm[v]);
  return out;
}
// Renames vertices by a random permutation so fixtures do not depend on ids.
inline Instance relabel(const Instance& inst, Rng& rng) {
  return relabel(inst, random_permutation(inst.graph.capacity(), rng));
}

// A random connected claw-free graph from the named families, n <= max_n.
inline Graph claw_free_graph(Rng& rng, std::size_t max_n, int family = -1) {
  static const Family fams[] = {Family::LineGraph, Family::ProperInterval, Family::StripComposition};
  while (true) {
    Family f = family >= 0 ? fams[family] : fams[pick(rng, 0, 2)];
    Graph g = random_family_graph(f, max_n, rng);
    if (!find_claw(g)) return g;
  }
}

// Terminals for the disjoint-paths variant: k pairs, planted half of the time
// by cutting a random induced path into pieces separated by one vertex.
inline std::vector<VertexId> disjoint_terminals(const Graph& g, std::size_t pairs, Rng& rng) {
  if (flip(rng)) {
    auto path = random_induced_path(g, 3 * pairs - 1, rng);
    if (!path.empty()) {
      std::vector<VertexId> out;
      std::size_t at = 0;
      for (std::size_t i = 0; i < pairs; ++i) {
        std::size_t remaining = pairs - i - 1;
        std::size_t max_len = path.size() - at - 3 * remaining;
        std::size_t len = pick(rng, 2, std::max<std::size_t>(2, std::min<std::size_t>(max_len, 4)));
        out.push_back(path[at]);
        out.push_back(path[at + len - 1]);
        at += len + 1;
      }
      return out;
    }
  }
  auto vs = g.vertices();
  std::shuffle(vs.begin(), vs.end(), rng);
  vs.resize(std::min(vs.size(), 2 * pairs));
  return vs;
}

// ---- chains of cliques ----

// Bags of fresh vertices; consecutive bags are completely joined unless a
// custom join is supplied for one position.
struct Chain {
  std::vector<std::vector<VertexId>> bags;
  std::vector<Edge> edges;
  VertexId next = 0;

  std::size_t add_bag(std::size_t size) {
    bags.emplace_back();
    for (std::size_t i = 0; i < size; ++i) bags.back().push_back(next++);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j) edges.emplace_back(bags.back()[i], bags.back()[j]);
    return bags.size() - 1;
  }
  void join(std::size_t i, std::size_t j) {
    for (VertexId a : bags[i])
      for (VertexId b : bags[j]) edges.emplace_back(a, b);
  }
  // Random partial join: not complete, every vertex of the smaller side hits
  // something, and at least one vertex of either side sees only part of the other.
  void partial_join(std::size_t i, std::size_t j, Rng& rng) {
    const auto& a = bags[i];
    const auto& b = bags[j];
    while (true) {
      std::vector<Edge> e;
      for (VertexId x : a)
        for (VertexId y : b)
          if (flip(rng)) e.emplace_back(x, y);
      bool complete = e.size() == a.size() * b.size();
      bool a_hits = std::all_of(a.begin(), a.end(), [&](VertexId x) {
        return std::any_of(e.begin(), e.end(), [&](const Edge& ed) { return ed.first == x; });
      });
      bool b_hits = std::all_of(b.begin(), b.end(), [&](VertexId y) {
        return std::any_of(e.begin(), e.end(), [&](const Edge& ed) { return ed.second == y; });
      });
      bool covered = a.size() < b.size() ? a_hits : a.size() > b.size() ? b_hits : a_hits || b_hits;
      if (!complete && covered) {
        edges.insert(edges.end(), e.begin(), e.end());
        return;
      }
    }
  }
  Graph graph() const { return build_graph(next, edges); }
};

// Appends `len` singleton bags joined in a row after bag `from`; returns the last bag.
inline std::size_t extend(Chain& c, std::size_t from, std::size_t len) {
  std::size_t last = from;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t b = c.add_bag(1);
    c.join(last, b);
    last = b;
  }
  return last;
}

struct PairFixture {
  Instance inst;
  HomogeneousPairWitness pair;
};

// A simple claw-free instance with a homogeneous pair hitting the given case
// of the pair reduction ('a'..'e'). Interior terminals are shuffled half of
// the time so that both answers occur.
inline PairFixture build_pair_fixture(char which, Rng& rng) {
  Chain c;
  std::vector<VertexId> ts;
  std::size_t a_bag = 0, b_bag = 0;
  auto spine_with_terminals = [&](std::size_t from, std::size_t terminals) {
    std::size_t last = from;
    for (std::size_t i = 0; i < terminals; ++i) {
      last = extend(c, last, pick(rng, 4, 6));
      ts.push_back(c.bags[last][0]);
    }
    return last;
  };
  switch (which) {
    case 'a': {  // A = {t_1}, |B| >= 2, t_1 sees one vertex of B
      a_bag = c.add_bag(1);
      ts.push_back(c.bags[a_bag][0]);
      b_bag = c.add_bag(pick(rng, 2, 3));
      c.edges.emplace_back(c.bags[a_bag][0], c.bags[b_bag][pick(rng, 0, c.bags[b_bag].size() - 1)]);
      std::size_t x = c.add_bag(1);
      c.join(b_bag, x);
      spine_with_terminals(x, pick(rng, 1, 3));
      break;
    }
    case 'b': {  // A = {t_1, t_1'}, t_1' partially joined to B
      std::size_t t = c.add_bag(1);
      std::size_t t2 = c.add_bag(1);
      c.join(t, t2);
      ts.push_back(c.bags[t][0]);
      b_bag = c.add_bag(pick(rng, 1, 3));
      if (c.bags[b_bag].size() == 1)
        c.join(t2, b_bag);
      else
        c.partial_join(t2, b_bag, rng);
      std::size_t x = c.add_bag(1);
      c.join(b_bag, x);
      spine_with_terminals(x, pick(rng, 1, 3));
      // A is {t, t2}; the chain treats them as separate bags.
      HomogeneousPairWitness w{VertexSet(c.next, {c.bags[t][0], c.bags[t2][0]}),
                               VertexSet::of(c.next, c.bags[b_bag])};
      Instance inst{c.graph(), ts, Variant::OrderedPath};
      if (ts.size() > 3 && flip(rng)) std::shuffle(inst.terminals.begin() + 1, inst.terminals.end() - 1, rng);
      return {inst, w};
    }
    case 'c': {  // interior t, A = {t}, t sees one vertex of B, |B| >= 2
      std::size_t start = c.add_bag(1);
      ts.push_back(c.bags[start][0]);
      std::size_t last = extend(c, start, pick(rng, 4, 6));
      a_bag = last;
      ts.push_back(c.bags[a_bag][0]);
      b_bag = c.add_bag(pick(rng, 2, 3));
      c.edges.emplace_back(c.bags[a_bag][0], c.bags[b_bag][pick(rng, 0, c.bags[b_bag].size() - 1)]);
      std::size_t x = c.add_bag(1);
      c.join(b_bag, x);
      last = extend(c, x, pick(rng, 2, 4));
      ts.push_back(c.bags[last][0]);
      if (flip(rng)) spine_with_terminals(last, 1);
      break;
    }
    case 'd': {  // interior t with A = {t, t'} hanging off the end clique B
      std::size_t start = c.add_bag(1);
      ts.push_back(c.bags[start][0]);
      std::size_t mid = extend(c, start, pick(rng, 4, 5));
      ts.push_back(c.bags[mid][0]);
      std::size_t p = extend(c, mid, pick(rng, 3, 4));
      b_bag = c.add_bag(pick(rng, 2, 3));
      c.join(p, b_bag);
      std::size_t t = c.add_bag(1);
      std::size_t t2 = c.add_bag(1);
      c.join(t, t2);
      const auto& b = c.bags[b_bag];
      std::size_t wi = pick(rng, 0, b.size() - 1);
      c.edges.emplace_back(c.bags[t][0], b[wi]);
      for (std::size_t j = 0; j < b.size(); ++j)
        if (j != wi && (flip(rng) || j == (wi + 1) % b.size())) c.edges.emplace_back(c.bags[t2][0], b[j]);
      // t is interior: the order visits it between two spine terminals.
      ts.insert(ts.begin() + 1, c.bags[t][0]);
      HomogeneousPairWitness w{VertexSet(c.next, {c.bags[t][0], c.bags[t2][0]}), VertexSet::of(c.next, b)};
      return {Instance{c.graph(), ts, Variant::OrderedPath}, w};
    }
    default: {  // 'e': terminal-free pair of bags with a partial join
      std::size_t start = c.add_bag(1);
      ts.push_back(c.bags[start][0]);
      std::size_t last = spine_with_terminals(start, pick(rng, 0, 1));
      last = extend(c, last, pick(rng, 2, 3));
      a_bag = c.add_bag(pick(rng, 1, 3));
      c.join(last, a_bag);
      b_bag = c.add_bag(c.bags[a_bag].size() == 1 ? pick(rng, 2, 3) : pick(rng, 1, 3));
      c.partial_join(a_bag, b_bag, rng);
      std::size_t x = c.add_bag(1);
      c.join(b_bag, x);
      last = extend(c, x, pick(rng, 2, 3));
      spine_with_terminals(last, pick(rng, 1, 2));
      break;
    }
  }
  Instance inst{c.graph(), ts, Variant::OrderedPath};
  if (ts.size() > 3 && flip(rng)) std::shuffle(inst.terminals.begin() + 1, inst.terminals.end() - 1, rng);
  return {inst, HomogeneousPairWitness{VertexSet::of(c.next, c.bags[a_bag]), VertexSet::of(c.next, c.bags[b_bag])}};
}

// The pair reduction assumes no homogeneous clique; twins inside a bag are
// such cliques, so those draws are rejected.
inline PairFixture pair_fixture(char which, Rng& rng) {
  PairFixture f = build_pair_fixture(which, rng);
  while (find_homogeneous_clique(f.inst.graph)) f = build_pair_fixture(which, rng);
  auto perm = random_permutation(f.inst.graph.capacity(), rng);
  return {relabel(f.inst, perm), {relabel(f.pair.a, perm), relabel(f.pair.b, perm)}};
}

// A simple instance along a chain whose non-terminal bags sometimes hold
// twins, i.e. homogeneous cliques.
inline Instance clique_fixture(Rng& rng) {
  Chain c;
  std::vector<VertexId> ts;
  std::size_t last = c.add_bag(1);
  ts.push_back(c.bags[last][0]);
  std::size_t k = pick(rng, 2, 4);
  bool any = false;
  for (std::size_t i = 1; i < k; ++i) {
    std::size_t len = pick(rng, 4, 6);
    for (std::size_t j = 0; j < len; ++j) {
      // Bags next to a terminal stay singletons to keep the instance simple.
      bool near = j == 0 || j + 1 == len;
      std::size_t size = near ? 1 : (flip(rng, 0.4) ? pick(rng, 2, 3) : 1);
      any |= size > 1;
      std::size_t b = c.add_bag(size);
      c.join(last, b);
      last = b;
    }
    std::size_t t = c.add_bag(1);
    c.join(last, t);
    last = t;
    ts.push_back(c.bags[t][0]);
  }
  if (!any) return clique_fixture(rng);
  Instance inst{c.graph(), ts, Variant::OrderedPath};
  if (ts.size() > 3 && flip(rng)) std::shuffle(inst.terminals.begin() + 1, inst.terminals.end() - 1, rng);
  return relabel(inst, rng);
}

// A simple claw-free instance containing wheels whose hubs are C5 apexes.
// The spine enters and leaves each wheel through two consecutive rim vertices.
inline Instance c5_fixture(Rng& rng) {
  while (true) {
    std::vector<Edge> e;
    VertexId next = 0;
    std::vector<VertexId> ts;
    auto fresh = [&] { return next++; };
    VertexId cur = fresh();
    ts.push_back(cur);
    auto run = [&](std::size_t len) {
      for (std::size_t i = 0; i < len; ++i) {
        VertexId v = fresh();
        e.emplace_back(cur, v);
        cur = v;
      }
    };
    std::size_t wheels = pick(rng, 1, 2);
    std::size_t k = pick(rng, 2, 3);
    for (std::size_t w = 0; w < wheels; ++w) {
      run(pick(rng, 3, 4));
      std::vector<VertexId> rim(5);
      for (auto& r : rim) r = fresh();
      for (int i = 0; i < 5; ++i) e.emplace_back(rim[i], rim[(i + 1) % 5]);
      std::size_t hubs = pick(rng, 1, 2);
      std::vector<VertexId> hs;
      for (std::size_t h = 0; h < hubs; ++h) {
        VertexId hub = fresh();
        for (VertexId r : rim) e.emplace_back(hub, r);
        for (VertexId o : hs) e.emplace_back(hub, o);
        hs.push_back(hub);
      }
      std::size_t in = pick(rng, 0, 4);
      e.emplace_back(cur, rim[in]);
      e.emplace_back(cur, rim[(in + 1) % 5]);
      std::size_t out = (in + pick(rng, 1, 3)) % 5;
      VertexId exit = fresh();
      e.emplace_back(exit, rim[out]);
      e.emplace_back(exit, rim[(out + 1) % 5]);
      cur = exit;
      if (w + 1 < wheels && ts.size() + 1 < k) {
        run(pick(rng, 3, 4));
        ts.push_back(cur);
      }
    }
    run(pick(rng, 3, 5));
    ts.push_back(cur);
    Instance inst{build_graph(next, e), ts, Variant::OrderedPath};
    if (find_claw(inst.graph) || !is_simple(inst)) continue;
    return relabel(inst, rng);
  }
}

// A random claw-free instance (n <= max_n) whose cleaning removes something.
inline Instance clean_fixture(Rng& rng, std::size_t max_n = 12) {
  while (true) {
    Graph g = claw_free_graph(rng, max_n);
    std::size_t k = pick(rng, 2, 4);
    auto ts = random_terminals(g, k, rng);
    if (ts.size() < k) continue;
    Removal r = clean(g, ts.front(), ts.back());
    if (r.removed.empty()) continue;
    return Instance{g, ts, Variant::OrderedPath};
  }
}

// Long graphs whose Step 1 branches reach the later steps.
enum class LongFamily { ProperInterval, LadderLineGraph };
inline Instance long_instance(LongFamily f, Rng& rng, std::size_t k = 4) {
  while (true) {
    Graph g = f == LongFamily::ProperInterval ? random_proper_interval(pick(rng, 55, 70), rng, true)
                                              : random_ladder_line_graph(pick(rng, 26, 32), rng);
    if (!g.is_connected() || find_claw(g)) continue;
    auto ts = spread_terminals(g, k, rng);
    if (ts.size() < k) continue;
    return Instance{g, ts, Variant::OrderedPath};
  }
}

}  // namespace fx
