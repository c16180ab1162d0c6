#include "clawpath/oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace clawpath {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

class OrderedSearch {
 public:
  OrderedSearch(const Graph& g, std::span<const VertexId> terms, const VertexSet& allowed, SearchMeter& meter,
                const std::function<bool(const std::vector<VertexId>&)>& visit)
      : g_(g), terms_(terms.begin(), terms.end()), allowed_(allowed & g.vertex_set()), meter_(meter), visit_(visit) {
    // suffix_[j] = {t_j, ..., t_{k-1}}
    suffix_.assign(terms_.size() + 1, VertexSet(g.capacity()));
    for (std::size_t j = terms_.size(); j-- > 0;) {
      suffix_[j] = suffix_[j + 1];
      suffix_[j].insert(terms_[j]);
    }
  }

  bool run() {
    if (terms_.empty()) return false;
    for (VertexId t : terms_)
      if (!allowed_.contains(t)) return false;
    VertexId t0 = terms_[0];
    path_.assign(1, t0);
    if (terms_.size() == 1) return visit_(path_);
    if (g_.neighbors(t0).intersects(suffix_[2])) return false;
    VertexSet empty(g_.capacity());
    if (!reaches_all(t0, allowed_, 1)) return false;
    return extend(empty, 1);
  }

 private:
  bool reaches_all(VertexId from, const VertexSet& avail, std::size_t j) const {
    VertexSet comp = g_.component_of(from, avail);
    return suffix_[j].is_subset_of(comp);
  }

  // forbidden: closed neighbourhoods of every path vertex except the last.
  bool extend(const VertexSet& forbidden, std::size_t j) {
    VertexId v = path_.back();
    if (j == terms_.size()) return visit_(path_);
    VertexId tj = terms_[j];
    VertexSet cand = (g_.neighbors(v) & allowed_) - forbidden;
    if (g_.adjacent(v, tj)) {
      if (!cand.contains(tj)) return false;
      cand = VertexSet(g_.capacity());
      cand.insert(tj);
    } else {
      cand -= suffix_[j];
    }
    VertexSet next_forbidden = forbidden | g_.closed_neighbors(v);
    VertexSet avail = allowed_ - next_forbidden;
    for (VertexId w : cand) {
      meter_.tick();
      std::size_t jj = j + (w == tj ? 1 : 0);
      if (jj < terms_.size()) {
        if (g_.neighbors(w).intersects(suffix_[jj + 1])) continue;
        if (next_forbidden.intersects(suffix_[jj])) continue;
        if (!reaches_all(w, avail, jj)) continue;
      }
      path_.push_back(w);
      if (extend(next_forbidden, jj)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<VertexId> terms_;
  VertexSet allowed_;
  SearchMeter& meter_;
  const std::function<bool(const std::vector<VertexId>&)>& visit_;
  std::vector<VertexSet> suffix_;
  std::vector<VertexId> path_;
};

template <typename T, typename F>
SearchResult<T> metered(const OracleBudget& budget, F body) {
  SearchMeter meter(budget);
  try {
    std::optional<T> w = body(meter);
    if (w) return SearchResult<T>::yes(std::move(*w), meter.nodes());
    return SearchResult<T>::no(meter.nodes());
  } catch (const SearchExhausted&) {
    return SearchResult<T>::exhausted(meter.nodes());
  }
}

void require_terminals(const Graph& g, std::span<const VertexId> terms) {
  VertexSet seen(g.capacity());
  for (VertexId t : terms) {
    if (!g.contains(t)) throw InputError("terminal " + std::to_string(t) + " is not a vertex");
    if (seen.contains(t)) throw InputError("terminal " + std::to_string(t) + " repeated");
    seen.insert(t);
  }
}

}  // namespace

bool enumerate_ordered_paths(const Graph& g, std::span<const VertexId> terminals, const VertexSet& allowed,
                             SearchMeter& meter,
                             const std::function<bool(const std::vector<VertexId>&)>& visit) {
  OrderedSearch s(g, terminals, allowed, meter, visit);
  return s.run();
}

SearchResult<PathCertificate> oracle_ordered_path(const Graph& g, std::span<const VertexId> terminals,
                                                  const OracleBudget& budget) {
  require_terminals(g, terminals);
  return metered<PathCertificate>(budget, [&](SearchMeter& meter) -> std::optional<PathCertificate> {
    std::optional<PathCertificate> found;
    enumerate_ordered_paths(g, terminals, g.vertex_set(), meter, [&](const std::vector<VertexId>& p) {
      found = PathCertificate{p, true};
      return true;
    });
    return found;
  });
}

SearchResult<PathCertificate> oracle_k_in_a_path(const Graph& g, std::span<const VertexId> terminals,
                                                 const OracleBudget& budget) {
  require_terminals(g, terminals);
  std::vector<VertexId> perm(terminals.begin(), terminals.end());
  std::sort(perm.begin(), perm.end());
  return metered<PathCertificate>(budget, [&](SearchMeter& meter) -> std::optional<PathCertificate> {
    std::optional<PathCertificate> found;
    do {
      // A path and its reverse visit the same set; try each unordered pair of ends once.
      if (perm.size() > 1 && perm.front() > perm.back()) continue;
      enumerate_ordered_paths(g, perm, g.vertex_set(), meter, [&](const std::vector<VertexId>& p) {
        found = PathCertificate{p, false};
        return true;
      });
      if (found) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
  });
}

namespace {

class DisjointSearch {
 public:
  DisjointSearch(const Graph& g, std::span<const Edge> pairs, SearchMeter& meter)
      : g_(g), pairs_(pairs.begin(), pairs.end()), meter_(meter) {
    terminal_closed_.assign(pairs_.size(), VertexSet(g.capacity()));
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      terminal_closed_[i] = g.closed_neighbors(pairs_[i].first) | g.closed_neighbors(pairs_[i].second);
  }

  std::optional<std::vector<PathCertificate>> run() {
    VertexSet blocked(g_.capacity());
    if (route(0, blocked)) return out_;
    return std::nullopt;
  }

 private:
  // blocked: closed neighbourhoods of the paths routed so far.
  bool route(std::size_t i, const VertexSet& blocked) {
    if (i == pairs_.size()) return true;
    VertexSet allowed = g_.vertex_set() - blocked;
    for (std::size_t j = i + 1; j < pairs_.size(); ++j) allowed -= terminal_closed_[j];
    for (std::size_t j = i; j < pairs_.size(); ++j) {
      auto [s, t] = pairs_[j];
      if (blocked.contains(s) || blocked.contains(t)) return false;
    }
    auto [s, t] = pairs_[i];
    std::array<VertexId, 2> ends{s, t};
    bool done = enumerate_ordered_paths(g_, ends, allowed, meter_, [&](const std::vector<VertexId>& p) {
      VertexSet next = blocked;
      for (VertexId v : p) next |= g_.closed_neighbors(v);
      if (!later_pairs_connected(i + 1, next)) return false;
      out_.push_back(PathCertificate{p, true});
      if (route(i + 1, next)) return true;
      out_.pop_back();
      return false;
    });
    return done;
  }

  bool later_pairs_connected(std::size_t from, const VertexSet& blocked) const {
    VertexSet avail = g_.vertex_set() - blocked;
    for (std::size_t j = from; j < pairs_.size(); ++j) {
      auto [s, t] = pairs_[j];
      if (!avail.contains(s) || !avail.contains(t)) return false;
      VertexSet a = avail;
      for (std::size_t l = from; l < pairs_.size(); ++l)
        if (l != j) a -= terminal_closed_[l];
      if (!g_.component_of(s, a).contains(t)) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<Edge> pairs_;
  SearchMeter& meter_;
  std::vector<VertexSet> terminal_closed_;
  std::vector<PathCertificate> out_;
};

}  // namespace

SearchResult<std::vector<PathCertificate>> oracle_disjoint_paths(const Graph& g, std::span<const Edge> pairs,
                                                                 const OracleBudget& budget) {
  std::vector<VertexId> flat;
  for (auto [s, t] : pairs) {
    flat.push_back(s);
    flat.push_back(t);
  }
  require_terminals(g, flat);
  return metered<std::vector<PathCertificate>>(budget, [&](SearchMeter& meter) {
    DisjointSearch s(g, pairs, meter);
    return s.run();
  });
}

SearchResult<std::vector<VertexId>> oracle_induced_cycle(const Graph& g, std::span<const VertexId> terminals,
                                                         const OracleBudget& budget) {
  require_terminals(g, terminals);
  if (terminals.empty()) throw InputError("no terminals given");
  return metered<std::vector<VertexId>>(budget, [&](SearchMeter& meter) -> std::optional<std::vector<VertexId>> {
    VertexId t0 = terminals[0];
    std::vector<VertexId> nb = g.neighbors(t0).to_vector();
    std::optional<std::vector<VertexId>> found;
    for (std::size_t x = 0; x < nb.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < nb.size() && !found; ++y) {
        VertexId a = nb[x], b = nb[y];
        VertexSet allowed = g.vertex_set() - g.closed_neighbors(t0);
        allowed.insert(a);
        allowed.insert(b);
        std::vector<VertexId> rest;
        for (std::size_t i = 1; i < terminals.size(); ++i)
          if (terminals[i] != a && terminals[i] != b) rest.push_back(terminals[i]);
        std::sort(rest.begin(), rest.end());
        do {
          std::vector<VertexId> order{a};
          order.insert(order.end(), rest.begin(), rest.end());
          order.push_back(b);
          enumerate_ordered_paths(g, order, allowed, meter, [&](const std::vector<VertexId>& p) {
            std::vector<VertexId> cyc{t0};
            cyc.insert(cyc.end(), p.begin(), p.end());
            found = cyc;
            return true;
          });
        } while (!found && std::next_permutation(rest.begin(), rest.end()));
      }
    }
    return found;
  });
}

Verdict is_irrelevant(const Graph& g, VertexId s, VertexId t, VertexId v, const OracleBudget& budget) {
  if (s == t || s == v || t == v) throw InputError("is_irrelevant needs three distinct vertices");
  std::array<VertexId, 3> terms{s, v, t};
  auto r = oracle_ordered_path(g, terms, budget);
  switch (r.verdict) {
    case Verdict::Yes: return Verdict::No;
    case Verdict::No: return Verdict::Yes;
    default: return Verdict::Exhausted;
  }
}

}  // namespace clawpath
