#include <algorithm>
#include <map>
#include <numeric>

#include "clawpath/recognizers.hpp"

namespace clawpath {

namespace {

struct Candidate {
  VertexSet interior;
  VertexSet xa, xb;  // sides inside the interior
  VertexSet oa, ob;  // outside neighbourhoods of the a and b sides
  Strip strip;
};

class StripFinder {
 public:
  StripFinder(const Graph& g, const OracleBudget& budget) : g_(g), meter_(budget) {}

  std::optional<StripComposition> run() {
    enumerate_candidates();
    by_vertex_.assign(g_.capacity(), {});
    for (std::size_t i = 0; i < cands_.size(); ++i)
      for (VertexId v : cands_[i].interior) by_vertex_[v].push_back(i);
    for (auto& list : by_vertex_)
      std::stable_sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
        return cands_[x].interior.size() > cands_[y].interior.size();
      });
    VertexSet covered(g_.capacity());
    std::vector<std::size_t> chosen;
    if (cover(covered, chosen)) return result_;
    return std::nullopt;
  }

 private:
  // Connected vertex sets inducing proper interval graphs, each listed once
  // (rooted at its smallest vertex). Supersets of a non-interval set are skipped.
  void enumerate_candidates() {
    for (VertexId root : g_.vertex_set()) {
      VertexSet set(g_.capacity(), {root});
      VertexSet ext = g_.neighbors(root);
      for (VertexId v : g_.vertex_set()) {
        if (v >= root) break;
        ext.erase(v);
      }
      VertexSet banned(g_.capacity());
      for (VertexId v : g_.vertex_set()) {
        if (v > root) break;
        banned.insert(v);
      }
      grow(set, ext, banned);
    }
  }

  void grow(VertexSet& set, VertexSet ext, VertexSet banned) {
    meter_.tick();
    Graph sub = g_.induced(set);
    auto rep = recognize_linear_interval(sub);
    if (!rep) return;
    classify(set);
    while (!ext.empty()) {
      VertexId w = ext.first();
      ext.erase(w);
      VertexSet next_set = set;
      next_set.insert(w);
      VertexSet next_ext = ext | (g_.neighbors(w) - banned - set);
      next_ext.erase(w);
      grow(next_set, next_ext, banned);
      banned.insert(w);
    }
  }

  void classify(const VertexSet& in) {
    std::map<std::vector<VertexId>, VertexSet> by_out;  // outside set -> boundary vertices with it
    for (VertexId x : in) {
      VertexSet o = g_.neighbors(x) - in;
      if (o.empty()) continue;
      by_out[o.to_vector()].insert(x);
    }
    if (by_out.size() > 3) return;
    std::vector<std::pair<VertexSet, VertexSet>> groups;  // (outside set, vertices)
    for (auto& [key, verts] : by_out) groups.emplace_back(VertexSet::of(g_.capacity(), key), verts);
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    VertexSet none(g_.capacity());
    switch (groups.size()) {
      case 0:
        add(in, none, none, none, none);
        break;
      case 1:
        add(in, groups[0].second, none, groups[0].first, none);
        if (in.size() == 1) split_single(in.first(), groups[0].first);
        break;
      case 2: {
        auto& [s1, v1] = groups[0];
        auto& [s2, v2] = groups[1];
        add(in, v1, v2, s1, s2);
        if (s1.is_subset_of(s2) && !(s1 == s2)) add(in, v1 | v2, v2, s1, s2 - s1);
        break;
      }
      case 3: {
        auto& [s1, v1] = groups[0];
        auto& [s2, v2] = groups[1];
        auto& [s3, v3] = groups[2];
        if (s3 == (s1 | s2) && !s1.intersects(s2)) add(in, v1 | v3, v2 | v3, s1, s2);
        break;
      }
    }
  }

  // A single vertex whose neighbourhood splits into two cliques, one per end.
  void split_single(VertexId v, const VertexSet& nb) {
    Graph comp = g_.induced(nb).complement();
    std::vector<std::pair<VertexSet, VertexSet>> parts;
    VertexSet left = nb;
    while (!left.empty()) {
      VertexSet c = comp.component_of(left.first(), nb);
      left -= c;
      auto dist = bfs_distances(comp, c.first(), c);
      VertexSet p0(g_.capacity()), p1(g_.capacity());
      for (VertexId x : c) (dist[x] % 2 == 0 ? p0 : p1).insert(x);
      if (!g_.is_clique(p0) || !g_.is_clique(p1)) return;
      parts.emplace_back(p0, p1);
    }
    if (parts.size() > 12) return;
    VertexSet one(g_.capacity(), {v});
    for (std::uint32_t mask = 0; mask < (1u << parts.size()); mask += 2) {
      VertexSet oa(g_.capacity()), ob(g_.capacity());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        bool flip = (mask >> i) & 1;
        oa |= flip ? parts[i].second : parts[i].first;
        ob |= flip ? parts[i].first : parts[i].second;
      }
      if (oa.empty() || ob.empty()) continue;
      add(one, one, one, oa, ob);
    }
  }

  // Builds the strip graph for interior `in`; empty sides are dangling and get
  // attached to the extreme vertex of the interior's ordering.
  void add(const VertexSet& in, VertexSet xa, VertexSet xb, const VertexSet& oa, const VertexSet& ob) {
    if ((!xa.empty() && !g_.is_clique(xa)) || (!xb.empty() && !g_.is_clique(xb))) return;
    auto cap = static_cast<VertexId>(g_.capacity());
    VertexId ea = cap, eb = cap + 1, pa = cap + 2, pb = cap + 3;
    GraphBuilder b;
    for (VertexId v : in) b.add_vertex(v, g_.provenance(v));
    for (VertexId v : in)
      for (VertexId w : g_.neighbors(v) & in)
        if (v < w) b.add_edge(v, w);
    Graph inner = b.peek();
    // Guard pendants force the ends to the extremes of any proper interval ordering.
    auto order_with = [&](const VertexSet& sa, const VertexSet& sb) -> std::optional<std::vector<VertexId>> {
      GraphBuilder h(inner);
      h.add_vertex(ea, Provenance{{}, true});
      h.add_vertex(eb, Provenance{{}, true});
      h.add_vertex(pa, Provenance{{}, true});
      h.add_vertex(pb, Provenance{{}, true});
      for (VertexId x : sa) h.add_edge(ea, x);
      for (VertexId x : sb) h.add_edge(eb, x);
      h.add_edge(ea, pa);
      h.add_edge(eb, pb);
      Graph hg = std::move(h).build();
      auto rep = recognize_linear_interval(hg);
      if (!rep) return std::nullopt;
      auto ord = rep->order();
      if (ord.front() == pb) std::reverse(ord.begin(), ord.end());
      if (ord.front() != pa || ord.back() != pb) return std::nullopt;
      return std::vector<VertexId>(ord.begin() + 1, ord.end() - 1);
    };
    if (xa.empty() || xb.empty()) {
      auto rep = recognize_linear_interval(inner);
      if (!rep) return;
      auto ord = rep->order();
      if (xa.empty() && xb.empty()) {
        xa = VertexSet(g_.capacity(), {ord.front()});
        xb = VertexSet(g_.capacity(), {ord.back()});
      } else if (xa.empty()) {
        // Put the b side last and hang a' on whatever comes first.
        auto o = order_with(VertexSet(g_.capacity(), {ord.front()}), xb);
        if (!o) o = order_with(VertexSet(g_.capacity(), {ord.back()}), xb);
        if (!o) return;
        xa = VertexSet(g_.capacity(), {(*o)[1]});
      } else {
        auto o = order_with(xa, VertexSet(g_.capacity(), {ord.back()}));
        if (!o) o = order_with(xa, VertexSet(g_.capacity(), {ord.front()}));
        if (!o) return;
        xb = VertexSet(g_.capacity(), {(*o)[o->size() - 2]});
      }
    }
    auto ord = order_with(xa, xb);
    if (!ord) return;
    GraphBuilder sb(inner);
    sb.add_vertex(ea, Provenance{{}, true});
    sb.add_vertex(eb, Provenance{{}, true});
    for (VertexId x : xa) sb.add_edge(ea, x);
    for (VertexId x : xb) sb.add_edge(eb, x);
    Strip s;
    s.graph = std::move(sb).build();
    s.end_a = ea;
    s.end_b = eb;
    s.rep = linear_representation(s.graph, *ord);
    if (!s.rep.represents(s.graph)) return;
    cands_.push_back({in, xa, xb, oa, ob, std::move(s)});
  }

  bool cover(VertexSet& covered, std::vector<std::size_t>& chosen) {
    meter_.tick();
    VertexSet open = g_.vertex_set() - covered;
    if (open.empty()) return assemble(chosen);
    VertexId v = open.first();
    for (std::size_t c : by_vertex_[v]) {
      if (cands_[c].interior.intersects(covered)) continue;
      covered |= cands_[c].interior;
      chosen.push_back(c);
      if (cover(covered, chosen)) return true;
      chosen.pop_back();
      covered -= cands_[c].interior;
    }
    return false;
  }

  bool assemble(const std::vector<std::size_t>& chosen) {
    std::size_t ends = 2 * chosen.size();
    std::vector<std::size_t> parent(ends);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto side = [&](std::size_t e) -> const VertexSet& {
      const auto& c = cands_[chosen[e / 2]];
      return e % 2 == 0 ? c.xa : c.xb;
    };
    auto outside = [&](std::size_t e) -> const VertexSet& {
      const auto& c = cands_[chosen[e / 2]];
      return e % 2 == 0 ? c.oa : c.ob;
    };
    for (std::size_t e = 0; e < ends; ++e)
      for (std::size_t f = 0; f < ends; ++f)
        if (e / 2 != f / 2 && !outside(e).empty() && side(f).is_subset_of(outside(e)))
          parent[find(f)] = find(e);
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (find(2 * i) == find(2 * i + 1)) return false;
    StripComposition comp;
    for (std::size_t c : chosen) comp.strips.push_back(cands_[c].strip);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t e = 0; e < ends; ++e) groups[find(e)].push_back(e);
    for (auto& [r, members] : groups) comp.base_cliques.push_back(members);
    if (!(comp.compose() == g_)) return false;
    result_ = std::move(comp);
    return true;
  }

  const Graph& g_;
  SearchMeter meter_;
  std::vector<Candidate> cands_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  StripComposition result_;
};

}  // namespace

std::optional<StripComposition> decompose_strips(const Graph& g, const StripOptions& opts) {
  if (opts.check_preconditions) {
    if (!is_quasi_line(g)) throw PreconditionError("strip decomposition needs a quasi-line graph");
    if (auto s = find_simplicial_vertex(g, opts.exempt_simplicial))
      throw PreconditionError("strip decomposition needs a graph without simplicial vertices; " +
                              std::to_string(*s) + " is simplicial");
    if (find_homogeneous_pair(g, opts.excluded_pairs, opts.budget))
      throw PreconditionError("strip decomposition needs a graph without homogeneous pairs");
  }
  if (g.order() == 0) return StripComposition{};
  StripFinder f(g, opts.budget);
  return f.run();
}

}  // namespace clawpath
