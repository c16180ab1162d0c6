#include <algorithm>

#include "clawpath/reductions.hpp"

namespace clawpath {

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const Instance& inst)
      : g_(inst.graph), terms_(VertexSet::of(inst.graph.capacity(), inst.terminals)), chosen_(g_.capacity()) {}

  void run(const std::vector<VertexId>& order) {
    order_ = order;
    gaps_.assign(order.size(), {});
    owner_.clear();
    // Adjacent terminals must be consecutive and joined directly.
    std::size_t k = order.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (g_.adjacent(order[i], order[j]) && j != i + 1 && !(i == 0 && j == k - 1)) return;
    choose(0);
  }

  std::vector<CycleBranch> take() { return std::move(out_); }

 private:
  VertexId term(std::size_t i) const { return order_[i % order_.size()]; }

  // x touches exactly the listed terminals.
  bool touches_only(VertexId x, VertexId p, VertexId q) const {
    for (VertexId t : g_.neighbors(x) & terms_)
      if (t != p && t != q) return false;
    return true;
  }
  // x is new and non-adjacent to special vertices of other gaps.
  bool compatible(VertexId x, std::size_t gap) const {
    if (chosen_.contains(x)) return false;
    for (auto [v, owner] : owner_)
      if (owner != gap && g_.adjacent(x, v)) return false;
    return true;
  }
  void push(VertexId x, std::size_t gap) {
    chosen_.insert(x);
    owner_.emplace_back(x, gap);
  }
  void pop() {
    chosen_.erase(owner_.back().first);
    owner_.pop_back();
  }

  void choose(std::size_t i) {
    std::size_t k = order_.size();
    if (i == k) {
      emit();
      return;
    }
    VertexId u = term(i), v = term(i + 1);
    if (g_.adjacent(u, v)) {
      // Any other route would leave u-v as a chord; with two terminals the
      // edge closes exactly one of the two gaps.
      bool first_direct = gaps_[0].kind == GapKind::Direct;
      bool direct_ok = !(k == 2 && i == 1 && first_direct);
      bool route_ok = k == 2 && (i == 0 || first_direct);
      if (direct_ok) {
        gaps_[i] = {GapKind::Direct, 0, 0};
        choose(i + 1);
      }
      if (!route_ok) return;
    }
    VertexSet nu = g_.neighbors(u) - terms_, nv = g_.neighbors(v) - terms_;
    for (VertexId x : nu & nv) {
      if (!touches_only(x, u, v) || !compatible(x, i)) continue;
      gaps_[i] = {GapKind::Single, x, 0};
      push(x, i);
      choose(i + 1);
      pop();
    }
    for (VertexId a : nu) {
      if (g_.adjacent(a, v) || !touches_only(a, u, u) || !compatible(a, i)) continue;
      push(a, i);
      for (VertexId b : nv) {
        if (b == a || g_.adjacent(b, u) || !touches_only(b, v, v) || !compatible(b, i)) continue;
        gaps_[i] = {GapKind::Pair, a, b};
        push(b, i);
        choose(i + 1);
        pop();
      }
      pop();
    }
  }

  void emit() {
    // Routing graph: drop terminals, their unchosen neighbours and the closed
    // neighbourhoods of single-vertex gaps.
    VertexSet drop = terms_;
    VertexSet pair_ends(g_.capacity());
    for (const auto& gp : gaps_)
      if (gp.kind == GapKind::Pair) {
        pair_ends.insert(gp.a);
        pair_ends.insert(gp.b);
      }
    for (VertexId t : terms_) drop |= g_.neighbors(t) - pair_ends;
    for (const auto& gp : gaps_)
      if (gp.kind == GapKind::Single) drop |= g_.closed_neighbors(gp.a);
    CycleBranch br;
    br.order = order_;
    br.gaps = gaps_;
    br.disjoint.graph = g_.without(drop);
    br.disjoint.variant = Variant::DisjointPaths;
    for (const auto& gp : gaps_)
      if (gp.kind == GapKind::Pair) {
        br.disjoint.terminals.push_back(gp.a);
        br.disjoint.terminals.push_back(gp.b);
      }
    out_.push_back(std::move(br));
  }

  const Graph& g_;
  VertexSet terms_;
  VertexSet chosen_;
  std::vector<std::pair<VertexId, std::size_t>> owner_;
  std::vector<VertexId> order_;
  std::vector<CycleGap> gaps_;
  std::vector<CycleBranch> out_;
};

}  // namespace

std::vector<CycleBranch> cycle_to_disjoint_paths(const Instance& inst) {
  const auto& ts = inst.terminals;
  if (ts.size() < 2) throw PreconditionError("cycle reduction needs at least two terminals");
  for (VertexId t : ts)
    if (!inst.graph.contains(t)) throw InputError("unknown terminal " + std::to_string(t));
  for (VertexId t : ts)
    if (inst.graph.degree(t) < 2) return {};
  CycleEnumerator en(inst);
  std::vector<VertexId> rest(ts.begin() + 1, ts.end());
  std::sort(rest.begin(), rest.end());
  do {
    // A cycle read backwards is the same cycle.
    if (rest.size() >= 2 && rest.front() > rest.back()) continue;
    std::vector<VertexId> order{ts.front()};
    order.insert(order.end(), rest.begin(), rest.end());
    en.run(order);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return en.take();
}

std::vector<VertexId> assemble_cycle(const CycleBranch& br, std::span<const PathCertificate> paths) {
  std::vector<VertexId> seq;
  std::size_t next_path = 0;
  for (std::size_t i = 0; i < br.order.size(); ++i) {
    seq.push_back(br.order[i]);
    const CycleGap& gp = br.gaps[i];
    if (gp.kind == GapKind::Single) {
      seq.push_back(gp.a);
    } else if (gp.kind == GapKind::Pair) {
      if (next_path >= paths.size()) throw InputError("too few paths for the cycle branch");
      const auto& p = paths[next_path++].sequence;
      seq.insert(seq.end(), p.begin(), p.end());
    }
  }
  return seq;
}

std::optional<OrderedFromDisjoint> disjoint_paths_to_ordered(const Instance& inst) {
  inst.validate();
  if (inst.variant != Variant::DisjointPaths) throw PreconditionError("expected a disjoint-paths instance");
  auto pairs = inst.pairs();
  if (pairs.empty()) throw PreconditionError("disjoint-paths instance without pairs");
  const Graph& g = inst.graph;
  require_claw_free(g);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (i != j)
        for (VertexId x : {pairs[i].first, pairs[i].second})
          for (VertexId y : {pairs[j].first, pairs[j].second})
            if (g.adjacent(x, y)) return std::nullopt;

  OrderedFromDisjoint out;
  out.trace.origin = inst;

  // Make every terminal's neighbourhood a clique, one terminal at a time.
  TraceStep complete;
  complete.kind = StepKind::CompleteNeighborhoods;
  GraphBuilder b(g);
  for (VertexId t : inst.terminals) {
    auto nb = b.peek().neighbors(t).to_vector();
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        if (!b.peek().adjacent(nb[x], nb[y])) {
          b.add_edge(nb[x], nb[y]);
          complete.added_edges.emplace_back(nb[x], nb[y]);
        }
  }
  complete.terminals = inst.terminals;

  TraceStep connect;
  connect.kind = StepKind::AddConnectors;
  connect.variant = Variant::OrderedPath;
  auto next_id = static_cast<VertexId>(g.capacity());
  std::vector<VertexId> nt{pairs.front().first, pairs.front().second};
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    VertexId c = next_id++;
    b.add_vertex(c, Provenance{{}, true});
    b.add_edge(c, pairs[i].second);
    b.add_edge(c, pairs[i + 1].first);
    connect.added_vertices.push_back(c);
    connect.added_edges.emplace_back(c, pairs[i].second);
    connect.added_edges.emplace_back(c, pairs[i + 1].first);
    out.connectors.push_back(c);
    nt.push_back(c);
    nt.push_back(pairs[i + 1].second);
  }
  connect.terminals = nt;

  Graph reduced = std::move(b).build();
  if (auto claw = find_claw(reduced))
    throw std::logic_error("neighbourhood completion produced a claw at " + std::to_string(claw->center));
  out.ordered = Instance{std::move(reduced), nt, Variant::OrderedPath};
  out.trace.steps.push_back(std::move(complete));
  out.trace.steps.push_back(std::move(connect));
  return out;
}

std::vector<PathCertificate> split_at_connectors(const OrderedFromDisjoint& red, const PathCertificate& cert) {
  VertexSet cut = VertexSet::of(red.ordered.graph.capacity(), red.connectors);
  std::vector<PathCertificate> paths(1);
  for (VertexId v : cert.sequence) {
    if (cut.contains(v)) {
      paths.emplace_back();
      continue;
    }
    paths.back().sequence.push_back(v);
  }
  return paths;
}

}  // namespace clawpath
