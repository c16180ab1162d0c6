#include "clawpath/reductions.hpp"

#include <algorithm>

namespace clawpath {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Simplify: return "simplify";
    case StepKind::Clean: return "clean";
    case StepKind::RemoveC5Apexes: return "remove-c5-apexes";
    case StepKind::ContractHomogeneousClique: return "contract-homogeneous-clique";
    case StepKind::ReduceHomogeneousPair: return "reduce-homogeneous-pair";
    case StepKind::CompleteNeighborhoods: return "complete-neighborhoods";
    case StepKind::AddConnectors: return "add-connectors";
  }
  return "?";
}

Instance ReductionTrace::replay() const {
  Instance cur = origin;
  for (const TraceStep& s : steps) {
    GraphBuilder b(cur.graph);
    for (VertexId v : s.removed) b.remove_vertex(v);
    for (VertexId v : s.added_vertices) b.add_vertex(v, Provenance{{}, true});
    for (auto [u, v] : s.added_edges) b.add_edge(u, v);
    cur.graph = std::move(b).build();
    cur.terminals = s.terminals;
    if (s.variant) cur.variant = *s.variant;
  }
  return cur;
}

PathCertificate ReductionTrace::lift(const PathCertificate& reduced) const {
  PathCertificate out = reduced;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (!it->lift_prefix.empty()) out.sequence.insert(out.sequence.begin(), it->lift_prefix.begin(), it->lift_prefix.end());
    out.sequence.insert(out.sequence.end(), it->lift_suffix.begin(), it->lift_suffix.end());
  }
  return out;
}

void ReductionTrace::append(const ReductionTrace& later) {
  steps.insert(steps.end(), later.steps.begin(), later.steps.end());
}

namespace {

TraceStep removal_step(StepKind kind, const VertexSet& removed, std::vector<VertexId> terminals) {
  TraceStep s;
  s.kind = kind;
  s.removed = removed.to_vector();
  s.terminals = std::move(terminals);
  return s;
}

}  // namespace

Removal clean(const Graph& g, VertexId s, VertexId t, const IrrelevanceTester& tester, const OracleBudget& budget) {
  if (s == t) throw PreconditionError("clean needs two distinct vertices");
  if (!g.contains(s) || !g.contains(t)) throw InputError("clean: unknown vertex");
  Removal r{g, VertexSet(g.capacity())};
  // An induced s-t path survives the deletion of a vertex it avoids, so a
  // vertex found relevant stays relevant and is not re-tested after a restart.
  VertexSet relevant(g.capacity(), {s, t});
  bool again = true;
  while (again) {
    again = false;
    for (VertexId v : r.graph.vertex_set()) {
      if (relevant.contains(v)) continue;
      Verdict verdict = tester.irrelevant(r.graph, s, t, v, budget);
      if (verdict == Verdict::Exhausted) throw SearchExhausted("irrelevance test ran out of budget");
      if (verdict == Verdict::Yes) {
        r.graph = r.graph.without(v);
        r.removed.insert(v);
        again = true;
        break;
      }
      relevant.insert(v);
    }
  }
  return r;
}

Removal remove_c5_apexes(const Graph& g, std::span<const VertexId> terminals) {
  Removal r{g, VertexSet(g.capacity())};
  VertexSet terms = VertexSet::of(g.capacity(), terminals);
  bool check_connected = !terminals.empty() && g.is_connected();
  bool again = true;
  while (again) {
    again = false;
    for (VertexId u : r.graph.vertex_set()) {
      if (!find_induced_cycle_of_length(r.graph, r.graph.neighbors(u), 5)) continue;
      if (terms.contains(u))
        throw PreconditionError("terminal " + std::to_string(u) + " is the apex of an induced C5");
      r.graph = r.graph.without(u);
      r.removed.insert(u);
      if (check_connected && !r.graph.is_connected())
        throw PreconditionError("removing C5 apex " + std::to_string(u) + " disconnected the graph");
      again = true;
      break;
    }
  }
  return r;
}

CliqueContraction contract_homogeneous_cliques(const Instance& inst) {
  CliqueContraction out{inst, {}};
  VertexSet terms = VertexSet::of(inst.graph.capacity(), inst.terminals);
  while (auto a = find_homogeneous_clique(out.instance.graph)) {
    if (a->intersects(terms))
      throw PreconditionError("homogeneous clique contains terminal " + std::to_string((*a & terms).first()));
    VertexId keep = a->first();
    a->erase(keep);
    out.instance.graph = out.instance.graph.without(*a);
    TraceStep s = removal_step(StepKind::ContractHomogeneousClique, *a, inst.terminals);
    s.note = "kept " + std::to_string(keep);
    out.steps.push_back(std::move(s));
  }
  return out;
}

PairReduction reduce_homogeneous_pair(const Instance& inst, const HomogeneousPairWitness& w) {
  const Graph& g = inst.graph;
  if (w.a.empty() || w.b.empty() || w.a.intersects(w.b) || (w.a.size() < 2 && w.b.size() < 2) ||
      !w.a.is_subset_of(g.vertex_set()) || !w.b.is_subset_of(g.vertex_set()) || !is_homogeneous_pair(g, w.a, w.b))
    throw InputError("not a homogeneous pair");
  const auto& ts = inst.terminals;
  if (ts.size() < 2) throw PreconditionError("homogeneous pair reduction needs at least two terminals");
  VertexSet terms = VertexSet::of(g.capacity(), ts);
  VertexSet a = w.a, b = w.b;
  std::size_t inside = (a | b).intersection_size(terms);
  if (inside > 1) throw PreconditionError("homogeneous pair holds more than one terminal");
  if (b.intersects(terms)) std::swap(a, b);

  VertexSet drop(g.capacity());
  PairReduction out;
  out.step.kind = StepKind::ReduceHomogeneousPair;
  std::vector<VertexId> new_terms = ts;

  auto keep_one_of_b_near = [&](VertexId x) {
    VertexSet nb = g.neighbors(x) & b;
    if (nb.empty()) throw PreconditionError("terminal side of the pair has no neighbour in the other clique");
    VertexId u = nb.first();
    drop |= b;
    drop.erase(u);
  };

  if (inside == 0) {
    out.which = 'e';
    std::optional<Edge> cross;
    for (VertexId x : a) {
      VertexSet nb = g.neighbors(x) & b;
      if (!nb.empty()) {
        cross = Edge{x, nb.first()};
        break;
      }
    }
    if (!cross) throw PreconditionError("cliques of the pair are not adjacent");
    drop = a | b;
    drop.erase(cross->first);
    drop.erase(cross->second);
  } else {
    VertexId t = (a & terms).first();
    bool first = t == ts.front(), last = t == ts.back();
    if (first || last) {
      if (a.size() == 1) {
        out.which = 'a';
        keep_one_of_b_near(t);
      } else if (a.size() == 2) {
        out.which = 'b';
        VertexSet rest = a;
        rest.erase(t);
        VertexId t2 = rest.first();
        if (terms.contains(t2)) throw PreconditionError("pair clique holds two terminals");
        drop.insert(t);
        keep_one_of_b_near(t2);
        if (first) {
          new_terms.front() = t2;
          out.step.lift_prefix = {t};
        } else {
          new_terms.back() = t2;
          out.step.lift_suffix = {t};
        }
      } else {
        throw PreconditionError("end terminal inside a homogeneous clique of size > 2");
      }
    } else {
      if (a.size() == 1) {
        out.which = 'c';
        keep_one_of_b_near(t);
      } else if (a.size() == 2) {
        out.which = 'd';
        VertexSet rest = a;
        rest.erase(t);
        VertexId t2 = rest.first();
        VertexSet other = g.neighbors(t) - a;
        if ((other & b).empty()) throw PreconditionError("interior terminal has no neighbour in the other clique");
        drop.insert(t2);
        VertexId u = (other & b).first();
        drop |= b;
        drop.erase(u);
      } else {
        throw PreconditionError("interior terminal inside a homogeneous clique of size > 2");
      }
    }
  }
  out.instance = inst;
  out.instance.graph = g.without(drop);
  out.instance.terminals = new_terms;
  out.step.removed = drop.to_vector();
  out.step.terminals = new_terms;
  out.step.note = std::string(1, out.which);
  return out;
}

std::string simplicity_violation(const Instance& inst) {
  const Graph& g = inst.graph;
  const auto& ts = inst.terminals;
  if (ts.size() < 2) return "fewer than two terminals";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    VertexId t = ts[i];
    if (!g.contains(t)) return "terminal " + std::to_string(t) + " missing";
    bool end = i == 0 || i + 1 == ts.size();
    if (end && g.degree(t) != 1) return "end terminal " + std::to_string(t) + " does not have degree 1";
    if (!end) {
      if (g.degree(t) != 2) return "interior terminal " + std::to_string(t) + " does not have degree 2";
      auto nb = g.neighbors(t).to_vector();
      if (g.adjacent(nb[0], nb[1])) return "interior terminal " + std::to_string(t) + " has adjacent neighbours";
    }
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto dist = bfs_distances(g, ts[i], g.vertex_set());
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (dist[ts[j]] < 4)
        return "terminals " + std::to_string(ts[i]) + " and " + std::to_string(ts[j]) + " are closer than 4";
  }
  if (!g.is_connected()) return "graph is disconnected";
  return {};
}

}  // namespace clawpath
