#include "clawpath/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>

#include "clawpath/oracles.hpp"
#include "clawpath/recognizers.hpp"
#include "clawpath/solvers.hpp"

namespace clawpath {

std::uint64_t Stats::fallback_count() const {
  std::uint64_t n = 0;
  for (auto& [k, v] : fallbacks) n += v;
  return n;
}

std::uint64_t Stats::audit_failure_count() const {
  std::uint64_t n = 0;
  for (auto& [k, v] : audit_failures) n += v;
  return n;
}

void Stats::merge(const Stats& o) {
  for (auto& [k, v] : o.dispatch) dispatch[k] += v;
  for (auto& [k, v] : o.fallbacks) fallbacks[k] += v;
  for (auto& [k, v] : o.reductions) reductions[k] += v;
  for (auto& [k, v] : o.seconds) seconds[k] += v;
  for (auto& [k, v] : o.audit_failures) audit_failures[k] += v;
  branches += o.branches;
  discarded += o.discarded;
  audits += o.audits;
  warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  Timer(Stats& s, std::string name) : s_(s), name_(std::move(name)), t0_(Clock::now()) {}
  ~Timer() { s_.seconds[name_] += std::chrono::duration<double>(Clock::now() - t0_).count(); }

 private:
  Stats& s_;
  std::string name_;
  Clock::time_point t0_;
};

struct Outcome {
  Verdict verdict = Verdict::No;
  std::optional<PathCertificate> cert;  // already lifted to the pipeline origin
  std::optional<ReductionTrace> trace;
  Stats stats;
};

// yes > exhausted > no
void combine(Outcome& acc, Outcome o) {
  acc.stats.merge(o.stats);
  if (acc.verdict == Verdict::Yes) return;
  if (o.verdict == Verdict::Yes) {
    acc.verdict = Verdict::Yes;
    acc.cert = std::move(o.cert);
    acc.trace = std::move(o.trace);
  } else if (o.verdict == Verdict::Exhausted) {
    acc.verdict = Verdict::Exhausted;
  }
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Yes || b == Verdict::Yes) return Verdict::Yes;
  if (a == Verdict::Exhausted || b == Verdict::Exhausted) return Verdict::Exhausted;
  return Verdict::No;
}

// Ordered instances that cannot have a solution for local reasons.
bool trivially_infeasible(const Instance& inst) {
  const Graph& g = inst.graph;
  const auto& ts = inst.terminals;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!g.contains(ts[i])) return true;
    bool end = i == 0 || i + 1 == ts.size();
    if (g.degree(ts[i]) < (end ? 1u : 2u)) return true;
  }
  VertexSet comp = g.component_of(ts.front());
  for (VertexId t : ts)
    if (!comp.contains(t)) return true;
  return false;
}

std::vector<VertexSet> end_pairs(const Instance& inst) {
  std::vector<VertexSet> out;
  const Graph& g = inst.graph;
  for (VertexId t : {inst.terminals.front(), inst.terminals.back()})
    if (g.degree(t) == 1) out.push_back(VertexSet(g.capacity(), {t, g.neighbors(t).first()}));
  return out;
}

bool has_odd_antihole_of_length_at_least_7(const Graph& g) {
  Graph c = g.complement();
  for (std::size_t len = 7; len <= g.order(); len += 2)
    if (find_induced_cycle_of_length(c, c.vertex_set(), len)) return true;
  return false;
}

class Pipeline {
 public:
  Pipeline(const PipelineConfig& cfg) : cfg_(cfg) {}

  Outcome simplify_and_solve(const Instance& inst, const ReductionTrace& trace, int depth) const {
    Outcome out;
    Simplification s;
    try {
      Timer tm(out.stats, "step1");
      s = make_simple_instances(inst, SimplifyOptions{cfg_.window, cfg_.budget});
    } catch (const SearchExhausted&) {
      out.verdict = Verdict::Exhausted;
      out.stats.warnings.push_back("simple-instance guessing ran out of budget");
      return out;
    }
    out.stats.branches += s.branches.size();
    out.stats.discarded += s.discarded;
    if (s.short_solution) {
      out.stats.dispatch["short-solution"]++;
      return yes(*s.short_solution, trace, std::move(out.stats));
    }
    std::vector<std::size_t> order(s.branches.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (cfg_.shuffle_branches) {
      std::mt19937_64 rng(cfg_.seed + static_cast<std::uint64_t>(depth));
      std::shuffle(order.begin(), order.end(), rng);
    }
    auto run_one = [&](std::size_t i) {
      ReductionTrace t = trace;
      t.append(s.branches[i].trace);
      if (cfg_.observer) cfg_.observer("step1", s.branches[i].instance);
      return process_branch(s.branches[i].instance, std::move(t), depth);
    };
    std::size_t width = std::max<std::size_t>(1, cfg_.parallel_branches);
    for (std::size_t at = 0; at < order.size() && out.verdict != Verdict::Yes; at += width) {
      std::size_t end = std::min(order.size(), at + width);
      if (width == 1) {
        combine(out, run_one(order[at]));
        continue;
      }
      std::vector<std::future<Outcome>> jobs;
      for (std::size_t j = at; j < end; ++j) jobs.push_back(std::async(std::launch::async, run_one, order[j]));
      for (auto& j : jobs) combine(out, j.get());
    }
    return out;
  }

 private:
  Outcome yes(const PathCertificate& cert, const ReductionTrace& trace, Stats stats = {}) const {
    Outcome o;
    o.verdict = Verdict::Yes;
    o.cert = trace.lift(cert);
    o.trace = trace;
    o.stats = std::move(stats);
    return o;
  }

  Outcome no(Stats stats, const std::string& why) const {
    Outcome o;
    o.stats = std::move(stats);
    o.stats.dispatch[why]++;
    return o;
  }

  Outcome fallback(const Instance& inst, const ReductionTrace& trace, Stats stats, const std::string& reason) const {
    stats.fallbacks[reason]++;
    auto r = oracle_ordered_path(inst.graph, inst.terminals, cfg_.budget);
    if (r.verdict == Verdict::Yes) return yes(*r.witness, trace, std::move(stats));
    Outcome o;
    o.verdict = r.verdict;
    o.stats = std::move(stats);
    return o;
  }

  // Installs a step, optionally checking that the oracle answer is unchanged.
  void apply(Instance& inst, ReductionTrace& trace, Stats& stats, TraceStep step, const Instance& next) const {
    if (cfg_.debug_level >= 2) {
      auto before = oracle_ordered_path(inst.graph, inst.terminals, cfg_.budget).verdict;
      auto after = oracle_ordered_path(next.graph, next.terminals, cfg_.budget).verdict;
      stats.audits++;
      if (before != Verdict::Exhausted && after != Verdict::Exhausted && before != after)
        stats.audit_failures[std::string("preservation:") + to_string(step.kind)]++;
    }
    trace.steps.push_back(std::move(step));
    inst = next;
  }

  void audit(Stats& stats, bool ok, const std::string& what) const {
    stats.audits++;
    if (!ok) stats.audit_failures[what]++;
  }

  // Returns false when cleaning deleted a terminal.
  bool do_clean(Instance& inst, ReductionTrace& trace, Stats& stats) const {
    Removal r = clean(inst.graph, inst.terminals.front(), inst.terminals.back(), OracleIrrelevanceTester{}, cfg_.budget);
    if (r.removed.empty()) return true;
    bool lost = false;
    for (VertexId t : inst.terminals) lost |= r.removed.contains(t);
    TraceStep st;
    st.kind = StepKind::Clean;
    st.removed = r.removed.to_vector();
    st.terminals = inst.terminals;
    Instance next{std::move(r.graph), inst.terminals, inst.variant};
    if (lost) return false;
    apply(inst, trace, stats, std::move(st), next);
    stats.reductions["clean"]++;
    return true;
  }

  Outcome process_branch(Instance inst, ReductionTrace trace, int depth) const {
    Stats stats;
    try {
      // Step 2
      {
        Timer tm(stats, "step2");
        if (!do_clean(inst, trace, stats) || trivially_infeasible(inst)) return no(std::move(stats), "no-after-clean");
        Removal c5 = remove_c5_apexes(inst.graph, inst.terminals);
        if (!c5.removed.empty()) {
          TraceStep st;
          st.kind = StepKind::RemoveC5Apexes;
          st.removed = c5.removed.to_vector();
          st.terminals = inst.terminals;
          apply(inst, trace, stats, std::move(st), Instance{std::move(c5.graph), inst.terminals, inst.variant});
          stats.reductions["c5-apex"] += c5.removed.size();
        }
        if (!do_clean(inst, trace, stats) || trivially_infeasible(inst)) return no(std::move(stats), "no-after-clean");
        if (cfg_.debug_level >= 1) audit(stats, is_quasi_line(inst.graph), "step2-quasi-line");
        if (cfg_.debug_level >= 2) audit(stats, !has_odd_antihole_of_length_at_least_7(inst.graph), "step2-odd-antihole");
        if (cfg_.observer) cfg_.observer("step2", inst);
      }
      // Step 3
      {
        Timer tm(stats, "step3");
        contract_cliques(inst, trace, stats);
        if (cfg_.debug_level >= 1) audit(stats, !find_homogeneous_clique(inst.graph), "step3-homogeneous-clique");
        if (cfg_.observer) cfg_.observer("step3", inst);
      }
      // Step 4
      {
        Timer tm(stats, "step4");
        while (true) {
          auto excluded = end_pairs(inst);
          auto w = find_homogeneous_pair(inst.graph, excluded, cfg_.budget);
          if (!w) break;
          if (!reduce_pair(inst, trace, stats, *w)) return no(std::move(stats), "no-after-pair");
          contract_cliques(inst, trace, stats);
        }
        if (cfg_.debug_level >= 1)
          audit(stats, !find_homogeneous_pair(inst.graph, end_pairs(inst), cfg_.budget), "step4-homogeneous-pair");
        if (cfg_.observer) cfg_.observer("step4", inst);
      }
      std::string reason;
      {
        Timer tm(stats, "step5");
        if (auto o = leaf(inst, trace, stats, reason)) return std::move(*o);
      }
      // Structured dispatch failed. An excluded end pair may be what blocks
      // it: reduce that pair and simplify again.
      if (auto w = find_homogeneous_pair(inst.graph, {}, cfg_.budget)) {
        if (depth >= 2) return fallback(inst, trace, std::move(stats), "resimplify-depth");
        if (!reduce_pair(inst, trace, stats, *w)) return no(std::move(stats), "no-after-pair");
        Outcome o = simplify_and_solve(inst, trace, depth + 1);
        o.stats.merge(stats);
        return o;
      }
      return fallback(inst, trace, std::move(stats), reason);
    } catch (const SearchExhausted&) {
      Outcome o;
      o.verdict = Verdict::Exhausted;
      o.stats = std::move(stats);
      return o;
    } catch (const PreconditionError& e) {
      stats.warnings.push_back(e.what());
      return fallback(inst, trace, std::move(stats), "precondition");
    }
  }

  void contract_cliques(Instance& inst, ReductionTrace& trace, Stats& stats) const {
    CliqueContraction cc = contract_homogeneous_cliques(inst);
    if (cc.steps.empty()) return;
    stats.reductions["homogeneous-clique"] += cc.steps.size();
    Instance cur = inst;
    for (auto& st : cc.steps) {
      GraphBuilder b(cur.graph);
      for (VertexId v : st.removed) b.remove_vertex(v);
      Instance next{std::move(b).build(), cur.terminals, cur.variant};
      apply(cur, trace, stats, std::move(st), next);
    }
    inst = std::move(cur);
  }

  bool reduce_pair(Instance& inst, ReductionTrace& trace, Stats& stats, const HomogeneousPairWitness& w) const {
    PairReduction pr = reduce_homogeneous_pair(inst, w);
    stats.reductions[std::string("homogeneous-pair-") + pr.which]++;
    apply(inst, trace, stats, std::move(pr.step), pr.instance);
    return !trivially_infeasible(inst);
  }

  // Step 5. nullopt when no structured solver applies; `reason` then says why.
  std::optional<Outcome> leaf(const Instance& inst, const ReductionTrace& trace, Stats& stats,
                              std::string& reason) const {
    auto fail = [&](const char* why) {
      reason = why;
      return std::optional<Outcome>{};
    };
    const Graph& g = inst.graph;
    const auto& ts = inst.terminals;
    try {
      if (auto rep = recognize_linear_interval(g)) {
        stats.dispatch["linear-interval"]++;
        if (auto c = solve_linear_interval(g, *rep, ts)) return yes(*c, trace, std::move(stats));
        return no(std::move(stats), "linear-interval-no");
      }
      if (auto rep = recognize_circular_interval(g)) {
        stats.dispatch["circular-interval"]++;
        for (Orientation o : {Orientation::Forward, Orientation::Backward}) {
          auto cut = circular_to_linear(g, *rep, ts, o);
          if (!cut) continue;
          if (auto c = solve_linear_interval(cut->graph, cut->rep, ts)) return yes(*c, trace, std::move(stats));
        }
        return no(std::move(stats), "circular-interval-no");
      }
    } catch (const SearchExhausted&) {
      stats.warnings.push_back("circular recognition ran out of budget");
    }
    if (auto root = line_graph_root(g, cfg_.budget)) {
      stats.dispatch["line-graph"]++;
      auto r = solve_line_graph(g, *root, ts, cfg_.budget);
      if (r.verdict == Verdict::Yes) return yes(*r.witness, trace, std::move(stats));
      if (r.verdict == Verdict::Exhausted) return fallback(inst, trace, std::move(stats), "line-graph-budget");
      return no(std::move(stats), "line-graph-no");
    }
    if (!cfg_.strip_construction) return fail("strip-construction-off");
    StripOptions opts;
    opts.exempt_simplicial = VertexSet(g.capacity(), {ts.front(), ts.back()});
    opts.excluded_pairs = end_pairs(inst);
    opts.budget = cfg_.budget;
    std::optional<StripComposition> comp;
    try {
      comp = decompose_strips(g, opts);
    } catch (const PreconditionError& e) {
      stats.warnings.push_back(e.what());
      return fail("strip-precondition");
    } catch (const SearchExhausted&) {
      return fail("strip-budget");
    }
    if (!comp) return fail("no-strip-decomposition");
    auto conv = strips_to_line_graph(g, *comp, ts);
    if (!conv) return fail("strip-conversion-self-check");
    if (cfg_.debug_level >= 2) {
      auto a = oracle_ordered_path(g, ts, cfg_.budget).verdict;
      auto b = oracle_ordered_path(conv->graph, conv->terminals, cfg_.budget).verdict;
      audit(stats, a == Verdict::Exhausted || b == Verdict::Exhausted || a == b, "strip-conversion-preservation");
    }
    stats.dispatch["strips"]++;
    auto r = solve_line_graph(conv->graph, conv->terminals, cfg_.budget);
    if (r.verdict == Verdict::Yes) return yes(*r.witness, trace, std::move(stats));
    if (r.verdict == Verdict::Exhausted) return fallback(inst, trace, std::move(stats), "line-graph-budget");
    return no(std::move(stats), "strips-no");
  }

  const PipelineConfig& cfg_;
};

bool check_ordered(const Instance& inst, const PathCertificate& cert) {
  const auto& ts = inst.terminals;
  const auto& seq = cert.sequence;
  if (!is_induced_path(inst.graph, cert) || seq.empty()) return false;
  if (seq.front() != ts.front() || seq.back() != ts.back()) return false;
  std::size_t next = 0;
  for (VertexId v : seq)
    if (next < ts.size() && v == ts[next]) ++next;
  return next == ts.size();
}

bool contains_all(std::span<const VertexId> seq, std::span<const VertexId> ts) {
  for (VertexId t : ts)
    if (std::find(seq.begin(), seq.end(), t) == seq.end()) return false;
  return true;
}

void warn_large_k(Answer& a, std::size_t k, const PipelineConfig& cfg) {
  if (k > cfg.max_k)
    a.stats.warnings.push_back("k = " + std::to_string(k) + " exceeds " + std::to_string(cfg.max_k) +
                               "; running time grows quickly with k");
}

// Claw check shared by the variants. Returns true when the oracle must answer.
bool route_to_oracle(const Instance& inst, const PipelineConfig& cfg) {
  if (cfg.oracle_only) return true;
  if (auto claw = find_claw(inst.graph)) {
    if (cfg.force_oracle) return true;
    throw NotClawFree(claw->center, claw->leaves);
  }
  return false;
}

}  // namespace

Answer solve_ordered(const Instance& inst, const PipelineConfig& cfg) {
  inst.validate();
  Instance origin = inst;
  origin.variant = Variant::OrderedPath;
  if (route_to_oracle(origin, cfg)) return solve_by_oracle(origin, cfg.budget);
  Answer a;
  warn_large_k(a, origin.terminals.size(), cfg);
  const auto& ts = origin.terminals;
  const Graph& g = origin.graph;
  std::size_t k = ts.size();
  if (k == 1) {
    a.verdict = Verdict::Yes;
    a.certificate = PathCertificate{{ts[0]}, true};
    return a;
  }
  if (k == 2) {
    a.stats.dispatch["shortest-path"]++;
    if (auto p = shortest_path(g, ts[0], ts[1], g.vertex_set())) {
      a.verdict = Verdict::Yes;
      a.certificate = PathCertificate{*p, true};
    }
    return a;
  }
  if (k == 3) {
    a.stats.dispatch["oracle-k3"]++;
    auto r = oracle_ordered_path(g, ts, cfg.budget);
    a.verdict = r.verdict;
    a.certificate = r.witness;
    return a;
  }
  Pipeline p(cfg);
  Outcome o;
  {
    Timer tm(a.stats, "total");
    o = p.simplify_and_solve(origin, ReductionTrace{origin, {}}, 0);
  }
  a.stats.merge(o.stats);
  a.verdict = o.verdict;
  if (o.verdict == Verdict::Yes) {
    if (!check_ordered(origin, *o.cert)) throw std::logic_error("pipeline certificate fails verification");
    a.certificate = std::move(o.cert);
    a.trace = std::move(o.trace);
  }
  return a;
}

Answer solve_k_in_a_path(const Instance& inst, const PipelineConfig& cfg) {
  inst.validate();
  Instance base = inst;
  base.variant = Variant::Path;
  if (route_to_oracle(base, cfg)) return solve_by_oracle(base, cfg.budget);
  Answer out;
  warn_large_k(out, base.terminals.size(), cfg);
  std::vector<VertexId> perm = base.terminals;
  std::sort(perm.begin(), perm.end());
  PipelineConfig quiet = cfg;
  quiet.max_k = std::max(cfg.max_k, perm.size());
  do {
    // A path read backwards visits the terminals in reverse order.
    if (perm.size() >= 2 && perm.front() > perm.back()) continue;
    Answer a = solve_ordered(Instance{base.graph, perm, Variant::OrderedPath}, quiet);
    out.stats.merge(a.stats);
    out.verdict = combine(out.verdict, a.verdict);
    if (a.verdict == Verdict::Yes) {
      out.certificate = a.certificate;
      out.certificate->oriented = false;
      out.trace = std::move(a.trace);
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Answer solve_induced_disjoint_paths(const Instance& inst, const PipelineConfig& cfg) {
  inst.validate();
  if (inst.variant != Variant::DisjointPaths) throw InputError("expected a disjoint-paths instance");
  if (route_to_oracle(inst, cfg)) return solve_by_oracle(inst, cfg.budget);
  Answer out;
  warn_large_k(out, inst.terminals.size() / 2, cfg);
  auto red = disjoint_paths_to_ordered(inst);
  if (!red) {
    out.stats.dispatch["cross-pair-adjacent"]++;
    return out;
  }
  PipelineConfig quiet = cfg;
  quiet.max_k = std::max(cfg.max_k, red->ordered.terminals.size());
  Answer a = solve_ordered(red->ordered, quiet);
  out.stats.merge(a.stats);
  out.verdict = a.verdict;
  if (a.verdict != Verdict::Yes) return out;
  out.paths = split_at_connectors(*red, *a.certificate);
  ReductionTrace t = red->trace;
  if (a.trace) t.append(*a.trace);
  out.trace = std::move(t);
  if (!verify(inst, out)) throw std::logic_error("disjoint-paths certificate fails verification");
  return out;
}

Answer solve_induced_cycle(const Instance& inst, const PipelineConfig& cfg) {
  inst.validate();
  if (inst.terminals.size() < 2) throw InputError("the cycle variant needs at least two terminals");
  Instance base = inst;
  base.variant = Variant::Cycle;
  if (route_to_oracle(base, cfg)) return solve_by_oracle(base, cfg.budget);
  Answer out;
  warn_large_k(out, base.terminals.size(), cfg);
  auto branches = cycle_to_disjoint_paths(base);
  out.stats.branches += branches.size();
  PipelineConfig quiet = cfg;
  quiet.max_k = std::max<std::size_t>(cfg.max_k, 2 * base.terminals.size());
  for (const auto& br : branches) {
    std::vector<VertexId> seq;
    if (br.disjoint.terminals.empty()) {
      seq = assemble_cycle(br, {});
      if (!is_induced_cycle(base.graph, seq)) continue;
      out.stats.dispatch["cycle-direct"]++;
    } else {
      Answer a = solve_induced_disjoint_paths(br.disjoint, quiet);
      out.stats.merge(a.stats);
      out.verdict = combine(out.verdict, a.verdict);
      if (a.verdict != Verdict::Yes) continue;
      seq = assemble_cycle(br, a.paths);
      if (!is_induced_cycle(base.graph, seq)) throw std::logic_error("assembled cycle is not induced");
    }
    out.verdict = Verdict::Yes;
    out.cycle = std::move(seq);
    return out;
  }
  return out;
}

Answer solve(const Instance& inst, const PipelineConfig& cfg) {
  switch (inst.variant) {
    case Variant::OrderedPath: return solve_ordered(inst, cfg);
    case Variant::Path: return solve_k_in_a_path(inst, cfg);
    case Variant::DisjointPaths: return solve_induced_disjoint_paths(inst, cfg);
    case Variant::Cycle: return solve_induced_cycle(inst, cfg);
  }
  throw InputError("unknown variant");
}

Answer solve_by_oracle(const Instance& inst, const OracleBudget& budget) {
  inst.validate();
  Answer a;
  a.stats.dispatch["oracle"]++;
  switch (inst.variant) {
    case Variant::OrderedPath: {
      auto r = oracle_ordered_path(inst.graph, inst.terminals, budget);
      a.verdict = r.verdict;
      a.certificate = r.witness;
      break;
    }
    case Variant::Path: {
      auto r = oracle_k_in_a_path(inst.graph, inst.terminals, budget);
      a.verdict = r.verdict;
      a.certificate = r.witness;
      break;
    }
    case Variant::DisjointPaths: {
      auto pairs = inst.pairs();
      auto r = oracle_disjoint_paths(inst.graph, pairs, budget);
      a.verdict = r.verdict;
      if (r.witness) a.paths = *r.witness;
      break;
    }
    case Variant::Cycle: {
      auto r = oracle_induced_cycle(inst.graph, inst.terminals, budget);
      a.verdict = r.verdict;
      if (r.witness) a.cycle = *r.witness;
      break;
    }
  }
  return a;
}

bool verify(const Instance& inst, const Answer& a) {
  if (a.verdict != Verdict::Yes) return !a.certificate && a.paths.empty() && a.cycle.empty();
  switch (inst.variant) {
    case Variant::OrderedPath:
      return a.certificate && check_ordered(inst, *a.certificate);
    case Variant::Path:
      return a.certificate && is_induced_path(inst.graph, *a.certificate) &&
             contains_all(a.certificate->sequence, inst.terminals);
    case Variant::DisjointPaths: {
      auto pairs = inst.pairs();
      if (a.paths.size() != pairs.size()) return false;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& seq = a.paths[i].sequence;
        if (!is_induced_path(inst.graph, a.paths[i])) return false;
        if (seq.front() != pairs[i].first || seq.back() != pairs[i].second) return false;
      }
      return are_mutually_induced(inst.graph, a.paths);
    }
    case Variant::Cycle:
      return is_induced_cycle(inst.graph, a.cycle) && contains_all(a.cycle, inst.terminals);
  }
  return false;
}

}  // namespace clawpath
