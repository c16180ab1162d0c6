#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/oracles.hpp"
#include "clawpath/recognizers.hpp"
#include "clawpath/search.hpp"

namespace clawpath {

enum class StepKind {
  Simplify,
  Clean,
  RemoveC5Apexes,
  ContractHomogeneousClique,
  ReduceHomogeneousPair,
  CompleteNeighborhoods,
  AddConnectors,
};
const char* to_string(StepKind k);

// One transformation. Replay order: delete `removed`, add `added_vertices`,
// add `added_edges`, then install `terminals`.
struct TraceStep {
  StepKind kind = StepKind::Simplify;
  std::vector<VertexId> removed;
  std::vector<VertexId> added_vertices;  // synthetic
  std::vector<Edge> added_edges;
  std::vector<VertexId> terminals;
  std::optional<Variant> variant;  // set when the step changes the problem variant
  // Vertices prepended / appended to a certificate when mapping it back.
  std::vector<VertexId> lift_prefix;
  std::vector<VertexId> lift_suffix;
  std::string note;
};

struct ReductionTrace {
  Instance origin;
  std::vector<TraceStep> steps;

  Instance replay() const;
  // Maps an ordered-path certificate of the reduced instance back to origin.
  PathCertificate lift(const PathCertificate& reduced) const;
  void append(const ReductionTrace& later);  // later.origin must equal replay()
};

// ---- Step 1 ----

struct SimplifyOptions {
  std::size_t window = 6;  // guessed vertices per long segment end; >= 3
  OracleBudget budget{20'000'000, std::chrono::seconds(60)};
};

struct SimpleBranch {
  Instance instance;
  ReductionTrace trace;
};

struct Simplification {
  std::vector<SimpleBranch> branches;
  // Set when the guessing found a solution made only of short segments.
  std::optional<PathCertificate> short_solution;
  std::size_t discarded = 0;
};

// Ordered-path instance, k >= 2. The origin has a solution iff short_solution
// is set or some branch has one. Throws SearchExhausted.
Simplification make_simple_instances(const Instance& inst, const SimplifyOptions& opts = {});

// Empty string when simple, otherwise the first violated condition.
std::string simplicity_violation(const Instance& inst);
inline bool is_simple(const Instance& inst) { return simplicity_violation(inst).empty(); }

// ---- Steps 2 to 4 ----

struct Removal {
  Graph graph;
  VertexSet removed;
};

// Deletes irrelevant vertices, ascending id, restarting after each deletion.
Removal clean(const Graph& g, VertexId s, VertexId t,
              const IrrelevanceTester& tester = OracleIrrelevanceTester{},
              const OracleBudget& budget = {});

// Deletes vertices whose neighbourhood holds an induced C5 until none do.
// Throws PreconditionError if a terminal qualifies or, with terminals given,
// if a deletion disconnects a connected graph.
Removal remove_c5_apexes(const Graph& g, std::span<const VertexId> terminals = {});

struct CliqueContraction {
  Instance instance;
  std::vector<TraceStep> steps;
};
// Keeps the smallest vertex of each homogeneous clique found.
// Throws PreconditionError if a homogeneous clique holds a terminal.
CliqueContraction contract_homogeneous_cliques(const Instance& inst);

struct PairReduction {
  Instance instance;
  TraceStep step;
  char which = 'e';  // case letter a..e
};
// Ordered-path instance on a simple quasi-line graph.
PairReduction reduce_homogeneous_pair(const Instance& inst, const HomogeneousPairWitness& w);

// ---- variant reductions ----

enum class GapKind { Direct, Single, Pair };
struct CycleGap {
  GapKind kind = GapKind::Direct;
  VertexId a = 0;  // Single: the shared neighbour; Pair: the neighbour of the earlier terminal
  VertexId b = 0;  // Pair: the neighbour of the later terminal
};

struct CycleBranch {
  std::vector<VertexId> order;  // cyclic terminal order, order[0] fixed
  std::vector<CycleGap> gaps;   // gaps[i] joins order[i] and order[i+1 mod k]
  Instance disjoint;            // pairs for the Pair gaps, in gap order
};

// Throws PreconditionError for fewer than two terminals. A terminal of degree
// below two yields no branches.
std::vector<CycleBranch> cycle_to_disjoint_paths(const Instance& inst);
// Splices paths solving branch.disjoint into the cyclic vertex sequence.
std::vector<VertexId> assemble_cycle(const CycleBranch& branch, std::span<const PathCertificate> paths);

struct OrderedFromDisjoint {
  Instance ordered;
  ReductionTrace trace;
  std::vector<VertexId> connectors;  // c_1..c_{k-1}
};
// nullopt when two terminals of different pairs are adjacent (no solution).
std::optional<OrderedFromDisjoint> disjoint_paths_to_ordered(const Instance& inst);
// Cuts an ordered certificate of the reduced instance into the k paths.
std::vector<PathCertificate> split_at_connectors(const OrderedFromDisjoint& red, const PathCertificate& cert);

}  // namespace clawpath
