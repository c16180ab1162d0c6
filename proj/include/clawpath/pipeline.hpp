#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/reductions.hpp"
#include "clawpath/search.hpp"

namespace clawpath {

struct PipelineConfig {
  OracleBudget budget{};  // applied to each search separately
  // 0: none; 1: structural postconditions after Steps 2-4; 2: also oracle
  // equivalence before and after every reduction.
  int debug_level = 0;
  bool strip_construction = true;
  std::size_t window = 6;
  std::uint64_t seed = 0;
  bool shuffle_branches = false;  // evaluate Step 1 branches in a seeded random order
  std::size_t parallel_branches = 1;
  std::size_t max_k = 6;  // larger k only produces a warning
  bool oracle_only = false;
  bool force_oracle = false;  // accept graphs with claws and answer them by oracle
  // Called with "step1".."step4" and the branch instance after that step.
  std::function<void(const std::string&, const Instance&)> observer;
};

struct Stats {
  std::map<std::string, std::uint64_t> dispatch;   // leaf solver -> uses
  std::map<std::string, std::uint64_t> fallbacks;  // reason -> oracle fallbacks
  std::map<std::string, std::uint64_t> reductions; // reduction applied -> count
  std::map<std::string, double> seconds;           // step -> wall time
  std::uint64_t branches = 0;
  std::uint64_t discarded = 0;
  std::uint64_t audits = 0;
  std::map<std::string, std::uint64_t> audit_failures;
  std::vector<std::string> warnings;

  std::uint64_t fallback_count() const;
  std::uint64_t audit_failure_count() const;
  void merge(const Stats& o);
};

struct Answer {
  Verdict verdict = Verdict::No;
  std::optional<PathCertificate> certificate;  // ordered-path and path variants
  std::vector<PathCertificate> paths;           // disjoint-paths variant
  std::vector<VertexId> cycle;                  // cycle variant, cyclic order
  std::optional<ReductionTrace> trace;          // the branch that produced the certificate
  Stats stats;
};

// Throws NotClawFree on claw input unless cfg.force_oracle.
Answer solve_ordered(const Instance& inst, const PipelineConfig& cfg = {});
Answer solve_k_in_a_path(const Instance& inst, const PipelineConfig& cfg = {});
Answer solve_induced_disjoint_paths(const Instance& inst, const PipelineConfig& cfg = {});
Answer solve_induced_cycle(const Instance& inst, const PipelineConfig& cfg = {});
// Dispatches on inst.variant; honours oracle_only and force_oracle.
Answer solve(const Instance& inst, const PipelineConfig& cfg = {});
Answer solve_by_oracle(const Instance& inst, const OracleBudget& budget = {});

// Re-checks the answer's certificate against the original instance. A yes
// without a valid certificate fails; other verdicts pass when they carry none.
bool verify(const Instance& inst, const Answer& answer);

}  // namespace clawpath
