#pragma once

#include <functional>
#include <span>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/search.hpp"

namespace clawpath {

// Enumerates induced paths that start at terminals.front() and visit the
// terminals in order, ending at terminals.back(), using only vertices of
// `allowed`. Neighbours are explored in ascending id. `visit` returns true to
// stop. Returns true iff stopped by `visit`. Throws SearchExhausted.
bool enumerate_ordered_paths(const Graph& g, std::span<const VertexId> terminals,
                             const VertexSet& allowed, SearchMeter& meter,
                             const std::function<bool(const std::vector<VertexId>&)>& visit);

SearchResult<PathCertificate> oracle_ordered_path(const Graph& g, std::span<const VertexId> terminals,
                                                  const OracleBudget& budget = {});

SearchResult<PathCertificate> oracle_k_in_a_path(const Graph& g, std::span<const VertexId> terminals,
                                                 const OracleBudget& budget = {});

SearchResult<std::vector<PathCertificate>> oracle_disjoint_paths(const Graph& g, std::span<const Edge> pairs,
                                                                 const OracleBudget& budget = {});

// Induced cycle through every terminal, as a cyclic vertex sequence.
SearchResult<std::vector<VertexId>> oracle_induced_cycle(const Graph& g, std::span<const VertexId> terminals,
                                                         const OracleBudget& budget = {});

// Verdict::Yes means v lies on no induced s-t path.
Verdict is_irrelevant(const Graph& g, VertexId s, VertexId t, VertexId v, const OracleBudget& budget = {});

// Swappable irrelevance test used by cleaning. Yes = irrelevant.
class IrrelevanceTester {
 public:
  virtual ~IrrelevanceTester() = default;
  virtual Verdict irrelevant(const Graph& g, VertexId s, VertexId t, VertexId v,
                             const OracleBudget& budget) const = 0;
};

class OracleIrrelevanceTester final : public IrrelevanceTester {
 public:
  Verdict irrelevant(const Graph& g, VertexId s, VertexId t, VertexId v,
                     const OracleBudget& budget) const override {
    return is_irrelevant(g, s, t, v, budget);
  }
};

}  // namespace clawpath
