#pragma once

#include <cstddef>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/interval.hpp"

namespace clawpath {

// A linear interval strip (S', a', b'). `graph` holds the interior vertices
// under their ids in the composed graph plus the two synthetic ends.
struct Strip {
  Graph graph;
  VertexId end_a = 0;
  VertexId end_b = 0;
  IntervalRepresentation rep;  // linear; end_a leftmost, end_b rightmost

  std::vector<VertexId> interior() const;
  VertexSet side_a() const { return graph.neighbors(end_a); }
  VertexSet side_b() const { return graph.neighbors(end_b); }
};

// Base vertices are numbered by end index: strip i owns a_i = 2i and b_i = 2i+1.
// base_cliques partitions these indices; S_0 is the disjoint union of those cliques.
struct StripComposition {
  std::vector<Strip> strips;
  std::vector<std::vector<std::size_t>> base_cliques;

  // Applies the gluing rules strip by strip and returns S_n.
  Graph compose() const;
  // Structural checks: ends simplicial and extremal, representations valid, base is a partition.
  bool well_formed() const;
};

}  // namespace clawpath
