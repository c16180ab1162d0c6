#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clawpath/graph.hpp"
#include "clawpath/strips.hpp"

namespace clawpath {

using Rng = std::mt19937_64;

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center 0
Graph wheel_graph(std::size_t rim);    // hub 0, rim 1..rim
Graph petersen_graph();
Graph icosahedron_graph();
Graph grid_graph(std::size_t rows, std::size_t cols);

// L(root) with line vertex i = i-th edge of root.edges().
Graph line_graph_of(const Graph& root);

Graph random_gnp(std::size_t n, double p, Rng& rng);
// Line graph of a random simple root graph with `root_vertices` vertices.
Graph random_line_graph(std::size_t root_vertices, double p, Rng& rng);
// Points 0..n-1 on a line (or circle) covered by random intervals (arcs);
// adjacency = sharing an interval. The result is connected when `connected`.
Graph random_proper_interval(std::size_t n, Rng& rng, bool connected = true);
Graph random_proper_circular(std::size_t n, Rng& rng);
// Random composition of linear interval strips; `compose()` yields the graph.
StripComposition random_strip_composition(std::size_t strips, std::size_t max_interior, Rng& rng);

enum class Family { LineGraph, ProperInterval, ProperCircular, StripComposition };
const char* to_string(Family f);

// A connected claw-free graph of the family with at most max_n vertices.
Graph random_family_graph(Family f, std::size_t max_n, Rng& rng);

// Graphs with long induced paths, so that Step 1 produces long segments.
// Line graph of a 2 x length ladder with random rungs and a few pendant edges.
Graph random_ladder_line_graph(std::size_t length, Rng& rng);
// k vertices spaced evenly along a diametral shortest path (an induced path);
// with probability `shuffle` the interior ones are permuted.
std::vector<VertexId> spread_terminals(const Graph& g, std::size_t k, Rng& rng, double shuffle = 0.5);

// k terminals: with probability `planted` they are read off a random induced
// path (so the ordered answer is yes), otherwise chosen uniformly.
std::vector<VertexId> random_terminals(const Graph& g, std::size_t k, Rng& rng, double planted = 0.5);
// A random induced path with at least `min_len` vertices, or empty.
std::vector<VertexId> random_induced_path(const Graph& g, std::size_t min_len, Rng& rng);

}  // namespace clawpath
