#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawpath/graph.hpp"

namespace clawpath {

// Exact rational, always normalised with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  std::string to_string() const;  // "p/q"
  static Rational parse(const std::string& s);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

enum class Flavor { Linear, Circular };

// On a circle, an interval runs clockwise from lo to hi and may wrap past zero.
struct Interval {
  Rational lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalRepresentation {
  Flavor flavor = Flavor::Linear;
  std::vector<std::pair<VertexId, Rational>> positions;  // sorted by vertex id
  std::vector<Interval> intervals;
  Rational circumference{0};  // circular flavour only; points lie in [0, circumference)

  std::optional<Rational> position(VertexId v) const;
  // Vertices sorted by (position, id).
  std::vector<VertexId> order() const;
  bool contains(const Interval& iv, const Rational& p) const;
  // Adjacency implied by "belong to a common interval".
  std::vector<Edge> expand() const;
  // True iff the represented vertex set and adjacency match g exactly.
  bool represents(const Graph& g) const;

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

// Proper-interval ordering test: for i<j<k, v_i~v_k implies v_i~v_j and v_j~v_k.
bool is_umbrella_free(const Graph& g, const std::vector<VertexId>& order);
// Circular analogue: every edge has a clique arc between its ends.
bool is_circular_umbrella_free(const Graph& g, const std::vector<VertexId>& order);

// Canonical representations built from a valid ordering (positions 0,1,2,...).
IntervalRepresentation linear_representation(const Graph& g, const std::vector<VertexId>& order);
IntervalRepresentation circular_representation(const Graph& g, const std::vector<VertexId>& order);

}  // namespace clawpath
