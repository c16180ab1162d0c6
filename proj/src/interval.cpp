#include "clawpath/interval.hpp"

#include <algorithm>
#include <numeric>

namespace clawpath {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InputError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

Rational Rational::parse(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InputError("malformed rational '" + s + "'");
  }
}

std::optional<Rational> IntervalRepresentation::position(VertexId v) const {
  auto it = std::lower_bound(positions.begin(), positions.end(), v,
                             [](const auto& p, VertexId x) { return p.first < x; });
  if (it == positions.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::vector<VertexId> IntervalRepresentation::order() const {
  auto ps = positions;
  std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::vector<VertexId> out;
  for (auto& [v, p] : ps) out.push_back(v);
  return out;
}

bool IntervalRepresentation::contains(const Interval& iv, const Rational& p) const {
  if (flavor == Flavor::Linear || iv.lo <= iv.hi) return iv.lo <= p && p <= iv.hi;
  return p >= iv.lo || p <= iv.hi;
}

std::vector<Edge> IntervalRepresentation::expand() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      for (const auto& iv : intervals) {
        if (contains(iv, positions[i].second) && contains(iv, positions[j].second)) {
          out.emplace_back(positions[i].first, positions[j].first);
          break;
        }
      }
    }
  }
  return out;
}

bool IntervalRepresentation::represents(const Graph& g) const {
  if (positions.size() != g.order()) return false;
  for (auto& [v, p] : positions)
    if (!g.contains(v)) return false;
  auto es = expand();
  if (es.size() != g.size()) return false;
  for (auto [u, v] : es)
    if (!g.adjacent(u, v)) return false;
  return true;
}

bool is_umbrella_free(const Graph& g, const std::vector<VertexId>& order) {
  // Each vertex's later neighbours must be a contiguous run right after it,
  // and the end of that run must be non-decreasing along the order.
  std::size_t n = order.size();
  std::size_t prev_reach = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t reach = i;
    while (reach + 1 < n && g.adjacent(order[i], order[reach + 1])) ++reach;
    for (std::size_t j = reach + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) return false;
    if (reach < prev_reach) return false;
    prev_reach = reach;
  }
  return true;
}

namespace {
// Length of the longest clockwise clique run starting at position i.
std::size_t clique_run(const Graph& g, const std::vector<VertexId>& order, std::size_t i) {
  std::size_t n = order.size(), len = 0;
  while (len + 1 < n) {
    VertexId next = order[(i + len + 1) % n];
    bool ok = true;
    for (std::size_t l = 0; l <= len && ok; ++l) ok = g.adjacent(order[(i + l) % n], next);
    if (!ok) break;
    ++len;
  }
  return len;
}
}  // namespace

bool is_circular_umbrella_free(const Graph& g, const std::vector<VertexId>& order) {
  std::size_t n = order.size();
  std::vector<std::size_t> run(n);
  for (std::size_t i = 0; i < n; ++i) run[i] = clique_run(g, order, i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(order[i], order[j])) continue;
      if (run[i] >= j - i) continue;
      if (run[j] >= n - (j - i)) continue;
      return false;
    }
  }
  return true;
}

IntervalRepresentation linear_representation(const Graph& g, const std::vector<VertexId>& order) {
  IntervalRepresentation rep;
  rep.flavor = Flavor::Linear;
  std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    rep.positions.emplace_back(order[i], Rational(static_cast<std::int64_t>(i)));
    std::size_t reach = i;
    while (reach + 1 < n && g.adjacent(order[i], order[reach + 1])) ++reach;
    rep.intervals.push_back({Rational(static_cast<std::int64_t>(i)), Rational(static_cast<std::int64_t>(reach))});
  }
  std::sort(rep.positions.begin(), rep.positions.end());
  return rep;
}

IntervalRepresentation circular_representation(const Graph& g, const std::vector<VertexId>& order) {
  IntervalRepresentation rep;
  rep.flavor = Flavor::Circular;
  std::size_t n = order.size();
  rep.circumference = Rational(static_cast<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    rep.positions.emplace_back(order[i], Rational(static_cast<std::int64_t>(i)));
    std::size_t len = clique_run(g, order, i);
    rep.intervals.push_back(
        {Rational(static_cast<std::int64_t>(i)), Rational(static_cast<std::int64_t>((i + len) % n))});
  }
  std::sort(rep.positions.begin(), rep.positions.end());
  return rep;
}

}  // namespace clawpath
