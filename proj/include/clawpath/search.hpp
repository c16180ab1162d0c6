#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "clawpath/errors.hpp"

namespace clawpath {

enum class Verdict { Yes, No, Exhausted };
const char* to_string(Verdict v);

struct OracleBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

// Counts search-tree nodes against a budget; throws SearchExhausted when over.
class SearchMeter {
 public:
  explicit SearchMeter(const OracleBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void tick() {
    if (++nodes_ > budget_.max_nodes) throw SearchExhausted();
    if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_limit)
      throw SearchExhausted("search time limit reached");
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

template <typename T>
struct SearchResult {
  Verdict verdict = Verdict::No;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  static SearchResult yes(T w, std::uint64_t n = 0) { return {Verdict::Yes, std::move(w), n}; }
  static SearchResult no(std::uint64_t n = 0) { return {Verdict::No, std::nullopt, n}; }
  static SearchResult exhausted(std::uint64_t n = 0) { return {Verdict::Exhausted, std::nullopt, n}; }
};

}  // namespace clawpath
