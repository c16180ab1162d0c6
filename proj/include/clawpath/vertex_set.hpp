#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace clawpath {

using VertexId = std::uint32_t;

// Dynamic bitset keyed by VertexId. Binary operations tolerate operands of
// different capacities; missing words read as zero.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0) {}
  VertexSet(std::size_t capacity, std::initializer_list<VertexId> ids) : VertexSet(capacity) {
    for (VertexId v : ids) insert(v);
  }
  template <typename Range>
  static VertexSet of(std::size_t capacity, const Range& ids) {
    VertexSet s(capacity);
    for (VertexId v : ids) s.insert(v);
    return s;
  }

  std::size_t capacity() const { return words_.size() * 64; }

  void insert(VertexId v) {
    grow(v + 1);
    words_[v >> 6] |= bit(v);
  }
  void erase(VertexId v) {
    if ((v >> 6) < words_.size()) words_[v >> 6] &= ~bit(v);
  }
  bool contains(VertexId v) const {
    return (v >> 6) < words_.size() && (words_[v >> 6] & bit(v)) != 0;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  // Smallest member >= from, or npos.
  static constexpr VertexId npos = ~VertexId{0};
  VertexId next(VertexId from) const {
    std::size_t wi = from >> 6;
    if (wi >= words_.size()) return npos;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<VertexId>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }
  VertexId first() const { return next(0); }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;
    iterator() = default;
    iterator(const VertexSet* s, VertexId v) : s_(s), v_(v) {}
    VertexId operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* s_ = nullptr;
    VertexId v_ = npos;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, npos}; }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

  VertexSet& operator|=(const VertexSet& o) {
    grow(o.words_.size() * 64);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~ow) return false;
    }
    return true;
  }
  std::size_t intersection_size(const VertexSet& o) const {
    std::size_t m = std::min(words_.size(), o.words_.size()), c = 0;
    for (std::size_t i = 0; i < m; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    std::size_t m = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
      std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }
  // Lexicographic by sorted member list; usable as a map key.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.to_vector() < b.to_vector();
  }

 private:
  static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << (v & 63); }
  void grow(std::size_t capacity) {
    std::size_t need = (capacity + 63) / 64;
    if (need > words_.size()) words_.resize(need, 0);
  }
  std::vector<std::uint64_t> words_;
};

}  // namespace clawpath
