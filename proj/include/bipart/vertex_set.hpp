#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace bipart {

using Vertex = std::uint32_t;

// A set of vertex ids with bitset semantics. Ids below 64 are stored inline,
// so sets over small graphs never touch the heap. The overflow words are kept
// trimmed (no trailing zero word), which makes the representation canonical.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* set, std::size_t word) : set_(set), word_(word) {
      load();
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(bits_));
    }
    Iterator& operator++() {
      bits_ &= bits_ - 1;
      if (bits_ == 0) {
        ++word_;
        load();
      }
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& o) const {
      return word_ == o.word_ && bits_ == o.bits_;
    }

   private:
    void load() {
      const std::size_t n = set_->word_count();
      while (word_ < n && (bits_ = set_->word(word_)) == 0) ++word_;
      if (word_ >= n) {
        word_ = n;
        bits_ = 0;
      }
    }

    const VertexSet* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <typename It>
  VertexSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<Vertex>(*first));
  }

  // {0, 1, ..., n-1}
  static VertexSet range(std::size_t n);
  static VertexSet from_word(std::uint64_t bits) {
    VertexSet s;
    s.lo_ = bits;
    return s;
  }

  void insert(Vertex v) {
    if (v < 64) {
      lo_ |= std::uint64_t{1} << v;
      return;
    }
    const std::size_t w = v / 64 - 1;
    if (hi_.size() <= w) hi_.resize(w + 1, 0);
    hi_[w] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) {
    if (v < 64) {
      lo_ &= ~(std::uint64_t{1} << v);
      return;
    }
    const std::size_t w = v / 64 - 1;
    if (w < hi_.size()) {
      hi_[w] &= ~(std::uint64_t{1} << (v % 64));
      trim();
    }
  }

  bool contains(Vertex v) const {
    return (word(v / 64) >> (v % 64)) & 1U;
  }

  std::size_t size() const {
    std::size_t n = static_cast<std::size_t>(std::popcount(lo_));
    for (auto w : hi_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const { return lo_ == 0 && hi_.empty(); }

  // Smallest and largest member. Precondition: non-empty.
  Vertex front() const { return *begin(); }
  Vertex back() const;

  bool is_subset_of(const VertexSet& other) const {
    if (hi_.size() > other.hi_.size()) return false;
    if (lo_ & ~other.lo_) return false;
    for (std::size_t i = 0; i < hi_.size(); ++i) {
      if (hi_[i] & ~other.hi_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& other) const {
    if (lo_ & other.lo_) return true;
    const std::size_t n = std::min(hi_.size(), other.hi_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (hi_[i] & other.hi_[i]) return true;
    }
    return false;
  }

  VertexSet& operator|=(const VertexSet& other) {
    lo_ |= other.lo_;
    if (hi_.size() < other.hi_.size()) hi_.resize(other.hi_.size(), 0);
    for (std::size_t i = 0; i < other.hi_.size(); ++i) hi_[i] |= other.hi_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) {
    lo_ &= other.lo_;
    if (hi_.size() > other.hi_.size()) hi_.resize(other.hi_.size());
    for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] &= other.hi_[i];
    trim();
    return *this;
  }

  VertexSet& operator-=(const VertexSet& other) {
    lo_ &= ~other.lo_;
    const std::size_t n = std::min(hi_.size(), other.hi_.size());
    for (std::size_t i = 0; i < n; ++i) hi_[i] &= ~other.hi_[i];
    trim();
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, word_count()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::size_t word_count() const { return 1 + hi_.size(); }
  std::uint64_t word(std::size_t i) const {
    if (i == 0) return lo_;
    return i - 1 < hi_.size() ? hi_[i - 1] : 0;
  }
  // Members below 64 as a mask. Callers working with small graphs use this
  // for branch-and-bound inner loops.
  std::uint64_t low_word() const { return lo_; }
  bool fits_in_word() const { return hi_.empty(); }

 private:
  void trim() {
    while (!hi_.empty() && hi_.back() == 0) hi_.pop_back();
  }

  std::uint64_t lo_ = 0;
  std::vector<std::uint64_t> hi_;
};

// Lexicographic order on the ascending member sequences; a proper prefix
// sorts first.
bool lex_less(const VertexSet& a, const VertexSet& b);

// Canonical clique order: by cardinality, then lexicographically.
struct SizeThenLex {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    const std::size_t sa = a.size();
    const std::size_t sb = b.size();
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  }
};

// Prints "{0,2,5}".
std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace bipart
