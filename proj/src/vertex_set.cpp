#include "bipart/vertex_set.hpp"

#include <ostream>

namespace bipart {

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  if (n >= 64) {
    s.lo_ = ~std::uint64_t{0};
  } else {
    s.lo_ = (std::uint64_t{1} << n) - 1;
    return s;
  }
  std::size_t rest = n - 64;
  while (rest > 0) {
    const std::size_t take = std::min<std::size_t>(rest, 64);
    s.hi_.push_back(take == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << take) - 1);
    rest -= take;
  }
  return s;
}

Vertex VertexSet::back() const {
  for (std::size_t i = word_count(); i-- > 0;) {
    const std::uint64_t w = word(i);
    if (w != 0) return static_cast<Vertex>(i * 64 + 63 - std::countl_zero(w));
  }
  return 0;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const std::size_t n = std::max(a.word_count(), b.word_count());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t diff = a.word(i) ^ b.word(i);
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    const Vertex m = static_cast<Vertex>(i * 64 + std::countr_zero(diff));
    const bool a_owns = (a.word(i) & low) != 0;
    const VertexSet& other = a_owns ? b : a;
    // The set holding m is smaller unless the other one stops before m.
    const bool other_continues = !other.empty() && other.back() > m;
    return a_owns ? other_continues : !other_continues;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace bipart
