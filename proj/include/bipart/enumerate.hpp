#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "bipart/graph.hpp"

namespace bipart {

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxTreeOrder = 12;

// Candidate k belongs to this shard when k % count == index.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
  bool owns(std::uint64_t k) const { return count <= 1 || k % count == index; }
};

struct GraphFilter {
  bool connected_only = false;
  bool bipartite_only = false;
};

// Every labeled simple graph on n vertices exactly once, in deterministic
// order. Without the bipartite filter the order is by adjacency bit mask, bit k
// being the k-th pair of the graph6 column-major order. With it, the
// enumeration runs over vertex-0-rooted side splits and cross-edge subsets.
// SizeLimitError for n > kMaxEnumerationOrder. Returns the number visited.
std::uint64_t for_each_labeled_graph(std::size_t n, GraphFilter filter,
                                     const std::function<void(const Graph&)>& visit,
                                     Shard shard = {});

// Every labeled tree on n vertices (n^(n-2) of them for n >= 2) via Prufer
// decoding in lexicographic sequence order. SizeLimitError beyond
// kMaxTreeOrder.
std::uint64_t for_each_labeled_tree(std::size_t n,
                                    const std::function<void(const Graph&)>& visit,
                                    Shard shard = {});

// Tree from a Prufer sequence over {0..n-1}, n = seq.size() + 2.
Graph prufer_decode(const std::vector<Vertex>& seq);

// G(n, p) conditioned on connectivity by rejection.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace bipart
