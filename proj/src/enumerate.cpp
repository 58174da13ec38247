#include "bipart/enumerate.hpp"

#include <array>
#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

using Pair = std::pair<Vertex, Vertex>;

std::vector<Pair> column_major_pairs(std::size_t n) {
  std::vector<Pair> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

// Adjacency rows as small masks; n <= 8 fits in a byte but a word is simpler.
using Rows = std::array<std::uint32_t, kMaxEnumerationOrder>;

Rows rows_of(const std::vector<Pair>& pairs, std::uint64_t mask) {
  Rows rows{};
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) {
      rows[pairs[k].first] |= 1U << pairs[k].second;
      rows[pairs[k].second] |= 1U << pairs[k].first;
    }
  }
  return rows;
}

bool rows_connected(const Rows& rows, std::size_t n) {
  if (n == 0) return false;
  const std::uint32_t all = (1U << n) - 1;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      next |= rows[std::countr_zero(f)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

Graph graph_of(std::size_t n, const std::vector<Pair>& pairs, std::uint64_t mask) {
  Graph g(n);
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) g.add_edge(pairs[k].first, pairs[k].second);
  }
  return g;
}

void check_limit(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(n) +
                         " exceeds limit " + std::to_string(limit));
  }
}

std::uint64_t all_graphs(std::size_t n, bool connected_only,
                         const std::function<void(const Graph&)>& visit, Shard shard) {
  const auto pairs = column_major_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t visited = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!shard.owns(mask)) continue;
    if (connected_only && !rows_connected(rows_of(pairs, mask), n)) continue;
    visit(graph_of(n, pairs, mask));
    ++visited;
  }
  return visited;
}

// Side splits with vertex 0 on side A. A connected bipartite graph has exactly
// one such split; otherwise a graph is kept only for the split that
// bipartition() would return, so nothing is produced twice.
std::uint64_t bipartite_graphs(std::size_t n, bool connected_only,
                               const std::function<void(const Graph&)>& visit,
                               Shard shard) {
  if (n == 0) {
    if (connected_only || !shard.owns(0)) return 0;
    visit(Graph(0));
    return 1;
  }
  std::uint64_t candidate = 0;
  std::uint64_t visited = 0;
  const std::uint32_t rest = (1U << n) - 2;
  // Iterate the subsets of {1..n-1} placed on side A, in increasing order.
  for (std::uint32_t extra = 0;; extra = (extra - rest) & rest) {
    const std::uint32_t a_mask = extra | 1U;
    std::vector<Pair> cross;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (((a_mask >> i) & 1U) != ((a_mask >> j) & 1U)) cross.emplace_back(i, j);
      }
    }
    const std::uint64_t total = std::uint64_t{1} << cross.size();
    for (std::uint64_t mask = 0; mask < total; ++mask, ++candidate) {
      if (!shard.owns(candidate)) continue;
      const Rows rows = rows_of(cross, mask);
      if (connected_only) {
        if (!rows_connected(rows, n)) continue;
      } else {
        // The canonical split puts the smallest vertex of every component on
        // side A; check it component by component.
        bool canonical = true;
        std::uint32_t unseen = (1U << n) - 1;
        while (unseen != 0 && canonical) {
          const std::uint32_t root = unseen & (~unseen + 1);
          std::uint32_t comp = root;
          std::uint32_t frontier = root;
          while (frontier != 0) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
              next |= rows[std::countr_zero(f)];
            }
            frontier = next & ~comp;
            comp |= next;
          }
          canonical = (root & a_mask) != 0;
          unseen &= ~comp;
        }
        if (!canonical) continue;
      }
      visit(graph_of(n, cross, mask));
      ++visited;
    }
    if (extra == rest) break;
  }
  return visited;
}

}  // namespace

std::uint64_t for_each_labeled_graph(std::size_t n, GraphFilter filter,
                                     const std::function<void(const Graph&)>& visit,
                                     Shard shard) {
  check_limit(n, kMaxEnumerationOrder, "graph enumeration");
  if (filter.bipartite_only) {
    return bipartite_graphs(n, filter.connected_only, visit, shard);
  }
  return all_graphs(n, filter.connected_only, visit, shard);
}

Graph prufer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw InputError("Prufer entry " + std::to_string(v) + " out of range");
    ++degree[v];
  }
  Graph g(n);
  // Linear-time decoding: `leaf` is the smallest current leaf, `ptr` the
  // scan position for the next fresh one.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : seq) {
    g.add_edge(static_cast<Vertex>(leaf), v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  g.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return g;
}

std::uint64_t for_each_labeled_tree(std::size_t n,
                                    const std::function<void(const Graph&)>& visit,
                                    Shard shard) {
  check_limit(n, kMaxTreeOrder, "tree enumeration");
  if (n == 0) return 0;
  if (n <= 2) {
    if (!shard.owns(0)) return 0;
    Graph g(n);
    if (n == 2) g.add_edge(0, 1);
    visit(g);
    return 1;
  }
  std::vector<Vertex> seq(n - 2, 0);
  std::uint64_t index = 0;
  std::uint64_t visited = 0;
  while (true) {
    if (shard.owns(index)) {
      visit(prufer_decode(seq));
      ++visited;
    }
    ++index;
    std::size_t pos = seq.size();
    while (pos > 0 && seq[pos - 1] == n - 1) seq[--pos] = 0;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return visited;
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  if (n == 0) throw InputError("random graph needs at least one vertex");
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (coin(rng)) g.add_edge(i, j);
      }
    }
    if (is_connected(g)) return g;
  }
}

}  // namespace bipart
