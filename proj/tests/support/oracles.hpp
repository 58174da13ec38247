#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Graph container and work on dense adjacency matrices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bipart/graph.hpp"

namespace bipart::oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) m[u][v] = g.has_edge(u, v);
  }
  return m;
}

inline std::uint32_t closed_mask(const Matrix& m, std::size_t v) {
  std::uint32_t out = 1U << v;
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (m[v][u]) out |= 1U << u;
  }
  return out;
}

inline std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t out = 0;
  for (Vertex v : s) out |= 1U << v;
  return out;
}

// Smallest dominating set size by trying every subset (n <= 20).
inline std::size_t gamma(const Graph& g) {
  const Matrix m = matrix(g);
  const std::size_t n = g.order();
  const std::uint32_t all = n == 0 ? 0 : (1U << n) - 1;
  std::size_t best = n;
  for (std::uint32_t s = 0; s <= all; ++s) {
    std::uint32_t dom = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1U) dom |= closed_mask(m, v);
    }
    if (dom == all) best = std::min<std::size_t>(best, std::popcount(s));
    if (s == all) break;
  }
  return best;
}

inline bool dominates(const Graph& g, std::uint32_t s) {
  const Matrix m = matrix(g);
  std::uint32_t dom = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1U) dom |= closed_mask(m, v);
  }
  return dom == (g.order() == 0 ? 0 : (1U << g.order()) - 1);
}

// Smallest vertex cover by trying every subset.
inline std::size_t beta(const Graph& g) {
  const std::size_t n = g.order();
  const std::uint32_t all = n == 0 ? 0 : (1U << n) - 1;
  std::size_t best = n;
  for (std::uint32_t s = 0; s <= all; ++s) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!((s >> e.u) & 1U) && !((s >> e.v) & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min<std::size_t>(best, std::popcount(s));
    if (s == all) break;
  }
  return best;
}

// Vertex cover size on adjacency masks (n <= 32): a vertex of largest degree
// is either in the cover or all its neighbours are.
inline std::size_t beta_masks(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  int best_v = -1;
  int best_d = 0;
  for (std::uint32_t rest = alive; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
    if (d > best_d) {
      best_d = d;
      best_v = v;
    }
  }
  if (best_v < 0) return 0;
  const std::uint32_t nbrs = adj[static_cast<std::size_t>(best_v)] & alive;
  const std::size_t take = 1 + beta_masks(adj, alive & ~(1U << best_v));
  if (best_d == 1) return take;  // a lone edge: either endpoint will do
  const std::size_t skip =
      static_cast<std::size_t>(best_d) + beta_masks(adj, alive & ~nbrs & ~(1U << best_v));
  return std::min(take, skip);
}

inline std::size_t beta_branching(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  return beta_masks(adj, g.order() == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << g.order()) - 1));
}

// Largest matching by branching on the first edge.
inline std::size_t matching(const std::vector<Edge>& edges, std::size_t from = 0,
                            std::uint32_t used = 0) {
  std::size_t best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (((used >> e.u) & 1U) || ((used >> e.v) & 1U)) continue;
    best = std::max(best, 1 + matching(edges, i + 1, used | (1U << e.u) | (1U << e.v)));
  }
  return best;
}

// All-pairs distances by Floyd-Warshall; max() marks unreachable.
inline std::vector<std::vector<std::size_t>> distances(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= inf) x = std::numeric_limits<std::size_t>::max();
    }
  }
  return d;
}

inline bool two_colorable(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint32_t c = 0; c < (1U << n); ++c) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (((c >> e.u) & 1U) == ((c >> e.v) & 1U)) ok = false;
    }
    if (ok) return true;
  }
  return n == 0;
}

inline bool connected_mask(const Graph& g, std::uint32_t keep) {
  if (keep == 0) return false;
  std::uint32_t seen = keep & (~keep + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges()) {
      const std::uint32_t both = (1U << e.u) | (1U << e.v);
      if ((both & keep) != both) continue;
      if ((seen & both) && (seen & both) != both) {
        seen |= both;
        grew = true;
      }
    }
  }
  return seen == keep;
}

// Vertex sets that induce a maximal connected subgraph with no cut vertex
// (maximal 2-connected sets, bridges, isolated vertices).
inline std::vector<std::uint32_t> blocks(const Graph& g) {
  const std::size_t n = g.order();
  auto biconnected = [&](std::uint32_t s) {
    if (!connected_mask(g, s)) return false;
    if (std::popcount(s) <= 2) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (((s >> v) & 1U) && !connected_mask(g, s & ~(1U << v))) return false;
    }
    return true;
  };
  std::vector<std::uint32_t> good;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (biconnected(s)) good.push_back(s);
  }
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t s : good) {
    bool is_max = true;
    for (std::uint32_t t : good) {
      if (t != s && (s & t) == s) is_max = false;
    }
    if (is_max) maximal.push_back(s);
  }
  return maximal;
}

inline bool is_clique_mask(const Graph& g, std::uint32_t s) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      if (((s >> i) & 1U) && ((s >> j) & 1U) &&
          !g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        return false;
      }
    }
  }
  return true;
}

inline std::size_t clique_count(const Graph& g) {
  std::size_t count = 0;
  for (std::uint32_t s = 1; s < (1U << g.order()); ++s) count += is_clique_mask(g, s);
  return count;
}

// graph6 decoding for n <= 62 straight from the format description, reading
// one bit at a time.
inline std::optional<Graph> decode_graph6(const std::string& s) {
  if (s.empty() || s[0] < 63 || s[0] > 125) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(s[0] - 63);
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    if (x < 0 || x > 63) return std::nullopt;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  const std::size_t need = n * (n - (n ? 1 : 0)) / 2;
  if (bits.size() != 6 * ((need + 5) / 6)) return std::nullopt;
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits[k++]) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < bits.size(); ++k) {
    if (bits[k]) return std::nullopt;
  }
  return g;
}

// Labeled graphs on n vertices by brute force over all edge subsets.
inline std::size_t count_graphs(std::size_t n, bool connected, bool bipartite) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.push_back({i, j});
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) g.add_edge(pairs[k].u, pairs[k].v);
    }
    if (connected && !connected_mask(g, n == 0 ? 0 : (1U << n) - 1)) continue;
    if (bipartite && !two_colorable(g)) continue;
    ++count;
  }
  return count;
}

}  // namespace bipart::oracle
