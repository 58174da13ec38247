#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bipart/cliques.hpp"
#include "bipart/graph.hpp"

namespace bipart::testing {

// The paw: a=0, b=1, c=2, d=3 with edges ab, ac, bc, cd.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline CliqueWeighting paw_weights() {
  const Graph h = paw();
  const std::vector<std::pair<VertexSet, std::size_t>> pairs{
      {{0}, 1}, {{1}, 1}, {{2}, 2}, {{0, 1}, 3}, {{1, 2}, 2}, {{2, 3}, 3}, {{0, 1, 2}, 1}};
  return weighting_from_pairs(h, pairs);
}

// Weight 1 on every edge; B_g(H) is the subdivision graph.
inline CliqueWeighting paw_unit_edges() {
  const Graph h = paw();
  CliqueWeighting g(h.order());
  for (const Edge& e : h.edges()) g.assign(h, {e.u, e.v}, 1);
  return g;
}

// An 11-vertex tree. Solid side a=0, b=1, c=2, d=3; hollow side t=4, u=5, v=6,
// w=7, x=8, y=9, z=10.
inline const std::vector<std::string>& tree_names() {
  static const std::vector<std::string> names{"a", "b", "c", "d", "t", "u",
                                              "v", "w", "x", "y", "z"};
  return names;
}

inline Graph sample_tree() {
  return Graph(11, {{8, 0}, {0, 7}, {7, 1}, {1, 10}, {1, 9}, {7, 2}, {2, 5},
                    {5, 3}, {3, 4}, {3, 6}});
}

// H: triangle abc plus the edge cd.
inline Graph tree_solid_h() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

inline CliqueWeighting tree_solid_f() {
  const std::vector<std::pair<VertexSet, std::size_t>> pairs{
      {{0}, 1}, {{1}, 2}, {{3}, 2}, {{2, 3}, 1}, {{0, 1, 2}, 1}};
  return weighting_from_pairs(tree_solid_h(), pairs);
}

// F on the hollow side, reindexed t0 u1 v2 w3 x4 y5 z6.
inline Graph tree_hollow_h() {
  return Graph(7, {{4, 3}, {3, 5}, {3, 6}, {5, 6}, {1, 3}, {0, 1}, {1, 2}, {0, 2}});
}

inline CliqueWeighting tree_hollow_f() {
  const std::vector<std::pair<VertexSet, std::size_t>> pairs{
      {{3, 4}, 1}, {{1, 3}, 1}, {{0, 1, 2}, 1}, {{3, 5, 6}, 1}};
  return weighting_from_pairs(tree_hollow_h(), pairs);
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) g.add_edge(i, j);
  }
  return g;
}

// K_{m,n} with side {0..m-1} and side {m..m+n-1}.
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  Graph g(m + n);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) g.add_edge(i, static_cast<Vertex>(m + j));
  }
  return g;
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

}  // namespace bipart::testing
