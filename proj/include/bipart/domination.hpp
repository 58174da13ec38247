#pragma once

#include <cstddef>
#include <vector>

#include "bipart/bipartizer.hpp"
#include "bipart/graph.hpp"

namespace bipart {

struct SolverLimits {
  // Exact exponential solvers refuse larger graphs with SizeLimitError.
  // The hard ceiling is 64 regardless of this setting.
  std::size_t max_order = 24;
};

struct DominatingSet {
  VertexSet members;
  // Set when no smaller set dominates, as established by exhaustive search.
  bool certified_minimum = false;

  std::size_t size() const { return members.size(); }
};

// N[d] = V.
bool is_dominating(const Graph& g, const VertexSet& d);

// gamma(g) with a minimum dominating set; among minimum sets the
// lexicographically smallest is returned. Iterative deepening over the set
// size from a degree lower bound to a greedy upper bound, branching on
// vertices in increasing order with closed-neighbourhood bitmasks.
DominatingSet domination_number(const Graph& g, SolverLimits limits = {});

// A minimum vertex cover. Bipartite graphs take the matching route (Konig)
// and have no size limit; other graphs are solved by bounded search.
VertexSet minimum_vertex_cover(const Graph& g, SolverLimits limits = {});
std::size_t covering_number(const Graph& g, SolverLimits limits = {});

struct Matching {
  // Vertex-disjoint edges, sorted.
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
};

// Maximum matching by augmenting paths from side A in increasing vertex
// order.
Matching max_matching_bipartite(const BipartiteGraph& g);

bool has_side_saturating_matching(const BipartiteGraph& g, Side side);

}  // namespace bipart
