#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipart/cliques.hpp"
#include "bipart/graph.hpp"

namespace bipart {

struct BlockDecomposition {
  // Maximal connected subgraphs without a cut vertex. Bridges are two-vertex
  // blocks and isolated vertices one-vertex blocks. Ordered by smallest
  // member, then lexicographically.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& h);

// Sum over blocks of (|block| - 1); equals order - 1 for connected graphs.
std::size_t block_size_excess(const BlockDecomposition& d);

// Every block induces a complete subgraph.
bool is_block_graph(const Graph& h);

// Alternating sequence v0, F1, v1, ..., Fk, vk where each v(i-1) v(i) is an
// edge inside the positively weighted clique F(i).
struct FCompletePath {
  std::vector<Vertex> vertices;
  std::vector<Clique> cliques;

  friend bool operator==(const FCompletePath&, const FCompletePath&) = default;
};

// Two distinct, internally vertex-disjoint positively f-valued complete u-v
// paths, or nullopt if none exist. No clique repeats within a path, so both
// lift to distinct u-v paths of B_f(h) through the copies (K, 1). Paths are
// enumerated exhaustively (SizeLimitError past 200000 of them) and shorter
// ones are paired first.
// A triangle weighted only as a whole has no such pair, even though u-w-v
// walks around it: that walk would reuse the same clique.
std::optional<std::pair<FCompletePath, FCompletePath>> find_two_disjoint_f_paths(
    const Graph& h, const CliqueWeighting& f, Vertex u, Vertex v);

struct TreeVerdict {
  bool is_tree = true;
  // 0 when is_tree; otherwise the first failed condition:
  //   1  a non-trivial clique has weight >= 2
  //   2  a block is not complete
  //   3  a non-trivial clique has weight 1 without being a block, or a block
  //      has weight 0
  int violated_condition = 0;
  VertexSet witness;
  std::string message;
};

// Decides whether B_f(h) is a tree from the block structure of h alone.
// Requires h connected and every edge inside a positively weighted clique;
// otherwise throws PreconditionError. Singleton weights are unconstrained.
TreeVerdict is_tree_bipartization(const Graph& h, const CliqueWeighting& f);

// Weight 1 on the edges of the breadth-first spanning tree rooted at 0
// (neighbours visited in increasing order), so that B_f(h) is the
// subdivision of that tree. The tree conditions hold for the spanning tree
// itself; on h they apply only when h is a tree, since other edges stay
// uncovered. For the one-vertex graph returns {0}: 1.
// Throws PreconditionError for empty or disconnected h.
CliqueWeighting tree_weighting_for(const Graph& h);

}  // namespace bipart
