#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bipart/vertex_set.hpp"

namespace bipart {

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on the dense vertex range [0, order).
// Adjacency is symmetric and loop-free by construction. Edges are added while
// a graph is being built; afterwards it is used as an immutable value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : adjacency_(order) {}
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  // Throws InputError on a loop or an out-of-range endpoint. Adding an
  // existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  bool has_edge(Vertex u, Vertex v) const {
    return u < order() && adjacency_[u].contains(v);
  }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  // Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

// N(v), N[v] and N(X). Out-of-range ids raise InputError.
VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet set_neighborhood(const Graph& g, const VertexSet& x);

// Shortest-path length, or nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

// Vertices at distance exactly 2 from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);

// Components ordered by smallest member. The empty graph has none and is
// reported as disconnected.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Connected and acyclic. The empty graph is not a tree.
bool is_tree(const Graph& g);

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

// Proper 2-colouring, or nullopt if g has an odd cycle. In every component
// the side holding the component's smallest vertex goes to a.
std::optional<Bipartition> bipartition(const Graph& g);

struct SupportProfile {
  VertexSet leaves;
  VertexSet supports;
  VertexSet weak_supports;
};

SupportProfile support_profile(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // original[i] is the vertex of the host graph relabeled to i.
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// Checks that every member of x is a vertex of g.
void require_vertices(const Graph& g, const VertexSet& x);

}  // namespace bipart
