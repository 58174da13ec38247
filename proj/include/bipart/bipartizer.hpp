#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bipart/cliques.hpp"
#include "bipart/graph.hpp"

namespace bipart {

enum class Side { A, B };

// The i-th copy (1-based) of a positively weighted clique.
struct CliqueCopy {
  Clique clique;
  std::size_t index = 1;

  friend bool operator==(const CliqueCopy&, const CliqueCopy&) = default;
};

// A graph together with a certified bipartition. Vertices produced by
// bipartize() additionally carry their (K, i) provenance.
class BipartiteGraph {
 public:
  // Uses the deterministic colouring from bipartition(); throws InputError if
  // g has an odd cycle.
  static BipartiteGraph from_graph(Graph g);
  // Throws InputError unless a and b partition the vertices and every edge
  // crosses.
  static BipartiteGraph with_sides(Graph g, VertexSet a, VertexSet b);

  const Graph& graph() const { return graph_; }
  const VertexSet& side_a() const { return a_; }
  const VertexSet& side_b() const { return b_; }
  const VertexSet& side(Side s) const { return s == Side::A ? a_ : b_; }
  const VertexSet& other_side(Side s) const { return s == Side::A ? b_ : a_; }

  // Provenance of vertex v, when it was produced by bipartize().
  const std::optional<CliqueCopy>& label(Vertex v) const;
  bool has_labels() const { return !labels_.empty(); }

  // Same graph with the roles of the two sides exchanged.
  BipartiteGraph swapped() const;

 private:
  friend BipartiteGraph bipartize(const Graph& h, const CliqueWeighting& f);

  Graph graph_;
  VertexSet a_;
  VertexSet b_;
  std::vector<std::optional<CliqueCopy>> labels_;
};

// B_f(H): side A is V(h) with ids kept, side B holds one vertex per copy
// (K, i), 1 <= i <= f(K), appended in canonical clique order. A copy of K is
// adjacent exactly to the members of K.
BipartiteGraph bipartize(const Graph& h, const CliqueWeighting& f);

struct SimilarityPartition {
  // Maximal sets of vertices with identical open neighbourhoods, ordered by
  // smallest member.
  std::vector<VertexSet> classes;
  // Smallest member of each class.
  std::vector<Vertex> representatives;
};

SimilarityPartition similarity_partition(const BipartiteGraph& g, Side side);

struct InversionResult {
  Graph h;
  CliqueWeighting f;
  // h_vertices[i] is the vertex of the input graph that became vertex i of h.
  std::vector<Vertex> h_vertices;
  // For each vertex of the input graph on the other side: the clique copy it
  // corresponds to. Indexed by input vertex id; empty for the chosen side.
  std::vector<std::optional<CliqueCopy>> copies;
};

// Recovers (h, f) with bipartize(h, f) isomorphic to g. Vertices of the
// chosen side become h, adjacent when at distance two in g; f(K) counts the
// vertices of the other side whose neighbourhood is exactly K. Throws
// ValidationError if the other side has an isolated vertex.
InversionResult invert_bipartization(const BipartiteGraph& g, Side side);

// Rebuilds bipartize(inv.h, inv.f) and checks that the maps recorded in inv
// carry g onto it edge for edge.
bool roundtrip_matches(const BipartiteGraph& g, Side side,
                       const InversionResult& inv);

// True iff g <= f pointwise. When it holds, additionally verifies that the
// identity embedding of B_g(h) into B_f(h) is an induced-subgraph embedding
// and throws InvariantViolation if it is not.
bool is_induced_subgraph_by_weights(const Graph& h, const CliqueWeighting& f,
                                    const CliqueWeighting& g);

}  // namespace bipart
