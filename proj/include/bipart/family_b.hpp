#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipart/bipartizer.hpp"
#include "bipart/cliques.hpp"
#include "bipart/domination.hpp"
#include "bipart/graph.hpp"

namespace bipart {

// Orients g so that side A is the smaller part; on a tie, A is the part that
// contains vertex 0.
BipartiteGraph normalized(const BipartiteGraph& g);

// Structural test for gamma(G) = |A| on a connected bipartite graph with
// 1 <= |A| <= |B|:
//   (a) every support vertex in B is adjacent to exactly one leaf, and each
//       of its non-leaf neighbours is itself a support vertex;
//   (b) any two vertices x, y of A that are neither leaves nor supports and
//       lie at distance 2 share at least two B-vertices whose neighbourhood
//       is exactly {x, y}.
struct Lemma5Verdict {
  bool holds = true;
  // 'a' or 'b' for the first failed condition, 0 when holds.
  char failed = 0;
  // The offending vertices: the support (and, for the second clause of (a),
  // the non-support neighbour), or the pair x, y.
  std::vector<Vertex> witness;
};

// Uses g's own orientation; throws InputError unless g is connected and
// 1 <= |A| <= |B|.
Lemma5Verdict check_lemma5_conditions(const BipartiteGraph& g);

// Properties of a weighting under which B_f(h) has domination number |V(h)|:
//   (1) an edge uv with f({u,v}) = 0 lies in some positively weighted clique;
//   (2) an edge uv with f({u}) = f({v}) = 0 has f({u,v}) >= 2.
struct WeightingVerdict {
  bool holds = true;
  // Number of the first failed property, 0 when holds.
  int failed = 0;
  std::optional<Edge> witness_edge;
  // Offending clique for corollary checks on blocks.
  VertexSet witness_clique;
};

// Property (1) is checked over all edges before property (2). Requires h
// connected and f non-zero (PreconditionError otherwise).
WeightingVerdict check_theorem5_properties(const Graph& h,
                                           const CliqueWeighting& f);

// Tree variant on a block graph h:
//   (1) every block with at least two vertices has weight 1 and every other
//       non-trivial clique has weight 0;
//   (2) {v : f({v}) >= 1} covers the edges of h.
// Requires h to be a block graph and f non-zero (PreconditionError).
WeightingVerdict check_corollary6(const Graph& h, const CliqueWeighting& f);

struct ClassificationReport {
  std::size_t gamma = 0;
  std::size_t beta = 0;
  std::pair<std::size_t, std::size_t> side_sizes;
  bool in_family_b = false;
  Lemma5Verdict lemma5;
  WeightingVerdict theorem5;
  bool routes_agree = false;
  // Witness dominating set realising gamma.
  VertexSet dominating_set;
};

// Computes gamma and beta, the structural verdict and the weighting verdict on
// the canonical inversion of the smaller side, and asserts that all three
// routes agree (InvariantViolation with a graph6 dump otherwise). When the
// sides have equal size both orientations are checked. Throws InputError for
// a disconnected graph or one without edges.
ClassificationReport classify(const BipartiteGraph& g, SolverLimits limits = {});

// Line-oriented "key: value" rendering of a report.
std::string format_report(const ClassificationReport& r);

}  // namespace bipart
