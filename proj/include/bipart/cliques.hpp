#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bipart/graph.hpp"

namespace bipart {

// A non-empty set of pairwise adjacent vertices of some host graph.
using Clique = VertexSet;

bool is_clique(const Graph& h, const VertexSet& k);

struct CliqueLimits {
  std::optional<std::size_t> max_size;
  // Enumeration fails with SizeLimitError beyond this many cliques.
  std::size_t cap = 1'000'000;
};

// All non-empty complete subgraphs, ordered by size and then
// lexicographically.
std::vector<Clique> enumerate_cliques(const Graph& h, CliqueLimits limits = {});

// Cliques containing v / meeting x, in the same canonical order.
std::vector<Clique> cliques_at(const Graph& h, Vertex v, CliqueLimits limits = {});
std::vector<Clique> cliques_meeting(const Graph& h, const VertexSet& x,
                                    CliqueLimits limits = {});

// Sparse function from the cliques of a host graph to the positive integers.
// Absent keys are worth zero. Entries are kept in canonical clique order.
class CliqueWeighting {
 public:
  using Entry = std::pair<Clique, std::size_t>;

  CliqueWeighting() = default;
  explicit CliqueWeighting(std::size_t host_order) : host_order_(host_order) {}

  // Sets f(k) = weight, validating that k is a clique of h. Zero erases.
  void assign(const Graph& h, const Clique& k, std::size_t weight);

  std::size_t operator()(const Clique& k) const;
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  // True for the all-zero function.
  bool is_zero() const { return entries_.empty(); }
  // Sum of all values, i.e. the number of B-side vertices it generates.
  std::size_t total() const;
  std::size_t host_order() const { return host_order_; }

  // Pointwise f <= g.
  bool dominated_by(const CliqueWeighting& other) const;

  friend bool operator==(const CliqueWeighting&, const CliqueWeighting&) = default;

 private:
  std::size_t host_order_ = 0;
  std::vector<Entry> entries_;
};

// Builds a weighting from explicit (clique, weight) pairs. Rejects non-cliques
// (naming a non-adjacent pair), empty keys, duplicate keys and zero weights.
CliqueWeighting weighting_from_pairs(
    const Graph& h, std::span<const std::pair<VertexSet, std::size_t>> pairs);

// Throws ValidationError naming the first non-adjacent pair of k, or if k is
// empty or leaves the vertex range of h.
void validate_clique(const Graph& h, const VertexSet& k);

struct EdgeCoverage {
  bool covered = true;
  std::optional<Edge> uncovered;
};

// Whether every edge of h lies inside some positively weighted clique.
EdgeCoverage is_edge_covered(const Graph& h, const CliqueWeighting& f);

}  // namespace bipart
