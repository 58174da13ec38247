#include "bipart/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

constexpr std::size_t kWordCeiling = 64;

using Mask = std::uint64_t;

void check_order(const Graph& g, const SolverLimits& limits, const char* what) {
  const std::size_t ceiling = std::min(limits.max_order, kWordCeiling);
  if (g.order() > ceiling) {
    throw SizeLimitError(std::string(what) + ": order " +
                         std::to_string(g.order()) + " exceeds limit " +
                         std::to_string(ceiling));
  }
}

// Lexicographically first dominating set of exactly `budget` vertices, if
// one of that size exists.
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : n_(g.order()) {
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = g.neighbors(v).low_word() | (Mask{1} << v);
    }
    // dead_[i]: vertices whose closed neighbourhood lies entirely below i;
    // once the search has passed i they can no longer be dominated.
    dead_.assign(n_ + 1, 0);
    for (Vertex w = 0; w < n_; ++w) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(closed_[w]));
      for (std::size_t i = top + 1; i <= n_; ++i) dead_[i] |= Mask{1} << w;
    }
    // best_cover_[i]: largest closed neighbourhood among vertices >= i.
    best_cover_.assign(n_ + 1, 0);
    for (std::size_t i = n_; i-- > 0;) {
      best_cover_[i] = std::max(best_cover_[i + 1],
                                static_cast<std::size_t>(std::popcount(closed_[i])));
    }
  }

  std::optional<Mask> run(std::size_t budget) {
    budget_ = budget;
    chosen_ = 0;
    if (search(0, 0, 0)) return chosen_;
    return std::nullopt;
  }

  Mask greedy() const {
    Mask dominated = 0;
    Mask chosen = 0;
    while (dominated != all_) {
      std::size_t best_gain = 0;
      Vertex best = 0;
      for (Vertex v = 0; v < n_; ++v) {
        const auto gain = static_cast<std::size_t>(std::popcount(closed_[v] & ~dominated));
        if (gain > best_gain) {
          best_gain = gain;
          best = v;
        }
      }
      chosen |= Mask{1} << best;
      dominated |= closed_[best];
    }
    return chosen;
  }

  std::size_t lower_bound() const {
    std::size_t widest = best_cover_[0];
    return (n_ + widest - 1) / widest;
  }

 private:
  bool search(std::size_t next, std::size_t used, Mask dominated) {
    if (dominated == all_) return true;
    const Mask open = all_ & ~dominated;
    if (open & dead_[next]) return false;
    const std::size_t left = budget_ - used;
    if (left == 0) return false;
    if (static_cast<std::size_t>(std::popcount(open)) > left * best_cover_[next]) {
      return false;
    }
    const Mask bit = Mask{1} << next;
    chosen_ |= bit;
    if (search(next + 1, used + 1, dominated | closed_[next])) return true;
    chosen_ &= ~bit;
    return search(next + 1, used, dominated);
  }

  std::size_t n_;
  Mask all_ = 0;
  std::vector<Mask> closed_;
  std::vector<Mask> dead_;
  std::vector<std::size_t> best_cover_;
  std::size_t budget_ = 0;
  Mask chosen_ = 0;
};

bool cover_search(const std::vector<Edge>& edges, std::size_t budget,
                  VertexSet& cover) {
  auto open = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
    return !cover.contains(e.u) && !cover.contains(e.v);
  });
  if (open == edges.end()) return true;
  if (budget == 0) return false;
  for (Vertex pick : {open->u, open->v}) {
    cover.insert(pick);
    if (cover_search(edges, budget - 1, cover)) return true;
    cover.erase(pick);
  }
  return false;
}

// Kuhn's augmenting path search. match_of[v] is v's partner or nullopt.
bool augment(const Graph& g, Vertex a, VertexSet& visited,
             std::vector<std::optional<Vertex>>& match_of) {
  for (Vertex b : g.neighbors(a)) {
    if (visited.contains(b)) continue;
    visited.insert(b);
    if (!match_of[b] || augment(g, *match_of[b], visited, match_of)) {
      match_of[b] = a;
      match_of[a] = b;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  require_vertices(g, d);
  return (set_neighborhood(g, d) | d) == g.vertices();
}

DominatingSet domination_number(const Graph& g, SolverLimits limits) {
  check_order(g, limits, "domination number");
  if (g.order() == 0) return {VertexSet{}, true};
  DominationSearch search(g);
  const Mask greedy = search.greedy();
  const auto upper = static_cast<std::size_t>(std::popcount(greedy));
  for (std::size_t k = search.lower_bound(); k <= upper; ++k) {
    if (auto found = search.run(k)) {
      return {VertexSet::from_word(*found), true};
    }
  }
  throw InvariantViolation("domination search missed the greedy solution");
}

VertexSet minimum_vertex_cover(const Graph& g, SolverLimits limits) {
  if (auto sides = bipartition(g)) {
    const BipartiteGraph bg = BipartiteGraph::with_sides(g, sides->a, sides->b);
    const Matching m = max_matching_bipartite(bg);
    std::vector<std::optional<Vertex>> partner(g.order());
    for (const Edge& e : m.edges) {
      partner[e.u] = e.v;
      partner[e.v] = e.u;
    }
    // Alternating reachability from the unmatched A vertices.
    VertexSet reached;
    std::vector<Vertex> frontier;
    for (Vertex a : sides->a) {
      if (!partner[a]) {
        reached.insert(a);
        frontier.push_back(a);
      }
    }
    while (!frontier.empty()) {
      const Vertex a = frontier.back();
      frontier.pop_back();
      for (Vertex b : g.neighbors(a)) {
        if (reached.contains(b) || partner[a] == b) continue;
        reached.insert(b);
        if (partner[b] && !reached.contains(*partner[b])) {
          reached.insert(*partner[b]);
          frontier.push_back(*partner[b]);
        }
      }
    }
    return (sides->a - reached) | (sides->b & reached);
  }

  check_order(g, limits, "covering number");
  const std::vector<Edge> edges = g.edges();
  for (std::size_t k = 0;; ++k) {
    VertexSet cover;
    if (cover_search(edges, k, cover)) return cover;
  }
}

std::size_t covering_number(const Graph& g, SolverLimits limits) {
  return minimum_vertex_cover(g, limits).size();
}

Matching max_matching_bipartite(const BipartiteGraph& g) {
  const Graph& graph = g.graph();
  std::vector<std::optional<Vertex>> match_of(graph.order());
  for (Vertex a : g.side_a()) {
    VertexSet visited;
    augment(graph, a, visited, match_of);
  }
  Matching m;
  for (Vertex a : g.side_a()) {
    if (match_of[a]) m.edges.push_back(Edge::of(a, *match_of[a]));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool has_side_saturating_matching(const BipartiteGraph& g, Side side) {
  return max_matching_bipartite(g).size() == g.side(side).size();
}

}  // namespace bipart
