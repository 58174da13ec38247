#include "bipart/cliques.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

std::string describe(const VertexSet& k) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : k) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Level-by-level extension. Each k-clique is extended only by vertices larger
// than its maximum, so every clique is produced once, and extending the
// level-k list in order with increasing vertices keeps level k+1 sorted.
template <typename Keep>
std::vector<Clique> enumerate_filtered(const Graph& h, CliqueLimits limits,
                                       Keep keep) {
  std::vector<Clique> out;
  std::vector<Clique> level;
  const std::size_t max_size = limits.max_size.value_or(h.order());
  auto emit = [&](const Clique& k) {
    if (!keep(k)) return;
    if (out.size() >= limits.cap) {
      throw SizeLimitError("clique enumeration exceeds cap of " +
                           std::to_string(limits.cap));
    }
    out.push_back(k);
  };
  if (max_size == 0) return out;
  for (Vertex v = 0; v < h.order(); ++v) level.push_back(VertexSet{v});
  for (std::size_t size = 1; !level.empty(); ++size) {
    for (const Clique& k : level) emit(k);
    if (size == max_size) break;
    std::vector<Clique> next;
    for (const Clique& k : level) {
      VertexSet common = h.neighbors(k.front());
      for (Vertex v : k) common &= h.neighbors(v);
      const Vertex top = k.back();
      for (Vertex w : common) {
        if (w <= top) continue;
        Clique grown = k;
        grown.insert(w);
        next.push_back(std::move(grown));
        if (next.size() > limits.cap) {
          throw SizeLimitError("clique enumeration exceeds cap of " +
                               std::to_string(limits.cap));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

bool is_clique(const Graph& h, const VertexSet& k) {
  if (k.empty() || k.back() >= h.order()) return false;
  if (k.fits_in_word()) {
    const std::uint64_t bits = k.low_word();
    for (Vertex v : k) {
      const std::uint64_t others = bits & ~(std::uint64_t{1} << v);
      if (others & ~h.neighbors(v).low_word()) return false;
    }
    return true;
  }
  for (Vertex v : k) {
    VertexSet others = k;
    others.erase(v);
    if (!others.is_subset_of(h.neighbors(v))) return false;
  }
  return true;
}

void validate_clique(const Graph& h, const VertexSet& k) {
  if (k.empty()) throw ValidationError("empty clique key");
  if (k.back() >= h.order()) {
    throw ValidationError("clique key " + describe(k) + " has vertex " +
                          std::to_string(k.back()) + " outside the graph");
  }
  if (is_clique(h, k)) return;
  for (Vertex u : k) {
    for (Vertex v : k) {
      if (u < v && !h.has_edge(u, v)) {
        throw ValidationError("key " + describe(k) + " is not a clique: " +
                              std::to_string(u) + " and " + std::to_string(v) +
                              " are not adjacent");
      }
    }
  }
}

std::vector<Clique> enumerate_cliques(const Graph& h, CliqueLimits limits) {
  return enumerate_filtered(h, limits, [](const Clique&) { return true; });
}

std::vector<Clique> cliques_at(const Graph& h, Vertex v, CliqueLimits limits) {
  return cliques_meeting(h, VertexSet{v}, limits);
}

std::vector<Clique> cliques_meeting(const Graph& h, const VertexSet& x,
                                    CliqueLimits limits) {
  require_vertices(h, x);
  if (x.empty()) return {};
  return enumerate_filtered(h, limits,
                            [&](const Clique& k) { return k.intersects(x); });
}

void CliqueWeighting::assign(const Graph& h, const Clique& k,
                             std::size_t weight) {
  if (h.order() != host_order_) {
    throw ValidationError("weighting belongs to a graph of order " +
                          std::to_string(host_order_));
  }
  validate_clique(h, k);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), k,
      [](const Entry& e, const Clique& key) { return SizeThenLex{}(e.first, key); });
  const bool present = it != entries_.end() && it->first == k;
  if (weight == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = weight;
  } else {
    entries_.insert(it, Entry{k, weight});
  }
}

std::size_t CliqueWeighting::operator()(const Clique& k) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), k,
      [](const Entry& e, const Clique& key) { return SizeThenLex{}(e.first, key); });
  return it != entries_.end() && it->first == k ? it->second : 0;
}

std::size_t CliqueWeighting::total() const {
  std::size_t sum = 0;
  for (const auto& [k, w] : entries_) sum += w;
  return sum;
}

bool CliqueWeighting::dominated_by(const CliqueWeighting& other) const {
  for (const auto& [k, w] : entries_) {
    if (other(k) < w) return false;
  }
  return true;
}

CliqueWeighting weighting_from_pairs(
    const Graph& h, std::span<const std::pair<VertexSet, std::size_t>> pairs) {
  CliqueWeighting f(h.order());
  for (const auto& [k, w] : pairs) {
    validate_clique(h, k);
    if (w == 0) {
      throw ValidationError("weight of " + describe(k) + " must be positive");
    }
    if (f(k) != 0) {
      throw ValidationError("duplicate key " + describe(k));
    }
    f.assign(h, k, w);
  }
  return f;
}

EdgeCoverage is_edge_covered(const Graph& h, const CliqueWeighting& f) {
  for (const Edge& e : h.edges()) {
    const VertexSet pair{e.u, e.v};
    bool found = false;
    for (const auto& [k, w] : f.entries()) {
      if (pair.is_subset_of(k)) {
        found = true;
        break;
      }
    }
    if (!found) return {false, e};
  }
  return {};
}

}  // namespace bipart
