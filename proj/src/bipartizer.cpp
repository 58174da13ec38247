#include "bipart/bipartizer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

// Groups the vertices of `side` by open neighbourhood. Classes come out in
// order of smallest member, members ascending.
std::vector<VertexSet> group_by_neighborhood(const Graph& g,
                                             const VertexSet& side) {
  std::vector<VertexSet> classes;
  classes.reserve(side.size());
  if (g.order() <= 64) {
    // Neighbourhoods are single words; sorting (word, vertex) pairs groups
    // equal ones together.
    std::vector<std::pair<std::uint64_t, Vertex>> keyed;
    keyed.reserve(side.size());
    for (Vertex x : side) keyed.emplace_back(g.neighbors(x).low_word(), x);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back();
      classes.back().insert(keyed[i].second);
    }
  } else {
    std::vector<Vertex> order = side.to_vector();
    auto words = [](const VertexSet& s) {
      std::vector<std::uint64_t> w(s.word_count());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = s.word(i);
      return w;
    };
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
      return words(g.neighbors(x)) < words(g.neighbors(y));
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || g.neighbors(order[i]) != g.neighbors(order[i - 1])) {
        classes.emplace_back();
      }
      classes.back().insert(order[i]);
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet& x, const VertexSet& y) {
              return x.front() < y.front();
            });
  return classes;
}

// Vertex id of copy (K, i) in bipartize(h, f): copies are laid out after the
// h.order() A-side vertices in entry order.
std::optional<Vertex> copy_vertex(std::size_t h_order, const CliqueWeighting& f,
                                  const CliqueCopy& c) {
  std::size_t offset = h_order;
  for (const auto& [k, w] : f.entries()) {
    if (k == c.clique) {
      if (c.index == 0 || c.index > w) return std::nullopt;
      return static_cast<Vertex>(offset + c.index - 1);
    }
    offset += w;
  }
  return std::nullopt;
}

}  // namespace

BipartiteGraph BipartiteGraph::from_graph(Graph g) {
  auto parts = bipartition(g);
  if (!parts) throw InputError("graph is not bipartite (odd cycle)");
  BipartiteGraph out;
  out.graph_ = std::move(g);
  out.a_ = std::move(parts->a);
  out.b_ = std::move(parts->b);
  return out;
}

BipartiteGraph BipartiteGraph::with_sides(Graph g, VertexSet a, VertexSet b) {
  if (a.intersects(b) || (a | b) != g.vertices()) {
    throw InputError("sides do not partition the vertex set");
  }
  for (Vertex v : a) {
    if (g.neighbors(v).intersects(a)) {
      throw InputError("edge inside side A at vertex " + std::to_string(v));
    }
  }
  for (Vertex v : b) {
    if (g.neighbors(v).intersects(b)) {
      throw InputError("edge inside side B at vertex " + std::to_string(v));
    }
  }
  BipartiteGraph out;
  out.graph_ = std::move(g);
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  return out;
}

const std::optional<CliqueCopy>& BipartiteGraph::label(Vertex v) const {
  static const std::optional<CliqueCopy> none;
  return v < labels_.size() ? labels_[v] : none;
}

BipartiteGraph BipartiteGraph::swapped() const {
  BipartiteGraph out = *this;
  std::swap(out.a_, out.b_);
  return out;
}

BipartiteGraph bipartize(const Graph& h, const CliqueWeighting& f) {
  if (f.host_order() != h.order()) {
    throw ValidationError("weighting host order " +
                          std::to_string(f.host_order()) +
                          " does not match graph order " +
                          std::to_string(h.order()));
  }
  const std::size_t n = h.order();
  const std::size_t copies = f.total();
  std::size_t incidences = 0;
  for (const auto& [k, w] : f.entries()) {
    validate_clique(h, k);
    incidences += w * k.size();
  }

  BipartiteGraph out;
  out.graph_ = Graph(n + copies);
  out.a_ = VertexSet::range(n);
  out.labels_.resize(n + copies);
  Vertex next = static_cast<Vertex>(n);
  for (const auto& [k, w] : f.entries()) {
    for (std::size_t i = 1; i <= w; ++i, ++next) {
      for (Vertex x : k) out.graph_.add_edge(x, next);
      out.b_.insert(next);
      out.labels_[next] = CliqueCopy{k, i};
    }
  }

  if (out.graph_.order() != n + copies || out.graph_.size() != incidences) {
    throw InvariantViolation("bipartization order/size identity violated");
  }
  return out;
}

SimilarityPartition similarity_partition(const BipartiteGraph& g, Side side) {
  SimilarityPartition p;
  p.classes = group_by_neighborhood(g.graph(), g.side(side));
  for (const VertexSet& c : p.classes) p.representatives.push_back(c.front());
  return p;
}

InversionResult invert_bipartization(const BipartiteGraph& g, Side side) {
  const Graph& graph = g.graph();
  const VertexSet& chosen = g.side(side);
  const VertexSet& other = g.other_side(side);
  for (Vertex b : other) {
    if (graph.degree(b) == 0) {
      throw ValidationError("isolated vertex " + std::to_string(b) +
                            " on the side being turned into cliques");
    }
  }

  InversionResult inv;
  inv.h_vertices = chosen.to_vector();
  std::vector<Vertex> index(graph.order(), 0);
  for (Vertex i = 0; i < inv.h_vertices.size(); ++i) {
    index[inv.h_vertices[i]] = i;
  }

  inv.h = Graph(inv.h_vertices.size());
  for (Vertex i = 0; i < inv.h_vertices.size(); ++i) {
    const Vertex x = inv.h_vertices[i];
    VertexSet reach;
    for (Vertex b : graph.neighbors(x)) reach |= graph.neighbors(b);
    reach.erase(x);
    for (Vertex y : reach) {
      if (index[y] > i) inv.h.add_edge(i, index[y]);
    }
  }

  inv.f = CliqueWeighting(inv.h.order());
  inv.copies.resize(graph.order());
  for (const VertexSet& cls : group_by_neighborhood(graph, other)) {
    VertexSet k;
    for (Vertex x : graph.neighbors(cls.front())) k.insert(index[x]);
    if (!is_clique(inv.h, k)) {
      throw InvariantViolation("neighbourhood of vertex " +
                               std::to_string(cls.front()) +
                               " is not a clique of the recovered graph");
    }
    inv.f.assign(inv.h, k, cls.size());
    std::size_t i = 1;
    for (Vertex b : cls) inv.copies[b] = CliqueCopy{k, i++};
  }
  return inv;
}

bool roundtrip_matches(const BipartiteGraph& g, Side side,
                       const InversionResult& inv) {
  const Graph& graph = g.graph();
  const BipartiteGraph rebuilt = bipartize(inv.h, inv.f);
  const Graph& target = rebuilt.graph();
  if (target.order() != graph.order() || target.size() != graph.size()) {
    return false;
  }
  if (inv.h_vertices.size() != g.side(side).size()) return false;

  std::vector<Vertex> phi(graph.order(), 0);
  VertexSet image;
  for (Vertex i = 0; i < inv.h_vertices.size(); ++i) {
    phi[inv.h_vertices[i]] = i;
    image.insert(i);
  }
  for (Vertex b : g.other_side(side)) {
    if (b >= inv.copies.size() || !inv.copies[b]) return false;
    auto v = copy_vertex(inv.h.order(), inv.f, *inv.copies[b]);
    if (!v || image.contains(*v)) return false;
    phi[b] = *v;
    image.insert(*v);
  }
  if (image != target.vertices()) return false;
  for (const Edge& e : graph.edges()) {
    if (!target.has_edge(phi[e.u], phi[e.v])) return false;
  }
  return true;
}

bool is_induced_subgraph_by_weights(const Graph& h, const CliqueWeighting& f,
                                    const CliqueWeighting& g) {
  if (!g.dominated_by(f)) return false;
  const BipartiteGraph big = bipartize(h, f);
  const BipartiteGraph small = bipartize(h, g);
  const Graph& sg = small.graph();

  std::vector<Vertex> embed(sg.order());
  std::iota(embed.begin(), embed.begin() + static_cast<std::ptrdiff_t>(h.order()),
            Vertex{0});
  for (Vertex v = static_cast<Vertex>(h.order()); v < sg.order(); ++v) {
    auto target = copy_vertex(h.order(), f, *small.label(v));
    if (!target) throw InvariantViolation("copy missing from larger bipartization");
    embed[v] = *target;
  }
  for (Vertex u = 0; u < sg.order(); ++u) {
    for (Vertex v = u + 1; v < sg.order(); ++v) {
      if (sg.has_edge(u, v) != big.graph().has_edge(embed[u], embed[v])) {
        throw InvariantViolation("canonical embedding is not induced");
      }
    }
  }
  return true;
}

}  // namespace bipart
