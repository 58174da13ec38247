#include "bipart/graph.hpp"

#include <string>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(std::size_t order, std::span<const Edge> edges)
    : adjacency_(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  require_vertex(*this, u);
  require_vertex(*this, v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) return;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void require_vertices(const Graph& g, const VertexSet& x) {
  if (!x.empty()) require_vertex(g, x.back());
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  require_vertex(g, v);
  return g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = neighborhood(g, v);
  out.insert(v);
  return out;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& x) {
  require_vertices(g, x);
  VertexSet out;
  for (Vertex v : x) out |= g.neighbors(v);
  return out;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  VertexSet seen{u};
  VertexSet frontier{u};
  for (std::size_t d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(v)) return d;
    VertexSet next;
    for (Vertex w : frontier) next |= g.neighbors(w);
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return std::nullopt;
}

VertexSet second_neighborhood(const Graph& g, Vertex v) {
  require_vertex(g, v);
  VertexSet out;
  for (Vertex w : g.neighbors(v)) out |= g.neighbors(w);
  out -= g.neighbors(v);
  out.erase(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    const Vertex root = unvisited.front();
    VertexSet comp{root};
    VertexSet frontier{root};
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex w : frontier) next |= g.neighbors(w);
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    unvisited -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  VertexSet comp{0};
  VertexSet frontier{0};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex w : frontier) next |= g.neighbors(w);
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp.size() == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition out;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    // Grow the component layer by layer; even layers join a, odd layers b.
    const Vertex root = unvisited.front();
    VertexSet frontier{root};
    VertexSet seen{root};
    bool even = true;
    while (!frontier.empty()) {
      VertexSet& side = even ? out.a : out.b;
      side |= frontier;
      VertexSet next;
      for (Vertex w : frontier) next |= g.neighbors(w);
      if (next.intersects(side)) return std::nullopt;
      next -= seen;
      seen |= next;
      frontier = std::move(next);
      even = !even;
    }
    unvisited -= seen;
  }
  return out;
}

SupportProfile support_profile(const Graph& g) {
  SupportProfile p;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) p.leaves.insert(v);
  }
  for (Vertex leaf : p.leaves) p.supports |= g.neighbors(leaf);
  for (Vertex s : p.supports) {
    if ((g.neighbors(s) & p.leaves).size() == 1) p.weak_supports.insert(s);
  }
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  require_vertices(g, x);
  InducedSubgraph out{Graph(x.size()), x.to_vector()};
  std::vector<Vertex> index(g.order(), 0);
  for (Vertex i = 0; i < out.original.size(); ++i) index[out.original[i]] = i;
  for (Vertex i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i]) & x) {
      if (index[w] > i) out.graph.add_edge(i, index[w]);
    }
  }
  return out;
}

}  // namespace bipart
