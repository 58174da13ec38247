#include "bipart/family_b.hpp"

#include <algorithm>
#include <sstream>

#include "bipart/blocks.hpp"
#include "bipart/errors.hpp"
#include "bipart/io.hpp"

namespace bipart {
namespace {

void require_nonzero(const CliqueWeighting& f) {
  if (f.is_zero()) throw PreconditionError("weighting is identically zero");
}

bool in_some_positive_clique(const CliqueWeighting& f, const Edge& e) {
  const VertexSet pair{e.u, e.v};
  return std::any_of(f.entries().begin(), f.entries().end(),
                     [&](const auto& entry) { return pair.is_subset_of(entry.first); });
}

struct Routes {
  Lemma5Verdict lemma5;
  WeightingVerdict theorem5;
};

// Both structural verdicts for one orientation. The weighting witness is
// translated back to vertex ids of the input graph.
Routes structural_routes(const BipartiteGraph& oriented) {
  const InversionResult inv = invert_bipartization(oriented, Side::A);
  Routes r{check_lemma5_conditions(oriented),
           check_theorem5_properties(inv.h, inv.f)};
  if (r.theorem5.witness_edge) {
    const Edge e = *r.theorem5.witness_edge;
    r.theorem5.witness_edge = Edge::of(inv.h_vertices[e.u], inv.h_vertices[e.v]);
  }
  return r;
}

}  // namespace

BipartiteGraph normalized(const BipartiteGraph& g) {
  const std::size_t a = g.side_a().size();
  const std::size_t b = g.side_b().size();
  if (a < b) return g;
  if (a > b) return g.swapped();
  return g.side_b().contains(0) ? g.swapped() : g;
}

Lemma5Verdict check_lemma5_conditions(const BipartiteGraph& g) {
  const Graph& graph = g.graph();
  const VertexSet& a_side = g.side_a();
  const VertexSet& b_side = g.side_b();
  if (a_side.empty() || a_side.size() > b_side.size()) {
    throw InputError("structural test needs 1 <= |A| <= |B|");
  }
  if (!is_connected(graph)) throw InputError("graph is not connected");

  const SupportProfile profile = support_profile(graph);
  for (Vertex s : profile.supports & b_side) {
    if (!profile.weak_supports.contains(s)) return {false, 'a', {s}};
    for (Vertex y : graph.neighbors(s) - profile.leaves) {
      if (!profile.supports.contains(y)) return {false, 'a', {s, y}};
    }
  }

  const VertexSet inner = a_side - profile.leaves - profile.supports;
  for (Vertex x : inner) {
    for (Vertex y : second_neighborhood(graph, x) & inner) {
      if (y < x) continue;
      std::size_t twins = 0;
      for (Vertex b : graph.neighbors(x) & graph.neighbors(y)) {
        if (graph.degree(b) == 2) ++twins;
      }
      if (twins < 2) return {false, 'b', {x, y}};
    }
  }
  return {};
}

WeightingVerdict check_theorem5_properties(const Graph& h,
                                           const CliqueWeighting& f) {
  if (!is_connected(h)) throw PreconditionError("graph is not connected");
  require_nonzero(f);
  const std::vector<Edge> edges = h.edges();
  for (const Edge& e : edges) {
    if (f(VertexSet{e.u, e.v}) == 0 && !in_some_positive_clique(f, e)) {
      return {false, 1, e, {}};
    }
  }
  for (const Edge& e : edges) {
    if (f(VertexSet{e.u}) == 0 && f(VertexSet{e.v}) == 0 &&
        f(VertexSet{e.u, e.v}) < 2) {
      return {false, 2, e, {}};
    }
  }
  return {};
}

WeightingVerdict check_corollary6(const Graph& h, const CliqueWeighting& f) {
  const BlockDecomposition d = block_decomposition(h);
  for (const VertexSet& b : d.blocks) {
    if (!is_clique(h, b)) throw PreconditionError("graph is not a block graph");
  }
  require_nonzero(f);

  for (const VertexSet& b : d.blocks) {
    if (b.size() >= 2 && f(b) != 1) return {false, 1, std::nullopt, b};
  }
  for (const auto& [k, w] : f.entries()) {
    if (k.size() >= 2 &&
        std::find(d.blocks.begin(), d.blocks.end(), k) == d.blocks.end()) {
      return {false, 1, std::nullopt, k};
    }
  }
  VertexSet cover;
  for (const auto& [k, w] : f.entries()) {
    if (k.size() == 1) cover |= k;
  }
  for (const Edge& e : h.edges()) {
    if (!cover.contains(e.u) && !cover.contains(e.v)) {
      return {false, 2, e, {}};
    }
  }
  return {};
}

ClassificationReport classify(const BipartiteGraph& g, SolverLimits limits) {
  const Graph& graph = g.graph();
  if (!is_connected(graph)) throw InputError("graph is not connected");
  if (graph.size() == 0) throw InputError("graph has no edges");

  const BipartiteGraph oriented = normalized(g);
  ClassificationReport r;
  const DominatingSet d = domination_number(graph, limits);
  r.gamma = d.size();
  r.dominating_set = d.members;
  r.beta = covering_number(graph, limits);
  r.side_sizes = {oriented.side_a().size(), oriented.side_b().size()};
  r.in_family_b = r.gamma == r.side_sizes.first;

  Routes routes = structural_routes(oriented);
  r.lemma5 = routes.lemma5;
  r.theorem5 = routes.theorem5;

  const bool by_cover = r.gamma == r.beta && r.beta == r.side_sizes.first;
  r.routes_agree = r.in_family_b == by_cover &&
                   r.in_family_b == r.lemma5.holds &&
                   r.in_family_b == r.theorem5.holds;
  if (r.side_sizes.first == r.side_sizes.second) {
    const Routes mirror = structural_routes(oriented.swapped());
    r.routes_agree = r.routes_agree && mirror.lemma5.holds == r.in_family_b &&
                     mirror.theorem5.holds == r.in_family_b;
  }
  if (!r.routes_agree) {
    throw InvariantViolation("classification routes disagree for graph6 " +
                             write_graph6(graph) + "\n" + format_report(r));
  }
  return r;
}

std::string format_report(const ClassificationReport& r) {
  std::ostringstream os;
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  os << "gamma: " << r.gamma << '\n'
     << "beta: " << r.beta << '\n'
     << "side_a: " << r.side_sizes.first << '\n'
     << "side_b: " << r.side_sizes.second << '\n'
     << "in_family_b: " << yes_no(r.in_family_b) << '\n'
     << "dominating_set: " << r.dominating_set << '\n'
     << "lemma5: " << yes_no(r.lemma5.holds) << '\n';
  if (!r.lemma5.holds) {
    os << "lemma5_failed: 3" << r.lemma5.failed << '\n' << "lemma5_witness:";
    for (Vertex v : r.lemma5.witness) os << ' ' << v;
    os << '\n';
  }
  os << "theorem5: " << yes_no(r.theorem5.holds) << '\n';
  if (!r.theorem5.holds) {
    os << "theorem5_failed: " << r.theorem5.failed << '\n';
    if (r.theorem5.witness_edge) {
      os << "theorem5_witness: " << r.theorem5.witness_edge->u << '-'
         << r.theorem5.witness_edge->v << '\n';
    }
  }
  os << "routes_agree: " << yes_no(r.routes_agree) << '\n';
  return os.str();
}

}  // namespace bipart
