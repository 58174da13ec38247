#include "bipart/blocks.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

constexpr int kUnvisited = -1;

struct Frame {
  Vertex v;
  std::optional<Vertex> parent;
  VertexSet::Iterator next;
  VertexSet::Iterator end;
};

std::string set_text(const VertexSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

// Positive cliques containing both x and y, in canonical order.
std::vector<Clique> covering_cliques(const CliqueWeighting& f, Vertex x,
                                     Vertex y) {
  const VertexSet pair{x, y};
  std::vector<Clique> out;
  for (const auto& [k, w] : f.entries()) {
    if (pair.is_subset_of(k)) out.push_back(k);
  }
  return out;
}

constexpr std::size_t kPathCap = 200'000;

// Simple u-v paths in the incidence graph of h's vertices and its positively
// weighted non-trivial cliques: no vertex and no clique repeats, so each path
// lifts to a path of B_f(h) through first copies.
class PathEnumerator {
 public:
  PathEnumerator(const CliqueWeighting& f, Vertex u, Vertex v, std::size_t n)
      : target_(v), at_(n) {
    for (const auto& [k, w] : f.entries()) {
      if (k.size() < 2) continue;
      const auto id = cliques_.size();
      cliques_.push_back(k);
      for (Vertex x : k) at_[x].push_back(id);
    }
    used_.assign(cliques_.size(), false);
    current_.vertices.push_back(u);
    visited_.insert(u);
    extend(u);
  }

  std::vector<FCompletePath> take() { return std::move(paths_); }

 private:
  void extend(Vertex x) {
    for (std::size_t id : at_[x]) {
      if (used_[id]) continue;
      used_[id] = true;
      current_.cliques.push_back(cliques_[id]);
      for (Vertex y : cliques_[id]) {
        if (visited_.contains(y)) continue;
        current_.vertices.push_back(y);
        if (y == target_) {
          if (paths_.size() == kPathCap) {
            throw SizeLimitError("more than " + std::to_string(kPathCap) +
                                 " complete paths");
          }
          paths_.push_back(current_);
        } else {
          visited_.insert(y);
          extend(y);
          visited_.erase(y);
        }
        current_.vertices.pop_back();
      }
      current_.cliques.pop_back();
      used_[id] = false;
    }
  }

  Vertex target_;
  std::vector<Clique> cliques_;
  std::vector<std::vector<std::size_t>> at_;
  std::vector<bool> used_;
  VertexSet visited_;
  FCompletePath current_;
  std::vector<FCompletePath> paths_;
};

VertexSet inner_vertices(const FCompletePath& p) {
  return VertexSet(p.vertices.begin() + 1, p.vertices.end() - 1);
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& h) {
  const std::size_t n = h.order();
  BlockDecomposition out;
  std::vector<int> disc(n, kUnvisited);
  std::vector<int> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Frame> stack;
  edge_stack.reserve(h.size());
  stack.reserve(n);
  out.blocks.reserve(n);
  int time = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = time++;
    if (h.degree(root) == 0) {
      out.blocks.push_back(VertexSet{root});
      continue;
    }
    stack.clear();
    stack.push_back({root, std::nullopt, h.neighbors(root).begin(), h.neighbors(root).end()});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next != top.end) {
        const Vertex w = *top.next;
        ++top.next;
        const Vertex v = top.v;
        if (disc[w] == kUnvisited) {
          edge_stack.push_back({v, w});
          disc[w] = low[w] = time++;
          stack.push_back({w, v, h.neighbors(w).begin(), h.neighbors(w).end()});
        } else if (w != top.parent && disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Vertex v = top.v;
      const std::optional<Vertex> parent = top.parent;
      stack.pop_back();
      if (!parent) continue;
      const Vertex p = *parent;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        VertexSet block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.insert(e.u);
          block.insert(e.v);
          if (e.u == p && e.v == v) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
  }

  std::vector<std::size_t> membership(n, 0);
  for (const VertexSet& b : out.blocks) {
    for (Vertex x : b) ++membership[x];
  }
  for (Vertex x = 0; x < n; ++x) {
    if (membership[x] >= 2) out.cut_vertices.insert(x);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.front() != b.front()) return a.front() < b.front();
              return lex_less(a, b);
            });
  return out;
}

std::size_t block_size_excess(const BlockDecomposition& d) {
  std::size_t sum = 0;
  for (const VertexSet& b : d.blocks) sum += b.size() - 1;
  return sum;
}

bool is_block_graph(const Graph& h) {
  for (const VertexSet& b : block_decomposition(h).blocks) {
    if (!is_clique(h, b)) return false;
  }
  return true;
}

std::optional<std::pair<FCompletePath, FCompletePath>> find_two_disjoint_f_paths(
    const Graph& h, const CliqueWeighting& f, Vertex u, Vertex v) {
  require_vertices(h, VertexSet{u, v});
  if (u == v) throw PreconditionError("path endpoints must differ");

  const std::vector<Clique> direct = covering_cliques(f, u, v);
  if (direct.size() >= 2) {
    return std::pair{FCompletePath{{u, v}, {direct[0]}},
                     FCompletePath{{u, v}, {direct[1]}}};
  }

  std::vector<FCompletePath> paths = PathEnumerator(f, u, v, h.order()).take();
  std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    return a.vertices.size() < b.vertices.size();
  });
  std::vector<VertexSet> inner;
  inner.reserve(paths.size());
  for (const FCompletePath& p : paths) inner.push_back(inner_vertices(p));
  for (std::size_t j = 1; j < paths.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!inner[i].intersects(inner[j])) return std::pair{paths[i], paths[j]};
    }
  }
  return std::nullopt;
}

TreeVerdict is_tree_bipartization(const Graph& h, const CliqueWeighting& f) {
  if (!is_connected(h)) {
    throw PreconditionError("tree characterization needs a connected graph");
  }
  const EdgeCoverage cover = is_edge_covered(h, f);
  if (!cover.covered) {
    throw PreconditionError(
        "edge " + std::to_string(cover.uncovered->u) + "-" +
        std::to_string(cover.uncovered->v) +
        " lies in no positively weighted clique");
  }

  auto fail = [](int condition, const VertexSet& witness, std::string why) {
    return TreeVerdict{false, condition, witness, std::move(why)};
  };

  for (const auto& [k, w] : f.entries()) {
    if (k.size() >= 2 && w >= 2) {
      return fail(1, k,
                  "clique " + set_text(k) + " has weight " + std::to_string(w));
    }
  }
  const BlockDecomposition d = block_decomposition(h);
  for (const VertexSet& b : d.blocks) {
    if (!is_clique(h, b)) {
      return fail(2, b, "block " + set_text(b) + " is not complete");
    }
  }
  for (const auto& [k, w] : f.entries()) {
    if (k.size() < 2) continue;
    if (std::find(d.blocks.begin(), d.blocks.end(), k) == d.blocks.end()) {
      return fail(3, k, "clique " + set_text(k) + " has weight 1 but is not a block");
    }
  }
  for (const VertexSet& b : d.blocks) {
    if (b.size() >= 2 && f(b) == 0) {
      return fail(3, b, "block " + set_text(b) + " has weight 0");
    }
  }
  return {};
}

CliqueWeighting tree_weighting_for(const Graph& h) {
  if (h.order() == 0) throw PreconditionError("graph is empty");
  if (!is_connected(h)) throw PreconditionError("graph is disconnected");
  CliqueWeighting f(h.order());
  if (h.order() == 1) {
    f.assign(h, VertexSet{0}, 1);
    return f;
  }
  VertexSet seen{0};
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : h.neighbors(x) - seen) {
      seen.insert(y);
      queue.push_back(y);
      f.assign(h, VertexSet{x, y}, 1);
    }
  }
  return f;
}

}  // namespace bipart
