#include "bipart/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "bipart/bipartizer.hpp"
#include "bipart/blocks.hpp"
#include "bipart/cliques.hpp"
#include "bipart/domination.hpp"
#include "bipart/enumerate.hpp"
#include "bipart/errors.hpp"
#include "bipart/family_b.hpp"
#include "bipart/io.hpp"

namespace bipart {
namespace {

constexpr std::size_t kProp1Ceiling = 4;
constexpr std::size_t kThm2Ceiling = 8;
constexpr std::size_t kThm4Ceiling = 5;
constexpr std::size_t kLemma4Ceiling = 5;
constexpr std::size_t kLemma4RandomCeiling = 7;
constexpr std::size_t kLemma5Ceiling = 8;
constexpr std::size_t kThm5ForwardCeiling = 4;
constexpr std::size_t kThm5WideValueCeiling = 3;
constexpr std::size_t kThm5SampledOrder = 5;
constexpr std::size_t kThm5Ceiling = 8;
constexpr std::size_t kCor6Ceiling = 10;
constexpr std::size_t kMaxWeight = 2;
constexpr std::size_t kMaxKeySize = 3;

const SolverLimits kWide{64};

using Failure = std::optional<std::string>;

std::string one_line(const CliqueWeighting& f) {
  std::string text = write_weighting(f);
  if (!text.empty()) text.pop_back();
  std::string out;
  for (char c : text) out += c == '\n' ? std::string("; ") : std::string(1, c);
  return out;
}

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::uint64_t power_of_three(std::size_t k) {
  std::uint64_t p = 1;
  while (k-- > 0) p *= 3;
  return p;
}

// Runs one instance, turning exceptions into failures.
void record(SuiteTally& t, const Graph& g, const CliqueWeighting* f,
            const std::function<Failure()>& body) {
  Failure failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  ++t.checked;
  if (failure) t.fail({write_graph6(g), f ? one_line(*f) : "", *failure});
}

// Weightings over `keys` with values 0..max_value, zero function first.
void for_each_weighting(const Graph& h, const std::vector<Clique>& keys,
                        std::size_t max_value,
                        const std::function<void(const CliqueWeighting&)>& visit) {
  std::vector<std::size_t> w(keys.size(), 0);
  while (true) {
    CliqueWeighting f(h.order());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (w[i] != 0) f.assign(h, keys[i], w[i]);
    }
    visit(f);
    std::size_t i = 0;
    while (i < w.size() && w[i] == max_value) w[i++] = 0;
    if (i == w.size()) return;
    ++w[i];
  }
}

std::vector<Clique> small_cliques(const Graph& h) {
  CliqueLimits limits;
  limits.max_size = kMaxKeySize;
  return enumerate_cliques(h, limits);
}

bool has_cycle(const Graph& g) {
  return g.size() + components(g).size() > g.order();
}

// --- prop1 -----------------------------------------------------------------

struct Probe {
  VertexSet x;
  std::vector<Clique> meeting;
};

Failure check_prop1(const Graph& h, const CliqueWeighting& f,
                    const std::vector<Probe>& probes) {
  const BipartiteGraph g = bipartize(h, f);
  const Graph& bg = g.graph();
  std::size_t expected_edges = 0;
  for (const auto& [k, w] : f.entries()) expected_edges += w * k.size();
  if (bg.order() != h.order() + f.total() || bg.size() != expected_edges) {
    return "order or size differs from the weight totals";
  }
  if (g.side_a() != VertexSet::range(h.order())) return "side A is not V_H";

  std::vector<VertexSet> expected(h.order());
  for (Vertex b : g.side_b()) {
    const auto& copy = g.label(b);
    if (!copy) return "unlabeled B vertex " + std::to_string(b);
    if (copy->index < 1 || copy->index > f(copy->clique)) {
      return "copy index out of range at " + std::to_string(b);
    }
    if (bg.neighbors(b) != copy->clique) return "copy neighbourhood is not its clique at " + std::to_string(b);
    for (Vertex v : copy->clique) expected[v].insert(b);
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (bg.neighbors(v) != expected[v]) return "A-vertex neighbourhood is not its copies at " + std::to_string(v);
  }

  for (const Probe& p : probes) {
    VertexSet want;
    for (Vertex b : g.side_b()) {
      if (std::binary_search(p.meeting.begin(), p.meeting.end(), g.label(b)->clique,
                             SizeThenLex{})) {
        want.insert(b);
      }
    }
    if (set_neighborhood(bg, p.x) != want) return "set neighbourhood is not the meeting copies for X with front " +
                                                  std::to_string(p.x.front());
  }

  if (is_connected(h) && is_edge_covered(h, f).covered && !is_connected(bg)) {
    return "bipartization is disconnected";
  }

  CliqueWeighting capped(h.order());
  for (const auto& [k, w] : f.entries()) capped.assign(h, k, 1);
  if (!is_induced_subgraph_by_weights(h, f, capped)) return "induced-subgraph test fails for min(f,1)";
  if (!is_induced_subgraph_by_weights(h, f, f)) return "induced-subgraph test fails for g = f";
  if (!f.is_zero()) {
    CliqueWeighting bigger = f;
    const auto& [k, w] = f.entries().front();
    bigger.assign(h, k, w + 1);
    if (is_induced_subgraph_by_weights(h, f, bigger)) {
      return "induced-subgraph test accepted g exceeding f";
    }
  }
  return std::nullopt;
}

void suite_prop1(std::size_t max_n, Shard shard, SuiteTally& t) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_labeled_graph(n, {}, [&](const Graph& h) {
      std::vector<Probe> probes;
      const VertexSet all = VertexSet::range(n);
      probes.push_back({all, cliques_meeting(h, all)});
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
          const VertexSet x{u, v};
          probes.push_back({x, cliques_meeting(h, x)});
        }
      }
      for_each_weighting(h, small_cliques(h), kMaxWeight, [&](const CliqueWeighting& f) {
        record(t, h, &f, [&] { return check_prop1(h, f, probes); });
      });
    }, shard);
  }
}

// --- thm2 ------------------------------------------------------------------

Failure check_thm2(const Graph& g) {
  const BipartiteGraph bg = BipartiteGraph::from_graph(g);
  for (Side side : {Side::A, Side::B}) {
    if (bg.other_side(side).empty()) continue;
    const char* name = side == Side::A ? "A" : "B";
    const InversionResult inv = invert_bipartization(bg, side);
    if (!roundtrip_matches(bg, side, inv)) return std::string("roundtrip fails on side ") + name;
    if (inv.f.total() != bg.other_side(side).size()) {
      return std::string("weight total differs from other side on ") + name;
    }
    if (inv.f.support_size() != similarity_partition(bg, side == Side::A ? Side::B : Side::A).classes.size()) {
      return std::string("positive keys differ from similarity classes on ") + name;
    }
    const std::vector<Vertex>& ids = inv.h_vertices;
    for (Vertex j = 0; j < ids.size(); ++j) {
      for (Vertex i = 0; i < j; ++i) {
        const bool at_two = distance(g, ids[i], ids[j]) == std::optional<std::size_t>{2};
        if (inv.h.has_edge(i, j) != at_two) {
          return std::string("H edge does not match distance 2 on ") + name;
        }
      }
    }
  }
  return std::nullopt;
}

void suite_thm2_graph(const Graph& g, SuiteTally& t) {
  record(t, g, nullptr, [&] { return check_thm2(g); });
}

// --- thm4 ------------------------------------------------------------------

class Thm4Sweep {
 public:
  Thm4Sweep(const Graph& h, SuiteTally& t) : h_(h), t_(t) {
    for (Clique& k : small_cliques(h)) {
      (k.size() == 1 ? singles_ : keys_).push_back(std::move(k));
    }
    const BlockDecomposition d = block_decomposition(h);
    failed_at_root_ = !is_block_graph(h) || block_size_excess(d) > 0 ||
                      std::any_of(d.blocks.begin(), d.blocks.end(),
                                  [](const VertexSet& b) { return b.size() > kMaxKeySize; });
    for (const Clique& k : keys_) {
      is_block_.push_back(std::find(d.blocks.begin(), d.blocks.end(), k) != d.blocks.end());
    }
    w_.assign(keys_.size(), 0);
  }

  void run() {
    Forest forest{};
    for (std::size_t v = 0; v < forest.size(); ++v) forest[v] = static_cast<std::uint8_t>(v);
    dfs(0, forest, false, failed_at_root_);
  }

 private:
  using Forest = std::array<std::uint8_t, kMaxEnumerationOrder>;

  static std::uint8_t root(Forest& p, std::uint8_t v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  }

  CliqueWeighting current() const {
    CliqueWeighting f(h_.order());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (w_[i] != 0) f.assign(h_, keys_[i], w_[i]);
    }
    return f;
  }

  // `cycle`: the copies assigned so far already close a cycle, which no
  // extension removes. `failed`: the assigned part already breaks one of the
  // tree conditions, which no extension repairs either.
  void dfs(std::size_t i, const Forest& forest, bool cycle, bool failed) {
    if (cycle && failed) {
      t_.pruned += power_of_three(keys_.size() - i + singles_.size());
      spot_check();
      return;
    }
    if (i == keys_.size()) {
      leaf();
      return;
    }
    for (std::size_t value = 0; value <= kMaxWeight; ++value) {
      w_[i] = value;
      Forest next = forest;
      bool closes = cycle;
      for (std::size_t copy = 0; copy < value && !closes; ++copy) {
        std::uint8_t joined = 0xff;
        for (Vertex v : keys_[i]) {
          const std::uint8_t r = root(next, static_cast<std::uint8_t>(v));
          if (joined == 0xff) {
            joined = r;
          } else if (r == joined) {
            closes = true;
            break;
          } else {
            next[r] = joined;
          }
        }
      }
      const bool breaks = failed || value > 1 || (value == 1) != is_block_[i];
      dfs(i + 1, next, closes, breaks);
    }
    w_[i] = 0;
  }

  // Positions not yet assigned hold 0, so current() is the zero completion.
  // The subtree is cyclic, so path pairs found here only get their shape
  // checked.
  void spot_check() {
    const CliqueWeighting f = current();
    record(t_, h_, &f, [&]() -> Failure {
      for (Vertex v = 0; v < h_.order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
          const auto paths = find_two_disjoint_f_paths(h_, f, u, v);
          if (!paths) continue;
          t_.count("disjoint-path witness pairs validated");
          if (auto bad = validate_paths(f, u, v, paths->first, paths->second)) return bad;
        }
      }
      if (!is_edge_covered(h_, f).covered) return std::nullopt;
      t_.count("pruned subtrees spot-checked");
      if (is_tree(bipartize(h_, f).graph())) return "pruned subtree contains a tree";
      if (is_tree_bipartization(h_, f).is_tree) return "pruned subtree accepted by checker";
      return std::nullopt;
    });
  }

  void leaf() {
    const CliqueWeighting base = current();
    check_disjoint_paths(base);
    if (!is_edge_covered(h_, base).covered) {
      t_.skipped += power_of_three(singles_.size());
      return;
    }
    std::vector<std::size_t> s(singles_.size(), 0);
    while (true) {
      CliqueWeighting f = base;
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] != 0) f.assign(h_, singles_[j], s[j]);
      }
      record(t_, h_, &f, [&]() -> Failure {
        const bool direct = is_tree(bipartize(h_, f).graph());
        const TreeVerdict verdict = is_tree_bipartization(h_, f);
        if (direct != verdict.is_tree) {
          return "checker says " + std::string(verdict.is_tree ? "tree" : "not tree") +
                 ", bipartization says " + (direct ? "tree" : "not tree");
        }
        return std::nullopt;
      });
      std::size_t j = 0;
      while (j < s.size() && s[j] == kMaxWeight) s[j++] = 0;
      if (j == s.size()) break;
      ++s[j];
    }
  }

  // Two internally disjoint positively valued complete paths force a cycle.
  // Leaves are reached with no cycle or along the one assignment the tree
  // conditions allow, so acyclic weightings are covered exhaustively; on
  // those the finder must come back empty for every pair. Pruned subtrees
  // are cyclic and satisfy the implication trivially. Singleton weights
  // affect neither paths nor cycles and stay at zero.
  void check_disjoint_paths(const CliqueWeighting& f) {
    const bool cyclic = has_cycle(bipartize(h_, f).graph());
    t_.count(cyclic ? "disjoint-path cyclic weightings" : "disjoint-path acyclic weightings");
    record(t_, h_, &f, [&]() -> Failure {
      for (Vertex v = 0; v < h_.order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
          const auto paths = find_two_disjoint_f_paths(h_, f, u, v);
          if (!paths) continue;
          if (auto bad = validate_paths(f, u, v, paths->first, paths->second)) return bad;
          if (!cyclic) {
            return "two disjoint paths " + edge_text(Edge::of(u, v)) + " but no cycle";
          }
        }
      }
      return std::nullopt;
    });
  }

  Failure validate_paths(const CliqueWeighting& f, Vertex u, Vertex v,
                         const FCompletePath& p, const FCompletePath& q) const {
    for (const FCompletePath* path : {&p, &q}) {
      const auto& vs = path->vertices;
      if (vs.size() < 2 || vs.front() != u || vs.back() != v ||
          path->cliques.size() + 1 != vs.size()) {
        return "malformed path";
      }
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Clique& k = path->cliques[i];
        if (std::count(path->cliques.begin(), path->cliques.end(), k) != 1) {
          return "clique repeats within a path";
        }
        if (f(k) == 0 || !k.contains(vs[i]) || !k.contains(vs[i + 1]) ||
            vs[i] == vs[i + 1]) {
          return "path step " + std::to_string(i) + " is not positively valued";
        }
      }
    }
    VertexSet inner_p(p.vertices.begin() + 1, p.vertices.end() - 1);
    VertexSet inner_q(q.vertices.begin() + 1, q.vertices.end() - 1);
    if (inner_p.intersects(inner_q)) return "paths share an inner vertex";
    if (p == q) return "paths are identical";
    return std::nullopt;
  }

  const Graph& h_;
  SuiteTally& t_;
  std::vector<Clique> keys_;
  std::vector<Clique> singles_;
  std::vector<bool> is_block_;
  std::vector<std::size_t> w_;
  bool failed_at_root_ = false;
};

void suite_thm4(std::size_t max_n, Shard shard, SuiteTally& t) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_labeled_graph(n, {true, false}, [&](const Graph& h) {
      const CliqueWeighting tw = tree_weighting_for(h);
      record(t, h, &tw, [&]() -> Failure {
        Graph spanning(h.order());
        for (const auto& [k, w] : tw.entries()) {
          if (k.size() == 2) spanning.add_edge(k.front(), k.back());
        }
        if (!is_tree(spanning)) return "weighted edges do not form a spanning tree";
        if (!is_tree_bipartization(spanning, tw).is_tree) {
          return "spanning tree weighting rejected on the spanning tree";
        }
        if (!is_tree(bipartize(h, tw).graph())) return "spanning tree weighting is not a tree";
        return std::nullopt;
      });
      Thm4Sweep(h, t).run();
    }, shard);
  }
}

// --- lemma4 ----------------------------------------------------------------

Failure check_lemma4(const Graph& h) {
  const BlockDecomposition d = block_decomposition(h);
  std::size_t sum = 0;
  VertexSet covered;
  for (const VertexSet& b : d.blocks) {
    sum += b.size() - 1;
    covered |= b;
  }
  if (sum != h.order() - 1) {
    return "block sum " + std::to_string(sum) + " != " + std::to_string(h.order() - 1);
  }
  if (covered != h.vertices()) return "blocks miss a vertex";
  for (const Edge& e : h.edges()) {
    const auto holders = std::count_if(d.blocks.begin(), d.blocks.end(), [&](const VertexSet& b) {
      return b.contains(e.u) && b.contains(e.v);
    });
    if (holders != 1) return "edge " + edge_text(e) + " in " + std::to_string(holders) + " blocks";
  }
  return std::nullopt;
}

void suite_lemma4(std::size_t max_n, const HarnessOptions& o, Shard shard, SuiteTally& t) {
  for (std::size_t n = 1; n <= std::min(max_n, kLemma4Ceiling); ++n) {
    for_each_labeled_graph(n, {true, false}, [&](const Graph& h) {
      record(t, h, nullptr, [&] { return check_lemma4(h); });
    }, shard);
  }
  const std::size_t top = std::min(max_n, kLemma4RandomCeiling);
  if (top < 2) return;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> order(2, top);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::size_t n = order(rng);
    const double p = density(rng);
    const Graph h = random_connected_graph(n, p, rng);
    if (!shard.owns(i)) continue;
    t.count("random samples");
    record(t, h, nullptr, [&] { return check_lemma4(h); });
  }
}

// --- lemma5 / thm5 canonical ------------------------------------------------

Failure check_lemma5(const Graph& g, SuiteTally& t) {
  const BipartiteGraph o = normalized(BipartiteGraph::from_graph(g));
  const std::size_t a = o.side_a().size();
  const std::size_t b = o.side_b().size();
  const DominatingSet d = domination_number(g);
  const std::size_t gamma = d.size();
  if (!is_dominating(g, d.members)) return "witness does not dominate";
  const std::size_t beta = covering_number(g);
  if (beta != max_matching_bipartite(o).size()) return "Konig equality fails";
  if (gamma > beta) return "gamma > beta";
  if (gamma > std::min(a, b)) return "gamma > min(|A|,|B|)";
  const bool by_gamma = gamma == a;
  const bool by_cover = gamma == beta && beta == a;
  const Lemma5Verdict verdict = check_lemma5_conditions(o);
  if (by_gamma) t.count("in family B");
  if (by_gamma != by_cover || by_gamma != verdict.holds) {
    return "gamma=" + std::to_string(gamma) + " beta=" + std::to_string(beta) +
           " |A|=" + std::to_string(a) + " conditions=" + (verdict.holds ? "hold" : "fail");
  }
  if (a == b && check_lemma5_conditions(o.swapped()).holds != by_gamma) {
    return "swapped orientation disagrees";
  }
  return std::nullopt;
}

Failure check_thm5_canonical(const Graph& g, SuiteTally& t) {
  const BipartiteGraph o = normalized(BipartiteGraph::from_graph(g));
  if (domination_number(g).size() != o.side_a().size()) return std::nullopt;
  t.count("canonical instances with gamma = |A|");
  const InversionResult inv = invert_bipartization(o, Side::A);
  const WeightingVerdict v = check_theorem5_properties(inv.h, inv.f);
  if (!v.holds) {
    return "canonical inversion fails property (" + std::to_string(v.failed) + ")" +
           (v.witness_edge ? " at " + edge_text(*v.witness_edge) : std::string());
  }
  return std::nullopt;
}

// --- thm5 forward ----------------------------------------------------------

Failure check_thm5_forward(const Graph& h, const CliqueWeighting& f, SuiteTally& t) {
  if (!check_theorem5_properties(h, f).holds) return std::nullopt;
  t.count("forward instances satisfying both properties");
  const BipartiteGraph g = bipartize(h, f);
  const std::size_t a = g.side_a().size();
  if (a > g.side_b().size()) return "|A| > |B|";
  const std::size_t gamma = domination_number(g.graph(), kWide).size();
  if (gamma != a) return "gamma=" + std::to_string(gamma) + " but |A|=" + std::to_string(a);
  return std::nullopt;
}

void suite_thm5(std::size_t max_n, const HarnessOptions& o, Shard shard, SuiteTally& t) {
  // Values up to 2 through order 4, and up to 3 where that stays small.
  for (const auto& [top, values] : {std::pair{kThm5ForwardCeiling, kMaxWeight},
                                   std::pair{kThm5WideValueCeiling, kMaxWeight + 1}}) {
    for (std::size_t n = 1; n <= std::min(max_n, top); ++n) {
      for_each_labeled_graph(n, {true, false}, [&](const Graph& h) {
        for_each_weighting(h, small_cliques(h), values, [&](const CliqueWeighting& f) {
          if (f.is_zero()) return;
          record(t, h, &f, [&] { return check_thm5_forward(h, f, t); });
        });
      }, shard);
    }
  }
  if (max_n >= kThm5SampledOrder) {
    std::mt19937_64 rng(o.seed ^ 0x7468356675);
    std::uniform_real_distribution<double> density(0.3, 0.9);
    std::uniform_int_distribution<std::size_t> value(0, kMaxWeight);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Graph h = random_connected_graph(kThm5SampledOrder, density(rng), rng);
      CliqueWeighting f(h.order());
      for (const Clique& k : small_cliques(h)) {
        if (const std::size_t w = value(rng)) f.assign(h, k, w);
      }
      if (!shard.owns(i) || f.is_zero()) continue;
      t.count("forward random samples");
      record(t, h, &f, [&] { return check_thm5_forward(h, f, t); });
    }
  }
  for (std::size_t n = 2; n <= std::min(max_n, kThm5Ceiling); ++n) {
    for_each_labeled_graph(n, {true, true}, [&](const Graph& g) {
      record(t, g, nullptr, [&] { return check_thm5_canonical(g, t); });
    }, shard);
  }
}

// --- cor6 ------------------------------------------------------------------

Failure check_cor6(const Graph& tree) {
  const BipartiteGraph o = normalized(BipartiteGraph::from_graph(tree));
  const bool in_b = domination_number(tree, kWide).size() == o.side_a().size();
  const InversionResult inv = invert_bipartization(o, Side::A);
  const WeightingVerdict v = check_corollary6(inv.h, inv.f);
  if (in_b != v.holds) {
    return std::string("gamma = |A| is ") + (in_b ? "true" : "false") +
           " but the corollary check " + (v.holds ? "holds" : "fails");
  }
  return std::nullopt;
}

void suite_cor6(std::size_t max_n, Shard shard, SuiteTally& t) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    for_each_labeled_tree(n, [&](const Graph& tree) {
      record(t, tree, nullptr, [&] { return check_cor6(tree); });
    }, shard);
  }
}

// --- dispatch ----------------------------------------------------------------

using SuiteBody = std::function<void(Shard, SuiteTally&)>;

void corpus_sweep(std::string_view suite, const std::string& path, Shard shard,
                  SuiteTally& t) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus " + path);
  std::uint64_t index = 0;
  read_graph6_stream(in, [&](const Graph& g) {
    if (!shard.owns(index++)) return;
    const bool connected = is_connected(g);
    const bool bipartite = bipartition(g).has_value();
    const bool usable = connected && bipartite && g.order() >= 2;
    if (g.order() > 64) {
      ++t.skipped;
      return;
    }
    try {
      if (suite == "lemma4" && connected) {
        record(t, g, nullptr, [&] { return check_lemma4(g); });
      } else if (suite == "thm2" && usable) {
        suite_thm2_graph(g, t);
      } else if (suite == "lemma5" && usable) {
        if (g.order() > SolverLimits{}.max_order) throw SizeLimitError("corpus graph too large");
        record(t, g, nullptr, [&] { return check_lemma5(g, t); });
      } else if (suite == "thm5" && usable) {
        if (g.order() > SolverLimits{}.max_order) throw SizeLimitError("corpus graph too large");
        record(t, g, nullptr, [&] { return check_thm5_canonical(g, t); });
      } else if (suite == "cor6" && is_tree(g) && g.order() >= 2) {
        record(t, g, nullptr, [&] { return check_cor6(g); });
      } else {
        ++t.skipped;
      }
    } catch (const SizeLimitError&) {
      ++t.skipped;
    }
  });
}

SuiteBody body_for(std::string_view suite, const HarnessOptions& o, std::size_t max_n) {
  if (o.corpus) {
    const std::string path = *o.corpus;
    const std::string name(suite);
    return [path, name](Shard s, SuiteTally& t) { corpus_sweep(name, path, s, t); };
  }
  if (suite == "prop1") return [max_n](Shard s, SuiteTally& t) { suite_prop1(max_n, s, t); };
  if (suite == "thm2") {
    return [max_n](Shard s, SuiteTally& t) {
      for (std::size_t n = 2; n <= max_n; ++n) {
        for_each_labeled_graph(n, {true, true}, [&](const Graph& g) { suite_thm2_graph(g, t); }, s);
      }
    };
  }
  if (suite == "thm4") return [max_n](Shard s, SuiteTally& t) { suite_thm4(max_n, s, t); };
  if (suite == "lemma4") {
    return [max_n, o](Shard s, SuiteTally& t) { suite_lemma4(max_n, o, s, t); };
  }
  if (suite == "lemma5") {
    return [max_n](Shard s, SuiteTally& t) {
      for (std::size_t n = 2; n <= max_n; ++n) {
        for_each_labeled_graph(n, {true, true}, [&](const Graph& g) {
          record(t, g, nullptr, [&] { return check_lemma5(g, t); });
        }, s);
      }
    };
  }
  if (suite == "thm5") {
    return [max_n, o](Shard s, SuiteTally& t) { suite_thm5(max_n, o, s, t); };
  }
  if (suite == "cor6") return [max_n](Shard s, SuiteTally& t) { suite_cor6(max_n, s, t); };
  throw InputError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace

void SuiteTally::fail(Counterexample c) {
  ++failed;
  auto at = std::lower_bound(counterexamples.begin(), counterexamples.end(), c);
  counterexamples.insert(at, std::move(c));
  if (counterexamples.size() > kMaxCounterexamples) counterexamples.pop_back();
}

void SuiteTally::count(const std::string& key, std::uint64_t by) {
  auto at = std::find_if(counters.begin(), counters.end(),
                         [&](const auto& c) { return c.first == key; });
  if (at == counters.end()) {
    counters.emplace_back(key, by);
  } else {
    at->second += by;
  }
}

void SuiteTally::merge(const SuiteTally& other) {
  checked += other.checked;
  pruned += other.pruned;
  skipped += other.skipped;
  const std::uint64_t failed_before = failed;
  for (const Counterexample& c : other.counterexamples) fail(c);
  failed = failed_before + other.failed;
  for (const auto& [key, value] : other.counters) count(key, value);
}

std::uint64_t HarnessReport::failures() const {
  std::uint64_t total = 0;
  for (const SuiteTally& s : suites) total += s.failed;
  return total;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop1", "thm2",   "thm4", "lemma4",
                                              "lemma5", "thm5", "cor6"};
  return names;
}

std::size_t suite_ceiling(std::string_view suite) {
  if (suite == "prop1") return kProp1Ceiling;
  if (suite == "thm2") return kThm2Ceiling;
  if (suite == "thm4") return kThm4Ceiling;
  if (suite == "lemma4") return kLemma4RandomCeiling;
  if (suite == "lemma5") return kLemma5Ceiling;
  if (suite == "thm5") return kThm5Ceiling;
  if (suite == "cor6") return kCor6Ceiling;
  throw InputError("unknown suite '" + std::string(suite) + "'");
}

SuiteTally run_suite(std::string_view suite, const HarnessOptions& options) {
  const std::size_t ceiling = suite_ceiling(suite);
  const std::size_t max_n = options.max_n ? std::min(*options.max_n, ceiling) : ceiling;
  const SuiteBody body = body_for(suite, options, max_n);
  const std::size_t workers = std::max<std::size_t>(1, options.workers);

  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteTally> parts(workers);
  if (workers == 1) {
    body({0, 1}, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          body({w, workers}, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SuiteTally total;
  total.name = std::string(suite);
  total.max_n = max_n;
  for (const SuiteTally& part : parts) total.merge(part);
  std::sort(total.counters.begin(), total.counters.end());
  total.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

HarnessReport run_harness(std::span<const std::string> suites,
                          const HarnessOptions& options) {
  HarnessReport report;
  for (const std::string& s : suites) report.suites.push_back(run_suite(s, options));
  return report;
}

std::string format_harness_report(const HarnessReport& report) {
  std::ostringstream os;
  for (const SuiteTally& s : report.suites) {
    os << "suite " << s.name << ": max_n=" << s.max_n << " checked=" << s.checked
       << " failed=" << s.failed << " pruned=" << s.pruned << " skipped=" << s.skipped
       << '\n';
    for (const auto& [key, value] : s.counters) {
      os << "  " << key << ": " << value << '\n';
    }
    for (const Counterexample& c : s.counterexamples) {
      os << "  counterexample graph6=" << c.graph6;
      if (!c.weighting.empty()) os << " weighting=\"" << c.weighting << '"';
      os << " detail=\"" << c.detail << "\"\n";
    }
    os << "time " << s.name << ": " << std::fixed << std::setprecision(2) << s.seconds
       << " s\n";
    os.unsetf(std::ios::floatfield);
  }
  os << "total failures: " << report.failures() << '\n'
     << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::size_t workers_from_env() {
  if (const char* raw = std::getenv("BIPART_WORKERS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return value;
  }
  return 1;
}

}  // namespace bipart
