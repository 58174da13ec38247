// Acceptance runner: one "criterion N: PASS|FAIL ..." line per criterion.
// With arguments, only the listed criteria run.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bipart/bipartizer.hpp"
#include "bipart/blocks.hpp"
#include "bipart/domination.hpp"
#include "bipart/enumerate.hpp"
#include "bipart/errors.hpp"
#include "bipart/family_b.hpp"
#include "bipart/harness.hpp"
#include "bipart/io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace bipart;
using namespace bipart::testing;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(std::uint64_t x) { return std::to_string(x); }

Verdict suite(const std::string& name, std::optional<std::size_t> max_n,
              std::optional<std::uint64_t> expected_checked = std::nullopt) {
  HarnessOptions o;
  o.max_n = max_n;
  o.workers = workers_from_env();
  const SuiteTally t = run_suite(name, o);
  Verdict v;
  v.note(name + " max_n=" + str(t.max_n) + " checked=" + str(t.checked) +
         " failed=" + str(t.failed));
  v.expect(t.failed == 0, name + " reported failures");
  for (const Counterexample& c : t.counterexamples) {
    v.note("counterexample " + c.graph6 + " " + c.weighting + " " + c.detail);
  }
  if (expected_checked) {
    v.expect(t.checked == *expected_checked,
             "expected " + str(*expected_checked) + " instances");
  }
  return v;
}

// S(H): the vertices of H, then one vertex per edge in edge order.
Graph subdivision(const Graph& h) {
  const std::vector<Edge> edges = h.edges();
  Graph s(h.order() + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex m = static_cast<Vertex>(h.order() + i);
    s.add_edge(edges[i].u, m);
    s.add_edge(edges[i].v, m);
  }
  return s;
}

std::vector<std::size_t> block_sizes(const Graph& g) {
  std::vector<std::size_t> out;
  for (const VertexSet& b : block_decomposition(g).blocks) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

Verdict criterion1() {
  Verdict v;
  const Graph h = paw();
  const CliqueWeighting f = paw_weights();
  std::size_t order = h.order();
  std::size_t size = 0;
  for (const auto& [k, w] : f.entries()) {
    order += w;
    size += w * k.size();
  }
  const Graph b = bipartize(h, f).graph();
  v.note("B_f(H): " + str(b.order()) + " vertices, " + str(b.size()) + " edges");
  v.expect(b.order() == 17 && b.size() == 23, "17 vertices and 23 edges");
  v.expect(b.order() == order && b.size() == size, "counts match the identities");

  const BipartiteGraph g = bipartize(h, paw_unit_edges());
  v.expect(g.graph() == subdivision(h), "B_g(H) equals S(H)");
  v.expect(g.graph().order() == 8 && g.graph().size() == 8, "S(H) has 8 vertices, 8 edges");
  for (Vertex x : g.side_b()) v.expect(g.graph().degree(x) == 2, "B-vertex of degree 2");
  return v;
}

Verdict criterion2() {
  Verdict v;
  const BipartiteGraph g = BipartiteGraph::from_graph(sample_tree());
  v.expect(g.side_a() == (VertexSet{0, 1, 2, 3}), "solid side is {a,b,c,d}");

  const InversionResult solid = invert_bipartization(g, Side::A);
  v.expect(solid.h == tree_solid_h(), "solid side recovers H");
  v.expect(solid.f == tree_solid_f(), "solid side recovers f-bar");
  v.expect(block_sizes(solid.h) == std::vector<std::size_t>{2, 3}, "H is a triangle plus an edge");
  v.expect(roundtrip_matches(g, Side::A, solid), "B_fbar(H) maps onto G");

  const InversionResult hollow = invert_bipartization(g, Side::B);
  v.expect(hollow.h == tree_hollow_h(), "hollow side recovers F");
  v.expect(hollow.f == tree_hollow_f(), "hollow side recovers g-bar");
  v.expect(block_sizes(hollow.h) == std::vector<std::size_t>{2, 2, 3, 3},
           "F has two triangle blocks and two edge blocks");
  v.expect(roundtrip_matches(g, Side::B, hollow), "B_gbar(F) maps onto G");

  v.expect(is_tree(bipartize(tree_solid_h(), tree_solid_f()).graph()), "B_fbar(H) is a tree");
  v.note("H blocks 3+2, F blocks 3+3+2+2; both maps verified");
  return v;
}

// Labeled connected bipartite graphs on 2..8 vertices.
constexpr std::uint64_t kConnectedBipartite2To8 = 1 + 3 + 19 + 195 + 3031 + 67263 + 2086099;

Verdict criterion3() { return suite("thm2", 8, kConnectedBipartite2To8); }
Verdict criterion4() { return suite("thm4", 5); }
Verdict criterion5() {
  // Connected labeled graphs n <= 5 (1 + 1 + 4 + 38 + 728) plus the samples.
  return suite("lemma4", std::nullopt, 772 + 10000);
}
Verdict criterion6() { return suite("lemma5", 8, kConnectedBipartite2To8); }

Verdict criterion7() {
  Verdict v = suite("thm5", std::nullopt);
  const WeightingVerdict w = check_theorem5_properties(tree_hollow_h(), tree_hollow_f());
  v.expect(!w.holds && w.failed == 2, "(F, g-bar) fails property (2)");
  const ClassificationReport r = classify(bipartize(tree_hollow_h(), tree_hollow_f()));
  v.expect(r.in_family_b, "B_gbar(F) lies in the family");
  v.note("asymmetry fixture: property (2) fails on F while gamma = |A| = " + str(r.gamma));
  return v;
}

Verdict criterion8() {
  std::uint64_t trees = 0;
  for (std::uint64_t n = 2; n <= 10; ++n) {
    std::uint64_t t = 1;
    for (std::uint64_t i = 2; i < n; ++i) t *= n;
    trees += t;
  }
  return suite("cor6", 10, trees);
}

Verdict criterion9() {
  Verdict v;
  const Graph k33 = complete_bipartite(3, 3);
  v.expect(domination_number(k33).size() == 2, "gamma(K33) = 2");
  v.expect(domination_number(path(4)).size() == 2, "gamma(P4) = 2");
  v.expect(covering_number(path(4)) == 2, "beta(P4) = 2");

  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  auto koenig = [&](const BipartiteGraph& g) {
    ++checked;
    if (max_matching_bipartite(g).size() != oracle::beta_branching(g.graph())) ++bad;
  };
  // Every labeled bipartite graph up to 8 vertices.
  for (std::size_t n = 1; n <= kMaxEnumerationOrder; ++n) {
    for_each_labeled_graph(n, {false, true},
                           [&](const Graph& g) { koenig(BipartiteGraph::from_graph(g)); });
  }
  const std::uint64_t labeled = checked;
  // For 9 and 10 vertices: relabelling a colour class of size k <= n/2 onto
  // {0..k-1} reaches every labeled bipartite graph up to isomorphism, and
  // both sides of the identity are isomorphism invariants.
  for (std::size_t n = 9; n <= 10; ++n) {
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      VertexSet a;
      VertexSet b;
      for (Vertex x = 0; x < n; ++x) (x < k ? a : b).insert(x);
      const std::size_t cross = k * (n - k);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < cross; ++i) {
          if ((mask >> i) & 1U) {
            g.add_edge(static_cast<Vertex>(i / (n - k)), static_cast<Vertex>(k + i % (n - k)));
          }
        }
        koenig(BipartiteGraph::with_sides(std::move(g), a, b));
      }
    }
  }
  v.note("Koenig: " + str(labeled) + " labeled graphs n<=8, " + str(checked - labeled) +
         " fixed-split graphs n=9,10, " + str(bad) + " mismatches");
  v.expect(bad == 0, "matching size equals cover size");
  return v;
}

int exit_status(const std::string& command) {
  const int raw = std::system(command.c_str());
  return raw != -1 && WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Verdict criterion10() {
  Verdict v;
  const std::string out = std::string(BIPART_TMP_DIR) + "/verify_all_6.txt";
  const int code = exit_status(std::string(BIPART_CLI) + " verify --suite all --max-n 6 > " + out);
  v.note("verify --suite all --max-n 6 exit " + std::to_string(code));
  v.expect(code == 0, "verify exits 0");

  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<std::size_t> order(0, 70);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uint64_t failures = 0;
  std::uint64_t rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::size_t n = order(rng);
    const double p = density(rng);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex y = 1; y < n; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        if (coin(rng)) g.add_edge(x, y);
      }
    }
    const std::string s = write_graph6(g);
    try {
      if (parse_graph6(s) != g) ++failures;
    } catch (const Error&) {
      ++failures;
    }
    // One corrupted byte: rejected, or decoded to a graph with that exact text.
    std::string c = s;
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
    char repl;
    do {
      repl = static_cast<char>(byte(rng));
    } while (repl == c[at]);
    c[at] = repl;
    try {
      if (write_graph6(parse_graph6(c)) != c) ++failures;
    } catch (const ParseError&) {
      ++rejected;
    } catch (const SizeLimitError&) {
      ++rejected;
    }
  }
  v.note("graph6 fuzz: 100000 cases, " + str(failures) + " failures, " + str(rejected) +
         " corruptions rejected");
  v.expect(failures == 0, "graph6 round trip");

  const int e2e = exit_status(std::string("sh ") + BIPART_E2E + " " + BIPART_CLI + " " +
                              BIPART_TMP_DIR + "/acceptance_e2e > " + BIPART_TMP_DIR + "/e2e.txt 2>&1");
  v.note("end-to-end script exit " + std::to_string(e2e));
  v.expect(e2e == 0, "exit codes 0, 1, 2, 3 observed");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<std::size_t> chosen;
  for (int i = 1; i < argc; ++i) chosen.push_back(std::stoul(argv[i]));
  if (chosen.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) chosen.push_back(i);
  }
  bool all = true;
  for (std::size_t id : chosen) {
    if (id == 0 || id > criteria.size()) {
      std::cerr << "no criterion " << id << '\n';
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[id - 1]();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " (" << timing
              << ")";
    for (const std::string& n : v.notes) std::cout << "; " << n;
    std::cout << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
