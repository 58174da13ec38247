#include "bipart/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "bipart/bipartizer.hpp"
#include "bipart/blocks.hpp"
#include "bipart/domination.hpp"
#include "bipart/errors.hpp"
#include "bipart/family_b.hpp"
#include "bipart/harness.hpp"
#include "bipart/io.hpp"

namespace bipart {
namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

// First graph6 record of a file; later records must still decode.
Graph read_graph6_file(const std::string& path) {
  std::istringstream in(slurp(path));
  std::optional<Graph> first;
  read_graph6_stream(in, [&](Graph g) {
    if (!first) first = std::move(g);
  });
  if (!first) throw InputError(path + " holds no graph6 record");
  return *std::move(first);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

struct Paths {
  std::string graph;
  std::string weights;
  std::string dot;
  std::string out_graph;
  std::string out_weights;
  std::string side = "a";
};

int run_bipartize(const Paths& p, std::ostream& out) {
  const Graph h = parse_edge_list(slurp(p.graph));
  const CliqueWeighting f = parse_weighting(slurp(p.weights), h);
  const BipartiteGraph g = bipartize(h, f);
  out << write_graph6(g.graph()) << '\n';
  if (!p.dot.empty()) spit(p.dot, export_dot(g, {"B", {}}));
  return kExitOk;
}

int run_invert(const Paths& p, std::ostream& out) {
  const BipartiteGraph g = BipartiteGraph::from_graph(read_graph6_file(p.graph));
  const Side side = p.side == "a" ? Side::A : Side::B;
  const InversionResult inv = invert_bipartization(g, side);
  const std::string edges = write_edge_list(inv.h);
  const std::string weights = write_weighting(inv.f);
  out << "# graph\n# vertex map:";
  for (std::size_t i = 0; i < inv.h_vertices.size(); ++i) {
    out << ' ' << i << '=' << inv.h_vertices[i];
  }
  out << '\n' << edges << "# weights\n" << weights;
  if (!p.out_graph.empty()) spit(p.out_graph, edges);
  if (!p.out_weights.empty()) spit(p.out_weights, weights);
  return kExitOk;
}

int run_check_tree(const Paths& p, std::ostream& out) {
  const Graph h = parse_edge_list(slurp(p.graph));
  const CliqueWeighting f = parse_weighting(slurp(p.weights), h);
  const TreeVerdict v = is_tree_bipartization(h, f);
  out << "tree: " << (v.is_tree ? "true" : "false") << '\n';
  if (!v.is_tree) {
    out << "violated_condition: " << v.violated_condition << '\n'
        << "witness: " << v.witness << '\n'
        << "message: " << v.message << '\n';
  }
  return v.is_tree ? kExitOk : kExitNegative;
}

int run_gamma(const Paths& p, std::ostream& out) {
  const Graph g = read_graph6_file(p.graph);
  const DominatingSet d = domination_number(g);
  out << "gamma: " << d.size() << "\nwitness: " << d.members << '\n';
  return kExitOk;
}

int run_beta(const Paths& p, std::ostream& out) {
  const Graph g = read_graph6_file(p.graph);
  const VertexSet cover = minimum_vertex_cover(g);
  out << "beta: " << cover.size() << "\nwitness: " << cover << '\n';
  return kExitOk;
}

int run_matching(const Paths& p, std::ostream& out) {
  const BipartiteGraph g = BipartiteGraph::from_graph(read_graph6_file(p.graph));
  const Matching m = max_matching_bipartite(g);
  out << "matching: " << m.size() << "\nwitness:";
  for (const Edge& e : m.edges) out << ' ' << e.u << '-' << e.v;
  out << '\n';
  return kExitOk;
}

int run_classify(const Paths& p, std::ostream& out) {
  const BipartiteGraph g = BipartiteGraph::from_graph(read_graph6_file(p.graph));
  const ClassificationReport r = classify(g);
  out << format_report(r);
  return r.in_family_b ? kExitOk : kExitNegative;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartizations of graphs: construction, inversion and checks", "bipart"};
  app.require_subcommand(1);
  Paths p;

  auto* bip = app.add_subcommand("bipartize", "print graph6 of B_f(H)");
  bip->add_option("-g,--graph", p.graph, "edge-list file of H")->required();
  bip->add_option("-f,--weights", p.weights, "weighting file")->required();
  bip->add_option("--dot", p.dot, "also write DOT to this file");

  auto* inv = app.add_subcommand("invert", "recover (H, f) from a bipartite graph");
  inv->add_option("-g,--graph", p.graph, "graph6 file")->required();
  inv->add_option("--side", p.side, "side that becomes H")
      ->check(CLI::IsMember({"a", "b"}));
  inv->add_option("--out-graph", p.out_graph, "write H as an edge list");
  inv->add_option("--out-weights", p.out_weights, "write f as a weighting file");

  auto* tree = app.add_subcommand("check-tree", "is B_f(H) a tree?");
  tree->add_option("-g,--graph", p.graph, "edge-list file of H")->required();
  tree->add_option("-f,--weights", p.weights, "weighting file")->required();

  auto* gamma = app.add_subcommand("gamma", "domination number with witness");
  auto* beta = app.add_subcommand("beta", "covering number with witness");
  auto* matching = app.add_subcommand("matching", "maximum matching of a bipartite graph");
  auto* cls = app.add_subcommand("classify", "membership in the family B");
  for (auto* sub : {gamma, beta, matching, cls}) {
    sub->add_option("-g,--graph", p.graph, "graph6 file")->required();
  }

  std::string suite = "all";
  std::optional<std::size_t> max_n;
  std::string corpus;
  HarnessOptions options;
  options.workers = workers_from_env();
  auto* verify = app.add_subcommand("verify", "run the exhaustive property suites");
  std::vector<std::string> choices = suite_names();
  choices.insert(choices.begin(), "all");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(choices));
  verify->add_option("--max-n", max_n, "cap on the enumerated order");
  verify->add_option("--corpus", corpus, "graph6 corpus instead of enumeration");
  verify->add_option("--seed", options.seed, "seed for sampled checks");
  verify->add_option("--samples", options.samples, "number of sampled instances");
  verify->add_option("--workers", options.workers, "worker threads (default BIPART_WORKERS)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bip) return run_bipartize(p, out);
    if (*inv) return run_invert(p, out);
    if (*tree) return run_check_tree(p, out);
    if (*gamma) return run_gamma(p, out);
    if (*beta) return run_beta(p, out);
    if (*matching) return run_matching(p, out);
    if (*cls) return run_classify(p, out);
    options.max_n = max_n;
    if (!corpus.empty()) options.corpus = corpus;
    std::vector<std::string> suites =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    const HarnessReport report = run_harness(suites, options);
    out << format_harness_report(report);
    return report.ok() ? kExitOk : kExitNegative;
  } catch (const ParseError& e) {
    err << "error kind=parse line=" << e.line() << " offset=" << e.offset()
        << " message=" << quote(e.what()) << '\n';
    return kExitInput;
  } catch (const SizeLimitError& e) {
    err << "error kind=" << e.kind() << " message=" << quote(e.what()) << '\n';
    return kExitSizeLimit;
  } catch (const Error& e) {
    err << "error kind=" << e.kind() << " message=" << quote(e.what()) << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error kind=internal message=" << quote(e.what()) << '\n';
    return kExitInternal;
  }
}

}  // namespace bipart
