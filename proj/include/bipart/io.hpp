#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bipart/bipartizer.hpp"
#include "bipart/cliques.hpp"
#include "bipart/graph.hpp"

namespace bipart {

// Largest order accepted when decoding graph6.
inline constexpr std::size_t kMaxGraph6Order = 4096;

// graph6: size prefix N(n), then the upper triangle x(i,j), i < j, in
// column-major order, six bits per byte offset by 63. An optional
// ">>graph6<<" header is skipped. Decoding is strict: unknown bytes, short or
// overlong data, non-zero padding and non-canonical size prefixes raise
// ParseError positioned at the offending byte (line is reported as given).
Graph parse_graph6(std::string_view text, std::size_t line = 1);
std::string write_graph6(const Graph& g);

// Reads one graph6 record per non-empty line and hands each to visit. Parse
// errors carry the line number within the stream.
std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(Graph)>& visit);

// Edge list: first record is the vertex count, then one "u v" pair per line.
// '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Weighting file: one "v1,v2,...,vk : w" entry per line with w positive.
// '#' starts a comment; blank lines are ignored. Keys must be cliques of h
// and may not repeat; violations are reported with their line number.
CliqueWeighting parse_weighting(std::string_view text, const Graph& h);
std::string write_weighting(const CliqueWeighting& f);

struct DotOptions {
  std::string name = "G";
  // Optional display names indexed by vertex id; ids are used when absent.
  std::vector<std::string> vertex_names;
};

// Undirected DOT. The bipartite variant fills side A, leaves side B hollow,
// labels clique copies as "({a,b},i)" and adds rank=same groups per side.
std::string export_dot(const Graph& g, const DotOptions& options = {});
std::string export_dot(const BipartiteGraph& g, const DotOptions& options = {});

}  // namespace bipart
