#include "bipart/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "bipart/errors.hpp"

namespace bipart {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6Bias = 63;

struct Token {
  std::string_view text;
  std::size_t offset;
};

// Splits on whitespace and any of `seps`, recording byte offsets relative to
// `base`.
std::vector<Token> tokenize(std::string_view s, std::size_t base,
                            std::string_view seps = {}) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return c == ' ' || c == '\t' || c == '\r' || seps.find(c) != std::string_view::npos;
  };
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_sep(s[i])) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), base + start});
  }
  return out;
}

std::size_t to_number(const Token& t, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, t.offset,
                     std::string("expected ") + what + ", got '" +
                         std::string(t.text) + "'");
  }
  return value;
}

// Calls visit(line_number, content, comment_free_content) for every line.
template <typename Visit>
void for_each_line(std::string_view text, Visit visit) {
  std::size_t line = 1;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view row = text.substr(0, end);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    const std::size_t hash = row.find('#');
    visit(line, hash == std::string_view::npos ? row : row.substr(0, hash));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
    ++line;
  }
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string clique_text(const VertexSet& k,
                        const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : k) {
    if (!first) out += ',';
    out += v < names.size() ? names[v] : std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string node_name(Vertex v, const DotOptions& options) {
  return v < options.vertex_names.size() ? options.vertex_names[v]
                                         : std::to_string(v);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph6(std::string_view text, std::size_t line) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    pos = kGraph6Header.size();
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kGraph6Bias || c > kGraph6Bias + 63) {
      throw ParseError(line, i, "byte " + std::to_string(c) + " is not graph6");
    }
  }
  auto sextet = [&](std::size_t i) {
    return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - kGraph6Bias);
  };
  if (pos >= text.size()) throw ParseError(line, pos, "missing size prefix");

  // Size prefix.
  std::uint64_t n = 0;
  std::size_t width = 1;
  const std::size_t prefix_at = pos;
  if (sextet(pos) < 63) {
    n = sextet(pos);
  } else if (pos + 1 < text.size() && sextet(pos + 1) == 63) {
    width = 8;
  } else {
    width = 4;
  }
  if (width > 1) {
    const std::size_t skip = width == 8 ? 2 : 1;
    const std::size_t digits = width - skip;
    if (pos + width > text.size()) {
      throw ParseError(line, text.size(), "truncated size prefix");
    }
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | sextet(pos + skip + i);
    const bool canonical = width == 4 ? n >= 63 && n <= 258047 : n > 258047;
    if (!canonical) throw ParseError(line, prefix_at, "non-canonical size prefix");
  }
  pos += width;
  if (n > kMaxGraph6Order) {
    throw SizeLimitError("graph6 order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxGraph6Order));
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) {
    throw ParseError(line, text.size(), "truncated adjacency data: expected " +
                                            std::to_string(bytes) + " bytes");
  }
  if (text.size() - pos > bytes) {
    throw ParseError(line, pos + bytes, "trailing bytes after adjacency data");
  }

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((sextet(at) >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (sextet(last) & pad_mask) {
      throw ParseError(line, last, "non-zero padding bits");
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put = [&](std::uint64_t six) { out += static_cast<char>(six + kGraph6Bias); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
  }
  std::uint64_t acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        put(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(acc << (6 - filled));
  return out;
}

std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(Graph)>& visit) {
  std::string row;
  std::size_t line = 0;
  std::size_t count = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    visit(parse_graph6(row, line));
    ++count;
  }
  return count;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    if (blank(content)) return;
    const auto tokens = tokenize(content, 0);
    if (!g) {
      if (tokens.size() != 1) {
        throw ParseError(line, tokens[1].offset, "expected a single vertex count");
      }
      const std::size_t n = to_number(tokens[0], line, "vertex count");
      if (n > kMaxGraph6Order) {
        throw SizeLimitError("edge list order " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxGraph6Order));
      }
      g.emplace(n);
      return;
    }
    if (tokens.size() != 2) {
      throw ParseError(line, tokens.size() > 2 ? tokens[2].offset : content.size(),
                       "expected 'u v'");
    }
    const std::size_t u = to_number(tokens[0], line, "vertex id");
    const std::size_t v = to_number(tokens[1], line, "vertex id");
    for (const auto& [id, tok] : {std::pair{u, tokens[0]}, std::pair{v, tokens[1]}}) {
      if (id >= g->order()) {
        throw ParseError(line, tok.offset, "vertex " + std::to_string(id) +
                                               " out of range");
      }
    }
    if (u == v) throw ParseError(line, tokens[0].offset, "loop at vertex " + std::to_string(u));
    if (g->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(line, tokens[0].offset, "duplicate edge");
    }
    g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  });
  if (!g) throw ParseError(1, 0, "missing vertex count");
  return *std::move(g);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

CliqueWeighting parse_weighting(std::string_view text, const Graph& h) {
  CliqueWeighting f(h.order());
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    if (blank(content)) return;
    const std::size_t colon = content.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line, 0, "expected 'v1,...,vk : w'");
    }
    const auto keys = tokenize(content.substr(0, colon), 0, ",");
    const auto weight = tokenize(content.substr(colon + 1), colon + 1);
    if (keys.empty()) throw ParseError(line, 0, "empty clique key");
    if (weight.size() != 1) {
      throw ParseError(line, colon + 1, "expected exactly one weight");
    }
    VertexSet k;
    for (const Token& t : keys) {
      const std::size_t v = to_number(t, line, "vertex id");
      if (v >= h.order()) {
        throw ParseError(line, t.offset, "vertex " + std::to_string(v) + " out of range");
      }
      k.insert(static_cast<Vertex>(v));
    }
    const std::size_t w = to_number(weight[0], line, "weight");
    if (w == 0) throw ParseError(line, weight[0].offset, "weight must be positive");
    try {
      validate_clique(h, k);
    } catch (const ValidationError& e) {
      throw ParseError(line, keys[0].offset, e.what());
    }
    if (f(k) != 0) throw ParseError(line, keys[0].offset, "duplicate key");
    f.assign(h, k, w);
  });
  return f;
}

std::string write_weighting(const CliqueWeighting& f) {
  std::ostringstream os;
  for (const auto& [k, w] : f.entries()) {
    bool first = true;
    for (Vertex v : k) {
      os << (first ? "" : ",") << v;
      first = false;
    }
    os << " : " << w << '\n';
  }
  return os.str();
}

std::string export_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "graph " << quoted(options.name) << " {\n";
  if (g.order() > 0) os << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=" << quoted(node_name(v, options)) << "];\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_dot(const BipartiteGraph& bg, const DotOptions& options) {
  const Graph& g = bg.graph();
  std::ostringstream os;
  os << "graph " << quoted(options.name) << " {\n";
  if (g.order() > 0) os << "  node [shape=circle];\n";
  for (Vertex v : bg.side_a()) {
    os << "  " << v << " [label=" << quoted(node_name(v, options))
       << ", style=filled, fillcolor=black, fontcolor=white];\n";
  }
  for (Vertex v : bg.side_b()) {
    std::string label = node_name(v, options);
    if (const auto& copy = bg.label(v)) {
      label = "(" + clique_text(copy->clique, options.vertex_names) + "," +
              std::to_string(copy->index) + ")";
    }
    os << "  " << v << " [label=" << quoted(label) << "];\n";
  }
  for (const VertexSet* side : {&bg.side_a(), &bg.side_b()}) {
    if (side->empty()) continue;
    os << "  { rank=same;";
    for (Vertex v : *side) os << ' ' << v << ';';
    os << " }\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bipart
