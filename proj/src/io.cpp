#include "token_alpha/io.hpp"

#include "token_alpha/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

namespace token_alpha {

void write_edge_list(std::ostream &out, const Graph &g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto &e : g.edges())
    out << "e " << e.u << ' ' << e.v << '\n';
}

void write_token_graph(std::ostream &out, const TokenGraph &tg) {
  for (Vertex i = 0; i < tg.order(); ++i)
    out << "c pair " << i << " = " << to_string(tg.pair_of(i)) << '\n';
  write_edge_list(out, tg.graph());
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    if (i > start)
      words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line,
                        const char *what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" +
                               std::string(word) + "'");
  return value;
}

} // namespace

Graph read_graph(std::istream &in) {
  std::optional<std::size_t> order;
  std::size_t declared_edges = 0;
  bool one_indexed = false;
  std::vector<Edge> edges;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto words = split_words(raw);
    if (words.empty() || words[0] == "c")
      continue;

    if (words[0] == "p") {
      if (order)
        throw ParseError(lineno, "duplicate problem line");
      // Native: "p <order> <edges>". DIMACS: "p edge <order> <edges>".
      if (words.size() == 4 && (words[1] == "edge" || words[1] == "col")) {
        one_indexed = true;
        order = parse_count(words[2], lineno, "vertex count");
        declared_edges = parse_count(words[3], lineno, "edge count");
      } else if (words.size() == 3) {
        order = parse_count(words[1], lineno, "vertex count");
        declared_edges = parse_count(words[2], lineno, "edge count");
      } else {
        throw ParseError(lineno, "malformed problem line '" + raw + "'");
      }
      continue;
    }

    if (words[0] == "e") {
      if (!order)
        throw ParseError(lineno, "edge line before problem line");
      if (words.size() != 3)
        throw ParseError(lineno, "edge line needs two endpoints");
      auto u = parse_count(words[1], lineno, "vertex");
      auto v = parse_count(words[2], lineno, "vertex");
      if (one_indexed) {
        if (u == 0 || v == 0)
          throw ParseError(lineno, "DIMACS vertices are 1-indexed");
        --u;
        --v;
      }
      if (u >= *order || v >= *order)
        throw ParseError(lineno, "vertex out of range");
      if (u == v)
        throw ParseError(lineno, "self-loop");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      continue;
    }

    throw ParseError(lineno, "unrecognized line '" + raw + "'");
  }

  if (!order)
    throw ParseError(lineno, "missing problem line");
  // Counted before deduplication: DIMACS files may list both directions.
  if (edges.size() != declared_edges)
    throw ParseError(lineno, "problem line declares " +
                                 std::to_string(declared_edges) +
                                 " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(*order, std::move(edges));
}

Graph read_graph_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());
  return read_graph(in);
}

void write_graph_file(const std::filesystem::path &path, const Graph &g) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  write_edge_list(out, g);
}

} // namespace token_alpha
