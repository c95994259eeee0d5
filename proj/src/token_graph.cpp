#include "token_alpha/token_graph.hpp"

#include "token_alpha/error.hpp"

#include <string>

namespace token_alpha {

TokenVertex TokenVertex::of(Vertex x, Vertex y) {
  if (x == y)
    throw ParameterError("token pair needs two distinct vertices, got {" +
                         std::to_string(x) + "," + std::to_string(y) + "}");
  return x < y ? TokenVertex{x, y} : TokenVertex{y, x};
}

std::string to_string(const TokenVertex &p) {
  return "{" + std::to_string(p.a) + "," + std::to_string(p.b) + "}";
}

std::vector<Bitset> adjacency_rows(const Graph &g) {
  std::vector<Bitset> rows(g.order(), Bitset(g.order()));
  for (const auto &e : g.edges()) {
    rows[e.u].set(e.v);
    rows[e.v].set(e.u);
  }
  return rows;
}

namespace {

// Lexicographic rank of {a,b}, a<b, among 2-subsets of {0..n-1}.
std::size_t pair_rank(std::size_t n, std::size_t a, std::size_t b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

} // namespace

TokenGraph::TokenGraph(Graph base) : base_(std::move(base)) {
  const std::size_t n = base_.order();
  if (n < 2)
    throw ParameterError("token graph requires a base graph of order >= 2");

  pairs_.reserve(n * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      pairs_.push_back({a, b});

  // Each base edge ab yields {a,w} ~ {b,w} for every third vertex w.
  std::vector<Edge> edges;
  edges.reserve((n - 2) * base_.edge_count());
  for (const auto &e : base_.edges()) {
    for (Vertex w = 0; w < n; ++w) {
      if (w == e.u || w == e.v)
        continue;
      const auto p = TokenVertex::of(e.u, w);
      const auto q = TokenVertex::of(e.v, w);
      edges.push_back({static_cast<Vertex>(pair_rank(n, p.a, p.b)),
                       static_cast<Vertex>(pair_rank(n, q.a, q.b))});
    }
  }
  graph_ = Graph(pairs_.size(), std::move(edges));
  rows_ = adjacency_rows(graph_);
}

Vertex TokenGraph::index_of(TokenVertex p) const {
  if (p.a >= p.b || p.b >= base_.order())
    throw ParameterError("pair " + to_string(p) +
                         " is not a 2-subset of the base vertices");
  return static_cast<Vertex>(pair_rank(base_.order(), p.a, p.b));
}

VertexSet TokenGraph::to_vertex_set(std::span<const TokenVertex> pairs) const {
  std::vector<Vertex> members;
  members.reserve(pairs.size());
  for (const auto &p : pairs)
    members.push_back(index_of(p));
  return VertexSet(order(), std::move(members));
}

PairList TokenGraph::to_pairs(const VertexSet &set) const {
  PairList out;
  out.reserve(set.size());
  for (auto v : set)
    out.push_back(pair_of(v));
  return out;
}

TokenGraph build_f2(const Graph &g) { return TokenGraph(g); }

JoinPartition join_partition(const TokenGraph &tg, std::size_t split) {
  const auto n = tg.base().order();
  if (split == 0 || split >= n)
    throw ParameterError("join split must satisfy 0 < split < " +
                         std::to_string(n) + ", got " + std::to_string(split));
  std::vector<Vertex> b1, b2, r;
  for (Vertex i = 0; i < tg.order(); ++i) {
    const auto p = tg.pair_of(i);
    if (p.b < split)
      b1.push_back(i);
    else if (p.a >= split)
      b2.push_back(i);
    else
      r.push_back(i);
  }
  return {VertexSet(tg.order(), std::move(b1)),
          VertexSet(tg.order(), std::move(b2)),
          VertexSet(tg.order(), std::move(r))};
}

} // namespace token_alpha
