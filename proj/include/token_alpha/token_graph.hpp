#pragma once

#include "token_alpha/bitset.hpp"
#include "token_alpha/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace token_alpha {

/// A 2-subset {a, b} of base vertices, stored with a < b.
struct TokenVertex {
  Vertex a;
  Vertex b;

  /// Canonicalizes the order; throws ParameterError when a == b.
  static TokenVertex of(Vertex x, Vertex y);

  bool contains(Vertex v) const noexcept { return a == v || b == v; }

  friend auto operator<=>(const TokenVertex &, const TokenVertex &) = default;
};

std::string to_string(const TokenVertex &p);

/// Sorted list of token pairs, the serialized form of witness sets.
using PairList = std::vector<TokenVertex>;

/// The 2-token graph F2(G): one vertex per 2-subset of V(G), indexed in
/// lexicographic order of (a, b); {a,x} ~ {b,x} exactly when ab is an edge.
class TokenGraph {
public:
  /// Throws ParameterError when base.order() < 2.
  explicit TokenGraph(Graph base);

  const Graph &base() const noexcept { return base_; }
  const Graph &graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }

  Vertex index_of(TokenVertex p) const;
  TokenVertex pair_of(Vertex index) const { return pairs_.at(index); }
  std::span<const TokenVertex> pairs() const noexcept { return pairs_; }

  /// Neighbor bitset of each token vertex.
  std::span<const Bitset> rows() const noexcept { return rows_; }

  VertexSet to_vertex_set(std::span<const TokenVertex> pairs) const;
  PairList to_pairs(const VertexSet &set) const;

private:
  Graph base_;
  Graph graph_;
  std::vector<TokenVertex> pairs_;
  std::vector<Bitset> rows_;
};

TokenGraph build_f2(const Graph &g);

/// Token vertices of F2(G1 + G2) classified by where their two elements lie,
/// with `split` = |V(G1)|.
struct JoinPartition {
  VertexSet b1; ///< both elements below split
  VertexSet b2; ///< both elements at or above split
  VertexSet r;  ///< one on each side
};

JoinPartition join_partition(const TokenGraph &tg, std::size_t split);

/// Neighbor bitsets for an arbitrary graph.
std::vector<Bitset> adjacency_rows(const Graph &g);

} // namespace token_alpha
