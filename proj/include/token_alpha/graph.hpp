#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace token_alpha {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Sorted, duplicate-free subset of the vertices of a graph of a given order.
class VertexSet {
public:
  VertexSet() = default;
  /// Sorts and deduplicates `members`; throws ParameterError when a member is
  /// not below `parent_order`.
  VertexSet(std::size_t parent_order, std::vector<Vertex> members);
  VertexSet(std::size_t parent_order, std::initializer_list<Vertex> members)
      : VertexSet(parent_order, std::vector<Vertex>(members)) {}

  std::size_t parent_order() const noexcept { return parent_order_; }
  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  std::size_t parent_order_ = 0;
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..order-1. Edges are kept once each,
/// as (low, high) pairs in sorted order.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t order) : order_(order) {}
  /// Canonicalizes and deduplicates; throws ParameterError on self-loops or
  /// endpoints >= order.
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Neighbor lists, each sorted ascending.
  std::vector<std::vector<Vertex>> adjacency_lists() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
};

/// Disjoint union plus every edge between the two sides. Vertices of `g2`
/// are shifted by |g1|.
Graph join(const Graph &g1, const Graph &g2);

Graph disjoint_union(const Graph &g1, const Graph &g2);

struct InducedSubgraph {
  Graph graph;
  /// new_to_old[i] is the original label of vertex i of `graph`.
  std::vector<Vertex> new_to_old;
};

/// Induced subgraph on V(g) \ removed, renumbered preserving relative order.
InducedSubgraph delete_vertices(const Graph &g, const VertexSet &removed);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph &g);

std::size_t odd_component_count(const Graph &g);

/// True when every component is a path (max degree <= 2, acyclic).
bool is_path_forest(const Graph &g);

Graph path_graph(std::size_t m);
Graph cycle_graph(std::size_t m);
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);

} // namespace token_alpha
