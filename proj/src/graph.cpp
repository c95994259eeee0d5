#include "token_alpha/graph.hpp"

#include "token_alpha/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace token_alpha {

VertexSet::VertexSet(std::size_t parent_order, std::vector<Vertex> members)
    : parent_order_(parent_order), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= parent_order_)
    throw ParameterError("vertex " + std::to_string(members_.back()) +
                         " out of range for order " +
                         std::to_string(parent_order_));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  for (auto &e : edges_) {
    if (e.u == e.v)
      throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= order_ || e.v >= order_)
      throw ParameterError("edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") out of range for order " +
                           std::to_string(order_));
    if (e.u > e.v)
      std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u > v)
    std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(order_);
  for (const auto &e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto &row : adj)
    std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(order_, 0);
  for (const auto &e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

namespace {

std::vector<Edge> shifted_edges(const Graph &g, Vertex offset) {
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (const auto &e : g.edges())
    out.push_back({e.u + offset, e.v + offset});
  return out;
}

} // namespace

Graph disjoint_union(const Graph &g1, const Graph &g2) {
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  auto right = shifted_edges(g2, static_cast<Vertex>(g1.order()));
  edges.insert(edges.end(), right.begin(), right.end());
  return Graph(g1.order() + g2.order(), std::move(edges));
}

Graph join(const Graph &g1, const Graph &g2) {
  const auto n1 = static_cast<Vertex>(g1.order());
  const auto n2 = static_cast<Vertex>(g2.order());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  auto right = shifted_edges(g2, n1);
  edges.insert(edges.end(), right.begin(), right.end());
  edges.reserve(edges.size() + std::size_t{n1} * n2);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v)
      edges.push_back({u, n1 + v});
  return Graph(g1.order() + g2.order(), std::move(edges));
}

InducedSubgraph delete_vertices(const Graph &g, const VertexSet &removed) {
  if (removed.parent_order() > g.order() ||
      (!removed.empty() && removed.members().back() >= g.order()))
    throw ParameterError("deletion set does not fit a graph of order " +
                         std::to_string(g.order()));

  constexpr Vertex kGone = static_cast<Vertex>(-1);
  std::vector<Vertex> old_to_new(g.order(), kGone);
  InducedSubgraph out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed.contains(v))
      continue;
    old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto &e : g.edges()) {
    if (old_to_new[e.u] != kGone && old_to_new[e.v] != kGone)
      edges.push_back({old_to_new[e.u], old_to_new[e.v]});
  }
  out.graph = Graph(out.new_to_old.size(), std::move(edges));
  return out;
}

std::vector<VertexSet> components(const Graph &g) {
  // Union-find with path halving; roots are resolved to the smallest member.
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto &e : g.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::vector<Vertex>> groups(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    groups[find(v)].push_back(v);

  std::vector<VertexSet> out;
  for (auto &group : groups)
    if (!group.empty())
      out.emplace_back(g.order(), std::move(group));
  return out;
}

std::size_t odd_component_count(const Graph &g) {
  std::size_t odd = 0;
  for (const auto &c : components(g))
    odd += c.size() % 2;
  return odd;
}

bool is_path_forest(const Graph &g) {
  for (auto d : g.degrees())
    if (d > 2)
      return false;
  // A forest has exactly order - #components edges.
  return g.edge_count() + components(g).size() == g.order();
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < m; ++v)
    edges.push_back({v, v + 1});
  return Graph(m, std::move(edges));
}

Graph cycle_graph(std::size_t m) {
  if (m < 3)
    throw ParameterError("cycle requires m >= 3, got " + std::to_string(m));
  const auto path = path_graph(m);
  std::vector<Edge> edges(path.edges().begin(), path.edges().end());
  edges.push_back({0, static_cast<Vertex>(m - 1)});
  return Graph(m, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

} // namespace token_alpha
