#include "token_alpha/constructions.hpp"

#include "token_alpha/error.hpp"

#include <algorithm>
#include <string>

namespace token_alpha {

std::size_t PathUnionLayout::order() const {
  std::size_t total = 0;
  for (auto p : parts)
    total += p;
  return total;
}

namespace {

// Stable reorder of components so odd sizes come first.
PathUnionLayout odd_first(std::vector<std::vector<Vertex>> comps) {
  std::stable_partition(comps.begin(), comps.end(),
                        [](const auto &c) { return c.size() % 2 == 1; });
  PathUnionLayout layout;
  for (auto &c : comps) {
    layout.parts.push_back(c.size());
    layout.odd_parts += c.size() % 2;
    layout.vertices.push_back(std::move(c));
  }
  return layout;
}

std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

} // namespace

PathUnionLayout path_union_layout(std::span<const std::size_t> parts) {
  if (parts.empty())
    throw ParameterError("path union layout needs at least one part");
  std::vector<std::vector<Vertex>> comps;
  Vertex next = 0;
  for (auto p : parts) {
    if (p == 0)
      throw ParameterError("path union parts must be >= 1");
    std::vector<Vertex> c(p);
    for (auto &v : c)
      v = next++;
    comps.push_back(std::move(c));
  }
  return odd_first(std::move(comps));
}

PathUnionLayout path_union_layout(const Graph &path_forest) {
  if (path_forest.order() == 0)
    throw ParameterError("path union layout needs at least one vertex");
  if (!is_path_forest(path_forest))
    throw ParameterError("graph is not a disjoint union of paths");

  const auto adj = path_forest.adjacency_lists();
  std::vector<std::vector<Vertex>> comps;
  for (const auto &component : components(path_forest)) {
    Vertex start = component.members().front();
    for (auto v : component)
      if (adj[v].size() <= 1) {
        start = v;
        break;
      }
    std::vector<Vertex> walk{start};
    while (walk.size() < component.size()) {
      const auto cur = walk.back();
      const auto prev = walk.size() > 1 ? walk[walk.size() - 2] : cur;
      walk.push_back(adj[cur][0] != prev ? adj[cur][0] : adj[cur][1]);
    }
    comps.push_back(std::move(walk));
  }
  return odd_first(std::move(comps));
}

PairList path_union_independent_set(const PathUnionLayout &layout) {
  PairList out;
  const auto &comps = layout.vertices;
  // Positions are 1-based in the parity rules; equal parity of 0-based
  // indices is the same condition.
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t l = 0; l < comps[i].size(); ++l) {
      for (std::size_t k = l + 1; k < comps[i].size(); ++k)
        if ((l + k) % 2 == 1)
          out.push_back(TokenVertex::of(comps[i][l], comps[i][k]));
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        for (std::size_t k = 0; k < comps[j].size(); ++k)
          if ((l + k) % 2 == 0)
            out.push_back(TokenVertex::of(comps[i][l], comps[j][k]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool pairs_independent(const Graph &base, std::span<const TokenVertex> pairs) {
  for (const auto &p : pairs)
    if (p.a >= p.b || p.b >= base.order())
      throw ParameterError("pair " + to_string(p) +
                           " is not a 2-subset of the base vertices");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto &p = pairs[i];
      const auto &q = pairs[j];
      // Adjacent iff they share exactly one element and the two others form
      // an edge of the base graph.
      Vertex x, y;
      if (p.a == q.a && p.b != q.b) {
        x = p.b, y = q.b;
      } else if (p.a == q.b) {
        x = p.b, y = q.a;
      } else if (p.b == q.a) {
        x = p.a, y = q.b;
      } else if (p.b == q.b && p.a != q.a) {
        x = p.a, y = q.a;
      } else {
        continue;
      }
      if (base.has_edge(x, y))
        return false;
    }
  }
  return true;
}

std::size_t associated_set_size(std::size_t n, std::size_t s1, std::size_t s2,
                                std::size_t mis) {
  return s1 * s2 + choose2(n - s1) + mis;
}

PairList associated_independent_set(const AssociatedSetInput &input) {
  const auto n = input.n;
  const auto &h = input.h;
  if (n == 0)
    throw ContractError("associated set requires n >= 1");
  if (input.s1.parent_order() != n ||
      (!input.s1.empty() && input.s1.members().back() >= n))
    throw ContractError("s1 must be a subset of V(E_n)");
  if (input.s2.parent_order() != h.order() ||
      (!input.s2.empty() && input.s2.members().back() >= h.order()))
    throw ContractError("s2 must be a subset of V(H)");
  for (const auto &e : h.edges())
    if (input.s2.contains(e.u) && input.s2.contains(e.v))
      throw ContractError("s2 is not independent in H");
  for (const auto &p : input.mis_h_minus_s2) {
    if (p.a >= p.b || p.b >= h.order())
      throw ContractError("pair " + to_string(p) + " is not a pair of V(H)");
    if (input.s2.contains(p.a) || input.s2.contains(p.b))
      throw ContractError("pair " + to_string(p) + " meets s2");
  }
  // F2(H - s2) is the subgraph of F2(H) induced by pairs avoiding s2.
  if (!pairs_independent(h, input.mis_h_minus_s2))
    throw ContractError("supplied set is not independent in F2(H - s2)");

  PairList out;
  const auto shift = static_cast<Vertex>(n);
  for (auto u : input.s1)
    for (auto v : input.s2)
      out.push_back({u, shift + v});
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!input.s1.contains(a) && !input.s1.contains(b))
        out.push_back({a, b});
  for (const auto &p : input.mis_h_minus_s2)
    out.push_back({shift + p.a, shift + p.b});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtractedSets extract_s1_s2(std::span<const TokenVertex> pairs, std::size_t n,
                            const Graph &h) {
  const auto g = join(empty_graph(n), h);
  if (!pairs_independent(g, pairs))
    throw ContractError("input set is not independent in F2(E_n + H)");

  std::vector<std::vector<Vertex>> neighborhood(n);
  bool has_cross = false;
  for (const auto &p : pairs) {
    if (p.a < n && p.b >= n) {
      neighborhood[p.a].push_back(static_cast<Vertex>(p.b - n));
      has_cross = true;
    }
  }
  if (!has_cross)
    throw ContractError("input set contains no pair between E_n and H");

  std::vector<Vertex> s1;
  Vertex best = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (!neighborhood[u].empty())
      s1.push_back(u);
    if (neighborhood[u].size() > neighborhood[best].size())
      best = u;
  }
  return {VertexSet(n, std::move(s1)),
          VertexSet(h.order(), std::move(neighborhood[best]))};
}

} // namespace token_alpha
