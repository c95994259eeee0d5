#include "oracle.hpp"
#include "token_alpha/error.hpp"
#include "token_alpha/family.hpp"
#include "token_alpha/graph.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace token_alpha;

namespace {

std::vector<Edge> edges_of(const Graph &g) {
  return {g.edges().begin(), g.edges().end()};
}

std::vector<std::vector<Vertex>> members_of(const std::vector<VertexSet> &cs) {
  std::vector<std::vector<Vertex>> out;
  for (const auto &c : cs)
    out.emplace_back(c.begin(), c.end());
  return out;
}

} // namespace

TEST_CASE("graph canonicalizes and rejects malformed edges") {
  Graph g(3, {{2, 1}, {1, 2}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(edges_of(g) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
  CHECK_THROWS_AS(VertexSet(3, {0, 3}), ParameterError);
}

TEST_CASE("generate") {
  SUBCASE("path") {
    CHECK(edges_of(generate(FamilySpec::path(3))) ==
          std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("fan is E_1 joined to P_3") {
    const auto g = generate(FamilySpec::fan(1, 3));
    CHECK(g.order() == 4);
    CHECK(edges_of(g) ==
          std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(g == generate(FamilySpec::join(FamilySpec::empty(1),
                                         FamilySpec::path(3))));
  }
  SUBCASE("K_{2,2} is a 4-cycle") {
    const auto g = generate(FamilySpec::complete_bipartite(2, 2));
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    for (auto d : g.degrees())
      CHECK(d == 2);
    CHECK(components(g).size() == 1);
  }
  SUBCASE("invalid parameters name the constraint") {
    CHECK_THROWS_WITH_AS(generate(FamilySpec::cycle(2)),
                         "cycle requires m >= 3", ParameterError);
    CHECK_THROWS_AS(generate(FamilySpec::wheel(1, 2)), ParameterError);
    CHECK_THROWS_AS(generate(FamilySpec::path_union({2, 0})), ParameterError);
    CHECK_THROWS_AS(generate(FamilySpec::path(0)), ParameterError);
  }
}

TEST_CASE("join") {
  CHECK(edges_of(join(empty_graph(1), empty_graph(1))) ==
        std::vector<Edge>{{0, 1}});
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 5; ++m)
      CHECK(join(empty_graph(n), complete_graph(m)).edge_count() ==
            m * (m - 1) / 2 + n * m);
  CHECK(join(empty_graph(1), cycle_graph(3)) == complete_graph(4));
}

TEST_CASE("generate(Join) matches join of generated operands") {
  const std::vector<FamilySpec> parts = {
      FamilySpec::path(3), FamilySpec::cycle(4), FamilySpec::empty(2),
      FamilySpec::fan(1, 2), FamilySpec::path_union({1, 2})};
  for (const auto &a : parts)
    for (const auto &b : parts)
      CHECK(generate(FamilySpec::join(a, b)) == join(generate(a), generate(b)));
}

TEST_CASE("delete_vertices") {
  SUBCASE("middle of P_5") {
    const auto sub = delete_vertices(path_graph(5), VertexSet(5, {2}));
    CHECK(sub.graph.order() == 4);
    CHECK(edges_of(sub.graph) == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(sub.new_to_old == std::vector<Vertex>{0, 1, 3, 4});
  }
  SUBCASE("two vertices of C_5") {
    const auto sub = delete_vertices(cycle_graph(5), VertexSet(5, {0, 2}));
    CHECK(sub.new_to_old == std::vector<Vertex>{1, 3, 4});
    CHECK(members_of(components(sub.graph)) ==
          std::vector<std::vector<Vertex>>{{0}, {1, 2}});
  }
  SUBCASE("nothing removed") {
    CHECK(delete_vertices(path_graph(3), VertexSet(3, {})).graph ==
          path_graph(3));
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(delete_vertices(path_graph(3), VertexSet(5, {4})),
                    ParameterError);
  }
}

TEST_CASE("components and odd components") {
  const auto p2p2 = generate(FamilySpec::path_union({2, 2}));
  CHECK(members_of(components(p2p2)) ==
        std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
  CHECK(members_of(components(empty_graph(3))) ==
        std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
  CHECK(components(cycle_graph(4)).size() == 1);

  CHECK(odd_component_count(generate(FamilySpec::path_union({3, 2}))) == 1);
  CHECK(odd_component_count(empty_graph(3)) == 3);
  CHECK(odd_component_count(generate(FamilySpec::path_union({2, 4}))) == 0);
}

TEST_CASE("component sizes sum to the order; odd count has its parity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + rng() % 14;
    const auto g = oracle::random_graph(n, 0.15, rng);
    std::size_t total = 0;
    for (const auto &c : components(g))
      total += c.size();
    CHECK(total == n);
    CHECK(odd_component_count(g) % 2 == n % 2);
  }
}

TEST_CASE("deleting from paths and cycles leaves path forests") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = 3 + rng() % 10;
    const auto base = trial % 2 ? path_graph(m) : cycle_graph(m);
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < m; ++v)
      if (rng() % 3 == 0)
        removed.push_back(v);
    if (removed.empty())
      removed.push_back(static_cast<Vertex>(rng() % m));
    const auto sub = delete_vertices(base, VertexSet(m, removed));
    CHECK(is_path_forest(sub.graph));
  }
  CHECK_FALSE(is_path_forest(cycle_graph(4)));
  CHECK_FALSE(is_path_forest(generate(FamilySpec::complete_bipartite(1, 3))));
}
