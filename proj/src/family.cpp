#include "token_alpha/family.hpp"

#include "token_alpha/error.hpp"

#include <numeric>
#include <type_traits>

namespace token_alpha {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string &what) {
  if (!ok)
    throw ParameterError(what);
}

std::string nm(std::size_t n, std::size_t m) {
  return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
}

} // namespace

FamilySpec FamilySpec::join(FamilySpec a, FamilySpec b) {
  return {family::Join{std::make_shared<const FamilySpec>(std::move(a)),
                       std::make_shared<const FamilySpec>(std::move(b))}};
}

std::string FamilySpec::tag() const {
  return std::visit(
      overloaded{[](const family::Path &) { return "path"; },
                 [](const family::Cycle &) { return "cycle"; },
                 [](const family::Empty &) { return "empty"; },
                 [](const family::Complete &) { return "complete"; },
                 [](const family::PathUnion &) { return "path-union"; },
                 [](const family::Fan &) { return "fan"; },
                 [](const family::Wheel &) { return "wheel"; },
                 [](const family::Split &) { return "split"; },
                 [](const family::CompleteBipartite &) {
                   return "complete-bipartite";
                 },
                 [](const family::Join &) { return "join"; }},
      value);
}

std::string FamilySpec::to_string() const {
  return std::visit(
      overloaded{
          [&](const family::Path &f) {
            return tag() + "(m=" + std::to_string(f.m) + ")";
          },
          [&](const family::Cycle &f) {
            return tag() + "(m=" + std::to_string(f.m) + ")";
          },
          [&](const family::Empty &f) {
            return tag() + "(n=" + std::to_string(f.n) + ")";
          },
          [&](const family::Complete &f) {
            return tag() + "(n=" + std::to_string(f.n) + ")";
          },
          [&](const family::PathUnion &f) {
            std::string s = tag() + "(";
            for (std::size_t i = 0; i < f.parts.size(); ++i)
              s += (i ? "," : "") + std::to_string(f.parts[i]);
            return s + ")";
          },
          [&](const family::Fan &f) { return tag() + nm(f.n, f.m); },
          [&](const family::Wheel &f) { return tag() + nm(f.n, f.m); },
          [&](const family::Split &f) { return tag() + nm(f.n, f.m); },
          [&](const family::CompleteBipartite &f) {
            return tag() + nm(f.n, f.m);
          },
          [&](const family::Join &f) {
            return "join(" + f.left->to_string() + "," + f.right->to_string() +
                   ")";
          }},
      value);
}

void FamilySpec::validate() const {
  std::visit(
      overloaded{
          [](const family::Path &f) { require(f.m >= 1, "path requires m >= 1"); },
          [](const family::Cycle &f) {
            require(f.m >= 3, "cycle requires m >= 3");
          },
          [](const family::Empty &f) {
            require(f.n >= 1, "empty graph requires n >= 1");
          },
          [](const family::Complete &f) {
            require(f.n >= 1, "complete graph requires n >= 1");
          },
          [](const family::PathUnion &f) {
            require(!f.parts.empty(), "path union requires at least one part");
            for (auto p : f.parts)
              require(p >= 1, "path union parts must be >= 1");
          },
          [](const family::Fan &f) {
            require(f.n >= 1 && f.m >= 1, "fan requires n >= 1 and m >= 1");
          },
          [](const family::Wheel &f) {
            require(f.n >= 1, "wheel requires n >= 1");
            require(f.m >= 3, "wheel requires m >= 3");
          },
          [](const family::Split &f) {
            require(f.n >= 1 && f.m >= 1, "split requires n >= 1 and m >= 1");
          },
          [](const family::CompleteBipartite &f) {
            require(f.n >= 1 && f.m >= 1,
                    "complete bipartite requires n >= 1 and m >= 1");
          },
          [](const family::Join &f) {
            require(f.left && f.right, "join requires two operands");
            f.left->validate();
            f.right->validate();
          }},
      value);
}

Graph generate(const FamilySpec &spec) {
  spec.validate();
  return std::visit(
      overloaded{
          [](const family::Path &f) { return path_graph(f.m); },
          [](const family::Cycle &f) { return cycle_graph(f.m); },
          [](const family::Empty &f) { return empty_graph(f.n); },
          [](const family::Complete &f) { return complete_graph(f.n); },
          [](const family::PathUnion &f) {
            Graph g;
            for (auto p : f.parts)
              g = disjoint_union(g, path_graph(p));
            return g;
          },
          [](const family::Fan &f) {
            return join(empty_graph(f.n), path_graph(f.m));
          },
          [](const family::Wheel &f) {
            return join(empty_graph(f.n), cycle_graph(f.m));
          },
          [](const family::Split &f) {
            return join(empty_graph(f.n), complete_graph(f.m));
          },
          [](const family::CompleteBipartite &f) {
            return join(empty_graph(f.n), empty_graph(f.m));
          },
          [](const family::Join &f) {
            return join(generate(*f.left), generate(*f.right));
          }},
      spec.value);
}

std::size_t join_split(const FamilySpec &spec) {
  return std::visit(
      overloaded{[](const family::Fan &f) { return f.n; },
                 [](const family::Wheel &f) { return f.n; },
                 [](const family::Split &f) { return f.n; },
                 [](const family::CompleteBipartite &f) { return f.n; },
                 [](const family::Join &f) {
                   return generate(*f.left).order();
                 },
                 [](const auto &) { return std::size_t{0}; }},
      spec.value);
}

} // namespace token_alpha
