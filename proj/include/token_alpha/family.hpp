#pragma once

#include "token_alpha/graph.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace token_alpha {

struct FamilySpec;

namespace family {

struct Path {
  std::size_t m;
};
struct Cycle {
  std::size_t m;
};
struct Empty {
  std::size_t n;
};
struct Complete {
  std::size_t n;
};
struct PathUnion {
  std::vector<std::size_t> parts;
};
/// E_n + P_m
struct Fan {
  std::size_t n, m;
};
/// E_n + C_m
struct Wheel {
  std::size_t n, m;
};
/// E_n + K_m
struct Split {
  std::size_t n, m;
};
/// K_{n,m} = E_n + E_m
struct CompleteBipartite {
  std::size_t n, m;
};
struct Join {
  std::shared_ptr<const FamilySpec> left;
  std::shared_ptr<const FamilySpec> right;
};

} // namespace family

/// Symbolic description of one graph instance.
struct FamilySpec {
  using Variant =
      std::variant<family::Path, family::Cycle, family::Empty,
                   family::Complete, family::PathUnion, family::Fan,
                   family::Wheel, family::Split, family::CompleteBipartite,
                   family::Join>;
  Variant value;

  static FamilySpec path(std::size_t m) { return {family::Path{m}}; }
  static FamilySpec cycle(std::size_t m) { return {family::Cycle{m}}; }
  static FamilySpec empty(std::size_t n) { return {family::Empty{n}}; }
  static FamilySpec complete(std::size_t n) { return {family::Complete{n}}; }
  static FamilySpec path_union(std::vector<std::size_t> parts) {
    return {family::PathUnion{std::move(parts)}};
  }
  static FamilySpec fan(std::size_t n, std::size_t m) {
    return {family::Fan{n, m}};
  }
  static FamilySpec wheel(std::size_t n, std::size_t m) {
    return {family::Wheel{n, m}};
  }
  static FamilySpec split(std::size_t n, std::size_t m) {
    return {family::Split{n, m}};
  }
  static FamilySpec complete_bipartite(std::size_t n, std::size_t m) {
    return {family::CompleteBipartite{n, m}};
  }
  static FamilySpec join(FamilySpec a, FamilySpec b);

  /// Lower-case tag used on the command line: "path", "fan", "path-union", ...
  std::string tag() const;
  /// e.g. "fan(n=2,m=3)", "path-union(3,2)", "join(path(m=3),empty(n=1))"
  std::string to_string() const;

  /// Throws ParameterError naming the violated constraint.
  void validate() const;
};

/// Builds the graph. Join operands keep their own numbering with the first
/// operand's vertices first; paths and cycles are numbered along the path.
Graph generate(const FamilySpec &spec);

/// Size of the E_n side for the join families Fan/Wheel/Split/CompleteBipartite
/// (and a generic Join: order of the left operand). Zero for other families.
std::size_t join_split(const FamilySpec &spec);

} // namespace token_alpha
