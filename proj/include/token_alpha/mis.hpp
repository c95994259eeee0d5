#pragma once

#include "token_alpha/graph.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace token_alpha {

enum class MisMethod { exhaustive, branch_and_bound };

std::string_view to_string(MisMethod m);

struct MisResult {
  std::size_t size = 0;
  VertexSet witness;
  MisMethod method = MisMethod::branch_and_bound;
  std::uint64_t nodes_explored = 0;
  /// Set when the node budget ran out; `size` is then only a lower bound.
  bool budget_exceeded = false;
};

struct SolverOptions {
  /// Maximum search nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

/// Throws ParameterError when `s` names a vertex outside `g`.
bool is_independent(const Graph &g, const VertexSet &s);

inline constexpr std::size_t kExhaustiveCap = 30;

/// Subset enumeration with extension pruning. The witness is the
/// lexicographically least maximum independent set. Throws CapacityError
/// above kExhaustiveCap vertices.
MisResult max_independent_set_exhaustive(const Graph &g);

/// Exact branch and bound: branches on a maximum-degree vertex, bounds by a
/// greedy clique cover of the residual graph. The witness is a maximum
/// independent set but not necessarily the lexicographically least one.
MisResult max_independent_set(const Graph &g, const SolverOptions &opts = {});

} // namespace token_alpha
