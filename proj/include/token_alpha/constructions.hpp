#pragma once

#include "token_alpha/graph.hpp"
#include "token_alpha/token_graph.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace token_alpha {

/// A union of paths with its components ordered odd sizes first.
struct PathUnionLayout {
  /// Part sizes, odd parts first, stable within each parity class.
  std::vector<std::size_t> parts;
  /// vertices[i][j] is the base vertex at position j + 1 along component i.
  std::vector<std::vector<Vertex>> vertices;
  /// Number of odd parts.
  std::size_t odd_parts = 0;

  std::size_t order() const;
};

/// Layout for the graph generate(PathUnion(parts)): the component of size
/// parts[k] occupies a consecutive block of labels starting at the sum of the
/// preceding parts. Throws ParameterError on an empty list or a zero part.
PathUnionLayout path_union_layout(std::span<const std::size_t> parts);

/// Layout for an arbitrary graph whose components are all paths, each walked
/// from its lower-labelled end. Throws ParameterError otherwise.
PathUnionLayout path_union_layout(const Graph &path_forest);

/// The parity construction: pairs from distinct components whose positions
/// have the same parity, plus pairs within one component whose positions
/// have different parity. Its size is (m^2 + t^2 - 2t) / 4.
PairList path_union_independent_set(const PathUnionLayout &layout);

/// Input of the associated-set construction for E_n + H.
struct AssociatedSetInput {
  std::size_t n = 0;
  Graph h;
  VertexSet s1; ///< subset of V(E_n) = {0..n-1}
  VertexSet s2; ///< independent subset of V(H), H's own labels
  /// Independent set of F2(H - s2), as pairs of H's original labels.
  PairList mis_h_minus_s2;
};

/// Builds I_R ∪ I_B in F2(E_n + H) under the join labeling (E_n first, H
/// shifted by n): every cross pair {u, n+v} with u in s1 and v in s2, every
/// pair of E_n avoiding s1, and the supplied set shifted by n.
/// Throws ContractError when an input invariant fails.
PairList associated_independent_set(const AssociatedSetInput &input);

/// |s1||s2| + C(n - |s1|, 2) + |mis|, the size the construction produces.
std::size_t associated_set_size(std::size_t n, std::size_t s1, std::size_t s2,
                                std::size_t mis);

struct ExtractedSets {
  VertexSet s1; ///< E_n vertices with a nonempty neighborhood in I
  VertexSet s2; ///< N_I(u') for the lowest u' of largest |N_I(u')|
};

/// Recovers (S1, S2) from an independent set of F2(E_n + h), given as pairs
/// under the join labeling. Throws ContractError when `pairs` is not
/// independent or contains no cross pair.
ExtractedSets extract_s1_s2(std::span<const TokenVertex> pairs, std::size_t n,
                            const Graph &h);

/// Checks a pair list against the token-graph adjacency rule directly.
bool pairs_independent(const Graph &base, std::span<const TokenVertex> pairs);

} // namespace token_alpha
