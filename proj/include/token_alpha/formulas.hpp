#pragma once

#include "token_alpha/family.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace token_alpha {

/// Closed-form independence numbers of 2-token graphs. Each function throws
/// DomainError below the range its formula is proven for.
namespace formulas {

std::uint64_t choose2(std::uint64_t k);

/// floor(m^2 / 4), m >= 2
std::uint64_t alpha_path(std::uint64_t m);
/// floor(m * floor(m/2) / 2), m >= 3
std::uint64_t alpha_cycle(std::uint64_t m);
/// C(m, 2), m >= 2
std::uint64_t alpha_empty(std::uint64_t m);
/// floor(m / 2), m >= 2
std::uint64_t alpha_complete(std::uint64_t m);
/// Star K_{m,1}: m for m in {1, 2}, C(m, 2) from m = 3 on.
std::uint64_t alpha_star(std::uint64_t m);
/// (m^2 + t^2 - 2t) / 4 with m the total order and t the odd part count.
std::uint64_t alpha_path_union(std::span<const std::size_t> parts);
/// max{nm, C(m,2) + C(n,2)}, n, m >= 1
std::uint64_t alpha_complete_bipartite(std::uint64_t n, std::uint64_t m);

} // namespace formulas

struct AlphaFormulaResult {
  std::uint64_t value = 0;
  FamilySpec family;
  /// True when a branch other than the generic one fired.
  bool exceptional = false;
  std::string formula_id;
};

/// Fan E_n + P_m. m = 1 reduces to the star K_{n,1}.
AlphaFormulaResult alpha_fan(std::uint64_t n, std::uint64_t m);
/// Wheel E_n + C_m, m >= 3, with the two small exceptions (m, n) = (3, 1)
/// and (3, 2).
AlphaFormulaResult alpha_wheel(std::uint64_t n, std::uint64_t m);
/// E_n + K_m.
AlphaFormulaResult alpha_split(std::uint64_t n, std::uint64_t m);

/// Dispatches on the family; empty when no closed form is known (for
/// instance a generic join). Out-of-range parameters still throw.
std::optional<AlphaFormulaResult> alpha_closed_form(const FamilySpec &spec);

} // namespace token_alpha
