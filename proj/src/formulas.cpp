#include "token_alpha/formulas.hpp"

#include "token_alpha/error.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

namespace token_alpha {

namespace formulas {

namespace {

void domain(bool ok, const std::string &what) {
  if (!ok)
    throw DomainError(what);
}

} // namespace

std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

std::uint64_t alpha_path(std::uint64_t m) {
  domain(m >= 2, "path formula requires m >= 2");
  return m * m / 4;
}

std::uint64_t alpha_cycle(std::uint64_t m) {
  domain(m >= 3, "cycle formula requires m >= 3");
  return m * (m / 2) / 2;
}

std::uint64_t alpha_empty(std::uint64_t m) {
  domain(m >= 2, "empty-graph formula requires m >= 2");
  return choose2(m);
}

std::uint64_t alpha_complete(std::uint64_t m) {
  domain(m >= 2, "complete-graph formula requires m >= 2");
  return m / 2;
}

std::uint64_t alpha_star(std::uint64_t m) {
  domain(m >= 1, "star formula requires m >= 1");
  return m <= 2 ? m : choose2(m);
}

std::uint64_t alpha_path_union(std::span<const std::size_t> parts) {
  std::uint64_t m = 0, t = 0;
  for (auto p : parts) {
    domain(p >= 1, "path union parts must be >= 1");
    m += p;
    t += p % 2;
  }
  domain(m >= 2, "path union formula requires total order >= 2");
  // m and t have the same parity, so the numerator is divisible by 4.
  return (m * m + t * t - 2 * t) / 4;
}

std::uint64_t alpha_complete_bipartite(std::uint64_t n, std::uint64_t m) {
  domain(n >= 1 && m >= 1, "complete bipartite formula requires n, m >= 1");
  return std::max(n * m, choose2(m) + choose2(n));
}

} // namespace formulas

using formulas::choose2;

AlphaFormulaResult alpha_fan(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1)
    throw DomainError("fan formula requires n >= 1 and m >= 1");
  AlphaFormulaResult r;
  r.family = FamilySpec::fan(n, m);
  if (m == 1) {
    // F_{n,1} is the star K_{n,1}.
    r.value = formulas::alpha_star(n);
    r.exceptional = n <= 2;
    r.formula_id = n <= 2 ? "fan.star-small" : "fan.star";
    return r;
  }
  if (m % 2 == 1 && (2 * n == m + 1 || 2 * n == m + 3)) {
    r.value = n * ((m + 1) / 2) + choose2(m / 2);
    r.exceptional = true;
    r.formula_id = "fan.exceptional";
    return r;
  }
  r.value = m * m / 4 + choose2(n);
  r.formula_id = "fan.generic";
  return r;
}

AlphaFormulaResult alpha_wheel(std::uint64_t n, std::uint64_t m) {
  if (n < 1)
    throw DomainError("wheel formula requires n >= 1");
  if (m < 3)
    throw DomainError("wheel formula requires m >= 3");
  AlphaFormulaResult r;
  r.family = FamilySpec::wheel(n, m);
  if (m == 3 && (n == 1 || n == 2)) {
    r.value = n == 1 ? 2 : 3;
    r.exceptional = true;
    r.formula_id = n == 1 ? "wheel.m3n1" : "wheel.m3n2";
    return r;
  }
  r.value = m * (m / 2) / 2 + choose2(n);
  r.formula_id = "wheel.generic";
  return r;
}

AlphaFormulaResult alpha_split(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1)
    throw DomainError("split formula requires n >= 1 and m >= 1");
  AlphaFormulaResult r;
  r.family = FamilySpec::split(n, m);
  if (n == 1) {
    // E_1 + K_m is K_{m+1}.
    r.value = (m + 1) / 2;
    r.exceptional = true;
    r.formula_id = "split.complete";
  } else if (n == 2) {
    r.value = (m + 3) / 2;
    r.exceptional = true;
    r.formula_id = "split.n2";
  } else {
    r.value = m / 2 + choose2(n);
    r.formula_id = "split.generic";
  }
  return r;
}

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

AlphaFormulaResult plain(const FamilySpec &spec, std::uint64_t value,
                         std::string id) {
  return {value, spec, false, std::move(id)};
}

} // namespace

std::optional<AlphaFormulaResult> alpha_closed_form(const FamilySpec &spec) {
  using R = std::optional<AlphaFormulaResult>;
  return std::visit(
      overloaded{
          [&](const family::Path &f) -> R {
            return plain(spec, formulas::alpha_path(f.m), "path");
          },
          [&](const family::Cycle &f) -> R {
            return plain(spec, formulas::alpha_cycle(f.m), "cycle");
          },
          [&](const family::Empty &f) -> R {
            return plain(spec, formulas::alpha_empty(f.n), "empty");
          },
          [&](const family::Complete &f) -> R {
            return plain(spec, formulas::alpha_complete(f.n), "complete");
          },
          [&](const family::PathUnion &f) -> R {
            return plain(spec, formulas::alpha_path_union(f.parts),
                         "path-union");
          },
          [](const family::Fan &f) -> R { return alpha_fan(f.n, f.m); },
          [](const family::Wheel &f) -> R { return alpha_wheel(f.n, f.m); },
          [](const family::Split &f) -> R { return alpha_split(f.n, f.m); },
          [&](const family::CompleteBipartite &f) -> R {
            return plain(spec, formulas::alpha_complete_bipartite(f.n, f.m),
                         "complete-bipartite");
          },
          [](const family::Join &) -> R { return std::nullopt; }},
      spec.value);
}

} // namespace token_alpha
