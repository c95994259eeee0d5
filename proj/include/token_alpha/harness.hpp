#pragma once

#include "token_alpha/constructions.hpp"
#include "token_alpha/family.hpp"
#include "token_alpha/formulas.hpp"
#include "token_alpha/graph.hpp"
#include "token_alpha/mis.hpp"
#include "token_alpha/token_graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace token_alpha {

struct MethodSet {
  bool formula = false;
  bool construction = false;
  bool solver = false;

  static MethodSet all() { return {true, true, true}; }
  /// Comma-separated subset of "formula,construction,solver".
  static MethodSet parse(const std::string &text);
  std::string to_string() const;
};

enum class Verdict { agree, disagree, aborted };
std::string_view to_string(Verdict v);

enum class ReportFormat { tsv, json };

struct RunOptions {
  MethodSet methods = MethodSet::all();
  std::uint64_t node_budget = 100'000'000;
  /// Omits timings and includes solver witnesses, so reports are
  /// byte-reproducible.
  bool deterministic = false;
};

struct ConstructionOutcome {
  PairList witness;
  bool independent = false;
};

struct SolverOutcome {
  std::size_t size = 0;
  std::uint64_t nodes = 0;
  double millis = 0;
  bool aborted = false;
  bool witness_valid = false;
  PairList witness;
};

/// One verification record: F2 of one graph, checked by up to three methods.
struct AlphaRow {
  std::string family;
  std::string label;
  std::optional<std::size_t> n, m;
  std::vector<std::size_t> parts;
  std::optional<AlphaFormulaResult> formula;
  std::optional<ConstructionOutcome> construction;
  std::optional<SolverOutcome> solver;
  Verdict verdict = Verdict::agree;
};

/// The associated set for E_n + H chosen the way the theorems attain their
/// values: S1 = V(E_n) and S2 = a maximum independent set of H when
/// `use_cross_pairs`, otherwise S1 = S2 = {} (all of F2(E_n) plus a maximum
/// independent set of F2(H)). The F2(H - S2) part uses the parity
/// construction when H - S2 is a union of paths and the exact solver
/// otherwise.
PairList join_construction(std::size_t n, const Graph &h, bool use_cross_pairs);

/// Explicit independent set attaining the closed form, for the families
/// that have one; empty for cycles and generic joins.
std::optional<PairList> theorem_construction(const FamilySpec &spec);

AlphaRow run_alpha(const FamilySpec &spec, const RunOptions &opts);
/// Solver-only row for an imported graph (no closed form, no construction).
AlphaRow run_alpha_graph(const std::string &label, const Graph &g,
                         const RunOptions &opts);

struct IntRange {
  std::size_t lo = 0, hi = 0;
  /// "A..B" or "A"; throws ParameterError when malformed or B < A.
  static IntRange parse(const std::string &text);
};

struct SweepConfig {
  std::string family;
  std::optional<IntRange> n_range;
  std::optional<IntRange> m_range;
  RunOptions run;
  std::uint64_t seed = 0;
  ReportFormat format = ReportFormat::tsv;
  /// 0 means "use TOKEN_ALPHA_THREADS or the hardware concurrency".
  unsigned threads = 0;
};

struct AlphaReport {
  std::vector<AlphaRow> rows;
  std::size_t agree = 0, disagree = 0, aborted = 0;
};

/// Every composition of `total` into positive parts, lexicographically.
std::vector<std::vector<std::size_t>> compositions(std::size_t total);

/// Instances of a sweep in lexicographic parameter order.
std::vector<FamilySpec> expand_sweep(const SweepConfig &config);

FamilySpec parse_family(const std::string &family, std::optional<std::size_t> n,
                        std::optional<std::size_t> m,
                        const std::vector<std::size_t> &parts);

AlphaReport run_sweep(const SweepConfig &config);
AlphaReport make_report(std::vector<AlphaRow> rows);

/// Exit-code contract: 0 all agree, 1 any disagreement, 3 aborted only.
int exit_code(const AlphaReport &report);

void write_report(std::ostream &out, const AlphaReport &report,
                  ReportFormat format, bool deterministic);

/// Stable 64-bit FNV-1a digest of a pair list, as 16 hex digits.
std::string witness_digest(const PairList &pairs);

/// Thread cap from TOKEN_ALPHA_THREADS, defaulting to the hardware
/// concurrency.
unsigned default_thread_count();

// ---------------------------------------------------------------------------
// Improvement-lemma checks on E_n + H.

struct LemmaConfig {
  std::size_t n = 2;
  std::string h_family = "path"; ///< path, cycle or complete
  std::size_t m = 3;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
};

struct LemmaTrial {
  std::uint64_t seed = 0;
  PairList input;
  PairList associated;
  bool independent = false;
  bool dominates = false;
};

struct LemmaReport {
  LemmaConfig config;
  std::size_t trials = 0;
  std::size_t holds = 0;
  long min_margin = 0;
  double mean_margin = 0;
  std::vector<LemmaTrial> failures;
};

/// Graph H of a lemma configuration.
Graph lemma_base(const std::string &h_family, std::size_t m);

/// Greedy closure of a seeded shuffle of V(F2(E_n + h)), started from one
/// uniformly chosen cross pair.
PairList random_independent_set(const TokenGraph &tg, std::size_t n,
                                 std::mt19937_64 &rng);

/// Extracts (S1, S2) from `input`, fills F2(h - S2) with the exact solver,
/// and builds the associated set.
LemmaTrial improve(std::size_t n, const Graph &h, const PairList &input);

LemmaReport run_lemma_check(const LemmaConfig &config);

void write_lemma_report(std::ostream &out, const LemmaReport &report,
                        ReportFormat format);

} // namespace token_alpha
