#include "token_alpha/error.hpp"
#include "token_alpha/harness.hpp"

#include <doctest.h>

#include <sstream>

using namespace token_alpha;

namespace {

std::string render(const AlphaReport &report, ReportFormat format) {
  std::ostringstream out;
  write_report(out, report, format, true);
  return out.str();
}

} // namespace

TEST_CASE("alpha on single instances") {
  SUBCASE("fan 2,3") {
    const auto row = run_alpha(FamilySpec::fan(2, 3), {});
    REQUIRE(row.formula);
    REQUIRE(row.construction);
    REQUIRE(row.solver);
    CHECK(row.formula->value == 4);
    CHECK(row.formula->exceptional);
    CHECK(row.construction->witness.size() == 4);
    CHECK(row.construction->independent);
    CHECK(row.solver->size == 4);
    CHECK(row.solver->witness_valid);
    CHECK(row.verdict == Verdict::agree);
  }
  SUBCASE("path union 3,2") {
    const auto row = run_alpha(FamilySpec::path_union({3, 2}), {});
    CHECK(row.formula->value == 6);
    CHECK(row.construction->witness.size() == 6);
    CHECK(row.solver->size == 6);
    CHECK(row.verdict == Verdict::agree);
  }
  SUBCASE("wheel n=2, m=3") {
    const auto row = run_alpha(FamilySpec::wheel(2, 3), {});
    CHECK(row.formula->value == 3);
    CHECK(row.formula->exceptional);
    CHECK(row.solver->size == 3);
    CHECK(row.verdict == Verdict::agree);
  }
  SUBCASE("cycles have no construction") {
    const auto row = run_alpha(FamilySpec::cycle(6), {});
    CHECK_FALSE(row.construction);
    CHECK(row.solver->size == 9);
    CHECK(row.verdict == Verdict::agree);
  }
  SUBCASE("methods subset") {
    RunOptions opts;
    opts.methods = MethodSet::parse("formula");
    const auto row = run_alpha(FamilySpec::split(3, 4), opts);
    CHECK(row.formula->value == 5);
    CHECK_FALSE(row.solver);
    CHECK_FALSE(row.construction);
    CHECK_THROWS_AS(MethodSet::parse("formula,guess"), ParameterError);
    CHECK_THROWS_AS(MethodSet::parse(""), ParameterError);
  }
  SUBCASE("budget exhaustion is ABORTED") {
    RunOptions opts;
    opts.methods = MethodSet::parse("solver");
    opts.node_budget = 1;
    const auto row = run_alpha(FamilySpec::wheel(4, 7), opts);
    CHECK(row.solver->aborted);
    CHECK(row.verdict == Verdict::aborted);
  }
}

TEST_CASE("graph-only rows") {
  const auto row = run_alpha_graph("c5", cycle_graph(5), {});
  CHECK_FALSE(row.formula);
  CHECK(row.solver->size == 5);
  CHECK(row.verdict == Verdict::agree);
}

TEST_CASE("theorem constructions attain the closed form") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 7; ++m) {
      for (const auto &spec :
           {FamilySpec::fan(n, m), FamilySpec::split(n, m),
            FamilySpec::complete_bipartite(n, m)}) {
        const auto set = theorem_construction(spec);
        REQUIRE(set);
        CHECK(set->size() == alpha_closed_form(spec)->value);
        CHECK(pairs_independent(generate(spec), *set));
      }
      if (m >= 3) {
        const auto spec = FamilySpec::wheel(n, m);
        const auto set = theorem_construction(spec);
        CHECK(set->size() == alpha_closed_form(spec)->value);
        CHECK(pairs_independent(generate(spec), *set));
      }
    }
  }
  CHECK_FALSE(theorem_construction(FamilySpec::cycle(5)));
}

TEST_CASE("ranges") {
  CHECK(IntRange::parse("2..7").lo == 2);
  CHECK(IntRange::parse("2..7").hi == 7);
  CHECK(IntRange::parse("4").hi == 4);
  CHECK_THROWS_AS(IntRange::parse("7..2"), ParameterError);
  CHECK_THROWS_AS(IntRange::parse("a..b"), ParameterError);
  CHECK_THROWS_AS(IntRange::parse(""), ParameterError);
}

TEST_CASE("compositions") {
  CHECK(compositions(1).size() == 1);
  CHECK(compositions(4).size() == 8);
  CHECK(compositions(3) == std::vector<std::vector<std::size_t>>{
                               {1, 1, 1}, {1, 2}, {2, 1}, {3}});
}

TEST_CASE("sweeps") {
  SUBCASE("fan grid") {
    SweepConfig config;
    config.family = "fan";
    config.n_range = IntRange{1, 5};
    config.m_range = IntRange{2, 7};
    const auto report = run_sweep(config);
    CHECK(report.rows.size() == 30);
    CHECK(report.agree == 30);
    CHECK(exit_code(report) == 0);
    CHECK(*report.rows.front().n == 1);
    CHECK(*report.rows.front().m == 2);
    CHECK(*report.rows.back().n == 5);
  }
  SUBCASE("wheel sweep flags the exceptional rows") {
    SweepConfig config;
    config.family = "wheel";
    config.n_range = IntRange{1, 3};
    config.m_range = IntRange{3, 5};
    const auto report = run_sweep(config);
    CHECK(report.agree == 9);
    std::size_t exceptional = 0;
    for (const auto &row : report.rows)
      if (row.formula->exceptional) {
        ++exceptional;
        CHECK(*row.m == 3);
        CHECK(*row.n <= 2);
      }
    CHECK(exceptional == 2);
  }
  SUBCASE("path-union totals") {
    SweepConfig config;
    config.family = "path-union";
    config.m_range = IntRange{2, 5};
    CHECK(expand_sweep(config).size() == 2 + 4 + 8 + 16);
    CHECK(run_sweep(config).agree == 30);
  }
  SUBCASE("missing range") {
    SweepConfig config;
    config.family = "fan";
    config.m_range = IntRange{2, 3};
    CHECK_THROWS_AS(expand_sweep(config), ParameterError);
  }
  SUBCASE("unknown family") {
    SweepConfig config;
    config.family = "hypercube";
    config.m_range = IntRange{2, 3};
    CHECK_THROWS_AS(expand_sweep(config), ParameterError);
  }
}

TEST_CASE("deterministic reports are reproducible") {
  SweepConfig config;
  config.family = "split";
  config.n_range = IntRange{1, 4};
  config.m_range = IntRange{1, 5};
  config.run.deterministic = true;
  config.threads = 4;
  const auto a = run_sweep(config);
  config.threads = 1;
  const auto b = run_sweep(config);
  CHECK(render(a, ReportFormat::tsv) == render(b, ReportFormat::tsv));
  CHECK(render(a, ReportFormat::json) == render(b, ReportFormat::json));
  const auto tsv = render(a, ReportFormat::tsv);
  CHECK(tsv.rfind("#family\tn\tm\tparts\tformula\texceptional", 0) == 0);
  CHECK(tsv.find("# summary rows=20 agree=20 disagree=0 aborted=0") !=
        std::string::npos);
}

TEST_CASE("exit codes") {
  AlphaRow agree, disagree, aborted;
  disagree.verdict = Verdict::disagree;
  aborted.verdict = Verdict::aborted;
  CHECK(exit_code(make_report({agree, agree})) == 0);
  CHECK(exit_code(make_report({agree, aborted})) == 3);
  CHECK(exit_code(make_report({aborted, disagree})) == 1);
  CHECK(to_string(Verdict::disagree) == "DISAGREE");
}

TEST_CASE("witness digest") {
  CHECK(witness_digest({}) == "cbf29ce484222325");
  CHECK(witness_digest({{0, 1}}) != witness_digest({{0, 2}}));
  CHECK(witness_digest({{0, 1}}).size() == 16);
}

TEST_CASE("lemma checks") {
  SUBCASE("n=3, H=P4") {
    const auto report = run_lemma_check({3, "path", 4, 200, 7});
    CHECK(report.trials == 200);
    CHECK(report.holds == 200);
    CHECK(report.failures.empty());
    CHECK(report.min_margin >= 0);
  }
  SUBCASE("n=2, H=K3") {
    const auto report = run_lemma_check({2, "complete", 3, 50, 1});
    CHECK(report.holds == 50);
  }
  SUBCASE("same seed, same trials") {
    const auto a = run_lemma_check({2, "cycle", 5, 30, 11});
    const auto b = run_lemma_check({2, "cycle", 5, 30, 11});
    CHECK(a.mean_margin == b.mean_margin);
    CHECK(a.min_margin == b.min_margin);
  }
  CHECK_THROWS_AS(run_lemma_check({2, "star", 3, 5, 0}), ParameterError);
}
