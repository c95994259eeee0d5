#include "token_alpha/error.hpp"
#include "token_alpha/harness.hpp"
#include "token_alpha/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

using namespace token_alpha;

namespace {

constexpr int kExitUsage = 2;

struct Options {
  std::string family;
  std::optional<std::size_t> n, m;
  std::string parts;
  std::string graph_path;
  std::string n_range, m_range;
  std::string methods = "formula,construction,solver";
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  std::string format = "tsv";
  bool deterministic = false;
  bool token = false;
  std::string out;
  std::size_t trials = 200;
  unsigned threads = 0;
};

std::vector<std::size_t> parse_parts(const std::string &text) {
  std::vector<std::size_t> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParameterError("malformed --parts '" + text + "'");
    parts.push_back(std::stoull(item));
  }
  return parts;
}

ReportFormat parse_format(const std::string &f) {
  if (f == "tsv")
    return ReportFormat::tsv;
  if (f == "json")
    return ReportFormat::json;
  throw ParameterError("--format must be tsv or json");
}

RunOptions run_options(const Options &o) {
  if (o.budget == 0)
    throw ParameterError("--budget must be positive");
  RunOptions r;
  r.methods = MethodSet::parse(o.methods);
  r.node_budget = o.budget;
  r.deterministic = o.deterministic;
  return r;
}

// Writes to --out when given, stdout otherwise.
template <class F> void emit(const Options &o, F &&write) {
  if (o.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(o.out);
  if (!file)
    throw IoError("cannot write " + o.out);
  write(file);
}

FamilySpec family_of(const Options &o) {
  return parse_family(o.family, o.n, o.m, parse_parts(o.parts));
}

int cmd_alpha(const Options &o) {
  const auto run = run_options(o);
  AlphaRow row;
  if (!o.graph_path.empty()) {
    auto solver_only = run;
    solver_only.methods = {false, false, true};
    row = run_alpha_graph(o.graph_path, read_graph_file(o.graph_path),
                          solver_only);
  } else {
    row = run_alpha(family_of(o), run);
  }
  const auto report = make_report({row});
  emit(o, [&](std::ostream &out) {
    write_report(out, report, parse_format(o.format), o.deterministic);
  });
  return exit_code(report);
}

int cmd_sweep(const Options &o) {
  SweepConfig config;
  config.family = o.family;
  if (!o.n_range.empty())
    config.n_range = IntRange::parse(o.n_range);
  if (!o.m_range.empty())
    config.m_range = IntRange::parse(o.m_range);
  config.run = run_options(o);
  config.seed = o.seed;
  config.format = parse_format(o.format);
  config.threads = o.threads;
  const auto report = run_sweep(config);
  emit(o, [&](std::ostream &out) {
    write_report(out, report, config.format, o.deterministic);
  });
  return exit_code(report);
}

int cmd_lemma_check(const Options &o) {
  LemmaConfig config;
  if (!o.n || !o.m)
    throw ParameterError("lemma-check requires --n and --m");
  config.n = *o.n;
  config.m = *o.m;
  config.h_family = o.family.empty() ? "path" : o.family;
  config.trials = o.trials;
  config.seed = o.seed;
  const auto report = run_lemma_check(config);
  emit(o, [&](std::ostream &out) {
    write_lemma_report(out, report, parse_format(o.format));
  });
  return report.failures.empty() ? 0 : 1;
}

int cmd_export(const Options &o) {
  const auto g = generate(family_of(o));
  emit(o, [&](std::ostream &out) {
    if (o.token)
      write_token_graph(out, build_f2(g));
    else
      write_edge_list(out, g);
  });
  return 0;
}

int cmd_import(const Options &o, const std::string &path) {
  const auto g = read_graph_file(path);
  emit(o, [&](std::ostream &out) {
    if (o.token)
      write_token_graph(out, build_f2(g));
    else
      write_edge_list(out, g);
  });
  return 0;
}

void add_family_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--family", o.family,
                  "path, cycle, empty, complete, path-union, fan, wheel, "
                  "split, complete-bipartite");
  cmd->add_option("--n", o.n, "size of the E_n side (or order)");
  cmd->add_option("--m", o.m, "size of the path/cycle/complete side");
  cmd->add_option("--parts", o.parts, "path-union part sizes, e.g. 3,2");
}

void add_run_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--methods", o.methods,
                  "comma-separated subset of formula,construction,solver");
  cmd->add_option("--budget", o.budget, "solver node budget");
  cmd->add_option("--format", o.format, "tsv or json");
  cmd->add_flag("--deterministic", o.deterministic,
                "omit timings, include solver witnesses");
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Independence numbers of 2-token graphs"};
  app.require_subcommand(1);
  Options o;
  std::string import_path;

  auto *alpha = app.add_subcommand("alpha", "check one instance");
  add_family_flags(alpha, o);
  add_run_flags(alpha, o);
  alpha->add_option("--graph", o.graph_path,
                    "edge-list or DIMACS file; reports alpha(F2(G))");
  alpha->add_option("--seed", o.seed, "unused; accepted for symmetry");

  auto *sweep = app.add_subcommand("sweep", "check a parameter grid");
  sweep->add_option("--family", o.family, "family to sweep")->required();
  sweep->add_option("--n-range", o.n_range, "A..B");
  sweep->add_option("--m-range", o.m_range, "A..B (path-union: total order)");
  sweep->add_option("--seed", o.seed, "random seed");
  sweep->add_option("--threads", o.threads,
                    "row parallelism (default TOKEN_ALPHA_THREADS or cores)");
  add_run_flags(sweep, o);

  auto *lemma = app.add_subcommand(
      "lemma-check", "random independent sets of F2(E_n + H) vs their "
                     "associated sets");
  lemma->add_option("--family", o.family, "H: path, cycle or complete");
  lemma->add_option("--n", o.n, "order of E_n")->required();
  lemma->add_option("--m", o.m, "order of H")->required();
  lemma->add_option("--trials", o.trials, "number of random sets");
  lemma->add_option("--seed", o.seed, "random seed");
  lemma->add_option("--format", o.format, "tsv or json");
  lemma->add_option("--out", o.out, "output path (default stdout)");

  auto *exp = app.add_subcommand("export", "write a family graph");
  add_family_flags(exp, o);
  exp->add_flag("--token", o.token, "export F2(G) with pair comments");
  exp->add_option("--out", o.out, "output path (default stdout)");

  auto *imp = app.add_subcommand(
      "import", "read edge-list or DIMACS and print the normalized edge list");
  imp->add_option("path", import_path, "input file")->required();
  imp->add_flag("--token", o.token, "print F2(G) instead");
  imp->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (alpha->parsed())
      return cmd_alpha(o);
    if (sweep->parsed())
      return cmd_sweep(o);
    if (lemma->parsed())
      return cmd_lemma_check(o);
    if (exp->parsed())
      return cmd_export(o);
    if (imp->parsed())
      return cmd_import(o, import_path);
  } catch (const token_alpha::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
