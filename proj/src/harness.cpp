#include "token_alpha/harness.hpp"

#include "token_alpha/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace token_alpha {

// ---------------------------------------------------------------------------
// Methods and verdicts

MethodSet MethodSet::parse(const std::string &text) {
  MethodSet set;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "formula")
      set.formula = true;
    else if (item == "construction")
      set.construction = true;
    else if (item == "solver")
      set.solver = true;
    else
      throw ParameterError("unknown method '" + item +
                           "' (expected formula, construction or solver)");
  }
  if (!set.formula && !set.construction && !set.solver)
    throw ParameterError("no methods requested");
  return set;
}

std::string MethodSet::to_string() const {
  std::string s;
  auto add = [&](bool on, const char *name) {
    if (on)
      s += (s.empty() ? "" : ",") + std::string(name);
  };
  add(formula, "formula");
  add(construction, "construction");
  add(solver, "solver");
  return s;
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::agree:
    return "AGREE";
  case Verdict::disagree:
    return "DISAGREE";
  case Verdict::aborted:
    return "ABORTED";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

// A maximum independent set of F2(h), as pairs of h's labels.
PairList token_mis(const Graph &h) {
  if (h.order() < 2)
    return {};
  if (is_path_forest(h))
    return path_union_independent_set(path_union_layout(h));
  const auto tg = build_f2(h);
  return tg.to_pairs(max_independent_set(tg.graph()).witness);
}

// Same, for F2(h - removed), mapped back to h's labels.
PairList token_mis_without(const Graph &h, const VertexSet &removed) {
  const auto sub = delete_vertices(h, removed);
  PairList out;
  for (const auto &p : token_mis(sub.graph))
    out.push_back(TokenVertex::of(sub.new_to_old[p.a], sub.new_to_old[p.b]));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet max_independent_vertices(const Graph &h) {
  return h.order() <= kExhaustiveCap ? max_independent_set_exhaustive(h).witness
                                     : max_independent_set(h).witness;
}

} // namespace

PairList join_construction(std::size_t n, const Graph &h,
                           bool use_cross_pairs) {
  AssociatedSetInput input;
  input.n = n;
  input.h = h;
  if (use_cross_pairs) {
    std::vector<Vertex> all(n);
    for (Vertex u = 0; u < n; ++u)
      all[u] = u;
    input.s1 = VertexSet(n, std::move(all));
    input.s2 = max_independent_vertices(h);
  } else {
    input.s1 = VertexSet(n, {});
    input.s2 = VertexSet(h.order(), {});
  }
  input.mis_h_minus_s2 = token_mis_without(h, input.s2);
  return associated_independent_set(input);
}

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

PairList all_pairs(std::size_t n) {
  PairList out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      out.push_back({a, b});
  return out;
}

} // namespace

std::optional<PairList> theorem_construction(const FamilySpec &spec) {
  using R = std::optional<PairList>;
  const auto formula = alpha_closed_form(spec);
  const bool exceptional = formula && formula->exceptional;
  return std::visit(
      overloaded{
          [](const family::Path &f) -> R {
            const std::size_t parts[] = {f.m};
            return path_union_independent_set(path_union_layout(parts));
          },
          [](const family::PathUnion &f) -> R {
            return path_union_independent_set(path_union_layout(f.parts));
          },
          [](const family::Empty &f) -> R { return all_pairs(f.n); },
          [](const family::Complete &f) -> R {
            // Disjoint pairs differ in four elements.
            PairList out;
            for (Vertex a = 0; a + 1 < f.n; a += 2)
              out.push_back({a, a + 1});
            return out;
          },
          [&](const family::Fan &f) -> R {
            return join_construction(f.n, path_graph(f.m), exceptional);
          },
          [&](const family::Wheel &f) -> R {
            return join_construction(f.n, cycle_graph(f.m), exceptional);
          },
          [&](const family::Split &f) -> R {
            return join_construction(f.n, complete_graph(f.m), exceptional);
          },
          [](const family::CompleteBipartite &f) -> R {
            const bool cross =
                f.n * f.m >= formulas::choose2(f.n) + formulas::choose2(f.m);
            return join_construction(f.n, empty_graph(f.m), cross);
          },
          [](const auto &) -> R { return std::nullopt; }},
      spec.value);
}

// ---------------------------------------------------------------------------
// Rows

namespace {

void decide(AlphaRow &row) {
  std::vector<std::uint64_t> values;
  bool broken = false;
  if (row.formula)
    values.push_back(row.formula->value);
  if (row.construction) {
    values.push_back(row.construction->witness.size());
    broken |= !row.construction->independent;
  }
  bool aborted = false;
  if (row.solver) {
    broken |= !row.solver->witness_valid;
    if (row.solver->aborted)
      aborted = true;
    else
      values.push_back(row.solver->size);
  }
  const bool differ =
      !values.empty() &&
      std::any_of(values.begin(), values.end(),
                  [&](auto v) { return v != values.front(); });
  if (broken || differ)
    row.verdict = Verdict::disagree;
  else if (aborted)
    row.verdict = Verdict::aborted;
  else
    row.verdict = Verdict::agree;
}

SolverOutcome solve_token_graph(const TokenGraph &tg, const RunOptions &opts) {
  SolverOutcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto r = max_independent_set(tg.graph(), {opts.node_budget});
  out.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  out.size = r.size;
  out.nodes = r.nodes_explored;
  out.aborted = r.budget_exceeded;
  out.witness_valid =
      r.witness.size() == r.size && is_independent(tg.graph(), r.witness);
  out.witness = tg.to_pairs(r.witness);
  return out;
}

void fill_params(AlphaRow &row, const FamilySpec &spec) {
  std::visit(overloaded{[&](const family::Path &f) { row.m = f.m; },
                        [&](const family::Cycle &f) { row.m = f.m; },
                        [&](const family::Empty &f) { row.n = f.n; },
                        [&](const family::Complete &f) { row.n = f.n; },
                        [&](const family::PathUnion &f) {
                          row.parts = f.parts;
                          std::size_t total = 0;
                          for (auto p : f.parts)
                            total += p;
                          row.m = total;
                        },
                        [&](const family::Join &) {},
                        [&](const auto &f) {
                          row.n = f.n;
                          row.m = f.m;
                        }},
             spec.value);
}

} // namespace

AlphaRow run_alpha(const FamilySpec &spec, const RunOptions &opts) {
  AlphaRow row;
  row.family = spec.tag();
  row.label = spec.to_string();
  fill_params(row, spec);

  const auto g = generate(spec);
  if (g.order() < 2)
    throw ParameterError(row.label + " has fewer than two vertices");

  if (opts.methods.formula)
    row.formula = alpha_closed_form(spec);
  std::optional<TokenGraph> tg;
  if (opts.methods.construction) {
    if (auto pairs = theorem_construction(spec)) {
      ConstructionOutcome c;
      c.independent = pairs_independent(g, *pairs);
      c.witness = std::move(*pairs);
      row.construction = std::move(c);
    }
  }
  if (opts.methods.solver) {
    tg.emplace(g);
    row.solver = solve_token_graph(*tg, opts);
  }
  decide(row);
  return row;
}

AlphaRow run_alpha_graph(const std::string &label, const Graph &g,
                         const RunOptions &opts) {
  if (g.order() < 2)
    throw ParameterError(label + " has fewer than two vertices");
  AlphaRow row;
  row.family = "graph";
  row.label = label;
  row.n = g.order();
  if (opts.methods.solver)
    row.solver = solve_token_graph(TokenGraph(g), opts);
  decide(row);
  return row;
}

// ---------------------------------------------------------------------------
// Sweeps

IntRange IntRange::parse(const std::string &text) {
  auto number = [&](const std::string &s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw ParameterError("malformed range '" + text + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.hi < r.lo)
    throw ParameterError("empty range '" + text + "'");
  return r;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  if (total == 0)
    return out;
  std::vector<std::size_t> current;
  auto rec = [&](auto &self, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t first = 1; first <= left; ++first) {
      current.push_back(first);
      self(self, left - first);
      current.pop_back();
    }
  };
  rec(rec, total);
  return out;
}

FamilySpec parse_family(const std::string &family, std::optional<std::size_t> n,
                        std::optional<std::size_t> m,
                        const std::vector<std::size_t> &parts) {
  auto need = [&](const std::optional<std::size_t> &v, const char *flag) {
    if (!v)
      throw ParameterError("family " + family + " requires " + flag);
    return *v;
  };
  if (family == "path")
    return FamilySpec::path(need(m, "--m"));
  if (family == "cycle")
    return FamilySpec::cycle(need(m, "--m"));
  if (family == "empty")
    return FamilySpec::empty(need(n, "--n"));
  if (family == "complete")
    return FamilySpec::complete(need(n, "--n"));
  if (family == "path-union") {
    if (parts.empty())
      throw ParameterError("family path-union requires --parts");
    return FamilySpec::path_union(parts);
  }
  if (family == "fan")
    return FamilySpec::fan(need(n, "--n"), need(m, "--m"));
  if (family == "wheel")
    return FamilySpec::wheel(need(n, "--n"), need(m, "--m"));
  if (family == "split")
    return FamilySpec::split(need(n, "--n"), need(m, "--m"));
  if (family == "complete-bipartite")
    return FamilySpec::complete_bipartite(need(n, "--n"), need(m, "--m"));
  throw ParameterError("unknown family '" + family + "'");
}

std::vector<FamilySpec> expand_sweep(const SweepConfig &config) {
  auto need = [&](const std::optional<IntRange> &r, const char *flag) {
    if (!r)
      throw ParameterError("sweep over " + config.family + " requires " +
                           flag);
    return *r;
  };
  std::vector<FamilySpec> specs;
  const auto &f = config.family;
  if (f == "path" || f == "cycle") {
    const auto mr = need(config.m_range, "--m-range");
    for (auto m = mr.lo; m <= mr.hi; ++m)
      specs.push_back(parse_family(f, std::nullopt, m, {}));
  } else if (f == "empty" || f == "complete") {
    const auto nr = need(config.n_range, "--n-range");
    for (auto n = nr.lo; n <= nr.hi; ++n)
      specs.push_back(parse_family(f, n, std::nullopt, {}));
  } else if (f == "path-union") {
    const auto mr = need(config.m_range, "--m-range");
    for (auto total = mr.lo; total <= mr.hi; ++total)
      for (auto &parts : compositions(total))
        specs.push_back(FamilySpec::path_union(std::move(parts)));
  } else {
    const auto nr = need(config.n_range, "--n-range");
    const auto mr = need(config.m_range, "--m-range");
    for (auto n = nr.lo; n <= nr.hi; ++n)
      for (auto m = mr.lo; m <= mr.hi; ++m)
        specs.push_back(parse_family(f, n, m, {}));
  }
  for (const auto &s : specs) {
    s.validate();
    if (generate(s).order() < 2)
      throw ParameterError(s.to_string() + " has fewer than two vertices");
  }
  return specs;
}

unsigned default_thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("TOKEN_ALPHA_THREADS")) {
    char *end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0)
      threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

AlphaReport make_report(std::vector<AlphaRow> rows) {
  AlphaReport report;
  report.rows = std::move(rows);
  for (const auto &row : report.rows) {
    switch (row.verdict) {
    case Verdict::agree:
      ++report.agree;
      break;
    case Verdict::disagree:
      ++report.disagree;
      break;
    case Verdict::aborted:
      ++report.aborted;
      break;
    }
  }
  return report;
}

AlphaReport run_sweep(const SweepConfig &config) {
  const auto specs = expand_sweep(config);
  std::vector<AlphaRow> rows(specs.size());
  const unsigned threads = std::min<std::size_t>(
      config.threads ? config.threads : default_thread_count(),
      std::max<std::size_t>(1, specs.size()));

  // Rows are independent; each worker writes only its own slots.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next++; i < specs.size(); i = next++)
      rows[i] = run_alpha(specs[i], config.run);
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work);
  }
  return make_report(std::move(rows));
}

int exit_code(const AlphaReport &report) {
  if (report.disagree)
    return 1;
  if (report.aborted)
    return 3;
  return 0;
}

std::string witness_digest(const PairList &pairs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto &p : pairs) {
    for (auto word : {p.a, p.b}) {
      for (int byte = 0; byte < 4; ++byte) {
        h ^= (word >> (8 * byte)) & 0xff;
        h *= 0x100000001b3ULL;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Report output

namespace {

using nlohmann::json;

std::string opt_str(const std::optional<std::size_t> &v) {
  return v ? std::to_string(*v) : "-";
}

std::string parts_str(const std::vector<std::size_t> &parts) {
  if (parts.empty())
    return "-";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

json pairs_json(const PairList &pairs) {
  json arr = json::array();
  for (const auto &p : pairs)
    arr.push_back(to_string(p));
  return arr;
}

json row_json(const AlphaRow &row, bool deterministic) {
  json j;
  j["family"] = row.family;
  j["instance"] = row.label;
  j["n"] = row.n ? json(*row.n) : json(nullptr);
  j["m"] = row.m ? json(*row.m) : json(nullptr);
  j["parts"] = row.parts.empty() ? json(nullptr) : json(row.parts);
  if (row.formula) {
    j["formula"] = {{"value", row.formula->value},
                    {"exceptional", row.formula->exceptional},
                    {"id", row.formula->formula_id}};
  } else {
    j["formula"] = nullptr;
  }
  if (row.construction) {
    j["construction"] = {{"size", row.construction->witness.size()},
                         {"independent", row.construction->independent},
                         {"digest", witness_digest(row.construction->witness)},
                         {"witness", pairs_json(row.construction->witness)}};
  } else {
    j["construction"] = nullptr;
  }
  if (row.solver) {
    json s = {{"size", row.solver->size},
              {"nodes", row.solver->nodes},
              {"aborted", row.solver->aborted},
              {"witness_valid", row.solver->witness_valid}};
    if (deterministic) {
      s["digest"] = witness_digest(row.solver->witness);
      s["witness"] = pairs_json(row.solver->witness);
    } else {
      s["millis"] = row.solver->millis;
    }
    j["solver"] = std::move(s);
  } else {
    j["solver"] = nullptr;
  }
  j["verdict"] = std::string(to_string(row.verdict));
  return j;
}

} // namespace

void write_report(std::ostream &out, const AlphaReport &report,
                  ReportFormat format, bool deterministic) {
  if (format == ReportFormat::json) {
    json j;
    j["rows"] = json::array();
    for (const auto &row : report.rows)
      j["rows"].push_back(row_json(row, deterministic));
    j["summary"] = {{"rows", report.rows.size()},
                    {"agree", report.agree},
                    {"disagree", report.disagree},
                    {"aborted", report.aborted}};
    out << j.dump(2) << '\n';
    return;
  }

  out << "#family\tn\tm\tparts\tformula\texceptional\tconstruction\tsolver"
         "\tnodes\tmillis\tverdict\n";
  for (const auto &row : report.rows) {
    out << row.family << '\t' << opt_str(row.n) << '\t' << opt_str(row.m)
        << '\t' << parts_str(row.parts) << '\t';
    if (row.formula)
      out << row.formula->value << '\t'
          << (row.formula->exceptional ? "yes" : "no") << '\t';
    else
      out << "-\t-\t";
    if (row.construction)
      out << row.construction->witness.size()
          << (row.construction->independent ? "" : "!") << '\t';
    else
      out << "-\t";
    if (row.solver) {
      if (row.solver->aborted)
        out << ">=" << row.solver->size;
      else
        out << row.solver->size;
      out << '\t' << row.solver->nodes << '\t';
      if (deterministic) {
        out << '-';
      } else {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << row.solver->millis;
        out << ms.str();
      }
      out << '\t';
    } else {
      out << "-\t-\t-\t";
    }
    out << to_string(row.verdict) << '\n';
  }
  out << "# summary rows=" << report.rows.size() << " agree=" << report.agree
      << " disagree=" << report.disagree << " aborted=" << report.aborted
      << '\n';
}

// ---------------------------------------------------------------------------
// Improvement lemma

Graph lemma_base(const std::string &h_family, std::size_t m) {
  if (h_family == "path")
    return path_graph(m);
  if (h_family == "cycle")
    return cycle_graph(m);
  if (h_family == "complete")
    return complete_graph(m);
  throw ParameterError("lemma check supports H in {path, cycle, complete}, "
                       "got '" + h_family + "'");
}

PairList random_independent_set(const TokenGraph &tg, std::size_t n,
                                std::mt19937_64 &rng) {
  const auto part = join_partition(tg, n);
  const auto rows = tg.rows();

  Bitset blocked(tg.order());
  std::vector<Vertex> chosen;
  auto take = [&](Vertex v) {
    chosen.push_back(v);
    blocked |= rows[v];
    blocked.set(v);
  };

  const auto cross = part.r.members();
  std::uniform_int_distribution<std::size_t> pick(0, cross.size() - 1);
  take(cross[pick(rng)]);

  std::vector<Vertex> order(tg.order());
  for (Vertex v = 0; v < order.size(); ++v)
    order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (auto v : order)
    if (!blocked.test(v))
      take(v);

  return tg.to_pairs(VertexSet(tg.order(), std::move(chosen)));
}

LemmaTrial improve(std::size_t n, const Graph &h, const PairList &input) {
  LemmaTrial trial;
  trial.input = input;
  const auto sets = extract_s1_s2(input, n, h);

  AssociatedSetInput assoc;
  assoc.n = n;
  assoc.h = h;
  assoc.s1 = sets.s1;
  assoc.s2 = sets.s2;
  // Exact maximum of F2(H - S2), always by the solver here.
  const auto sub = delete_vertices(h, sets.s2);
  if (sub.graph.order() >= 2) {
    const auto tg = build_f2(sub.graph);
    for (const auto &p : tg.to_pairs(max_independent_set(tg.graph()).witness))
      assoc.mis_h_minus_s2.push_back(
          TokenVertex::of(sub.new_to_old[p.a], sub.new_to_old[p.b]));
  }
  trial.associated = associated_independent_set(assoc);

  const auto g = join(empty_graph(n), h);
  trial.independent = pairs_independent(g, trial.associated);
  trial.dominates = trial.associated.size() >= input.size();
  return trial;
}

LemmaReport run_lemma_check(const LemmaConfig &config) {
  if (config.trials < 1)
    throw ParameterError("lemma check needs at least one trial");
  if (config.n < 1)
    throw ParameterError("lemma check needs n >= 1");
  const auto h = lemma_base(config.h_family, config.m);
  const auto tg = build_f2(join(empty_graph(config.n), h));

  LemmaReport report;
  report.config = config;
  long margin_sum = 0;
  for (std::size_t i = 0; i < config.trials; ++i) {
    const std::uint64_t trial_seed = config.seed * 1'000'003ULL + i;
    std::mt19937_64 rng(trial_seed);
    auto trial = improve(config.n, h, random_independent_set(tg, config.n, rng));
    trial.seed = trial_seed;

    const long margin = static_cast<long>(trial.associated.size()) -
                        static_cast<long>(trial.input.size());
    report.min_margin = i == 0 ? margin : std::min(report.min_margin, margin);
    margin_sum += margin;
    ++report.trials;
    if (trial.independent && trial.dominates)
      ++report.holds;
    else
      report.failures.push_back(std::move(trial));
  }
  report.mean_margin =
      static_cast<double>(margin_sum) / static_cast<double>(report.trials);
  return report;
}

void write_lemma_report(std::ostream &out, const LemmaReport &report,
                        ReportFormat format) {
  const auto &c = report.config;
  if (format == ReportFormat::json) {
    json j = {{"n", c.n},
              {"h", c.h_family},
              {"m", c.m},
              {"seed", c.seed},
              {"trials", report.trials},
              {"holds", report.holds},
              {"min_margin", report.min_margin},
              {"mean_margin", report.mean_margin},
              {"failures", json::array()}};
    for (const auto &f : report.failures)
      j["failures"].push_back({{"seed", f.seed},
                               {"input", pairs_json(f.input)},
                               {"associated", pairs_json(f.associated)},
                               {"independent", f.independent},
                               {"dominates", f.dominates}});
    out << j.dump(2) << '\n';
    return;
  }
  out << "#n\th\tm\ttrials\tholds\tmin_margin\tmean_margin\n";
  std::ostringstream mean;
  mean << std::fixed << std::setprecision(4) << report.mean_margin;
  out << c.n << '\t' << c.h_family << '\t' << c.m << '\t' << report.trials
      << '\t' << report.holds << '\t' << report.min_margin << '\t'
      << mean.str() << '\n';
  for (const auto &f : report.failures) {
    out << "# FAIL seed=" << f.seed << " input=";
    for (const auto &p : f.input)
      out << to_string(p);
    out << " associated_size=" << f.associated.size()
        << " independent=" << (f.independent ? "yes" : "no") << '\n';
  }
}

} // namespace token_alpha
