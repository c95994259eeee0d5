#include "token_alpha/constructions.hpp"
#include "token_alpha/error.hpp"
#include "token_alpha/family.hpp"
#include "token_alpha/formulas.hpp"
#include "token_alpha/harness.hpp"
#include "token_alpha/io.hpp"
#include "token_alpha/mis.hpp"
#include "token_alpha/token_graph.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace token_alpha;

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph &g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto &e : g.edges())
    out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> pair_tuples(const PairList &pairs) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto &p : pairs)
    out.emplace_back(p.a, p.b);
  return out;
}

PairList to_pair_list(const std::vector<std::pair<Vertex, Vertex>> &in) {
  PairList out;
  for (auto [a, b] : in)
    out.push_back(TokenVertex::of(a, b));
  return out;
}

py::dict row_dict(const AlphaRow &row) {
  py::dict d;
  d["family"] = row.family;
  d["instance"] = row.label;
  d["formula"] = row.formula ? py::object(py::int_(row.formula->value))
                             : py::object(py::none());
  d["exceptional"] = row.formula && row.formula->exceptional;
  d["construction"] = row.construction
                          ? py::object(py::int_(row.construction->witness.size()))
                          : py::object(py::none());
  d["solver"] = row.solver ? py::object(py::int_(row.solver->size))
                           : py::object(py::none());
  d["verdict"] = std::string(to_string(row.verdict));
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Independence numbers of 2-token graphs";

  py::register_exception<Error>(m, "Error");

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t order,
                       const std::vector<std::pair<Vertex, Vertex>> &edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges)
               es.push_back({u, v});
             return Graph(order, std::move(es));
           }),
           py::arg("order"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges", &edge_pairs)
      .def("has_edge", &Graph::has_edge)
      .def("to_edge_list", &to_edge_list)
      .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
      .def("__repr__", [](const Graph &g) {
        return "Graph(order=" + std::to_string(g.order()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_static("path", &FamilySpec::path)
      .def_static("cycle", &FamilySpec::cycle)
      .def_static("empty", &FamilySpec::empty)
      .def_static("complete", &FamilySpec::complete)
      .def_static("path_union", &FamilySpec::path_union)
      .def_static("fan", &FamilySpec::fan)
      .def_static("wheel", &FamilySpec::wheel)
      .def_static("split", &FamilySpec::split)
      .def_static("complete_bipartite", &FamilySpec::complete_bipartite)
      .def_static("join", &FamilySpec::join)
      .def("__str__", &FamilySpec::to_string)
      .def("__repr__", &FamilySpec::to_string);

  m.def("generate", &generate, py::arg("spec"));
  m.def("join", &join);
  m.def("read_graph",
        [](const std::string &text) {
          std::istringstream in(text);
          return read_graph(in);
        },
        py::arg("text"));

  py::class_<TokenGraph>(m, "TokenGraph")
      .def_property_readonly("base", &TokenGraph::base)
      .def_property_readonly("graph", &TokenGraph::graph)
      .def_property_readonly("order", &TokenGraph::order)
      .def_property_readonly("pairs",
                             [](const TokenGraph &tg) {
                               return pair_tuples(PairList(tg.pairs().begin(),
                                                           tg.pairs().end()));
                             })
      .def("index_of", [](const TokenGraph &tg, Vertex a, Vertex b) {
        return tg.index_of(TokenVertex::of(a, b));
      });
  m.def("build_f2", &build_f2, py::arg("graph"));

  m.def(
      "max_independent_set",
      [](const Graph &g, std::uint64_t budget) {
        const auto r = max_independent_set(g, {budget});
        py::dict d;
        d["size"] = r.size;
        d["witness"] = std::vector<Vertex>(r.witness.begin(), r.witness.end());
        d["nodes"] = r.nodes_explored;
        d["budget_exceeded"] = r.budget_exceeded;
        return d;
      },
      py::arg("graph"), py::arg("budget") = 0);
  m.def("alpha_f2",
        [](const Graph &g) {
          return max_independent_set(build_f2(g).graph()).size;
        },
        py::arg("graph"), "exact independence number of F2(graph)");

  m.def("alpha_closed_form", [](const FamilySpec &spec) -> py::object {
    const auto r = alpha_closed_form(spec);
    if (!r)
      return py::none();
    return py::int_(r->value);
  });

  m.def(
      "path_union_independent_set",
      [](const std::vector<std::size_t> &parts) {
        return pair_tuples(path_union_independent_set(path_union_layout(parts)));
      },
      py::arg("parts"));
  m.def(
      "pairs_independent",
      [](const Graph &g, const std::vector<std::pair<Vertex, Vertex>> &pairs) {
        return pairs_independent(g, to_pair_list(pairs));
      },
      py::arg("graph"), py::arg("pairs"));

  m.def(
      "check",
      [](const FamilySpec &spec, const std::string &methods,
         std::uint64_t budget) {
        RunOptions opts;
        opts.methods = MethodSet::parse(methods);
        opts.node_budget = budget;
        return row_dict(run_alpha(spec, opts));
      },
      py::arg("spec"), py::arg("methods") = "formula,construction,solver",
      py::arg("budget") = 100'000'000);

  m.def(
      "lemma_check",
      [](std::size_t n, const std::string &h, std::size_t mm,
         std::size_t trials, std::uint64_t seed) {
        const auto r = run_lemma_check({n, h, mm, trials, seed});
        py::dict d;
        d["trials"] = r.trials;
        d["holds"] = r.holds;
        d["min_margin"] = r.min_margin;
        d["mean_margin"] = r.mean_margin;
        return d;
      },
      py::arg("n"), py::arg("h"), py::arg("m"), py::arg("trials") = 200,
      py::arg("seed") = 0);
}
