#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/jsonio.hpp"
#include "edgeideal/polarize.hpp"
#include "edgeideal/splitting.hpp"
#include "edgeideal/sweep.hpp"
#include "edgeideal/textio.hpp"

namespace py = pybind11;
using namespace edgeideal;

namespace {

// The C++ layer already renders deterministic JSON; hand results to python
// as plain dicts/lists by parsing that JSON.
py::object loads(const std::string& json_text) {
  return py::module_::import("json").attr("loads")(json_text);
}

MonomialIdeal ideal_from_text(const std::string& text) {
  return parse_ideal(text);
}

WeightedOrientedGraph graph_from_text(const std::string& text, bool normalize) {
  WeightedOrientedGraph graph = parse_graph(text);
  if (!normalize) return graph;
  return normalize_source_weights(graph).graph;
}

SweepFamily family_from_name(const std::string& name) {
  if (name == "forest") return SweepFamily::Forest;
  if (name == "cycle") return SweepFamily::Cycle;
  if (name == "star") return SweepFamily::Star;
  throw ValidationError("unknown sweep family '" + name +
                        "' (expected forest, cycle, or star)");
}

}  // namespace

PYBIND11_MODULE(edgeideal, m) {
  m.doc() =
      "edge ideals of vertex-weighted oriented graphs: closed-form "
      "invariants, a graded Betti-number oracle, and splitting certificates";

  py::register_exception<ParseError>(m, "IdealParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ZeroIdealError>(m, "ZeroIdealError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<CertificateMismatchError>(m, "CertificateMismatch",
                                                   PyExc_RuntimeError);

  m.def(
      "betti",
      [](const std::string& ideal, long long characteristic, int cap) {
        OracleOptions opts{cap, characteristic};
        return loads(betti_json(betti_table(ideal_from_text(ideal), opts)));
      },
      py::arg("ideal"), py::arg("characteristic") = 0, py::arg("cap") = 20,
      "Graded Betti table of a monomial ideal given in text syntax, e.g. "
      "'(x1*x2^2, x2*x3^2)'.");

  m.def(
      "betti_grid",
      [](const std::string& ideal, long long characteristic, int cap) {
        OracleOptions opts{cap, characteristic};
        return render_betti_grid(betti_table(ideal_from_text(ideal), opts));
      },
      py::arg("ideal"), py::arg("characteristic") = 0, py::arg("cap") = 20,
      "The same table as betti(), rendered as an aligned text grid.");

  m.def(
      "polarize",
      [](const std::string& ideal) {
        return loads(polarize_json(edgeideal::polarize(ideal_from_text(ideal))));
      },
      py::arg("ideal"),
      "Squarefree polarization: returns {'ideal': str, 'variables': [...]}.");

  m.def(
      "edge_ideal",
      [](const std::string& graph, bool normalize_sources) {
        return to_string(
            edgeideal::edge_ideal(graph_from_text(graph, normalize_sources))
                .ideal);
      },
      py::arg("graph"), py::arg("normalize_sources") = true,
      "Edge ideal of a graph given as JSON or edge-list text.");

  m.def(
      "invariants",
      [](const std::string& graph, const std::string& method,
         long long characteristic, int cap, bool normalize_sources) {
        WeightedOrientedGraph g = graph_from_text(graph, normalize_sources);
        if (method == "formula") {
          return loads(invariants_json(formula_invariants(g)));
        }
        OracleOptions opts{cap, characteristic};
        Invariants oracle = invariants_from_table(
            betti_table(edgeideal::edge_ideal(g).ideal, opts));
        if (method == "oracle") {
          py::dict d;
          d["pd"] = oracle.pd;
          d["reg"] = oracle.reg;
          d["depth"] = oracle.depth;
          return py::object(d);
        }
        if (method != "both") {
          throw ValidationError("method must be formula, oracle, or both");
        }
        InvariantReport rep = formula_invariants(g);
        bool match = rep.pd == oracle.pd && rep.reg == oracle.reg &&
                     rep.depth == oracle.depth;
        return loads(invariants_match_json(rep, oracle, match));
      },
      py::arg("graph"), py::arg("method") = "both",
      py::arg("characteristic") = 0, py::arg("cap") = 20,
      py::arg("normalize_sources") = true,
      "pd/reg/depth of a graph's edge ideal by closed formula, oracle, or "
      "both (with a match verdict).");

  m.def(
      "certificate",
      [](const std::string& graph, bool verify, long long characteristic,
         int cap, long long node_budget, bool normalize_sources) {
        SplitOptions opts;
        opts.node_budget = node_budget;
        opts.generator_cap = cap;
        opts.field_char = characteristic;
        opts.verify_nodes = verify;
        opts.verify_splits = verify;
        return loads(certificate_json(family_certificate(
            graph_from_text(graph, normalize_sources), opts)));
      },
      py::arg("graph"), py::arg("verify") = false,
      py::arg("characteristic") = 0, py::arg("cap") = 20,
      py::arg("node_budget") = 10000, py::arg("normalize_sources") = true,
      "Splitting-based pd/reg derivation for a star, rooted forest, or "
      "oriented cycle, as a nested dict.");

  m.def(
      "certificate_text",
      [](const std::string& graph, bool verify, long long characteristic,
         int cap, long long node_budget, bool normalize_sources) {
        SplitOptions opts;
        opts.node_budget = node_budget;
        opts.generator_cap = cap;
        opts.field_char = characteristic;
        opts.verify_nodes = verify;
        opts.verify_splits = verify;
        return render_certificate_text(family_certificate(
            graph_from_text(graph, normalize_sources), opts));
      },
      py::arg("graph"), py::arg("verify") = false,
      py::arg("characteristic") = 0, py::arg("cap") = 20,
      py::arg("node_budget") = 10000, py::arg("normalize_sources") = true,
      "The same certificate as certificate(), rendered as indented text.");

  m.def(
      "sweep",
      [](const std::string& family, int n_min, int n_max, int max_edges,
         const std::vector<long long>& weights, bool certify,
         bool allow_hypothesis_fail, long long characteristic, int cap,
         long long node_budget) {
        SweepOptions opts;
        opts.family = family_from_name(family);
        opts.n_min = n_min;
        opts.n_max = n_max;
        opts.max_edges = max_edges;
        opts.weights = weights;
        opts.certify = certify;
        opts.allow_hypothesis_fail = allow_hypothesis_fail;
        opts.field_char = characteristic;
        opts.generator_cap = cap;
        opts.node_budget = node_budget;
        return loads(sweep_json(opts, run_sweep(opts)));
      },
      py::arg("family"), py::arg("n_min") = 3, py::arg("n_max") = 5,
      py::arg("max_edges") = 5,
      py::arg("weights") = std::vector<long long>{2, 3},
      py::arg("certify") = false, py::arg("allow_hypothesis_fail") = false,
      py::arg("characteristic") = 0, py::arg("cap") = 20,
      py::arg("node_budget") = 10000,
      "Exhaustive formula-vs-oracle comparison over a family; returns the "
      "summary as a dict.");

  m.def(
      "random_ideal",
      [](long long seed, int index, int max_vars, int max_gens, int max_exp) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        RandomIdealOptions opts{max_vars, max_gens, max_exp};
        MonomialIdeal ideal = edgeideal::random_ideal(rng, opts);
        for (int i = 0; i < index; ++i) {
          ideal = edgeideal::random_ideal(rng, opts);
        }
        return to_string(ideal);
      },
      py::arg("seed"), py::arg("index") = 0, py::arg("max_vars") = 4,
      py::arg("max_gens") = 6, py::arg("max_exp") = 3,
      "The index-th ideal drawn from a seeded deterministic stream; the "
      "same (seed, index) always yields the same ideal.");
}
