#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crossdrop/classify.hpp"
#include "crossdrop/cli.hpp"
#include "crossdrop/corpus.hpp"
#include "crossdrop/cutsets.hpp"
#include "crossdrop/diagram.hpp"
#include "crossdrop/errors.hpp"
#include "crossdrop/plane_graph.hpp"
#include "crossdrop/polynomials.hpp"
#include "crossdrop/verify.hpp"

namespace py = pybind11;
using namespace crossdrop;

namespace {

py::object big(const BigInt& n) { return py::module_::import("builtins").attr("int")(n.str()); }

py::dict terms(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [exp, c] : p.terms()) out[py::int_(exp)] = big(c);
  return out;
}

SplitAssumption split_from(const std::string& s) {
  if (s == "auto") return SplitAssumption::kAuto;
  if (s == "split") return SplitAssumption::kAssertSplit;
  if (s == "nonsplit") return SplitAssumption::kAssertNonsplit;
  throw DomainError("split must be 'auto', 'split' or 'nonsplit'");
}

py::dict verdict_dict(const SignedPlaneGraph& g, const EdgeVerdict& v) {
  py::dict d;
  d["edge"] = g.edge(v.edge).name;
  d["multiplicity"] = v.multiplicity;
  d["split_status"] = to_string(v.split_status);
  d["g_minus_e_has_bridges"] = v.g_minus_e_has_bridges;
  py::list neighbors;
  for (int w : v.common_neighbors) neighbors.append(g.vertices()[w].name);
  d["common_neighbors"] = neighbors;
  d["verdict"] = to_string(v.verdict);
  d["clause"] = clause_label(v.matched);
  d["caveats"] = v.caveats();
  return d;
}

py::list checks_list(const std::vector<CheckResult>& checks) {
  py::list out;
  for (const CheckResult& c : checks) {
    py::dict d;
    d["name"] = c.name;
    d["subject"] = c.subject;
    d["passed"] = c.passed;
    d["expected"] = c.expected;
    d["actual"] = c.actual;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_crossdrop, m) {
  m.doc() = "Q-polynomials, Kauffman brackets and crossing-change classification";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  auto domain = py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", domain.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<SignedPlaneGraph>(m, "PlaneGraph")
      .def_property_readonly("name", &SignedPlaneGraph::name)
      .def_property_readonly("vertex_count", &SignedPlaneGraph::vertex_count)
      .def_property_readonly("edge_count", &SignedPlaneGraph::edge_count)
      .def_property_readonly("edge_names",
                             [](const SignedPlaneGraph& g) {
                               std::vector<std::string> out;
                               for (const PlaneEdge& e : g.edges()) out.push_back(e.name);
                               return out;
                             })
      .def("to_text", &SignedPlaneGraph::to_text)
      .def("with_sign",
           [](const SignedPlaneGraph& g, const std::string& edge, const std::string& sign) {
             if (sign != "+" && sign != "-") throw DomainError("sign must be '+' or '-'");
             return g.with_sign(g.edge_id(edge), sign == "+" ? Sign::kPositive : Sign::kNegative);
           })
      .def("__eq__", [](const SignedPlaneGraph& a, const SignedPlaneGraph& b) { return a == b; })
      .def("__repr__", [](const SignedPlaneGraph& g) {
        return "<PlaneGraph " + g.name() + " V=" + std::to_string(g.vertex_count()) +
               " E=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("corpus_graph", [](const std::string& name) { return corpus_graph(name); });
  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const CorpusGraph& c : curated_corpus()) out.push_back(c.name);
    return out;
  });
  m.def("dual", [](const SignedPlaneGraph& g) { return dual(g); });

  m.def("q_polynomial", [](const SignedPlaneGraph& g) { return q_polynomial(g).to_string(); });
  m.def("q_terms", [](const SignedPlaneGraph& g) { return terms(q_polynomial(g)); });
  m.def("tutte_neg_eval",
        [](const SignedPlaneGraph& g) { return tutte_neg_eval(g.abstract()).to_string("t"); });
  m.def("kauffman_bracket", [](const SignedPlaneGraph& g) {
    return kauffman_bracket(build_medial(g)).to_string();
  });
  m.def("link_components",
        [](const SignedPlaneGraph& g) { return link_components(build_medial(g)); });
  m.def("q_after_flip", [](const SignedPlaneGraph& g, const std::string& edge) {
    return q_after_flip(g.abstract(), g.edge_id(edge)).to_string();
  });
  m.def("maximal_pds", [](const SignedPlaneGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : all_maximal_pds(g.abstract()).sets) {
      out.emplace_back();
      for (EdgeId id : s) out.back().push_back(g.edge(id).name);
    }
    return out;
  });

  m.def(
      "classify_edge",
      [](const SignedPlaneGraph& g, const std::string& edge, const std::string& split) {
        return verdict_dict(g, classify_edge(g.abstract(), g.edge_id(edge), split_from(split)));
      },
      py::arg("graph"), py::arg("edge"), py::arg("split") = "auto");
  m.def("corollary", [](const SignedPlaneGraph& g, int which) {
    if (which != 1 && which != 2) throw DomainError("which must be 1 or 2");
    const CorollaryReport r = which == 1 ? corollary_knot_check(g) : corollary_simple_check(g);
    py::dict d;
    d["which"] = r.which;
    d["link_components"] = r.link_components;
    d["is_knot"] = r.is_knot;
    py::list conditions;
    for (const CorollaryCondition& c : r.conditions) {
      py::dict cd;
      cd["name"] = c.name;
      cd["passed"] = c.passed;
      cd["witness"] = c.witness;
      conditions.append(cd);
    }
    d["conditions"] = conditions;
    d["passed"] = r.passed();
    return d;
  });
  m.def(
      "verify",
      [](const SignedPlaneGraph& g, std::optional<std::string> edge) {
        std::optional<EdgeId> e;
        if (edge) e = g.edge_id(*edge);
        const VerifyReport r = verify_graph(g, e);
        py::dict d;
        d["checks"] = checks_list(r.checks);
        d["passed"] = r.passed();
        return d;
      },
      py::arg("graph"), py::arg("edge") = py::none());
  m.def(
      "selftest",
      [](int max_edges) {
        SelftestOptions options;
        options.max_edges = max_edges;
        SelftestSummary s;
        {
          py::gil_scoped_release release;
          s = selftest(options);
        }
        py::dict d;
        d["enumerated_graphs"] = s.enumerated_graphs;
        d["corpus_graphs"] = s.corpus_graphs;
        py::dict tallies;
        for (const CheckTally& t : s.tallies) tallies[py::str(t.name)] = py::make_tuple(t.passed, t.failed);
        d["checks"] = tallies;
        d["failures"] = checks_list(s.failures);
        d["passed"] = s.passed();
        return d;
      },
      py::arg("max_edges") = 6);
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "crossdrop");
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
