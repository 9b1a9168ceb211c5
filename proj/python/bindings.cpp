#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kfam/cli.hpp"
#include "kfam/constructions.hpp"
#include "kfam/cover.hpp"
#include "kfam/errors.hpp"
#include "kfam/formula.hpp"
#include "kfam/grid.hpp"
#include "kfam/io.hpp"
#include "kfam/search.hpp"
#include "kfam/spread.hpp"
#include "kfam/transforms.hpp"

namespace py = pybind11;
using namespace kfam;

namespace {

py::object to_py(const BigCount& v) {
  const std::string s = to_string(v);
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::vector<int> set_list(const ElementSet& s) { return s.elements(); }

py::dict switch_dict(const SwitchResult& r) {
  py::list steps;
  for (const auto& s : r.trace) {
    py::dict d;
    d["stage"] = to_string(s.stage);
    d["index_set"] = set_list(s.index_set);
    d["fixed"] = set_list(s.fixed);
    d["size_before"] = s.size_before;
    d["size_after"] = s.size_after;
    steps.append(d);
  }
  py::dict out;
  out["family"] = r.family;
  out["completed"] = r.completed;
  out["diagnostic"] = r.diagnostic;
  out["pivot"] = r.pivot;
  out["minimal"] = r.minimal;
  out["passes"] = r.passes;
  out["trace"] = steps;
  return out;
}

}  // namespace

PYBIND11_MODULE(kfam, m) {
  m.doc() = "Intersecting set families: constructions, covering numbers, shifting, peeling and exact formulas";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Family>(m, "Family")
      .def(py::init([](int n, const std::vector<std::vector<int>>& members) { return Family::from_lists(n, members); }),
           py::arg("n"), py::arg("members") = std::vector<std::vector<int>>{})
      .def_property_readonly("n", &Family::ground_size)
      .def_property_readonly("uniform_k", &Family::uniform_k)
      .def("members", &Family::to_lists)
      .def("__len__", &Family::size)
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("__contains__", [](const Family& f, const std::vector<int>& s) { return f.contains(ElementSet::from(s)); })
      .def("__repr__", [](const Family& f) {
        std::ostringstream o;
        o << "Family(n=" << f.ground_size() << ", size=" << f.size() << ")";
        return o.str();
      });

  m.def("is_intersecting", &is_intersecting);
  m.def("degree", &degree);
  m.def("max_degree", &max_degree);
  m.def("diversity", &diversity);
  m.def("canonical_form", &canonical_form);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("restrict_avoid", [](const Family& f, const std::vector<int>& y) { return restrict_avoid(f, ElementSet::from(y)); });
  m.def("restrict_contains_keep",
        [](const Family& f, const std::vector<int>& y) { return restrict_contains_keep(f, ElementSet::from(y)); });
  m.def("restrict_contains_strip",
        [](const Family& f, const std::vector<int>& y) { return restrict_contains_strip(f, ElementSet::from(y)); });
  m.def("are_cross_intersecting", &are_cross_intersecting);

  m.def("full_star", &full_star, py::arg("n"), py::arg("k"), py::arg("x") = 1);
  m.def("hilton_milner", &hilton_milner);
  m.def("t2", &t2, py::arg("k"), py::arg("ground_n"));
  m.def("t2prime", &t2prime, py::arg("s"), py::arg("ground_n"));
  m.def("c3", &c3);
  m.def("cross_closure", &cross_closure);

  m.def("covering_number", [](const Family& f) {
    const auto r = covering_number(f);
    py::dict d;
    d["tau"] = r.tau == kNoCover ? py::object(py::none()) : py::object(py::int_(r.tau));
    d["witness"] = set_list(r.witness_cover);
    d["nodes"] = r.explored_nodes;
    return d;
  });
  m.def("count_hitting_sets", [](const Family& f, int t) { return to_py(count_hitting_sets(f, t)); });
  m.def("minimal_tau2_subfamily", [](const Family& f) -> py::object {
    const auto r = minimal_tau2_subfamily(f);
    if (!r) return py::none();
    return py::make_tuple(r->subfamily, r->reps);
  });
  m.def("enumerate_minimal_tau2", &enumerate_minimal_tau2, py::arg("m"), py::arg("s"), py::arg("intersecting_only") = false);

  m.def("shift_family", &shift_family);
  m.def("switch_pipeline", [](const Family& f) { return switch_dict(switch_pipeline(f)); });

  m.def("is_r_spread", [](const Family& f, const std::string& r) {
    const auto c = is_r_spread(f, parse_ratio(r));
    return py::make_tuple(c.spread, c.violator ? py::object(py::cast(set_list(*c.violator))) : py::object(py::none()));
  });
  m.def("maximal_reduction", [](const Family& f) { return maximal_reduction(f); });
  m.def("peel", [](const Family& f) {
    const PeelTrace t = peel(f);
    py::dict layers, residues;
    for (const auto& [i, w] : t.layers) layers[py::int_(i)] = w;
    for (const auto& [i, r] : t.residues) residues[py::int_(i)] = r;
    py::dict d;
    d["layers"] = layers;
    d["residues"] = residues;
    d["coverage_holds"] = t.coverage_holds;
    d["layer_bounds_hold"] = t.layer_bounds_hold;
    return d;
  });

  m.def("binom", [](long long n, long long k) { return to_py(binom(n, k)); });
  m.def("size_c3", [](long long n, long long k) { return to_py(size_c3(n, k)); });
  m.def("hm_size", [](long long n, long long k) { return to_py(hm_size(n, k)); });
  m.def("thm1_bound", [](long long n, long long k, long long u) { return to_py(thm1_bound(n, k, u)); });
  m.def("size_f2prime", [](long long m_, long long s, long long k) { return to_py(size_f2prime(m_, s, k)); });
  m.def("f_of_z", [](long long m_, long long s, long long k, long long z) { return to_py(f_of_z(m_, s, k, z)); });
  m.def("fprime3", [](long long m_, long long s, long long k) { return to_py(fprime3(m_, s, k)); });
  m.def("certify_grid", [](const std::string& name, const std::string& ranges) {
    const GridReport r = certify_grid(name, ranges.empty() ? default_grid_ranges(name) : ranges, 1, false);
    py::dict d;
    d["passed"] = r.passed;
    d["failed"] = r.failed;
    d["skipped"] = r.skipped;
    return d;
  }, py::arg("name"), py::arg("ranges") = "");

  m.def("max_intersecting_tau", [](int n, int k, int t, bool all) {
    const SearchResult r = max_intersecting_tau(n, k, t, all);
    py::dict d;
    d["optimum"] = r.optimum;
    d["witnesses"] = r.witnesses;
    d["nodes"] = r.nodes_explored;
    return d;
  }, py::arg("n"), py::arg("k"), py::arg("t"), py::arg("all_optima") = false);
  m.def("lemmin_oracle", [](int m_, int s, int k, bool inter) {
    const LemminResult r = lemmin_oracle(m_, s, k, inter);
    py::dict d;
    d["best"] = to_py(r.best);
    d["runner_up"] = to_py(r.runner_up);
    d["argmax"] = r.argmax;
    return d;
  }, py::arg("m"), py::arg("s"), py::arg("k"), py::arg("intersecting_only") = false);

  m.def("parse_family", [](const std::string& text) { return parse_family_text(text); });
  m.def("format_family", &format_family);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
