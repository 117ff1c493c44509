#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/json_io.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

py::int_ to_py(const Int& x) { return py::cast(x.get_str()).cast<py::int_>(); }

py::list ints_to_py(const std::vector<Int>& xs) {
  py::list out;
  for (const Int& x : xs) out.append(to_py(x));
  return out;
}

IntMatrix matrix_from_py(const std::vector<std::vector<long long>>& rows) {
  std::vector<IntVec> r;
  for (const auto& row : rows) {
    IntVec v;
    for (long long x : row) v.emplace_back(std::to_string(x));
    r.push_back(std::move(v));
  }
  return IntMatrix::from_rows(r);
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list out;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j) row.append(to_py(m.at(i, j)));
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact combinatorial engine for toric arrangements";

  py::class_<ToricArrangement>(m, "Arrangement")
      .def_static("from_json", [](const std::string& text) {
        return io::arrangement_from_json(io::json::parse(text));
      })
      .def_static("braid", [](int n) { return braid(n); }, py::arg("n"))
      .def_property_readonly("rank", [](const ToricArrangement& a) { return a.rank; })
      .def("__len__", [](const ToricArrangement& a) { return a.size(); })
      .def("to_json", [](const ToricArrangement& a) { return io::arrangement_to_json(a).dump(); })
      .def("validate", [](const ToricArrangement& a) { return validate(a); })
      .def("is_central", [](const ToricArrangement& a) { return is_central(a); })
      .def("is_primitive", [](const ToricArrangement& a) { return is_primitive(a); })
      .def("is_essential", [](const ToricArrangement& a) { return is_essential(a); })
      .def("essentialize",
           [](const ToricArrangement& a) {
             Essentialization e = essentialize(a);
             return py::make_tuple(e.arrangement, matrix_to_py(e.basis));
           })
      .def("lift",
           [](const ToricArrangement& a, const std::vector<std::vector<long long>>& m) {
             return lift(a, CoverMatrix(matrix_from_py(m)));
           },
           py::arg("matrix"))
      .def("char_poly",
           [](const ToricArrangement& a) { return ints_to_py(char_poly(layer_poset(a))); })
      .def("poincare",
           [](const ToricArrangement& a) {
             return ints_to_py(poincare(char_poly(layer_poset(a)), a.rank).coeffs);
           })
      .def("layer_count", [](const ToricArrangement& a) { return layer_poset(a).size(); })
      .def("poset_json",
           [](const ToricArrangement& a) { return io::poset_to_json(layer_poset(a)).dump(); })
      .def("is_supersolvable",
           [](const ToricArrangement& a) {
             return posets::supersolvable(to_finite_poset(layer_poset(a))).has_value();
           })
      .def("is_strictly_supersolvable",
           [](const ToricArrangement& a) {
             return posets::strictly_supersolvable(to_finite_poset(layer_poset(a))).has_value();
           })
      .def("exceptional_primes", [](const ToricArrangement& a) { return exceptional_primes(a); })
      .def("build_p_cover",
           [](const ToricArrangement& a, unsigned p) -> py::object {
             auto c = build_p_cover(a, p);
             if (!c) return py::none();
             return matrix_to_py(c->m);
           },
           py::arg("p"))
      .def("analyze",
           [](const ToricArrangement& a, std::optional<std::vector<unsigned>> primes,
              int search_depth) {
             auto ps = primes ? *primes : default_primes(a);
             return io::report_to_json(analyze(a, ps, search_depth)).dump();
           },
           py::arg("primes") = py::none(), py::arg("search_depth") = 3)
      .def("analyze_verified",
           [](const ToricArrangement& a, std::optional<std::vector<unsigned>> primes,
              int search_depth) {
             auto ps = primes ? *primes : default_primes(a);
             ObstructionReport rep = analyze(a, ps, search_depth);
             std::vector<std::string> diagnostics;
             bool ok = verify_report(a, rep, &diagnostics);
             return py::make_tuple(io::report_to_json(rep).dump(), ok, diagnostics);
           },
           py::arg("primes") = py::none(), py::arg("search_depth") = 3);

  m.def("partition_lattice_size",
        [](int n) { return posets::partition_lattice(n).size; }, py::arg("n"));
  m.def("hnf", [](const std::vector<std::vector<long long>>& rows) {
    auto f = hnf(matrix_from_py(rows));
    return py::make_tuple(matrix_to_py(f.h), matrix_to_py(f.u));
  });
  m.def("snf_divisors", [](const std::vector<std::vector<long long>>& rows) {
    return ints_to_py(snf(matrix_from_py(rows)).divisors());
  });
}
