#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "islands/dim3.hpp"
#include "islands/error.hpp"
#include "islands/generators.hpp"
#include "islands/identities.hpp"
#include "islands/io.hpp"
#include "islands/tuples.hpp"
#include "islands/verify.hpp"

namespace py = pybind11;
using namespace islands;

namespace {

// Exact values cross into Python as int and fractions.Fraction.
py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(to_string(v)); }

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_string(v));
}

Rational from_py(const py::handle& x) {
  return parse_rational(py::str(py::module_::import("fractions").attr("Fraction")(x)).cast<std::string>());
}

PointSet make_points(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::TooFewPoints, "no points given");
  return validate_rows(rows, static_cast<int>(rows.front().size()));
}

std::vector<std::vector<std::int64_t>> rows_of(const PointSet& s) {
  std::vector<std::vector<std::int64_t>> out;
  if (s.dim() == 2) {
    for (const Point2& p : s.points2()) out.push_back({p.x, p.y});
  } else {
    for (const Point3& p : s.points3()) out.push_back({p.x, p.y, p.z});
  }
  return out;
}

py::dict table_counts(const CensusTable& t) {
  py::dict out;
  for (const auto& [key, count] : t.counts) out[py::make_tuple(key.k, key.l)] = count;
  return out;
}

CensusTable census_any(const PointSet& s, int oracle_cap) { return s.dim() == 2 ? census(s) : census3(s, oracle_cap); }

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["expected"] = r.expected;
  d["computed"] = r.computed;
  d["pass"] = r.pass;
  return d;
}

WeightParams params_of(int m, const py::object& x) { return {m, x.is_none() ? Rational(0) : from_py(x)}; }

}  // namespace

PYBIND11_MODULE(islands, m) {
  m.doc() = "Exact census of convex polygons with interior points";

  py::register_exception<Error>(m, "IslandsError", PyExc_ValueError);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&make_points), py::arg("points"))
      .def_property_readonly("n", &PointSet::size)
      .def_property_readonly("h", &PointSet::h)
      .def_property_readonly("dim", &PointSet::dim)
      .def_property_readonly("hull", &PointSet::hull_vertices)
      .def("points", &rows_of)
      .def("is_extreme", &PointSet::is_extreme)
      .def("__len__", &PointSet::size)
      .def("__repr__", [](const PointSet& s) {
        std::ostringstream out;
        out << "PointSet(n=" << s.size() << ", h=" << s.h() << ", dim=" << s.dim() << ")";
        return out.str();
      });

  py::class_<CensusTable>(m, "CensusTable")
      .def_readonly("n", &CensusTable::n)
      .def_readonly("h", &CensusTable::h)
      .def_readonly("dim", &CensusTable::dim)
      .def("at", &CensusTable::at)
      .def("counts", &table_counts)
      .def("alt_sum", [](const CensusTable& t, int l) { return to_py(alt_sum(t, l)); })
      .def("moment", [](const CensusTable& t, int r) { return to_py(moment(t, r)); })
      .def("mixed_moment_sum", [](const CensusTable& t, int r) { return to_py(mixed_moment_sum(t, r)); })
      .def("weighted_sum",
           [](const CensusTable& t, const std::string& name, int mm, const py::object& x) {
             return to_py(weighted_sum(t, catalogue_weight(name, params_of(mm, x))));
           },
           py::arg("name"), py::arg("m") = 0, py::arg("x") = py::none())
      .def("poly_sum", [](const CensusTable& t, const py::object& x) { return to_py(poly_sum(t, from_py(x))); })
      .def("to_json", &census_json)
      .def("to_csv", &census_csv)
      .def("__eq__", [](const CensusTable& a, const CensusTable& b) { return a == b; });

  m.def("census", &census_any, py::arg("points"), py::arg("oracle_cap") = kDefaultOracleCap,
        "Census of a planar (enumeration) or spatial (brute force) set");
  m.def("census_brute", &census_brute, py::arg("points"), py::arg("oracle_cap") = kDefaultOracleCap);

  m.def("catalogue_names", &catalogue_names);
  m.def(
      "expected_closed_form",
      [](const std::string& name, int n, int d, int mm, const py::object& x) {
        const WeightParams p = params_of(mm, x);
        return to_py(d == 2 ? expected_closed_form(name, n, p) : expected_closed_form_d(name, n, d, p));
      },
      py::arg("name"), py::arg("n"), py::arg("d") = 2, py::arg("m") = 0, py::arg("x") = py::none());
  m.def("expected_mixed_moment", [](int n, int d, int r) { return to_py(expected_mixed_moment(n, d, r)); },
        py::arg("n"), py::arg("d"), py::arg("r"));
  m.def("count_tuples", &count_tuples, py::arg("points"), py::arg("r"));
  m.def(
      "vandermonde_rank",
      [](int n, const std::vector<py::object>& xs, int d) {
        std::vector<Rational> v;
        for (const auto& x : xs) v.push_back(from_py(x));
        return vandermonde_rank(n, v, d);
      },
      py::arg("n"), py::arg("xs"), py::arg("d") = 2);

  m.def("gen_convex", &gen_convex, py::arg("n"), py::arg("dim") = 2);
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("seed"), py::arg("bbox") = 0, py::arg("dim") = 2);
  m.def("gen_horton", &gen_horton, py::arg("n"));
  m.def("gen_fixture", &gen_fixture, py::arg("name"));
  m.def(
      "gen_chain",
      [](int n) {
        ChainSet c = gen_chain(n);
        return py::make_tuple(c.points, py::make_tuple(c.e.p, c.e.q), py::make_tuple(c.f.p, c.f.q));
      },
      py::arg("n"));
  m.def(
      "edge_a1",
      [](const PointSet& s, int p, int q) { return to_py(alt_sum(edge_census(s, {p, q}), 1)); },
      py::arg("points"), py::arg("p"), py::arg("q"));

  m.def(
      "verify",
      [](const PointSet& s, int oracle_cap, int trials, std::uint64_t seed) {
        VerifyOptions o;
        o.oracle_cap = oracle_cap;
        o.trials = trials;
        o.seed = seed;
        const auto reports = s.dim() == 2 ? verify_planar(s, o) : verify_d3(s, o);
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("points"), py::arg("oracle_cap") = kDefaultOracleCap, py::arg("trials") = 3, py::arg("seed") = 1);
}
