#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/invariant_operators.hpp"
#include "heckelab/measure.hpp"
#include "heckelab/spectral.hpp"
#include "heckelab/suites.hpp"
#include "heckelab/weil.hpp"

namespace py = pybind11;
using namespace heckelab;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

RepSpec make_spec(const std::string& kind, std::int64_t q, int v, int conductor, std::complex<double> chi_pi, int corner_sign,
                  std::int64_t unit) {
  RepSpec s;
  if (kind == "split")
    s = RepSpec::split(q, v, conductor, chi_pi, unit);
  else if (kind == "nonsplit")
    s = RepSpec::nonsplit(q, v, conductor, corner_sign);
  else if (kind == "nilpotent")
    s = RepSpec::nilpotent(q, conductor);
  else if (kind == "nilpotent-trivial")
    s = RepSpec::nilpotent_trivial(q);
  else
    throw py::value_error("kind must be split, nonsplit, nilpotent or nilpotent-trivial");
  s.validate();
  return s;
}

py::dict suite_dict(const SuiteResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["pass"] = r.pass;
  d["detail"] = r.detail;
  d["header"] = r.table.header;
  d["rows"] = r.table.rows;
  return d;
}

Family find_family(std::int64_t q, int n, const std::string& name) {
  for (auto& f : families(q, n, true))
    if (f.name == name) return f;
  throw py::value_error("unknown family " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hecke operators T_x for PGL2 over dual numbers";

  py::register_exception<Error>(m, "HeckelabError", PyExc_RuntimeError);

  m.def(
      "structure_count",
      [](std::int64_t p, std::int64_t x, std::int64_t y, const std::string& probe, int precision) {
        StructureProbe k = probe == "1" ? StructureProbe::Identity : probe == "w" ? StructureProbe::W : StructureProbe::WUeps;
        if (probe != "1" && probe != "w" && probe != "wu")
          throw py::value_error("probe must be '1', 'w' or 'wu'");
        return structure_count(LocalField(p, precision), x, y, k);
      },
      py::arg("p"), py::arg("x"), py::arg("y"), py::arg("probe") = "1", py::arg("precision") = 8);

  m.def(
      "convolve_t",
      [](std::int64_t p, std::int64_t x, std::int64_t y, int precision) {
        py::dict d;
        auto fraction = py::module_::import("fractions").attr("Fraction");
        for (const auto& [name, c] : convolve_T(LocalField(p, precision), x, y).terms)
          d[py::str(name.to_string())] = fraction(c.str());
        return d;
      },
      "T_x * T_y as {double coset name: Fraction}", py::arg("p"), py::arg("x"), py::arg("y"), py::arg("precision") = 8);

  m.def(
      "dimension",
      [](const std::string& kind, std::int64_t q, int v, int conductor, std::complex<double> chi_pi, int corner_sign, std::int64_t unit) {
        return dimension(make_spec(kind, q, v, conductor, chi_pi, corner_sign, unit));
      },
      py::arg("kind"), py::arg("q") = 3, py::arg("v") = 0, py::arg("conductor") = 0, py::arg("chi_pi") = std::complex<double>(1.0),
      py::arg("corner_sign") = 1, py::arg("unit") = 1);

  m.def(
      "operator_matrix",
      [](const std::string& kind, std::int64_t q, int v, int conductor, std::complex<double> chi_pi, int corner_sign, std::int64_t unit,
         int truncation) { return build_matrix(make_spec(kind, q, v, conductor, chi_pi, corner_sign, unit), truncation).dense(); },
      "closed-form matrix of T_0", py::arg("kind"), py::arg("q") = 3, py::arg("v") = 0, py::arg("conductor") = 0,
      py::arg("chi_pi") = std::complex<double>(1.0), py::arg("corner_sign") = 1, py::arg("unit") = 1, py::arg("truncation") = 0);

  m.def(
      "oracle_matrix",
      [](const std::string& kind, std::int64_t x, std::int64_t q, int v, int conductor, std::complex<double> chi_pi, int corner_sign,
         std::int64_t unit, int truncation) {
        const auto spec = make_spec(kind, q, v, conductor, chi_pi, corner_sign, unit);
        py::gil_scoped_release release;
        return action_oracle(spec, x, truncation);
      },
      "matrix of T_x from the brute-force oracle", py::arg("kind"), py::arg("x") = 0, py::arg("q") = 3, py::arg("v") = 0,
      py::arg("conductor") = 0, py::arg("chi_pi") = std::complex<double>(1.0), py::arg("corner_sign") = 1, py::arg("unit") = 1,
      py::arg("truncation") = 0);

  m.def(
      "families",
      [](std::int64_t q, int n) {
        std::vector<std::string> names;
        for (const auto& f : families(q, n, true)) names.push_back(f.name);
        return names;
      },
      py::arg("q"), py::arg("n"));

  m.def(
      "spectrum",
      [](const std::string& family, std::int64_t q, int n) {
        const auto f = find_family(q, n, family);
        SpectrumReport rep;
        {
          py::gil_scoped_release release;
          rep = eigenvalues_tridiagonal(build_matrix(f.spec));
        }
        py::dict d;
        d["eigenvalues"] = Eigen::Map<const Eigen::VectorXd>(rep.eigenvalues.data(), static_cast<Eigen::Index>(rep.eigenvalues.size())).eval();
        d["min_gap"] = rep.min_gap;
        d["bound_margin"] = rep.bound_margin;
        d["radius"] = rep.radius;
        d["hypotheses"] = rep.hypothesis_flags.holds();
        d["ks"] = arcsine_ks_distance(rep);
        d["bounded_and_simple"] = verify_bound_and_simplicity(rep);
        return d;
      },
      py::arg("family"), py::arg("q"), py::arg("n"));

  m.def(
      "arcsine_ks",
      [](std::vector<double> eigenvalues, double radius) {
        SpectrumReport rep;
        rep.eigenvalues = std::move(eigenvalues);
        rep.radius = radius;
        return arcsine_ks_distance(rep);
      },
      py::arg("eigenvalues"), py::arg("radius"));

  m.def(
      "char_poly",
      [](const std::string& family, std::int64_t q, int n) {
        const auto p = char_poly_exact(build_matrix(find_family(q, n, family).spec));
        py::list out;
        for (const auto& c : p.coeffs()) out.append(to_py(c));
        return out;
      },
      "exact characteristic polynomial, coefficients in increasing degree", py::arg("family"), py::arg("q"), py::arg("n"));

  m.def(
      "certify_weil",
      [](const py::sequence& coeffs, std::int64_t q) {
        std::vector<BigInt> c;
        for (const auto& h : coeffs) c.push_back(from_py(h));
        const auto w = certify_weil(IntPolynomial(std::move(c)), q);
        py::dict d;
        d["degree"] = w.degree;
        d["real_roots"] = w.real_roots;
        d["roots_in_range"] = w.r_roots_in_range;
        d["totally_real"] = w.totally_real;
        d["bounded"] = w.bounded;
        d["pass"] = w.pass();
        d["summary"] = w.to_string();
        return d;
      },
      "coefficients in increasing degree", py::arg("coeffs"), py::arg("q"));

  m.def(
      "moment_exact", [](int n, int k, std::int64_t q) { return to_py(moment_exact(n, k, q)); }, py::arg("n"), py::arg("k"), py::arg("q"));

  m.def(
      "truncated_measure",
      [](int n, double a) {
        std::vector<std::pair<double, double>> atoms;
        for (const auto& at : truncated_measure(n, a).atoms) atoms.emplace_back(at.location, at.weight);
        return atoms;
      },
      "(location, weight) atoms", py::arg("n"), py::arg("a"));

  m.def(
      "run_suite",
      [](const std::string& name, std::int64_t p, std::uint64_t seed) {
        py::gil_scoped_release release;
        SuiteResult r;
        if (name == "structure")
          r = structure_suite(p);
        else if (name == "commutativity")
          r = commutativity_suite(p);
        else if (name == "cosets")
          r = coset_suite(p);
        else if (name == "operators" || name == "x_independence") {
          OperatorSweep s;
          s.q = p;
          r = name == "operators" ? operators_suite(s) : x_independence_suite(s);
        } else if (name == "special")
          r = special_rep_suite({p});
        else if (name == "chebyshev")
          r = chebyshev_suite({1, 2, 3, 10, 100});
        else if (name == "weil")
          r = weil_suite({p}, {1, 2, 3, 5, 8, 13});
        else if (name == "measure")
          r = measure_suite({p}, 20, 4096, seed);
        else if (name == "algebra")
          r = algebra_suite({p}, seed);
        else if (name == "springer")
          r = springer_suite({p}, seed);
        else {
          py::gil_scoped_acquire acquire;
          throw py::value_error("unknown suite " + name);
        }
        py::gil_scoped_acquire acquire;
        return suite_dict(r);
      },
      "run one verification suite; returns pass, detail and the CSV table", py::arg("name"), py::arg("p") = 3, py::arg("seed") = 1);
}
