#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "perispec/cli/commands.hpp"
#include "perispec/conventions.hpp"
#include "perispec/discretize/circle_dirac.hpp"
#include "perispec/error.hpp"
#include "perispec/floquet/fredholm.hpp"
#include "perispec/floquet/spectral_flow.hpp"
#include "perispec/io/problem_file.hpp"
#include "perispec/io/report.hpp"
#include "perispec/linalg/eigen.hpp"
#include "perispec/linalg/svd.hpp"
#include "perispec/spectra/model_spectra.hpp"
#include "perispec/topo/intersection_form.hpp"
#include "perispec/topo/invariants.hpp"

namespace py = pybind11;
using namespace perispec;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw ContractViolation("expected a 2-d array");
  ComplexMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

CArray to_array(const ComplexMatrix& m) {
  CArray a({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto w = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return a;
}

SpinStructure spin_of(const std::string& s) { return cli::parse_spin_name(s); }
Scheme scheme_of(const std::string& s) { return cli::parse_scheme_name(s); }

std::vector<std::pair<double, std::size_t>> pairs_of(const SpectrumSample& s) {
  std::vector<std::pair<double, std::size_t>> out;
  for (const auto& p : s.pairs()) out.emplace_back(p.value, p.multiplicity);
  return out;
}

py::dict mod2_dict(const Mod2Rational& m) {
  py::dict d;
  d["value"] = to_string(m.value());
  d["mod2"] = to_string(m.residue());
  return d;
}

template <class T>
const T& section_of(const ProblemFile& p, const char* what) {
  if (const auto* x = std::get_if<T>(&p)) return *x;
  throw InputError(std::string("problem file does not hold a ") + what + " section");
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of perispec";

  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("convention_block", [] { return json_to_py(convention_block()); });

  // linalg
  m.def("hermitian_eigenvalues", [](const CArray& a, double tol) {
    return hermitian_eigenvalues(to_matrix(a), tol).eigenvalues;
  }, py::arg("matrix"), py::arg("tol") = conventions::kDefaultTol);
  m.def("singular_values", [](const CArray& a) { return singular_values(to_matrix(a)); });
  m.def("numeric_kernel_dim", [](const CArray& a, double tol) { return numeric_kernel_dim(to_matrix(a), tol); },
        py::arg("matrix"), py::arg("tol"));

  // model spectra
  m.def("circle_spectrum", [](const std::string& spin, double c, std::size_t band) {
    return pairs_of(circle_spectrum(spin_of(spin), TwistParameter(c), band));
  }, py::arg("spin"), py::arg("c") = 0.0, py::arg("band") = 3);
  m.def("sphere_spectrum", [](std::size_t ell, std::size_t kmax) { return pairs_of(sphere_spectrum(ell, kmax)); },
        py::arg("ell"), py::arg("kmax"));

  // discretize
  m.def("circle_dirac", [](std::size_t n, const std::string& scheme, const std::string& spin, double c, double mass) {
    return to_array(build_circle_dirac(n, scheme_of(scheme), spin_of(spin), TwistParameter(c), mass).matrix);
  }, py::arg("n"), py::arg("scheme") = "spectral", py::arg("spin") = "bounding", py::arg("c") = 0.0,
     py::arg("mass") = 0.0);
  m.def("twist_to_z", &twist_to_z, py::arg("c"));
  m.def("fourier_laplace", [](std::size_t n, const std::string& scheme, const std::string& spin, Complex z,
                              int branch) {
    const auto d = build_circle_dirac(n, scheme_of(scheme), spin_of(spin), TwistParameter(0.0));
    return to_array(fourier_laplace_family(d, WeightFunction::linear(n, 1), z, branch).matrix);
  }, py::arg("n"), py::arg("scheme"), py::arg("spin"), py::arg("z"), py::arg("branch") = 0);

  // symbols
  py::class_<LaurentSymbol>(m, "LaurentSymbol")
      .def(py::init([](std::map<int, CArray> coeffs) {
        if (coeffs.empty()) throw ContractViolation("LaurentSymbol: no coefficients");
        std::map<int, ComplexMatrix> c;
        for (const auto& [j, a] : coeffs) c[j] = to_matrix(a);
        const std::size_t n = c.begin()->second.rows();
        return LaurentSymbol(n, c);
      }), py::arg("coefficients"))
      .def_static("scalar", &LaurentSymbol::scalar, py::arg("coefficients"))
      .def_static("from_circle", [](std::size_t n, const std::string& spin) {
        return fourier_laplace_symbol(
            build_circle_dirac(n, Scheme::CentralDifference, spin_of(spin), TwistParameter(0.0)));
      }, py::arg("n"), py::arg("spin"))
      .def_property_readonly("block_size", &LaurentSymbol::block_size)
      .def_property_readonly("bandwidth", &LaurentSymbol::bandwidth)
      .def("hermitian_symmetric", &LaurentSymbol::hermitian_symmetric, py::arg("tol") = 1e-12)
      .def("__call__", [](const LaurentSymbol& s, Complex z) { return to_array(symbol_eval(s, z)); })
      .def("with_mass", [](const LaurentSymbol& s, double mass) { return with_mass(s, mass); })
      .def("__repr__", [](const LaurentSymbol& s) {
        return "<LaurentSymbol block=" + std::to_string(s.block_size()) +
               " bandwidth=" + std::to_string(s.bandwidth()) + ">";
      });
  m.def("direct_sum", py::overload_cast<const LaurentSymbol&, const LaurentSymbol&>(&direct_sum));

  m.def("is_fredholm", [](const LaurentSymbol& s, double tol, int grid) {
    const auto r = is_fredholm(s, tol, grid);
    py::dict d;
    d["is_fredholm"] = r.is_fredholm;
    d["min_singular"] = r.min_singular;
    d["witness"] = r.witness ? py::cast(r.witness->z) : py::none();
    d["index"] = r.index ? py::cast(*r.index) : py::none();
    d["grid_used"] = r.grid_used;
    d["tol"] = r.tol;
    return d;
  }, py::arg("symbol"), py::arg("tol") = conventions::kFredholmTol, py::arg("grid") = conventions::kCircleGrid);
  m.def("min_singular_on_circle", [](const LaurentSymbol& s, int grid) {
    const auto r = min_singular_on_circle(s, grid);
    return py::make_tuple(r.value, r.z);
  }, py::arg("symbol"), py::arg("grid") = conventions::kCircleGrid);
  m.def("winding_number", &winding_number);
  m.def("toeplitz_index", &toeplitz_index);
  m.def("finite_section", [](const LaurentSymbol& s, std::size_t n) { return to_array(finite_section(s, n)); });
  m.def("fredholm_via_sections", [](const LaurentSymbol& s, std::vector<std::size_t> sizes, double tol) {
    const auto r = fredholm_via_sections(s, sizes, tol);
    py::dict d;
    d["sizes"] = r.sizes;
    d["sigma_min"] = r.sigma_min;
    d["verdict"] = to_string(r.verdict);
    return d;
  }, py::arg("symbol"), py::arg("sizes"), py::arg("tol") = conventions::kFredholmTol);

  m.def("spectral_flow", [](const std::function<CArray(double)>& family, int steps) {
    SpectralFlowOptions o;
    o.steps = steps;
    const auto r = spectral_flow([&](double t) { return to_matrix(family(t)); }, o);
    std::vector<std::pair<double, int>> crossings;
    for (const auto& x : r.crossings) crossings.emplace_back(x.parameter, x.direction);
    py::dict d;
    d["flow"] = r.flow;
    d["crossings"] = crossings;
    d["endpoints_isospectral"] = r.endpoints_isospectral;
    return d;
  }, py::arg("family"), py::arg("steps") = 200);

  // topology
  m.def("form_signature", [](const std::string& spec) {
    const auto f = parse_form_sum(spec);
    return py::make_tuple(f.rank(), f.signature());
  }, py::arg("spec"));
  m.def("form_matrix", [](const std::string& spec) {
    const auto f = parse_form_sum(spec);
    std::vector<std::vector<std::int64_t>> rows(f.rank(), std::vector<std::int64_t>(f.rank()));
    for (std::size_t i = 0; i < f.rank(); ++i)
      for (std::size_t j = 0; j < f.rank(); ++j) rows[i][j] = f.at(i, j);
    return rows;
  }, py::arg("spec"));
  m.def("matrix_signature", [](const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw ContractViolation("matrix_signature: matrix must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return IntersectionForm("matrix", rows.size(), flat).signature();
  }, py::arg("rows"));
  m.def("rohlin", [](long sig, bool strict) { return mod2_dict(rohlin(sig, strict)); }, py::arg("sig_w"),
        py::arg("strict") = false);
  m.def("beta", [](const std::string& rho, long sig_v, bool strict) {
    return mod2_dict(beta(Mod2Rational(parse_rational(rho)), sig_v, strict));
  }, py::arg("rho"), py::arg("sig_v"), py::arg("strict") = false);
  m.def("w_invariant", [](long ind, long sig) { return to_string(w_invariant(ind, sig)); });
  m.def("w_cs", [](long ind, long sig_w, long sig_v) { return to_string(w_cs(ind, sig_w, sig_v)); });
  m.def("alpha_n", [](int n, std::optional<long> sign, std::optional<long> ind_plus,
                      std::optional<unsigned long> dim_ker, std::optional<unsigned long> dim_ker_plus) {
    AlphaData data;
    int given = 0;
    if (sign) data = SignatureData{*sign}, ++given;
    if (ind_plus) data = IndPlus{*ind_plus}, ++given;
    if (dim_ker) data = DimKer{*dim_ker}, ++given;
    if (dim_ker_plus) data = DimKerPlus{*dim_ker_plus}, ++given;
    if (given > 1) throw ContractViolation("alpha_n: give at most one datum");
    const auto e = alpha_n(n, data);
    return py::make_tuple(to_string(e.group), e.value);
  }, py::arg("n"), py::kw_only(), py::arg("sign") = py::none(), py::arg("ind_plus") = py::none(),
     py::arg("dim_ker") = py::none(), py::arg("dim_ker_plus") = py::none());

  // problem files and reports
  m.def("run_problem", [](const std::string& text, const std::string& command) {
    const auto p = parse_problem(text);
    cli::CommandOutput out;
    if (command == "fredholm") out = cli::fredholm(section_of<SymbolProblem>(p, "[symbol]"), {});
    else if (command == "index") out = cli::index(section_of<SymbolProblem>(p, "[symbol]"));
    else if (command == "spectral-flow") out = cli::spectral_flow(section_of<SymbolProblem>(p, "[symbol]"));
    else if (command == "invariant") out = cli::invariant(section_of<InvariantProblem>(p, "[invariant]"));
    else throw InputError("unknown command '" + command + "'");
    return dump_report(make_report(command, out.args, out.results, out.tolerances, 0.0));
  }, py::arg("text"), py::arg("command"));
}
