#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trijac/askey_wilson.hpp"
#include "trijac/harness.hpp"
#include "trijac/jacobi.hpp"
#include "trijac/triangle.hpp"

namespace py = pybind11;
using trijac::parse_rational;
using trijac::Poly;
using trijac::Rational;

namespace {

std::vector<std::string> coeffs(const Poly& p) {
  std::vector<std::string> out;
  for (const Rational& c : p.coefficients()) out.push_back(trijac::to_string(c));
  return out;
}

using Window = std::vector<std::vector<std::vector<std::string>>>;

// Rows m = n0..n0+N-1, columns n0..m; each entry a coefficient list.
Window window_entries(const trijac::TriWindow& w) {
  Window rows;
  for (long m = w.base_index(); m <= w.last_index(); ++m) {
    std::vector<std::vector<std::string>> row;
    for (long n = w.base_index(); n <= m; ++n) row.push_back(coeffs(w.at(m, n)));
    rows.push_back(std::move(row));
  }
  return rows;
}

trijac::ParameterPoint point(const std::string& alpha, const std::string& beta) {
  return {parse_rational(alpha), parse_rational(beta)};
}

std::string verify_json(const std::string& suite, std::uint64_t seed, std::optional<unsigned> samples,
                        std::optional<unsigned> n_max, std::optional<std::size_t> window,
                        std::optional<long> base_index, unsigned series_order,
                        const std::string& limit_tol, const std::string& limit_ratio,
                        unsigned limit_max_step) {
  trijac::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.n_max = n_max;
  cfg.window = window;
  cfg.base_index = base_index;
  cfg.series_order = series_order;
  cfg.limit_tol = trijac::parse_decimal(limit_tol);
  cfg.limit_ratio = trijac::parse_decimal(limit_ratio);
  cfg.limit_max_step = limit_max_step;
  trijac::VerificationReport rep;
  {
    py::gil_scoped_release release;
    rep = trijac::run_suite(cfg);
  }
  return trijac::report_to_json(rep, cfg, 0, trijac::utc_timestamp());
}

}  // namespace

PYBIND11_MODULE(_trijac, m) {
  m.doc() = "Exact Jacobi polynomial identities over the rationals";

  py::register_exception<trijac::SingularParameters>(m, "SingularParameters", PyExc_ValueError);
  py::register_exception<trijac::ApparentSingularity>(m, "ApparentSingularity", PyExc_ValueError);
  py::register_exception<trijac::RedrawLimit>(m, "RedrawLimit", PyExc_RuntimeError);

  m.def("jacobi", [](unsigned n, const std::string& a, const std::string& b) {
    return coeffs(trijac::jacobi(n, parse_rational(a), parse_rational(b)));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"));
  m.def("jacobi_at", [](unsigned n, const std::string& a, const std::string& b, const std::string& x) {
    return trijac::to_string(trijac::jacobi_at(n, parse_rational(a), parse_rational(b), parse_rational(x)));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("x"));
  m.def("gegenbauer", [](unsigned n, const std::string& lam) {
    return coeffs(trijac::gegenbauer(n, parse_rational(lam)));
  }, py::arg("n"), py::arg("lam"));
  m.def("aw_poly", [](unsigned n, const std::vector<std::string>& a, const std::string& q,
                      const std::string& z) {
    if (a.size() != 4) throw std::invalid_argument("aw_poly needs four parameters");
    std::array<Rational, 4> params;
    for (std::size_t i = 0; i < 4; ++i) params[i] = parse_rational(a[i]);
    return trijac::to_string(trijac::aw_poly(n, params, parse_rational(q), parse_rational(z)));
  }, py::arg("n"), py::arg("a"), py::arg("q"), py::arg("z"));

  m.def("build_L", [](const std::string& a, const std::string& b, long n0, std::size_t size) {
    return window_entries(trijac::build_L(point(a, b), n0, size));
  }, py::arg("alpha"), py::arg("beta"), py::arg("n0"), py::arg("size"));
  m.def("build_M", [](const std::string& a, const std::string& b, long n0, std::size_t size) {
    return window_entries(trijac::build_M(point(a, b), n0, size));
  }, py::arg("alpha"), py::arg("beta"), py::arg("n0"), py::arg("size"));
  m.def("inverse_pair_holds", [](const std::string& a, const std::string& b, long n0, std::size_t size) {
    const auto p = point(a, b);
    const auto l = trijac::build_L(p, n0, size);
    const auto mm = trijac::build_M(p, n0, size);
    const auto id = trijac::TriWindow::identity(n0, size);
    return trijac::tri_mul(l, mm) == id && trijac::tri_mul(mm, l) == id;
  }, py::arg("alpha"), py::arg("beta"), py::arg("n0"), py::arg("size"));

  m.def("suite_names", &trijac::suite_names);
  m.def("verify_json", &verify_json, py::arg("suite") = "all", py::arg("seed") = 42,
        py::arg("samples") = py::none(), py::arg("n_max") = py::none(), py::arg("window") = py::none(),
        py::arg("base_index") = py::none(), py::arg("series_order") = 12,
        py::arg("limit_tol") = "1e-4", py::arg("limit_ratio") = "0.75", py::arg("limit_max_step") = 8);
  m.def("strip_clock_fields", &trijac::strip_clock_fields, py::arg("json_text"));
}
