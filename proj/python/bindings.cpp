#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetaglue/cli.hpp"
#include "zetaglue/cylinder.hpp"
#include "zetaglue/error.hpp"
#include "zetaglue/gluing.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/oracle.hpp"
#include "zetaglue/report.hpp"
#include "zetaglue/special.hpp"
#include "zetaglue/zreg.hpp"

namespace py = pybind11;
using namespace zg;

namespace {

ZetaBackend backend_of(const std::string& s) {
  if (s == "auto") return ZetaBackend::Auto;
  if (s == "closed") return ZetaBackend::ClosedForm;
  if (s == "numeric") return ZetaBackend::Numeric;
  throw py::value_error("backend must be auto, closed or numeric");
}

NumericOptions options(double target, double series_tol, double cutoff_scale, double mellin_split) {
  NumericOptions o;
  o.target = target;
  o.series_tol = series_tol;
  o.cutoff_scale = cutoff_scale;
  o.mellin_split = mellin_split;
  return o;
}

// Reports cross the boundary as their JSON form, so Python sees the same keys as the CLI.
py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(dump_json(j, -1));
}

#define ZG_OPTS                                                                                          \
  py::arg("target") = 1e-10, py::arg("series_tol") = 1e-14, py::arg("cutoff_scale") = 1.0,             \
      py::arg("mellin_split") = 0.0, py::arg("backend") = "auto"

}  // namespace

PYBIND11_MODULE(_zetaglue, m) {
  m.doc() = "Zeta-regularized determinants on product cylinders";

  static py::exception<Error> base(m, "ZetaglueError");
  static py::exception<Error> singular(m, "SingularParameterError", base.ptr());
  static py::exception<Error> convergence(m, "ConvergenceError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::SingularParameter:
          py::set_error(singular, e.what());
          return;
        case ErrorKind::NonConvergence:
        case ErrorKind::InsufficientSpectrum:
          py::set_error(convergence, e.what());
          return;
        default:
          py::set_error(base, e.what());
      }
    }
  });

  py::class_<CrossSection>(m, "CrossSection")
      .def_static("parse", &CrossSection::parse)
      .def_static("point", &CrossSection::point)
      .def_static("circle", &CrossSection::circle, py::arg("length"))
      .def_static("torus", &CrossSection::torus, py::arg("length1"), py::arg("length2"))
      .def_static("load", &CrossSection::load)
      .def_static("from_json", &CrossSection::from_json)
      .def_property_readonly("cross_dim", &CrossSection::cross_dim)
      .def("__repr__", [](const CrossSection& c) { return "CrossSection(" + c.describe() + ")"; });

  m.def(
      "spectrum",
      [](const CrossSection& cs, double cutoff) {
        std::vector<std::pair<double, long long>> out;
        for (const auto& e : enumerate_spectrum(cs, cutoff)) out.emplace_back(e.eigenvalue, e.multiplicity);
        return out;
      },
      py::arg("cross_section"), py::arg("cutoff"), "(eigenvalue, multiplicity) pairs up to cutoff");

  m.def(
      "zeta",
      [](const CrossSection& cs, double s, bool include_zero, double target, double series_tol, double cutoff_scale,
         double mellin_split, const std::string& backend) {
        const auto z = zeta_point(cs, s, include_zero, options(target, series_tol, cutoff_scale, mellin_split),
                                  backend_of(backend));
        return py::make_tuple(z.value, z.residue);
      },
      py::arg("cross_section"), py::arg("s"), py::arg("include_zero") = false, ZG_OPTS,
      "(value or finite part, residue) of the spectral zeta function");

  m.def(
      "log_det_star",
      [](const CrossSection& cs, double target, double series_tol, double cutoff_scale, double mellin_split,
         const std::string& backend) {
        return log_det_star(cs, options(target, series_tol, cutoff_scale, mellin_split), backend_of(backend))
            .log_modulus;
      },
      py::arg("cross_section"), ZG_OPTS);

  m.def(
      "log_det",
      [](const CrossSection& cs, double L, const std::string& bc, double alpha, double target, double series_tol,
         double cutoff_scale, double mellin_split, const std::string& backend) {
        const auto [l, r] = parse_bc_pair(bc, alpha);
        return to_py(to_json(log_det_cylinder({cs, L, l, r}, options(target, series_tol, cutoff_scale, mellin_split),
                                              backend_of(backend))));
      },
      py::arg("cross_section"), py::arg("L"), py::arg("bc") = "dd", py::arg("alpha") = 0.0, ZG_OPTS,
      "ln Det report of the cylinder Laplacian as a dict");

  m.def(
      "glue",
      [](const CrossSection& cs, double L, double a, double alpha, double target, double series_tol,
         double cutoff_scale, double mellin_split, const std::string& backend) {
        const GluingConfig cfg{cs, L, a, alpha};
        const auto o = options(target, series_tol, cutoff_scale, mellin_split);
        const auto be = backend_of(backend);
        return to_py(to_json(alpha == 0.0 ? glue_neumann_check(cfg, o, be) : glue_robin_check(cfg, o, be)));
      },
      py::arg("cross_section"), py::arg("L"), py::arg("a"), py::arg("alpha") = 0.0, ZG_OPTS);

  m.def(
      "interface_spectrum",
      [](const CrossSection& cs, const std::string& geometry, double length, double alpha, double cutoff) {
        return to_py(to_json(spec_interface(cs, InterfaceGeometry::parse(geometry, length), alpha, cutoff)));
      },
      py::arg("cross_section"), py::arg("geometry"), py::arg("length"), py::arg("alpha") = 0.0,
      py::arg("cutoff") = 100.0);

  m.def(
      "segment_eigenvalues",
      [](double L, const std::string& bc, double alpha, int n) {
        const auto [l, r] = parse_bc_pair(bc, alpha);
        return segment_eigenvalues({L, l, r}, n);
      },
      py::arg("L"), py::arg("bc"), py::arg("alpha") = 0.0, py::arg("n") = 10);

  m.def(
      "hurwitz_zeta",
      [](double s, double a) {
        const auto z = hurwitz_zeta(s, a);
        return py::make_tuple(z.value, z.derivative);
      },
      py::arg("s"), py::arg("a"), "(zeta_H(s, a), d/ds zeta_H(s, a))");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        RunOutput r;
        {
          py::gil_scoped_release release;
          r = run_args(args);
        }
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "(exit code, stdout, stderr) of the command line front end");
}
