#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heatforms/h2.hpp"
#include "heatforms/suite.hpp"
#include "heatforms/torus.hpp"

namespace py = pybind11;
using namespace heatforms;

PYBIND11_MODULE(_heatforms, m) {
    m.doc() = "Differential-form heat kernels on discrete and analytic surfaces";

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_readonly("dim", &SimplicialComplex::dim)
        .def("count", &SimplicialComplex::count)
        .def("euler_characteristic", &SimplicialComplex::euler_characteristic);

    py::enum_<MassScheme>(m, "MassScheme")
        .value("identity", MassScheme::identity)
        .value("barycentric_lumped", MassScheme::barycentric_lumped);

    m.def("builtin_mesh", &builtin_mesh, py::arg("name"),
          "Builtin mesh by name (tetra, ico<level>, torus<n>) or OFF path");
    m.def("load_off", &load_off, py::arg("path"));
    m.def("parse_mass_scheme", &parse_mass_scheme, py::arg("name"));

    m.def(
        "boundary_matrix",
        [](const SimplicialComplex& c, int k) { return boundary_matrix(c, k).mat; },
        py::arg("complex"), py::arg("k"));
    m.def(
        "coboundary",
        [](const SimplicialComplex& c, int k) { return coboundary(c, k).mat; },
        py::arg("complex"), py::arg("k"));
    m.def(
        "hodge_laplacian",
        [](const SimplicialComplex& c, int k, MassScheme s) {
            return hodge_laplacian(c, k, s).mat;
        },
        py::arg("complex"), py::arg("k"), py::arg("scheme"));
    m.def(
        "heat_kernel",
        [](const SimplicialComplex& c, int k, MassScheme s, double t) {
            return heat_kernel_matrix(eigendecompose(c, k, s), t).entries;
        },
        py::arg("complex"), py::arg("k"), py::arg("scheme"), py::arg("t"));
    m.def("harmonic_dimensions", &harmonic_dimensions, py::arg("complex"),
          py::arg("scheme"));

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check", &VerificationReport::check)
        .def_readonly("degree", &VerificationReport::degree)
        .def_readonly("scheme", &VerificationReport::scheme)
        .def_readonly("times", &VerificationReport::times)
        .def_readonly("abs_residuals", &VerificationReport::abs_residuals)
        .def_readonly("rel_residuals", &VerificationReport::rel_residuals)
        .def_readonly("tolerance", &VerificationReport::tolerance)
        .def_readonly("pass_", &VerificationReport::pass)
        .def_readonly("gated", &VerificationReport::gated)
        .def_readonly("notes", &VerificationReport::notes)
        .def("to_json", [](const VerificationReport& r) { return r.to_json().dump(); });

    py::class_<SuiteConfig>(m, "SuiteConfig")
        .def(py::init<>())
        .def_readwrite("mesh", &SuiteConfig::mesh)
        .def_readwrite("scheme", &SuiteConfig::scheme)
        .def_readwrite("degrees", &SuiteConfig::degrees)
        .def_readwrite("times", &SuiteConfig::times)
        .def_readwrite("tolerance", &SuiteConfig::tolerance)
        .def_readwrite("cfactor", &SuiteConfig::cfactor)
        .def_readwrite("seed", &SuiteConfig::seed)
        .def_readwrite("random_cochains", &SuiteConfig::random_cochains)
        .def_readwrite("jobs", &SuiteConfig::jobs);
    m.def("run_suite", &run_suite, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("all_gated_pass", &all_gated_pass, py::arg("reports"));

    py::class_<TorusPoint>(m, "TorusPoint")
        .def(py::init<double, double>(), py::arg("u"), py::arg("v"))
        .def_readonly("u", &TorusPoint::u)
        .def_readonly("v", &TorusPoint::v);
    m.def("torus_truncation", &torus_truncation, py::arg("t"),
          py::arg("eps") = 1e-12);
    m.def("torus_k0", &torus_k0, py::arg("x"), py::arg("y"), py::arg("t"),
          py::arg("trunc"));
    m.def("torus_k1", &torus_k1, py::arg("x"), py::arg("y"), py::arg("t"),
          py::arg("trunc"));
    m.def("torus_k2", &torus_k2, py::arg("x"), py::arg("y"), py::arg("t"),
          py::arg("trunc"));

    py::class_<H2Point>(m, "H2Point")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &H2Point::a)
        .def_readonly("b", &H2Point::b);
    m.def("h2_distance", &h2_distance, py::arg("x"), py::arg("y"));
    m.def(
        "h2_k0",
        [](double r, double t, double tol) { return h2_k0(r, t, tol).value; },
        py::arg("r"), py::arg("t"), py::arg("tol") = 1e-9);
    m.def(
        "h2_k1",
        [](const H2Point& x, const H2Point& y, double t, double h) {
            return h2_k1_matrix(x, y, t, h);
        },
        py::arg("x"), py::arg("y"), py::arg("t"), py::arg("h") = 1e-3);
}
