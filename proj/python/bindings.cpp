#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypzeta/errors.hpp"
#include "hypzeta/model.hpp"
#include "hypzeta/radial.hpp"
#include "hypzeta/specfun.hpp"
#include "hypzeta/transforms.hpp"
#include "hypzeta/verify.hpp"
#include "hypzeta/zeta.hpp"

namespace py = pybind11;
using namespace hz;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zeta functions attached to compact hyperbolic manifolds";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    auto numerical_error = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<PoleError>(m, "PoleError", numerical_error.ptr());
    py::register_exception<DomainError>(m, "DomainError", numerical_error.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", numerical_error.ptr());
    (void)input_error;

    // special functions
    m.def("gamma", [](cplx z) { return hz::gamma(z); }, py::arg("z"));
    m.def("lgamma", [](cplx z) { return hz::lgamma(z); }, py::arg("z"));
    m.def("digamma", &digamma, py::arg("z"));
    m.def("beta", &beta_fn, py::arg("x"), py::arg("y"));
    m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    // transforms
    m.def("omega_sphere", &omega_sphere, py::arg("l"));
    m.def("rho0", &rho0_of, py::arg("l"));
    m.def(
        "spherical_transform",
        [](cplx k, cplx mu, int l, bool quadrature) {
            return spherical_transform_fk(k, mu, l, quadrature ? Mode::Quadrature : Mode::Closed);
        },
        py::arg("k"), py::arg("mu"), py::arg("l"), py::arg("quadrature") = false);
    m.def(
        "I",
        [](cplx r, int l, cplx z, bool quadrature) {
            return I_of_z(r, l, z, quadrature ? Mode::Quadrature : Mode::Closed);
        },
        py::arg("r"), py::arg("l"), py::arg("z"), py::arg("quadrature") = false);
    m.def("c_of_lambda", &c_of_lambda, py::arg("lam"), py::arg("l"));
    m.def("beta_coeffs", &beta_coeffs, py::arg("k"), py::arg("M"));

    // model
    py::enum_<Series>(m, "Series").value("Principal", Series::Principal).value("Complementary", Series::Complementary);
    py::class_<EigenData>(m, "EigenData")
        .def_readonly("index", &EigenData::index)
        .def_readonly("lambda_sq", &EigenData::lambda_sq)
        .def_readonly("lam", &EigenData::lambda)
        .def_readonly("r", &EigenData::r)
        .def_readonly("series", &EigenData::series)
        .def_readonly("ps", &EigenData::ps)
        .def_readonly("c", &EigenData::c_const);
    py::class_<GeodesicClassData>(m, "GeodesicClassData")
        .def_readonly("L", &GeodesicClassData::L)
        .def_readonly("L0", &GeodesicClassData::L0)
        .def_readonly("m11", &GeodesicClassData::m11)
        .def_readonly("integrals", &GeodesicClassData::integrals);
    py::class_<SpectralModel>(m, "SpectralModel")
        .def_readonly("dimension", &SpectralModel::l)
        .def_readonly("eigen", &SpectralModel::eigen)
        .def_readonly("geodesics", &SpectralModel::geodesics)
        .def_readonly("j0", &SpectralModel::j0)
        .def("to_json", [](const SpectralModel& s) { return emit_model(s); });
    m.def("parse_model", &parse_model, py::arg("text"));
    m.def("load_model", &ingest, py::arg("path"));

    // zeta functions
    m.def(
        "z_geom",
        [](cplx k, int n, const SpectralModel& s) {
            auto g = z_geom(k, n, s);
            return py::make_tuple(g.value, g.bound, g.mc_error);
        },
        py::arg("k"), py::arg("n"), py::arg("model"), "Returns (value, majorant, Monte-Carlo error).");
    m.def(
        "z_spec",
        [](cplx k, int n, const SpectralModel& s, int M, int jmax, bool allow_near_pole) {
            SpecOptions o;
            o.jmax = jmax;
            o.allow_near_pole = allow_near_pole;
            return z_spec(k, n, s, M, o);
        },
        py::arg("k"), py::arg("n"), py::arg("model"), py::arg("M") = 30, py::arg("jmax") = -1,
        py::arg("allow_near_pole") = false);
    m.def(
        "r_spec",
        [](cplx k, int n, const SpectralModel& s, bool allow_near_pole) {
            SpecOptions o;
            o.allow_near_pole = allow_near_pole;
            return r_spec(k, n, s, o);
        },
        py::arg("k"), py::arg("n"), py::arg("model"), py::arg("allow_near_pole") = false);
    m.def(
        "poles_and_residues",
        [](int n, const SpectralModel& s) {
            py::list out;
            for (const auto& p : poles_and_residues(n, s)) {
                py::dict d;
                d["location"] = p.location;
                d["order"] = p.order;
                d["residue"] = p.residue;
                d["leading"] = p.leading;
                d["numeric"] = p.numeric;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("model"));
    m.def(
        "residue_numeric",
        [](const std::function<cplx(cplx)>& f, cplx k0, double radius, int npoints) {
            auto r = residue_numeric(f, k0, radius, npoints);
            return py::make_tuple(r.residue, r.order);
        },
        py::arg("f"), py::arg("k0"), py::arg("radius"), py::arg("npoints") = 128,
        "Returns (residue, order) from the trapezoidal rule on a circle.");
    m.def(
        "selberg_pair",
        [](cplx k, const SpectralModel& s) {
            auto p = selberg_pair(k, s);
            return py::make_tuple(p.z1, p.log_deriv, p.ratio);
        },
        py::arg("k"), py::arg("model"));
    m.def("normalize", &normalize, py::arg("value"), py::arg("k"), py::arg("r"), py::arg("l"));

    // verification
    m.def("suite_names", &suite_names);
    m.def(
        "verify_json", [](const std::string& suite, unsigned long seed) { return report_json(run_suite(suite, seed)); },
        py::arg("suite"), py::arg("seed") = 1);
}
