#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gl4/characters.hpp"
#include "gl4/dirichlet_lfunc.hpp"
#include "gl4/io.hpp"
#include "gl4/local_factors.hpp"
#include "gl4/moment.hpp"
#include "gl4/verify.hpp"

namespace py = pybind11;
using gl4::satake::cplx;
using gl4::satake::Quad;
using u64 = std::uint64_t;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const gl4::io::json& j) { return j.dump(); }

gl4::satake::ArchParams arch(const Quad& mu) {
    gl4::satake::ArchParams a;
    a.mu = mu;
    a.check_tempered();
    return a;
}

gl4::io::RepInput parse_rep(const std::string& text) {
    return gl4::io::rep_from_json(gl4::io::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_gl4moment, m) {
    m.doc() = "Native core of gl4moment";
    m.attr("__version__") = gl4::io::kToolVersion;

    py::register_exception<gl4::io::SchemaError>(m, "SchemaError", PyExc_ValueError);

    m.def("phi_flat", &gl4::characters::phi_flat, py::arg("q"));
    m.def(
        "orthogonality",
        [](u64 q, long long a, long long b) {
            auto rhs = gl4::characters::even_primitive_orthogonality_rhs(q, a, b);
            return py::make_tuple(gl4::characters::even_primitive_orthogonality_lhs(q, a, b), rhs.numerator(),
                                  rhs.denominator());
        },
        py::arg("q"), py::arg("m"), py::arg("n"),
        "Returns (lhs, rhs numerator, rhs denominator) of the even primitive orthogonality relation.");
    m.def(
        "character_table",
        [](u64 q) {
            py::list rows;
            auto cs = gl4::characters::enumerate_characters(q);
            for (std::size_t i = 0; i < cs.size(); ++i)
                rows.append(py::make_tuple(i, cs[i].conductor(), cs[i].is_even(), cs[i].order()));
            return rows;
        },
        py::arg("q"), "Rows (index, conductor, even, order) in canonical order.");

    m.def("hom_coeff", &gl4::satake::hom_coeff, py::arg("alpha"), py::arg("r"));
    m.def(
        "local_factor",
        [](const Quad& alpha, u64 p, cplx s) { return dump(gl4::io::to_json(gl4::local::local_factor_report(alpha, p, s))); },
        py::arg("alpha"), py::arg("p"), py::arg("s") = cplx(0.5, 0.0));
    m.def(
        "bp_series",
        [](const Quad& alpha, u64 p, cplx s) { return gl4::local::bp_series_auto(alpha, p, s).value; },
        py::arg("alpha"), py::arg("p"), py::arg("s") = cplx(0.5, 0.0));

    m.def(
        "g_kernel", [](cplx s, double t, const Quad& mu) { return gl4::arch::g_kernel(s, t, arch(mu)); },
        py::arg("s"), py::arg("t"), py::arg("mu"));
    m.def(
        "w_kernel",
        [](double x, double t, const Quad& mu, double c) {
            gl4::arch::KernelConfig cfg;
            cfg.c = c;
            return gl4::arch::w_kernel(x, t, arch(mu), cfg).value;
        },
        py::arg("x"), py::arg("t"), py::arg("mu"), py::arg("c") = 1.0);
    m.def(
        "v_kernel",
        [](double xi, double eta, double mu_scale, const Quad& mu) {
            return gl4::arch::v_kernel(xi, eta, mu_scale, arch(mu)).value;
        },
        py::arg("xi"), py::arg("eta"), py::arg("mu_scale"), py::arg("mu"));

    m.def(
        "dirichlet_l",
        [](cplx s, u64 q, std::size_t index) {
            py::gil_scoped_release release;
            return gl4::lfunc::dirichlet_l(s, gl4::lfunc::character_from_ref({q, index}));
        },
        py::arg("s"), py::arg("q"), py::arg("index"));

    m.def(
        "main_term",
        [](const std::string& rep, double Q, u64 p_max) {
            auto in = parse_rep(rep);
            gl4::moment::MomentConfig cfg;
            cfg.Q = Q;
            cfg.p_max = p_max;
            py::gil_scoped_release release;
            return dump(gl4::io::to_json(gl4::moment::main_term(in.global, cfg)));
        },
        py::arg("rep"), py::arg("Q"), py::arg("p_max") = 100000);
    m.def(
        "verify",
        [](const std::string& suite, u64 seed, int threads) {
            gl4::verify::Options opt{suite, seed, threads};
            py::gil_scoped_release release;
            return dump(gl4::verify::run(opt));
        },
        py::arg("suite") = "all", py::arg("seed") = 7, py::arg("threads") = 1);
}
