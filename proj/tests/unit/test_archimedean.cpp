#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gl4/archimedean.hpp"
#include "gl4/special.hpp"
#include "oracle_values.hpp"

using namespace gl4::arch;
using gl4::special::log_gamma;

namespace {

constexpr double kPi = std::numbers::pi;

ArchParams make_mu(double a, double b, double c, double d) {
    ArchParams mu;
    mu.mu = {a, b, c, d};
    return mu;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("log Gamma") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(kPi)) < 1e-14);
    CHECK(std::abs(log_gamma(0.25) - oracle::log_gamma_quarter) < 1e-14);
    CHECK(std::abs(log_gamma({0.3, 7.5}) - oracle::log_gamma_c) < 1e-12);
    CHECK(std::abs(log_gamma({-2.5, 0.75}) - oracle::log_gamma_neg) < 1e-12);
    CHECK(std::abs(gl4::special::digamma({0.75, 3.0}) - oracle::digamma_c) < 1e-13);
    CHECK_THROWS(log_gamma(-3.0));
}

TEST_CASE("Gamma-product kernel") {
    auto mu0 = make_mu(0, 0, 0, 0);
    auto mu1 = make_mu(1, 1, 1, 1);
    auto mix = make_mu(0, 1, 0, 1);
    CHECK(rel(g_kernel(0.5, 0.0, mu0), std::pow(std::tgamma(0.25), 8)) < 1e-13);
    CHECK(rel(g_kernel(0.5, 0.0, mu0), oracle::G_mu0_half_t0) < 1e-13);
    CHECK(rel(g_kernel(0.5, 2.0, mu1), oracle::G_mu1_half_t2) < 1e-12);
    CHECK(rel(g_kernel({0.8, 0.4}, 1.5, mix), oracle::G_mix_c) < 1e-12);
    for (double t : {0.3, 2.0, 7.0}) {
        auto g = g_kernel(0.5, t, mix);
        CHECK(rel(g_kernel(0.5, -t, mix), g) < 1e-13);
        CHECK(std::abs(g.imag()) < 1e-14 * std::abs(g));
        CHECK(g.real() > 0.0);
    }
    // exponential decay in t
    double r1 = std::abs(g_kernel(0.5, 10.0, mu0)) / std::abs(g_kernel(0.5, 5.0, mu0));
    double r2 = std::abs(g_kernel(0.5, 20.0, mu0)) / std::abs(g_kernel(0.5, 15.0, mu0));
    CHECK(r1 < 1e-3);
    CHECK(std::abs(std::log(r1) - std::log(r2)) < 0.5 * std::abs(std::log(r1)));
    CHECK(gamma_product(0.5, 4.0, mu0).decay_rate > 0.0);
    // left of the line is fine away from poles; s = 0 puts Gamma(0) in the product
    CHECK(std::isfinite(std::abs(g_kernel(-0.5, 0.0, mu0))));
    CHECK_THROWS(g_kernel(0.0, 0.0, mu0));
    CHECK_THROWS(g_kernel(-2.0 + 1e-10, 0.0, mu0));
}

TEST_CASE("W kernel against mpmath quadrature") {
    auto mu0 = make_mu(0, 0, 0, 0);
    auto mu1 = make_mu(1, 1, 1, 1);
    auto mix = make_mu(0, 1, 0, 1);
    // tolerances are relative to the kernel scale G(1/2, t)
    CHECK(std::abs(w_kernel(1.0, 0.0, mu0).value - oracle::W_mu0_x1_t0) < 1e-12 * oracle::G_mu0_half_t0.real());
    CHECK(std::abs(w_kernel(0.3, 0.5, mu1).value - oracle::W_mu1_x03_t05) <
          1e-12 * g_kernel(0.5, 0.5, mu1).real());
    CHECK(std::abs(w_kernel(2.0, 3.0, mix).value - oracle::W_mix_x2_t3) < 1e-12 * g_kernel(0.5, 3.0, mix).real());

    KernelConfig left;
    left.c = 0.5;
    auto G = g_kernel(0.5, 0.5, mu1).real();
    CHECK(std::abs(w_kernel(1e-8, 0.5, mu1, left).value - G) < 1e-6 * G);
    CHECK(std::abs(w_kernel(1e6, 0.0, mu0).value) < 1e-8);
    CHECK_THROWS(w_kernel(0.0, 0.0, mu0));
    CHECK_THROWS(w_kernel(-1.0, 0.0, mu0));
}

TEST_CASE("W contour independence at moderate x") {
    auto mu1 = make_mu(1, 1, 1, 1);
    for (double x : {0.1, 0.8, 2.5}) {
        KernelConfig a, b;
        a.c = 1.0;
        b.c = 2.0;
        CHECK(rel(w_kernel(x, 0.7, mu1, a).value, w_kernel(x, 0.7, mu1, b).value) < 1e-9);
    }
}

TEST_CASE("V kernel") {
    auto mu1 = make_mu(1, 1, 1, 1);
    auto v = v_kernel(1.0, 2.0, 3.0, mu1);
    CHECK(rel(v.value, oracle::V_mu1_1_2_3) < 1e-8);
    // scaling and conjugate symmetry
    for (double c : {2.0, 10.0}) CHECK(rel(v_kernel(c, 2.0 * c, 3.0 * std::sqrt(c), mu1).value, v.value) < 1e-8);
    CHECK(rel(v_kernel(2.0, 1.0, 3.0, mu1).value, std::conj(v.value)) < 1e-10);
    auto d = v_kernel(1.5, 1.5, 2.0, mu1).value;
    CHECK(std::abs(d.imag()) < 1e-12 * std::abs(d));
}

TEST_CASE("integral of G(1/2, t)") {
    auto g0 = g_integral(make_mu(0, 0, 0, 0));
    CHECK(rel(g0.value, oracle::G_int_mu0) < 1e-10);
    auto g1 = g_integral(make_mu(1, 1, 1, 1));
    CHECK(rel(g1.value, oracle::G_int_mu1) < 1e-10);
    CHECK(g1.doubling_change < 1e-10 * g1.value);
}

TEST_CASE("cutoff and the weight W+-") {
    Cutoff psi;
    CHECK(psi(1.0) == 0.0);
    CHECK(psi(2.0) == 0.0);
    CHECK(psi(0.5) == 0.0);
    CHECK(psi(1.5) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));

    auto mu1 = make_mu(1, 1, 1, 1);
    VEvaluator V(mu1, KernelConfig{}, -12.0, 8.0);
    CHECK(w_pm(1.0, 2.0, 1.0, +1, psi, V) == 0.0);  // u|x + y| = 3
    CHECK(w_pm(1.3, 1.3, 1.0, -1, psi, V) == 0.0);
    // u|x - y| = 1.5
    double w = w_pm(2.5, 1.0, 1.0, -1, psi, V);
    double want = 1.5 * psi(1.5) * V(2.5, 1.0, 1.5).real();
    CHECK(w == doctest::Approx(want).epsilon(1e-12));
    CHECK(w > 0.0);
    Cutoff twice = psi;
    twice.amplitude = 2.0;
    CHECK(w_pm(2.5, 1.0, 1.0, -1, twice, V) == doctest::Approx(2.0 * w).epsilon(1e-14));
}

TEST_CASE("Mellin pair of W+- inverts") {
    auto mu1 = make_mu(1, 1, 1, 1);
    WeightMellin M(1.0, +1, Cutoff{}, mu1, KernelConfig{}, {});
    double x0 = 0.7, y0 = 0.8;
    CHECK(std::abs(M.invert(x0, y0) - M.direct(x0, y0)) < 1e-4 * std::abs(M.direct(x0, y0)));

    Cutoff twice;
    twice.amplitude = 2.0;
    WeightMellin M2(1.0, +1, twice, mu1, KernelConfig{}, {});
    cplx s1{1.5, 2.0}, s2{2.0, -1.0};
    CHECK(rel(M2.transform(s1, s2), 2.0 * M.transform(s1, s2)) < 1e-12);

    double prev = std::abs(M.transform({2.0, 0.0}, {2.0, 0.0}));
    for (double tau : {5.0, 10.0, 20.0, 40.0}) {
        double cur = std::abs(M.transform({2.0, tau}, {2.0, 0.0}));
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS(M.transform({-0.5, 0.0}, {1.0, 0.0}));
}
