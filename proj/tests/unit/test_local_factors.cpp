#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gl4/fg_tables.hpp"
#include "gl4/local_factors.hpp"
#include "oracle_values.hpp"

using namespace gl4::local;
using gl4::satake::ArchParams;
using gl4::satake::DefaultRule;
using gl4::satake::GlobalRep;

namespace {

const cplx I(0.0, 1.0);
const Quad kOnes{1.0, 1.0, 1.0, 1.0};
const Quad kRoots4{1.0, -1.0, I, -I};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

Quad random_distinct(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    for (;;) {
        Quad a;
        for (auto& x : a) x = std::polar(1.0, u(rng));
        double sep = 10.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) sep = std::min(sep, std::abs(a[i] - a[j]));
        if (sep > 1e-3) return a;
    }
}

std::array<cplx, 4> power_sums(const Quad& a) {
    return {gl4::satake::power_sum(a, 1), gl4::satake::power_sum(a, 2), gl4::satake::power_sum(a, 3),
            gl4::satake::power_sum(a, 4)};
}

}  // namespace

TEST_CASE("series and theta integral, closed-form anchors") {
    // sum C(r+3,3)^2 5^{-r} = (1 + 9x + 9x^2 + x^3) / (1 - x)^7 at x = 1/5
    auto s = bp_series_auto(kOnes, 5, 0.5);
    CHECK(rel(s.value, oracle::Bp_ones_p5_half) < 1e-14);
    CHECK(s.tail_bound < 1e-15);
    auto th = bp_theta_integral(kOnes, 5, 0.5, 512);
    CHECK(rel(th.value, s.value) < 1e-10);

    // 4th roots of unity: |h_r|^2 = [4 | r], so B_2(1) = 1 / (1 - 2^{-8})
    auto s2 = bp_series(kRoots4, 2, 1.0, 60);
    CHECK(rel(s2.value, 256.0 / 255.0) < 1e-15);
    CHECK(rel(bp_theta_integral(kRoots4, 2, 1.0).value, s2.value) < 1e-10);

    CHECK(bp_series(kOnes, 7, 0.5, 0).value == cplx(1.0));
    std::mt19937_64 rng(1);
    auto a = random_distinct(rng);
    // far right: B_3(10) = 1 + O(3^-10)
    auto far = bp_theta_integral(a, 3, 10.0).value;
    CHECK(rel(far, bp_series_auto(a, 3, 10.0).value) < 1e-8);
    CHECK(std::abs(far - 1.0) < 1e-3);
    CHECK_THROWS(bp_theta_integral(kOnes, 2, 0.0));
}

TEST_CASE("residue closed form") {
    CHECK(rel(bp_residue_closed(kRoots4, 2), bp_series_auto(kRoots4, 2, 0.5).value) < 1e-9);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 20; ++k) {
        auto a = random_distinct(rng);
        CHECK(rel(bp_residue_closed(a, 3), bp_theta_integral(a, 3, 0.5).value) < 1e-10);
    }
    // exactly repeated parameters go through the confluent table; nearly
    // repeated ones are refused
    CHECK(rel(bp_residue_closed(kOnes, 5), oracle::Bp_ones_p5_half) < 1e-13);
    Quad pair{1.0, 1.0, -1.0, I};
    CHECK(rel(bp_residue_closed(pair, 2), bp_series_auto(pair, 2, 0.5).value) < 1e-12);
    Quad near{1.0, std::polar(1.0, 1e-6), -1.0, I};
    CHECK_THROWS_AS(bp_residue_closed(near, 2), std::domain_error);
    CHECK_THROWS_AS(bp_residue_closed(Quad{0.0, 1.0, I, -1.0}, 2), std::domain_error);
}

TEST_CASE("f/g tables: anchors and reflection") {
    const auto& T = gl4::fg::corrected_tables();
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        auto a = random_distinct(rng);
        auto s = gl4::satake::elementary(a);
        using F = gl4::fg::FGTables;
        CHECK(std::abs(F::eval(T.f(0), s) - s[3] * s[3]) < 1e-12);
        CHECK(std::abs(F::eval(T.f(1), s) - 3.0 * s[3] * s[3]) < 1e-12);
        CHECK(std::abs(F::eval(T.g(0), s) - s[3] * s[3] * s[3]) < 1e-12);
        for (int i = 5; i <= 9; ++i) CHECK(std::abs(F::eval(T.f(i), s) - F::eval(T.f(9 - i), s)) < 1e-12);
        for (int i = 7; i <= 12; ++i) CHECK(std::abs(F::eval(T.g(i), s) - F::eval(T.g(12 - i), s)) < 1e-12);
    }
    CHECK(T.checksum() == gl4::fg::kCorrectedChecksum);
    CHECK(gl4::fg::printed_tables().checksum() == gl4::fg::kPrintedChecksum);
}

TEST_CASE("N and D: table form against the double product") {
    std::mt19937_64 rng(4);
    for (u64 p : {2, 3, 5}) {
        for (int k = 0; k < 20; ++k) {
            auto nd = n_pi_d_pi(random_distinct(rng), p);
            CHECK(rel(nd.D_fg, nd.D_direct) < 1e-9);
            REQUIRE(nd.N_direct_valid);
            CHECK(rel(nd.N_fg, nd.N_direct) < 1e-9);
        }
    }
}

TEST_CASE("rational formulas against the series") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        auto a = random_distinct(rng);
        CHECK(rel(bp_half_fg(a, 7), bp_series_auto(a, 7, 0.5).value) < 1e-9);
        CHECK(rel(bp_half_powersum(power_sums(a), 11), bp_half_fg(a, 11)) < 1e-10);
    }
    CHECK(rel(bp_half_fg(kOnes, 5), oracle::Bp_ones_p5_half) < 1e-12);
    CHECK(rel(bp_half_powersum({4.0, 4.0, 4.0, 4.0}, 5), oracle::Bp_ones_p5_half) < 1e-12);
    CHECK(rel(bp_half_powersum({0.0, 0.0, 0.0, 4.0}, 3), 81.0 / 80.0) < 1e-12);

    // continuity through coincident parameters
    for (double eps : {1e-3, 1e-5}) {
        Quad a{1.0, std::polar(1.0, eps), -1.0, I};
        CHECK(rel(bp_half_fg(a, 3), bp_series_auto(a, 3, 0.5).value) < 1e-7);
    }
}

TEST_CASE("positivity and symmetry") {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 20; ++k) {
        auto a = random_distinct(rng);
        auto b = bp_series_auto(a, 2, 0.5).value;
        CHECK(b.real() > 0.0);
        CHECK(std::abs(b.imag()) < 1e-12);
        Quad perm{a[2], a[0], a[3], a[1]};
        Quad conj{std::conj(a[0]), std::conj(a[1]), std::conj(a[2]), std::conj(a[3])};
        CHECK(rel(bp_theta_integral(perm, 2, 0.5).value, b) < 1e-10);
        CHECK(rel(bp_theta_integral(conj, 2, 0.5).value, b) < 1e-10);
        CHECK(rel(bp_half_fg(conj, 2), b) < 1e-9);
    }
}

TEST_CASE("local factor report with all four routes") {
    auto r = local_factor_report(kOnes, 5);
    REQUIRE(r.B_res);
    REQUIRE(r.B_fg);
    CHECK(r.max_rel_dev < 1e-9);
    CHECK(rel(*r.B_res, r.B_series) < 1e-12);

    auto ram = local_factor_report(Quad{0.0, 1.0, I, -1.0}, 3);
    CHECK_FALSE(ram.B_res);
    CHECK_FALSE(ram.B_fg);
    CHECK(rel(ram.B_int, ram.B_series) < 1e-10);
}

TEST_CASE("Euler products") {
    GlobalRep ones(1, ArchParams{}, {}, DefaultRule::Ones);
    auto A = a_constant(1.0, 1000, ones);
    CHECK(rel(A.value, oracle::A_ones_s1_p1000) < 1e-12);
    CHECK_FALSE(A.divergent);

    auto A2 = a_constant(1.0, 2, ones);
    CHECK(rel(A2.value, 0.75 * bp_series_auto(kOnes, 2, 1.0).value) < 1e-14);

    CHECK(bq_constant(0.5, 1, ones) == cplx(1.0));
    CHECK(rel(bq_constant(0.5, 12, ones), bp_series_auto(kOnes, 2, 0.5).value * bp_series_auto(kOnes, 3, 0.5).value) <
          1e-14);
    CHECK(rel(bq_constant(0.5, 13, ones), bp_series_auto(kOnes, 13, 0.5).value) < 1e-14);

    GlobalRep n15(15, ArchParams{}, {{3, Quad{0.0, 0.0, 0.0, 0.0}}, {5, Quad{0.0, 0.0, 0.0, 0.0}}}, DefaultRule::Ones);
    CHECK_THROWS_AS(bq_constant(0.5, 6, n15), std::invalid_argument);
    CHECK_NOTHROW(bq_unrestricted(0.5, 6, n15));

    // doubling the prime bound moves A(1/2) by less than its tail estimate
    GlobalRep ut(1, ArchParams{}, {}, DefaultRule::UnitTrace);
    auto a3 = a_constant(0.5, 1000, ut);
    auto a4 = a_constant(0.5, 10000, ut);
    CHECK(std::abs(a4.value - a3.value) / std::abs(a3.value) <= a3.tail_estimate);
}

TEST_CASE("Dirichlet series identity at large s") {
    GlobalRep ones(1, ArchParams{}, {}, DefaultRule::Ones);
    auto c = dirichlet_series_check(3.0, 1, 1000, ones);
    CHECK(c.rel_dev < 1e-10);
    auto c6 = dirichlet_series_check(3.0, 6, 1000, ones);
    CHECK(c6.rel_dev < 1e-10);
}
