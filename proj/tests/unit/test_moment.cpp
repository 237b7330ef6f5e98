#include <doctest.h>

#include <cmath>

#include "gl4/moment.hpp"
#include "gl4/verify.hpp"

using namespace gl4::moment;
using gl4::characters::enumerate_characters;
using gl4::satake::ArchParams;
using gl4::satake::DefaultRule;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// q = 1 keeps K = x_max N / pi^4 in the thousands
const DirichletCharacter& trivial() {
    static const auto chi = enumerate_characters(1).front();
    return chi;
}

GlobalRep unit_trace_rep() {
    ArchParams mu;
    mu.mu = {1.0, 1.0, 0.0, 0.0};
    return GlobalRep(1, mu, {}, DefaultRule::UnitTrace);
}

}  // namespace

TEST_CASE("twisted double sum against completed L-values") {
    auto E = gl4::verify::standin_rep();
    TwistedSum S(E.to_global_rep(), trivial());
    CHECK(S.K() > 100);
    for (double t : {0.0, 0.7, 2.0}) {
        auto v = S.at(t);
        CHECK(rel(v.value, lambda_pair_direct(E, trivial(), t)) < 1e-8);
        CHECK(v.tail_change < S.config().tail_tol * S.scale());
    }

    // doubling the cutoff
    TwistConfig wide;
    wide.x_max = 2.0 * S.x_max();
    TwistedSum S2(E.to_global_rep(), trivial(), wide);
    CHECK(std::abs(S2.at(0.4).value - S.at(0.4).value) < S.config().tol * S.scale());
}

TEST_CASE("t -> -t conjugates the sum when the coefficients are real") {
    ArchParams mu;
    GlobalRep ones(1, mu, {}, DefaultRule::Ones);
    CHECK(TwistedSum(ones, trivial()).K() == 0);  // N = q = 1: the automatic cutoff leaves nothing
    CHECK(TwistedSum(ones, trivial()).at(0.5).value == cplx(0.0));
    TwistConfig cut;
    cut.x_max = 1e5;
    TwistedSum S(ones, trivial(), cut);
    REQUIRE(S.K() > 500);
    for (double t : {0.3, 1.5}) CHECK(rel(S.at(-t).value, std::conj(S.at(t).value)) < 1e-12);
    auto v = S.integrated(S.default_t_grid());
    CHECK(std::abs(v.imag()) < 1e-8 * std::abs(v));
}

TEST_CASE("V-weighted sum equals the t-quadrature") {
    auto E = gl4::verify::standin_rep();
    TwistConfig cfg;
    cfg.tol = 1e-10;
    TwistedSum S(E.to_global_rep(), trivial(), cfg);
    auto v = S.integrated(S.default_t_grid());
    auto oracle = lambda_integrated_direct(E, trivial(), 12.0);
    CHECK(rel(v, oracle.value) < 1e-6);

    // the box form through V agrees with the per-t box form
    const u64 box = 30;
    auto grid = S.default_t_grid();
    gl4::arch::VEvaluator V(S.arch(), cfg.kernel, -12.0, 10.0);
    CHECK(rel(S.integrated_pairwise(V, box), S.integrated(grid, box)) < 1e-8);
}

TEST_CASE("twisted sum preconditions") {
    auto E = gl4::verify::standin_rep();
    auto rep = E.to_global_rep();
    auto odd11 = enumerate_characters(11)[1];
    REQUIRE_FALSE(odd11.is_even());
    CHECK_THROWS_AS(TwistedSum(rep, odd11), std::invalid_argument);
    CHECK_THROWS_AS(TwistedSum(rep, gl4::characters::even_primitive_characters(5).front()), std::invalid_argument);
    TwistConfig tiny;
    tiny.max_terms = 10;
    CHECK_THROWS_AS(TwistedSum(rep, trivial(), tiny), std::length_error);
}

TEST_CASE("admissible moduli and the direct moment") {
    MomentConfig cfg;
    cfg.Q = 16.0;
    CHECK(admissible_moduli(420, cfg) == std::vector<u64>{17, 19, 23, 29, 31});
    auto E = gl4::verify::standin_rep();

    MomentConfig empty;
    empty.Q = 2.0;  // only q = 3 lies inside, and 3 | 420
    CHECK(admissible_moduli(420, empty).empty());
    CHECK(moment_lhs_direct(E, empty).value == 0.0);

    MomentConfig twelve;
    twelve.Q = 12.0;
    auto lhs = moment_lhs_direct(E, twelve);
    CHECK(lhs.value > 0.0);
    for (const auto& r : lhs.rows) CHECK(r.lhs >= 0.0);

    // a longer y-range only adds nonnegative mass
    MomentConfig longer = twelve;
    longer.y_max = lhs.y_max + 5.0;
    CHECK(moment_lhs_direct(E, longer).value >= lhs.value);

    MomentConfig big;
    big.Q = 1000.0;
    CHECK_THROWS_AS(moment_lhs_direct(E, big), std::length_error);
}

TEST_CASE("character and divisor forms of the box sum") {
    auto rep = gl4::verify::standin_rep().to_global_rep();
    MomentConfig cfg;
    cfg.Q = 12.0;
    auto r = identity_18_19(rep, cfg);
    CHECK(r.pass);
    CHECK(r.residual_18_19 < 1e-8);
    CHECK(r.residual_21 < 1e-8);
    CHECK(r.residual_partition < 1e-12);

    MomentConfig single = cfg;
    single.psi = {12.5 / 12.0, 13.5 / 12.0, 1.0};
    single.identity_tol = 1e-10;
    auto one = identity_18_19(rep, single);
    CHECK(one.pass);
    CHECK(one.residual_18_19 < 1e-10);
}

TEST_CASE("main term") {
    auto E = gl4::verify::standin_rep();
    auto rep = E.to_global_rep();
    MomentConfig cfg;
    cfg.Q = 16.0;
    auto m = main_term(rep, cfg);
    CHECK(m.value > 0.0);
    CHECK(m.diagonal_value == doctest::Approx(2.0 * m.value));

    MomentConfig zero = cfg;
    zero.psi.amplitude = 0.0;
    CHECK(main_term(rep, zero).value == 0.0);
    MomentConfig twice = cfg;
    twice.psi.amplitude = 2.0;
    CHECK(main_term(rep, twice).value == doctest::Approx(2.0 * m.value).epsilon(1e-14));

    CHECK(main_term(rep.dual(), cfg).value == doctest::Approx(m.value).epsilon(1e-12));

    // prime-bound stability, on a rep whose A(1/2) product converges
    auto ut = unit_trace_rep();
    MomentConfig a = cfg, b = cfg;
    a.p_max = 10000;
    b.p_max = 20000;
    auto ma = main_term(ut, a);
    auto mb = main_term(ut, b);
    CHECK_FALSE(ma.A.divergent);
    CHECK(std::abs(mb.value - ma.value) <= ma.A.tail_estimate * ma.value);
}

TEST_CASE("residue expansion") {
    auto ut = unit_trace_rep();
    auto r = residue_expansion_check(31, 0.8, ut);
    CHECK(r.within_band);
    CHECK(r.route_deviation < 1e-8);
    auto s = residue_expansion_check(31, -0.8, ut);
    CHECK(rel(s.exact, r.exact) < 1e-12);
    CHECK(s.two_term == doctest::Approx(r.two_term).epsilon(1e-12));

    ResidueConfig small;
    small.p_max = 1000;
    GlobalRep ones(1, ArchParams{}, {}, DefaultRule::Ones);
    auto o = residue_expansion_check(13, 0.0, ones, small);
    CHECK(o.route_deviation < 1e-8);
    CHECK_THROWS_AS(residue_expansion_check(21, 0.0, gl4::verify::standin_rep().to_global_rep()),
                    std::invalid_argument);
}

TEST_CASE("moment comparison at Q = 16") {
    MomentConfig cfg;
    cfg.Q = 16.0;
    auto r = moment_compare(gl4::verify::standin_rep(), cfg);
    CHECK(r.identity.pass);
    CHECK(r.lhs.value > 0.0);
    CHECK(r.main.value > 0.0);
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
    CHECK(r.ratio_diagonal == doctest::Approx(0.5 * r.ratio));
}
