#pragma once

// The local integral B_p(s), its four evaluation routes at s = 1/2, and the
// Euler-product constants A(s) and B_q(s).

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gl4/fg_tables.hpp"
#include "gl4/satake.hpp"

namespace gl4::local {

using satake::cplx;
using satake::Quad;
using satake::u64;

struct ThetaResult {
    cplx value;
    int nodes = 0;        // final node count
    double last_change = 0.0;
};

// Trapezoid on the unit circle, doubling from `nodes` until two successive
// values differ by less than 0.1 * tol.
ThetaResult bp_theta_integral(const Quad& alpha, u64 p, cplx s, int nodes = 16, double tol = 1e-13);

struct SeriesResult {
    cplx value;
    int R = 0;
    double tail_bound = 0.0;
};

// Partial sum of |h_r|^2 p^{-2rs} for r <= R with the tail bound
// (R+2)^8 p^{-2 sigma (R+1)} / (1 - p^{-2 sigma}) scaled by max|alpha|^{2(R+1)}.
SeriesResult bp_series(const Quad& alpha, u64 p, cplx s, int R);
// Smallest R whose tail bound is below tol.
SeriesResult bp_series_auto(const Quad& alpha, u64 p, cplx s, double tol = 1e-16);

// d/ds of B_p(s) from the same series, for the analytic residue route.
cplx bp_series_derivative(const Quad& alpha, u64 p, cplx s, double tol = 1e-16);

inline constexpr double kSeparation = 1e-4;

cplx bp_residue_closed(const Quad& alpha, u64 p, double separation = kSeparation);

struct NDValues {
    cplx N_fg;
    cplx D_fg;
    cplx D_direct;  // prod_{j != k} (p alpha_k - alpha_j)
    cplx N_direct;  // residue form of N, needs distinct alpha
    bool N_direct_valid = false;
};

NDValues n_pi_d_pi(const Quad& alpha, u64 p, const fg::FGTables& tables = fg::corrected_tables());

cplx bp_half_fg(const Quad& alpha, u64 p, const fg::FGTables& tables = fg::corrected_tables());
cplx bp_half_powersum(const std::array<cplx, 4>& qvals, u64 p,
                      const fg::FGTables& tables = fg::corrected_tables());

struct LocalFactorReport {
    u64 p = 2;
    Quad alpha{};
    cplx s{0.5, 0.0};
    cplx B_int, B_series;
    std::optional<cplx> B_res, B_fg, B_powersum, B_fg_printed;
    std::string residue_note, fg_note;
    double max_rel_dev = 0.0;
    double printed_table_rel_dev = 0.0;
    int theta_nodes = 0;
    int series_R = 0;
    double series_tail = 0.0;
};

LocalFactorReport local_factor_report(const Quad& alpha, u64 p, cplx s = {0.5, 0.0});

struct EulerProduct {
    cplx value;
    double log_abs = 0.0;
    u64 p_max = 0;
    std::size_t primes = 0;
    double tail_estimate = 0.0;  // relative; +inf when the product diverges
    bool divergent = false;
};

// prod_{p <= P_max} (1 - p^{-2s}) B_p(s) with a tail estimate from the
// empirical mean of |h_1|^2 - 1 and the largest p^{-4 sigma} coefficient.
EulerProduct a_constant(cplx s, u64 p_max, const satake::GlobalRep& rep);

// prod_{p | q} B_p(s); gcd(q, N) must be 1.
cplx bq_constant(cplx s, u64 q, const satake::GlobalRep& rep);
// Same product without the coprimality requirement.
cplx bq_unrestricted(cplx s, u64 q, const satake::GlobalRep& rep);

struct SeriesCheck {
    cplx lhs, rhs;
    double rel_dev = 0.0;
    u64 X = 0;
    u64 p_max = 0;
    double rhs_tail_estimate = 0.0;
};

// sum_{n <= X, (n,q)=1} |a(n)|^2 n^{-1-2s} against zeta(1+2s) A(1/2+s) / B_q(1/2+s).
SeriesCheck dirichlet_series_check(cplx s, u64 q, u64 X, const satake::GlobalRep& rep,
                                   u64 p_max = 0);

}  // namespace gl4::local
