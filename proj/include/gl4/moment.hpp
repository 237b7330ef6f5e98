#pragma once

// The second-moment pipeline: the twisted Dirichlet double sum against W and V,
// the averaged moment over even primitive characters, the divisor-sum form of
// the character average, the diagonal main term and its residue expansion.

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "gl4/archimedean.hpp"
#include "gl4/arith.hpp"
#include "gl4/dirichlet_lfunc.hpp"
#include "gl4/local_factors.hpp"
#include "gl4/satake.hpp"

namespace gl4::moment {

using lfunc::DirichletCharacter;
using lfunc::EisensteinGL4;
using satake::cplx;
using satake::GlobalRep;
using satake::u64;

struct TwistConfig {
    double tol = 1e-10;      // truncation target, relative to 2 pi^{-m} G(1/2, 0)
    double tail_tol = 1e-7;  // largest accepted |S(K) - S(K/2)|, same scale
    double x_max = 0.0;      // cutoff in x = mn / K0; 0 = chosen from the decay of W
    u64 max_terms = 60'000'000;
    arch::KernelConfig kernel;
};

struct TwistValue {
    double t = 0.0;
    cplx value;
    cplx half_value;  // the same sum cut at K/2
    double tail_change = 0.0;
};

// Coefficients b(m) = a(m) chi(m) / sqrt(m) for m <= K, shared by every t.
// K = x_max q^4 N / pi^4.
class TwistedSum {
public:
    TwistedSum(const GlobalRep& rep, const DirichletCharacter& chi, TwistConfig cfg = {});

    // 2 pi^{-m} sum_{m,n} b(m) conj(b(n)) (n/m)^{it} W(mn/K0, t)
    TwistValue at(double t) const;
    // Same with W supplied (must be a table for this t).
    TwistValue at(double t, const arch::WTable& W) const;

    // sum_k w_k S(t_k) over the outer t-rule: the V-weighted double sum.
    // box > 0 restricts to m, n <= box and sums pairwise.
    cplx integrated(const arch::TGrid& grid, u64 box = 0) const;
    // Pairwise V form on the box m, n <= box, V from `V`.
    cplx integrated_pairwise(const arch::VEvaluator& V, u64 box) const;

    arch::TGrid default_t_grid() const;

    u64 K() const { return K_; }
    double K0() const { return K0_; }
    double x_max() const { return x_max_; }
    double frak_m() const { return frak_m_; }
    double scale() const { return scale_; }
    const std::vector<cplx>& b() const { return b_; }
    const TwistConfig& config() const { return cfg_; }
    const satake::ArchParams& arch() const { return mu_; }
    double mu_scale() const { return mu_scale_; }

private:
    arch::WTable make_table(double t) const;

    TwistConfig cfg_;
    satake::ArchParams mu_;
    double frak_m_ = 0.0;
    double K0_ = 0.0, x_max_ = 0.0, scale_ = 0.0, mu_scale_ = 0.0;
    u64 K_ = 0;
    std::vector<cplx> b_;
    std::shared_ptr<const arith::SpfSieve> spf_;
};

// Lambda(1/2 + s + it, pi x chi) Lambda(1/2 + s - it, dual) from L-values.
cplx lambda_pair_direct(const EisensteinGL4& rep, const DirichletCharacter& chi, double t, cplx s = 0.0);

struct QuadratureValue {
    double value = 0.0;
    double error_estimate = 0.0;
    double T = 0.0;
};

// int lambda_pair_direct(t) dt by adaptive Gauss-Kronrod on [-T, T].
QuadratureValue lambda_integrated_direct(const EisensteinGL4& rep, const DirichletCharacter& chi,
                                         double T = 12.0);

struct MomentConfig {
    double Q = 16.0;
    arch::Cutoff psi{};
    double alpha = 0.0;  // exponent of log Q in the shifted scale
    double delta = 1.0;  // D = (log Q)^delta
    double y_step = 0.1;
    double y_max = 0.0;  // 0 = chosen from the decay of G(1/2, y)
    u64 p_max = 100000;  // prime bound for A(1/2)
    u64 box = 24;        // m, n <= box in the identity checks
    double max_Q = 256.0;
    double identity_tol = 1e-8;
    int threads = 1;
    arch::KernelConfig kernel;
};

// q with Psi(q/Q) != 0 and gcd(q, N) = 1, ascending.
std::vector<u64> admissible_moduli(u64 N, const MomentConfig& cfg);

struct QRow {
    u64 q = 0;
    long long phi_flat = 0;
    double psi = 0.0;
    double lhs = 0.0;   // Psi(q/Q) sum_chi int |Lambda|^2 dy
    double main = 0.0;  // this q's share of main_term
    double B_q = 0.0;
};

struct LhsResult {
    double value = 0.0;
    double y_max = 0.0, y_step = 0.0;
    std::vector<QRow> rows;
};

LhsResult moment_lhs_direct(const EisensteinGL4& rep, const MomentConfig& cfg);

struct IdentityReport {
    u64 box = 0;
    double D_cut = 0.0;
    cplx char_side;     // 2 pi^{-m} sum_q Psi sum_chi sum_{m,n} ... V
    cplx divisor_side;  // pi^{-m} sum_{m,n} ... sum_{d,r} mu(d) phi(r) Psi V
    cplx delta;         // half the divisor sum without pi^{-m}
    cplx delta_tilde;   // character form at the shifted scale
    cplx diag, off_small_d, off_large_d;  // m = n; m != n with d <= D; m != n with d > D
    double residual_18_19 = 0.0;    // relative
    double residual_21 = 0.0;       // relative
    double residual_partition = 0.0;  // relative
    bool pass = false;
};

// Both sides on the finite box m, n <= cfg.box with shared V values.
IdentityReport identity_18_19(const GlobalRep& rep, const MomentConfig& cfg);

struct MainTermResult {
    double value = 0.0;           // the displayed main term
    double diagonal_value = 0.0;  // 2 pi^{-m} times the diagonal asymptotic
    double g_integral = 0.0;
    local::EulerProduct A;
    std::vector<QRow> rows;
};

MainTermResult main_term(const GlobalRep& rep, const MomentConfig& cfg);

struct ResidueConfig {
    double Q = 0.0;  // 0 = q
    double alpha = 0.0;
    double radius = 0.05;
    int nodes = 64;
    u64 p_max = 100000;
    double slack = 1.0;
};

struct ResidueCheck {
    cplx exact;           // Cauchy-circle derivative
    cplx exact_analytic;  // logarithmic-derivative form
    double two_term = 0.0;
    double gap = 0.0;
    double route_deviation = 0.0;  // |exact - exact_analytic| / |exact|
    bool within_band = false;
};

ResidueCheck residue_expansion_check(u64 q, double t, const GlobalRep& rep, const ResidueConfig& cfg = {});

struct MomentReport {
    double Q = 0.0;
    LhsResult lhs;
    MainTermResult main;
    IdentityReport identity;
    double ratio = 0.0;           // lhs / main
    double ratio_diagonal = 0.0;  // lhs / diagonal_value
};

MomentReport moment_compare(const EisensteinGL4& rep, const MomentConfig& cfg);

}  // namespace gl4::moment
