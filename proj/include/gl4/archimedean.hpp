#pragma once

// Gamma-product kernel G(s, t), the Mellin-type kernels W(x, t) and
// V(xi, eta; mu) by vertical-line quadrature, the bump cutoff and the
// two-variable weight W^{+-} with its Mellin pair.

#include <complex>
#include <memory>
#include <vector>

#include "gl4/satake.hpp"

namespace gl4::arch {

using satake::ArchParams;
using satake::cplx;

struct KernelConfig {
    double c = 1.0;      // abscissa of the s-contour
    double T = 0.0;      // |Im s| truncation, 0 = chosen from the Gamma decay
    double h = 0.0;      // s-step, 0 = chosen from the distance to the pole at s = 0
    double T_t = 0.0;    // t truncation, 0 = chosen from the decay of G(1/2, t)
    double h_t = 0.0;    // t step, 0 = chosen from the strip of analyticity
    double tol = 1e-12;  // relative target
    double log_ratio_max = 16.0;  // largest |log(eta/xi)| the t-step must resolve
    double table_step = 0.01;     // log-x spacing of W tables
};

inline constexpr double kPoleGuard = 1e-8;

cplx log_g_kernel(cplx s, double t, const ArchParams& mu);
cplx g_kernel(cplx s, double t, const ArchParams& mu);

struct GammaProductValue {
    cplx s;
    double t = 0.0;
    ArchParams mu;
    cplx value;
    double decay_rate = 0.0;  // -log|G(s,t)/G(s,0)| / |t|, 0 at t = 0
};

GammaProductValue gamma_product(cplx s, double t, const ArchParams& mu);

// Nodes s_k = c + i k h, k = 0..n-1, with weights for the half-line form
// W = residue + Re sum_k g_k x^{-s_k} (valid for real x and t).
class WContour {
public:
    WContour(double t, const ArchParams& mu, double c, const KernelConfig& cfg);

    double eval_log(double log_x) const;
    double eval(double x) const;

    double c() const { return c_; }
    double h() const { return h_; }
    double T() const { return T_; }
    std::size_t nodes() const { return g_.size(); }
    double residue() const { return residue_; }
    double tail_magnitude() const { return tail_; }

private:
    double c_, h_, T_;
    double residue_ = 0.0;  // G(1/2, t) when the contour lies left of s = 0
    double tail_ = 0.0;     // integrand magnitude at the truncation point (x = 1)
    std::vector<double> im_;  // Im s_k
    std::vector<cplx> g_;     // weight * G(1/2 + s_k, t) / s_k
};

struct KernelValue {
    double value = 0.0;
    double tail_estimate = 0.0;
    double c = 0.0, T = 0.0, h = 0.0;
    std::size_t nodes = 0;
};

KernelValue w_kernel(double x, double t, const ArchParams& mu, const KernelConfig& cfg = {});

// Abscissa to the left of s = 0 used for small x (no cancellation in x^{-s}).
double left_abscissa(const ArchParams& mu);

// W(e^u, t) on a uniform u-grid, read back by 8-point Lagrange interpolation.
// Outside the grid the contour is evaluated directly.
class WTable {
public:
    WTable(double t, const ArchParams& mu, const KernelConfig& cfg, double u_min, double u_max);

    double operator()(double log_x) const;
    double t() const { return t_; }
    double u_min() const { return u0_; }
    double u_max() const { return u0_ + step_ * static_cast<double>(vals_.size() - 1); }

private:
    double direct(double log_x) const;

    double t_;
    double u0_, step_;
    std::vector<double> vals_;
    std::shared_ptr<const WContour> right_, left_;
};

struct TGrid {
    double h_t = 0.0, T_t = 0.0;
    std::vector<double> t;   // ascending
    std::vector<double> w;   // quadrature weights
    bool symmetric = false;  // only t >= 0 kept, weights doubled
};

// Step and truncation of the outer t-integral.
TGrid make_t_grid(const ArchParams& mu, const KernelConfig& cfg);

// V(xi, eta; mu) = int (eta/xi)^{it} W(pi^4 xi eta / mu^4, t) dt with W cached
// at the t-nodes of the outer rule.
class VEvaluator {
public:
    VEvaluator(const ArchParams& mu, const KernelConfig& cfg, double log_x_min, double log_x_max);

    cplx operator()(double xi, double eta, double mu_scale) const;
    const TGrid& grid() const { return grid_; }
    const WTable& table(std::size_t k) const { return *tables_[k]; }

private:
    ArchParams mu_;
    TGrid grid_;
    std::vector<std::unique_ptr<WTable>> tables_;
};

struct VValue {
    cplx value;
    double T_t = 0.0, h_t = 0.0;
    std::size_t t_nodes = 0;
    double tail_estimate = 0.0;
};

VValue v_kernel(double xi, double eta, double mu_scale, const ArchParams& mu,
                const KernelConfig& cfg = {});

struct GIntegral {
    double value = 0.0;
    double T_t = 0.0, h_t = 0.0;
    double doubling_change = 0.0;  // |I(2 T_t) - I(T_t)|
};

// int G(1/2, t) dt by trapezoid, with the T_t -> 2 T_t stability check.
GIntegral g_integral(const ArchParams& mu, const KernelConfig& cfg = {});

// Smooth bump supported on (lo, hi); the canonical choice is
// exp(-1/((x-1)(2-x))) on (1, 2).
struct Cutoff {
    double lo = 1.0, hi = 2.0, amplitude = 1.0;
    double operator()(double x) const;
};

// u|x +- y| Psi(u|x +- y|) V(x, y; u|x +- y|); sign is +1 or -1.
double w_pm(double x, double y, double u, int sign, const Cutoff& psi, const VEvaluator& V);

// Two-dimensional Mellin transform of W^{+-}(., .; u) sampled on a log grid,
// and its numerical inversion.
class WeightMellin {
public:
    struct Options {
        // 0 = 512 for the plus sign, 1024 for minus (its support band narrows
        // like 1/x in log coordinates)
        int n = 0;
        double c1 = 2.0, c2 = 2.0;  // real parts used for the inversion contour
        double depth = 8.0;        // log-window below the support
    };

    WeightMellin(double u, int sign, Cutoff psi, const ArchParams& mu, const KernelConfig& cfg,
                 Options opt);

    // Trapezoid Mellin transform at (s1, s2), Re s1, Re s2 > 0.
    cplx transform(cplx s1, cplx s2) const;
    // Inversion integral on Re s = (c1, c2), truncated at |Im s| <= tau_max.
    double invert(double x0, double y0) const;
    double direct(double x0, double y0) const;

    double a_min() const { return a0_; }
    double a_max() const { return a0_ + step_ * (opt_.n - 1); }
    double step() const { return step_; }
    double tau_max() const { return tau_max_; }
    double tau_step() const { return tau_step_; }

private:
    double u_;
    int sign_;
    Cutoff psi_;
    Options opt_;
    std::unique_ptr<VEvaluator> V_;
    double a0_ = 0.0, step_ = 0.0;
    std::vector<double> samples_;  // row-major W^{+-}(e^a, e^b)
    double tau_max_ = 0.0, tau_step_ = 0.0;
    std::vector<cplx> spectrum_;   // transform on the (tau1, tau2) grid
    std::vector<double> taus_;
};

}  // namespace gl4::arch
