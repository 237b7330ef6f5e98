#include "gl4/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gl4/special.hpp"

namespace gl4::arch {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogPi = std::log(kPi);

double min_re_mu(const ArchParams& mu) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& x : mu.mu) m = std::min(m, x.real());
    return m;
}

void check_gamma_arg(cplx z) {
    if (z.real() > 0.5) return;
    double k = std::round(z.real());
    if (k <= 0.0 && std::abs(z - cplx(k, 0.0)) < kPoleGuard)
        throw std::domain_error("g_kernel: Gamma argument within pole guard of a nonpositive integer");
}

// |G(1/2 + c + i tau, t)| / |c + i tau|
double contour_magnitude(double c, double tau, double t, const ArchParams& mu) {
    cplx s(c, tau);
    return std::exp(log_g_kernel(0.5 + s, t, mu).real()) / std::abs(s);
}

struct Singularity {
    double dist;
    int order;
};

// Trapezoid step on a vertical line: the aliasing error behaves like
// e^{-2 pi d/h} times the integrand size on the line shifted by d, which grows
// like (dist - d)^{-order} near each pole. Pick the shift d that permits the
// largest step.
double default_step(const std::vector<Singularity>& sing, double tol) {
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& s : sing) dmin = std::min(dmin, s.dist);
    const double L = std::log(1.0 / tol) + 3.0;
    double best = 0.0;
    for (int i = 1; i < 64; ++i) {
        double d = dmin * i / 64.0;
        double need = L;
        for (const auto& s : sing) need = std::max(need, L + s.order * std::log(std::max(1.0, 1.0 / (s.dist - d))));
        best = std::max(best, 2.0 * kPi * d / need);
    }
    return best;
}

// Worst-case multiplicity of the leading Gamma pole (t = 0 merges both families).
int gamma_pole_order(const ArchParams& mu) {
    double m = min_re_mu(mu);
    int k = 0;
    for (const auto& x : mu.mu)
        if (x.real() - m < 1e-12) ++k;
    return 2 * k;
}

}  // namespace

cplx log_g_kernel(cplx s, double t, const ArchParams& mu) {
    cplx acc = 0.0;
    const cplx it(0.0, t);
    for (const auto& m : mu.mu) {
        cplx z1 = 0.5 * (s + it + m);
        cplx z2 = 0.5 * (s - it + std::conj(m));
        check_gamma_arg(z1);
        check_gamma_arg(z2);
        acc += special::log_gamma(z1) + special::log_gamma(z2);
    }
    return acc;
}

cplx g_kernel(cplx s, double t, const ArchParams& mu) { return std::exp(log_g_kernel(s, t, mu)); }

GammaProductValue gamma_product(cplx s, double t, const ArchParams& mu) {
    GammaProductValue out;
    out.s = s;
    out.t = t;
    out.mu = mu;
    cplx lg = log_g_kernel(s, t, mu);
    out.value = std::exp(lg);
    if (t != 0.0) out.decay_rate = -(lg.real() - log_g_kernel(s, 0.0, mu).real()) / std::abs(t);
    return out;
}

double left_abscissa(const ArchParams& mu) {
    double strip = 0.5 + min_re_mu(mu);
    if (!(strip > 0.0)) throw std::domain_error("left_abscissa: need 1/2 + Re mu_j > 0");
    return -0.5 * strip;
}

WContour::WContour(double t, const ArchParams& mu, double c, const KernelConfig& cfg) : c_(c) {
    if (c == 0.0) throw std::invalid_argument("WContour: abscissa must avoid s = 0");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("KernelConfig: tol must be positive");
    double strip = 0.5 + min_re_mu(mu);
    if (!(-c < strip)) throw std::domain_error("WContour: abscissa crosses a Gamma pole");
    std::vector<Singularity> sing{{std::abs(c), 1}, {strip + c, gamma_pole_order(mu)}};
    if (c < 0.0) residue_ = g_kernel(0.5, t, mu).real();
    h_ = cfg.h > 0.0 ? cfg.h : default_step(sing, cfg.tol);

    if (cfg.T > 0.0) {
        T_ = cfg.T;
        tail_ = contour_magnitude(c, T_, t, mu);
    } else {
        double ref = 0.0, tau = 0.0, m = 0.0;
        for (;; tau += 0.5) {
            m = contour_magnitude(c, tau, t, mu);
            ref = std::max(ref, m);
            if (tau > std::abs(t) && m < 1e-2 * cfg.tol * ref) break;
            if (tau > 1e4) throw std::runtime_error("WContour: integrand does not decay");
        }
        T_ = tau;
        tail_ = m;
    }

    auto n = static_cast<std::size_t>(std::floor(T_ / h_)) + 1;
    im_.resize(n);
    g_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double tau = static_cast<double>(k) * h_;
        cplx s(c, tau);
        double w = (k == 0 ? 1.0 : 2.0) * h_ / (2.0 * kPi);
        im_[k] = tau;
        g_[k] = w * g_kernel(0.5 + s, t, mu) / s;
    }
}

double WContour::eval_log(double u) const {
    // x^{-s_k} = e^{-c u} e^{-i k h u}; the phase advances by a fixed rotation.
    const cplx rot = std::polar(1.0, -h_ * u);
    cplx z = 1.0;
    double acc = 0.0;
    for (const auto& g : g_) {
        acc += (g * z).real();
        z *= rot;
    }
    return residue_ + std::exp(-c_ * u) * acc;
}

double WContour::eval(double x) const {
    if (!(x > 0.0)) throw std::domain_error("w_kernel: x must be positive");
    return eval_log(std::log(x));
}

KernelValue w_kernel(double x, double t, const ArchParams& mu, const KernelConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("w_kernel: x must be positive");
    if (!(cfg.c > 0.0)) throw std::invalid_argument("KernelConfig: c must be positive");
    // x^{-c} > 1 amplifies the truncated tail; tighten accordingly
    KernelConfig local = cfg;
    if (x < 1.0) local.tol = cfg.tol * std::pow(x, cfg.c);
    WContour C(t, mu, cfg.c, local);
    KernelValue out;
    out.value = C.eval(x);
    // both half-lines beyond T, integrand decaying at least like e^{-pi tau / 2}
    out.tail_estimate = 2.0 * C.tail_magnitude() * std::pow(x, -cfg.c) / (2.0 * kPi) * (2.0 / kPi);
    out.c = C.c();
    out.T = C.T();
    out.h = C.h();
    out.nodes = C.nodes();
    return out;
}

WTable::WTable(double t, const ArchParams& mu, const KernelConfig& cfg, double u_min, double u_max)
    : t_(t) {
    if (!(u_max >= u_min)) throw std::invalid_argument("WTable: empty range");
    if (!(cfg.c > 0.0)) throw std::invalid_argument("KernelConfig: c must be positive");
    step_ = cfg.table_step;
    u0_ = u_min - 4.0 * step_;
    auto n = static_cast<std::size_t>(std::ceil((u_max - u_min) / step_)) + 9;
    KernelConfig auto_cfg = cfg;
    auto_cfg.T = 0.0;
    auto_cfg.h = 0.0;
    right_ = std::make_shared<WContour>(t, mu, cfg.c, auto_cfg);
    left_ = std::make_shared<WContour>(t, mu, left_abscissa(mu), auto_cfg);
    vals_.resize(n);
    for (std::size_t i = 0; i < n; ++i) vals_[i] = direct(u0_ + step_ * static_cast<double>(i));
}

double WTable::direct(double u) const { return u < 0.0 ? left_->eval_log(u) : right_->eval_log(u); }

double WTable::operator()(double u) const {
    static constexpr std::array<double, 8> kBary{1, -7, 21, -35, 35, -21, 7, -1};
    double pos = (u - u0_) / step_;
    auto last = static_cast<double>(vals_.size() - 1);
    if (!(pos >= 3.0 && pos <= last - 4.0)) return direct(u);
    auto i0 = static_cast<std::size_t>(std::floor(pos)) - 3;
    double p = pos - static_cast<double>(i0);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
        double d = p - static_cast<double>(j);
        if (d == 0.0) return vals_[i0 + j];
        double w = kBary[j] / d;
        num += w * vals_[i0 + j];
        den += w;
    }
    return num / den;
}

TGrid make_t_grid(const ArchParams& mu, const KernelConfig& cfg) {
    TGrid g;
    double strip = 0.5 + min_re_mu(mu);
    if (!(strip > 0.0)) throw std::domain_error("make_t_grid: need 1/2 + Re mu_j > 0");
    g.h_t = cfg.h_t > 0.0
                ? cfg.h_t
                : 2.0 * kPi * 0.9 * strip / (std::log(1.0 / cfg.tol) + strip * cfg.log_ratio_max + 3.0);
    if (cfg.T_t > 0.0) {
        g.T_t = cfg.T_t;
    } else {
        double ref = 0.0;
        for (double t = 0.0;; t += 0.25) {
            double m = std::max(std::abs(g_kernel(0.5, t, mu)), std::abs(g_kernel(0.5, -t, mu)));
            ref = std::max(ref, m);
            if (t > 0.0 && m < 1e-2 * cfg.tol * ref) {
                g.T_t = t;
                break;
            }
            if (t > 1e3) throw std::runtime_error("make_t_grid: G(1/2, t) does not decay");
        }
    }
    auto K = static_cast<long>(std::floor(g.T_t / g.h_t));
    g.symmetric = mu.conjugation_closed();
    for (long k = g.symmetric ? 0 : -K; k <= K; ++k) {
        g.t.push_back(static_cast<double>(k) * g.h_t);
        g.w.push_back((g.symmetric && k != 0 ? 2.0 : 1.0) * g.h_t);
    }
    return g;
}

VEvaluator::VEvaluator(const ArchParams& mu, const KernelConfig& cfg, double log_x_min,
                       double log_x_max)
    : mu_(mu), grid_(make_t_grid(mu, cfg)) {
    tables_.reserve(grid_.t.size());
    for (double t : grid_.t) tables_.push_back(std::make_unique<WTable>(t, mu, cfg, log_x_min, log_x_max));
}

cplx VEvaluator::operator()(double xi, double eta, double mu_scale) const {
    if (!(xi > 0.0 && eta > 0.0 && mu_scale > 0.0))
        throw std::domain_error("v_kernel: xi, eta, mu must be positive");
    double lx = 4.0 * kLogPi + std::log(xi) + std::log(eta) - 4.0 * std::log(mu_scale);
    double omega = std::log(eta) - std::log(xi);
    if (grid_.symmetric) {
        double acc = 0.0;
        for (std::size_t k = 0; k < tables_.size(); ++k)
            acc += grid_.w[k] * std::cos(grid_.t[k] * omega) * (*tables_[k])(lx);
        return acc;
    }
    cplx acc = 0.0;
    for (std::size_t k = 0; k < tables_.size(); ++k)
        acc += grid_.w[k] * std::polar(1.0, grid_.t[k] * omega) * (*tables_[k])(lx);
    return acc;
}

VValue v_kernel(double xi, double eta, double mu_scale, const ArchParams& mu, const KernelConfig& cfg) {
    if (!(xi > 0.0 && eta > 0.0 && mu_scale > 0.0))
        throw std::domain_error("v_kernel: xi, eta, mu must be positive");
    double lx = 4.0 * kLogPi + std::log(xi) + std::log(eta) - 4.0 * std::log(mu_scale);
    KernelConfig local = cfg;
    local.log_ratio_max = std::max(cfg.log_ratio_max, std::abs(std::log(eta / xi)));
    VEvaluator V(mu, local, lx - 0.1, lx + 0.1);
    VValue out;
    out.value = V(xi, eta, mu_scale);
    out.T_t = V.grid().T_t;
    out.h_t = V.grid().h_t;
    out.t_nodes = V.grid().t.size();
    // |W(x, t)| <= G(1/2, t) + O(tail) and G(1/2, t) decays like e^{-pi |t| / 2} or faster
    out.tail_estimate = 2.0 * std::abs(g_kernel(0.5, out.T_t, mu)) * (2.0 / kPi);
    return out;
}

GIntegral g_integral(const ArchParams& mu, const KernelConfig& cfg) {
    auto integrate = [&](const TGrid& g) {
        double acc = 0.0;
        for (std::size_t k = 0; k < g.t.size(); ++k) acc += g.w[k] * g_kernel(0.5, g.t[k], mu).real();
        return acc;
    };
    TGrid g = make_t_grid(mu, cfg);
    KernelConfig doubled = cfg;
    doubled.h_t = g.h_t;
    doubled.T_t = 2.0 * g.T_t;
    GIntegral out;
    out.value = integrate(g);
    out.T_t = g.T_t;
    out.h_t = g.h_t;
    out.doubling_change = std::abs(integrate(make_t_grid(mu, doubled)) - out.value);
    return out;
}

double Cutoff::operator()(double x) const {
    if (!(x > lo && x < hi)) return 0.0;
    double y = 1.0 + (x - lo) / (hi - lo);
    return amplitude * std::exp(-1.0 / ((y - 1.0) * (2.0 - y)));
}

double w_pm(double x, double y, double u, int sign, const Cutoff& psi, const VEvaluator& V) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("w_pm: sign must be +1 or -1");
    if (!(u > 0.0)) throw std::domain_error("w_pm: u must be positive");
    if (x < 0.0 || y < 0.0) throw std::domain_error("w_pm: x, y must be nonnegative");
    double z = u * std::abs(sign > 0 ? x + y : x - y);
    double cut = psi(z);
    if (cut == 0.0) return 0.0;
    // V(x, y; mu) -> 0 as x or y -> 0 (Fourier transform of G(1/2, t) at infinite frequency)
    if (x == 0.0 || y == 0.0) return 0.0;
    return z * cut * V(x, y, z).real();
}

WeightMellin::WeightMellin(double u, int sign, Cutoff psi, const ArchParams& mu, const KernelConfig& cfg,
                           Options opt)
    : u_(u), sign_(sign), psi_(psi), opt_(opt) {
    if (!(u > 0.0)) throw std::domain_error("WeightMellin: u must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("WeightMellin: sign must be +1 or -1");
    if (!(opt.c1 > 0.0 && opt.c2 > 0.0)) throw std::domain_error("WeightMellin: real parts must be positive");
    if (opt_.n == 0) opt_.n = sign > 0 ? 512 : 1024;
    opt = opt_;
    if (opt.n < 16) throw std::invalid_argument("WeightMellin: grid too small");
    if (!mu.conjugation_closed())
        throw std::invalid_argument("WeightMellin: needs conjugation-closed mu (real weight)");

    double top = std::log(psi.hi / u);
    double zmid = 0.5 * (psi.lo + psi.hi);

    // For the minus sign the support is unbounded above; extend until the
    // weighted integrand along x - y = zmid/u is negligible.
    double extra = 0.0;
    double lx_lo = 4.0 * std::log(kPi) + 2.0 * (top - opt.depth) - 4.0 * std::log(psi.hi) - 1.0;
    if (sign < 0) {
        KernelConfig probe_cfg = cfg;
        probe_cfg.log_ratio_max = std::max(cfg.log_ratio_max, opt.depth + 4.0);
        // Stop once the weighted integrand is negligible or has reached the
        // absolute accuracy floor of W (where it starts growing again).
        double peak = 0.0, prev = std::numeric_limits<double>::infinity();
        for (double a = top - 1.0; a < top + 12.0; a += 0.25) {
            double x = std::exp(a), y = x - zmid / u;
            if (y <= 0.0) continue;
            double lx = 4.0 * std::log(kPi) + std::log(x) + std::log(y) - 4.0 * std::log(zmid);
            VEvaluator probe(mu, probe_cfg, lx, lx);
            double val = std::abs(w_pm(x, y, u, sign, psi, probe)) * std::exp(opt.c1 * a + opt.c2 * std::log(y));
            peak = std::max(peak, val);
            if (a > top && (val < 1e-8 * peak || val > prev)) {
                extra = a - top;
                break;
            }
            prev = val;
        }
        if (extra == 0.0) throw std::runtime_error("WeightMellin: weight does not decay in the window");
    }
    double a_hi = top + extra;
    a0_ = a_hi - opt.depth - extra;
    step_ = (a_hi - a0_) / (opt.n - 1);
    double lx_hi = 4.0 * std::log(kPi) + 2.0 * a_hi - 4.0 * std::log(psi.lo) + 1.0;

    KernelConfig vcfg = cfg;
    vcfg.log_ratio_max = std::max(cfg.log_ratio_max, a_hi - a0_);
    V_ = std::make_unique<VEvaluator>(mu, vcfg, lx_lo, lx_hi);

    const auto n = static_cast<std::size_t>(opt.n);
    samples_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::exp(a0_ + step_ * static_cast<double>(i));
        for (std::size_t j = 0; j < n; ++j) {
            double y = std::exp(a0_ + step_ * static_cast<double>(j));
            samples_[i * n + j] = w_pm(x, y, u, sign, psi, *V_);
        }
    }

    // Spectrum on Re s = (c1, c2): separable sums E P E^T with E[j][i] = e^{i tau_j a_i}.
    double L = a_hi - a0_;
    tau_step_ = 2.0 * kPi / (1.25 * L);
    tau_max_ = kPi / step_;
    auto J = static_cast<long>(std::floor(tau_max_ / tau_step_));
    for (long j = -J; j <= J; ++j) taus_.push_back(static_cast<double>(j) * tau_step_);
    const std::size_t m = taus_.size();

    std::vector<double> ex1(n), ex2(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = a0_ + step_ * static_cast<double>(i);
        ex1[i] = std::exp(opt.c1 * a) * step_;
        ex2[i] = std::exp(opt.c2 * a) * step_;
    }
    std::vector<cplx> E(m * n);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            E[j * n + i] = std::polar(1.0, taus_[j] * (a0_ + step_ * static_cast<double>(i)));

    std::vector<char> live(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        live[i] = std::any_of(&samples_[i * n], &samples_[i * n] + n, [](double v) { return v != 0.0; });

    // R[i][l] = sum_b P[i][b] E[l][b]
    std::vector<cplx> R(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i]) continue;
        const double* row = &samples_[i * n];
        for (std::size_t l = 0; l < m; ++l) {
            const cplx* e = &E[l * n];
            cplx acc = 0.0;
            for (std::size_t b = 0; b < n; ++b)
                if (row[b] != 0.0) acc += row[b] * ex2[b] * e[b];
            R[i * m + l] = acc * ex1[i];
        }
    }
    spectrum_.assign(m * m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        cplx* out = &spectrum_[j * m];
        for (std::size_t i = 0; i < n; ++i) {
            if (!live[i]) continue;
            const cplx ei = E[j * n + i];
            const cplx* r = &R[i * m];
            for (std::size_t l = 0; l < m; ++l) out[l] += ei * r[l];
        }
    }
}

cplx WeightMellin::transform(cplx s1, cplx s2) const {
    if (!(s1.real() > 0.0 && s2.real() > 0.0))
        throw std::domain_error("w_pm_mellin: real parts must be positive");
    const auto n = static_cast<std::size_t>(opt_.n);
    std::vector<cplx> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = a0_ + step_ * static_cast<double>(i);
        px[i] = std::exp(s1 * a) * step_;
        py[i] = std::exp(s2 * a) * step_;
    }
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (samples_[i * n + j] != 0.0) row += samples_[i * n + j] * py[j];
        acc += px[i] * row;
    }
    return acc;
}

double WeightMellin::invert(double x0, double y0) const {
    if (!(x0 > 0.0 && y0 > 0.0)) throw std::domain_error("WeightMellin::invert: x0, y0 must be positive");
    const std::size_t m = taus_.size();
    double a = std::log(x0), b = std::log(y0);
    std::vector<cplx> fa(m), fb(m);
    for (std::size_t j = 0; j < m; ++j) {
        double w = (j == 0 || j + 1 == m) ? 0.5 : 1.0;
        fa[j] = w * std::polar(1.0, -taus_[j] * a);
        fb[j] = w * std::polar(1.0, -taus_[j] * b);
    }
    cplx acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        cplx row = 0.0;
        for (std::size_t l = 0; l < m; ++l) row += spectrum_[j * m + l] * fb[l];
        acc += fa[j] * row;
    }
    double scale = tau_step_ * tau_step_ / (4.0 * kPi * kPi) * std::exp(-opt_.c1 * a - opt_.c2 * b);
    return (acc * scale).real();
}

double WeightMellin::direct(double x0, double y0) const { return w_pm(x0, y0, u_, sign_, psi_, *V_); }

}  // namespace gl4::arch
