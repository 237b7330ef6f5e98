#include "gl4/moment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gl4/arith.hpp"
#include "gl4/parallel.hpp"
#include "gl4/special.hpp"

namespace gl4::moment {

namespace {

constexpr double kPi = std::numbers::pi;

void check_twist(const DirichletCharacter& chi, u64 N) {
    if (!chi.is_primitive()) throw std::invalid_argument("twist: character must be primitive");
    if (!chi.is_even()) throw std::invalid_argument("twist: character must be even");
    if (std::gcd(chi.modulus(), N) != 1) throw std::invalid_argument("twist: gcd(q, N) must be 1");
}

double pow4(double x) { return x * x * x * x; }

}  // namespace

TwistedSum::TwistedSum(const GlobalRep& rep, const DirichletCharacter& chi, TwistConfig cfg)
    : cfg_(cfg), mu_(rep.arch()) {
    const u64 N = rep.conductor();
    check_twist(chi, N);
    const double q = static_cast<double>(chi.modulus());
    frak_m_ = mu_.frak_m();
    K0_ = pow4(q) * static_cast<double>(N) / pow4(kPi);
    mu_scale_ = q * std::pow(static_cast<double>(N), 0.25);
    const double g0 = arch::g_kernel(0.5, 0.0, mu_).real();
    scale_ = 2.0 * std::pow(kPi, -frak_m_) * g0;

    if (cfg_.x_max > 0.0) {
        x_max_ = cfg_.x_max;
    } else {
        // smallest x beyond which |W(x, 0)| sqrt(x K0) stays below tol G(1/2, 0)
        arch::KernelConfig kc = cfg_.kernel;
        arch::WContour right(0.0, mu_, kc.c, kc);
        int run = 0;
        double u = 0.0;
        for (; u < 40.0; u += 0.25) {
            double x = std::exp(u);
            double w = std::abs(right.eval_log(u));
            if (w * std::sqrt(x * K0_) <= cfg_.tol * g0) {
                if (++run == 3) break;
            } else {
                run = 0;
            }
        }
        x_max_ = std::exp(u);
    }
    double Kd = x_max_ * K0_;
    if (Kd > static_cast<double>(cfg_.max_terms))
        throw std::length_error("twisted sum: cutoff " + std::to_string(static_cast<long long>(Kd)) +
                                " exceeds the term budget " + std::to_string(cfg_.max_terms) +
                                " (raise max_terms or the tolerance)");
    K_ = static_cast<u64>(Kd);
    b_ = rep.coefficient_table(K_);
    spf_ = std::make_shared<const arith::SpfSieve>(static_cast<std::uint32_t>(K_));
    const u64 qm = chi.modulus();
    for (u64 n = 1; n <= K_; ++n) {
        if (b_[n] == 0.0) continue;
        b_[n] *= chi(static_cast<arith::i64>(n % qm)) / std::sqrt(static_cast<double>(n));
    }
}

arch::WTable TwistedSum::make_table(double t) const {
    // K < 1 leaves the sum empty; keep the table range nonempty anyway
    const double u_min = std::log(1.0 / K0_);
    return arch::WTable(t, mu_, cfg_.kernel, u_min, std::max(u_min, std::log(x_max_)));
}

TwistValue TwistedSum::at(double t) const { return at(t, make_table(t)); }

TwistValue TwistedSum::at(double t, const arch::WTable& W) const {
    const std::size_t K = K_;
    std::vector<cplx> A;
    const std::vector<cplx>* src = &b_;
    if (t != 0.0) {
        // n^{-it} is completely multiplicative: one sincos per prime
        A.assign(K + 1, cplx(0.0));
        if (K >= 1) A[1] = 1.0;
        for (std::uint32_t n = 2; n <= K; ++n) {
            std::uint32_t p = spf_->spf(n);
            A[n] = p == n ? std::polar(1.0, -t * std::log(static_cast<double>(n))) : A[p] * A[n / p];
        }
        for (std::size_t n = 1; n <= K; ++n) A[n] *= b_[n];
        src = &A;
    }
    const auto& a = *src;
    // c[k] = sum_{mn = k} A_m conj(A_n) is real by the m <-> n symmetry; it is
    // built block by block in k so the scattered writes stay in cache
    const double logK0 = std::log(K0_);
    arith::CompensatedSum<double> sum, half;
    const std::size_t K2 = K / 2;
    constexpr std::size_t kBlock = 1 << 15;
    std::vector<double> c(kBlock);
    for (std::size_t k0 = 1; k0 <= K; k0 += kBlock) {
        const std::size_t k1 = std::min(K + 1, k0 + kBlock);
        std::fill(c.begin(), c.end(), 0.0);
        for (std::size_t m = 1; m * m < k1; ++m) {
            const cplx am = a[m];
            if (am == 0.0) continue;
            if (m * m >= k0 && m * m < k1) c[m * m - k0] += std::norm(am);
            const std::size_t n_lo = std::max(m + 1, (k0 + m - 1) / m);
            const std::size_t n_hi = (k1 - 1) / m;
            for (std::size_t n = n_lo; n <= n_hi; ++n) {
                const cplx an = a[n];
                c[m * n - k0] += 2.0 * (am.real() * an.real() + am.imag() * an.imag());
            }
        }
        for (std::size_t k = k0; k < k1; ++k) {
            const double ck = c[k - k0];
            if (ck == 0.0) continue;
            double term = ck * W(std::log(static_cast<double>(k)) - logK0);
            sum.add(term);
            if (k <= K2) half.add(term);
        }
    }
    const double pref = 2.0 * std::pow(kPi, -frak_m_);
    TwistValue out;
    out.t = t;
    out.value = pref * sum.value();
    out.half_value = pref * half.value();
    out.tail_change = std::abs(out.value - out.half_value);
    if (out.tail_change > cfg_.tail_tol * scale_)
        throw std::runtime_error("twisted sum: cutoff x_max = " + std::to_string(x_max_) +
                                 " too small (halving changes the value by " + std::to_string(out.tail_change) +
                                 "); try x_max = " + std::to_string(2.0 * x_max_));
    return out;
}

arch::TGrid TwistedSum::default_t_grid() const {
    arch::KernelConfig kc = cfg_.kernel;
    kc.log_ratio_max = std::max(kc.log_ratio_max, std::log(static_cast<double>(std::max<u64>(K_, 2))));
    return arch::make_t_grid(mu_, kc);
}

cplx TwistedSum::integrated(const arch::TGrid& grid, u64 box) const {
    auto eval = [&](double t) -> cplx {
        if (box == 0) return at(t).value;
        const double logK0 = std::log(K0_);
        arch::WTable W(t, mu_, cfg_.kernel, -logK0, 2.0 * std::log(static_cast<double>(box)) - logK0);
        cplx s = 0.0;
        for (u64 m = 1; m <= box && m <= K_; ++m)
            for (u64 n = 1; n <= box && n <= K_; ++n) {
                double lm = std::log(static_cast<double>(m)), ln = std::log(static_cast<double>(n));
                s += b_[m] * std::conj(b_[n]) * std::polar(1.0, t * (ln - lm)) * W(lm + ln - logK0);
            }
        return 2.0 * std::pow(kPi, -frak_m_) * s;
    };
    // S(-t) = conj S(t) only when the twisted coefficients are real
    const bool real_b = std::all_of(b_.begin(), b_.end(), [](cplx z) { return z.imag() == 0.0; });
    cplx acc = 0.0;
    for (std::size_t k = 0; k < grid.t.size(); ++k) {
        const double t = grid.t[k];
        cplx v;
        if (!grid.symmetric || t == 0.0)
            v = eval(t);
        else if (real_b)
            v = eval(t).real();
        else
            v = 0.5 * (eval(t) + eval(-t));
        acc += grid.w[k] * v;
    }
    return acc;
}

cplx TwistedSum::integrated_pairwise(const arch::VEvaluator& V, u64 box) const {
    cplx s = 0.0;
    for (u64 m = 1; m <= box && m <= K_; ++m)
        for (u64 n = 1; n <= box && n <= K_; ++n)
            s += b_[m] * std::conj(b_[n]) * V(static_cast<double>(m), static_cast<double>(n), mu_scale_);
    return 2.0 * std::pow(kPi, -frak_m_) * s;
}

cplx lambda_pair_direct(const EisensteinGL4& rep, const DirichletCharacter& chi, double t, cplx s) {
    auto a = lfunc::completed_lambda(s + cplx(0.0, t), rep, chi);
    auto b = lfunc::completed_lambda(s - cplx(0.0, t), rep.dual(), chi.conj());
    return a.value * b.value;
}

QuadratureValue lambda_integrated_direct(const EisensteinGL4& rep, const DirichletCharacter& chi, double T) {
    auto dual = rep.dual();
    auto chibar = chi.conj();
    auto f = [&](double t) {
        auto a = lfunc::completed_lambda(cplx(0.0, t), rep, chi);
        auto b = lfunc::completed_lambda(cplx(0.0, -t), dual, chibar);
        return (a.value * b.value).real();
    };
    QuadratureValue out;
    out.T = T;
    out.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -T, T, 12, 1e-13,
                                                                               &out.error_estimate);
    return out;
}

std::vector<u64> admissible_moduli(u64 N, const MomentConfig& cfg) {
    std::vector<u64> qs;
    auto lo = static_cast<u64>(std::floor(cfg.psi.lo * cfg.Q));
    auto hi = static_cast<u64>(std::ceil(cfg.psi.hi * cfg.Q));
    for (u64 q = std::max<u64>(lo, 1); q <= hi; ++q) {
        if (std::gcd(q, N) != 1) continue;
        if (cfg.psi(static_cast<double>(q) / cfg.Q) == 0.0) continue;
        qs.push_back(q);
    }
    return qs;
}

LhsResult moment_lhs_direct(const EisensteinGL4& rep, const MomentConfig& cfg) {
    if (!(cfg.Q >= 2.0)) throw std::invalid_argument("moment: Q must be at least 2");
    if (cfg.Q > cfg.max_Q)
        throw std::length_error("moment_lhs_direct: Q = " + std::to_string(cfg.Q) + " exceeds the budget max_Q = " +
                                std::to_string(cfg.max_Q));
    const auto& mu = rep.arch();
    const double pm = std::pow(kPi, -mu.frak_m());
    LhsResult out;
    out.y_step = cfg.y_step;
    if (cfg.y_max > 0.0) {
        out.y_max = cfg.y_max;
    } else {
        arch::KernelConfig kc = cfg.kernel;
        kc.tol = 1e-14;
        out.y_max = arch::make_t_grid(mu, kc).T_t + 2.0;
    }
    const auto J = static_cast<long>(std::ceil(out.y_max / cfg.y_step));
    std::vector<double> ys, gs;
    for (long j = -J; j <= J; ++j) {
        double y = static_cast<double>(j) * cfg.y_step;
        ys.push_back(y);
        gs.push_back(pm * arch::g_kernel(0.5, y, mu).real());
    }

    auto qs = admissible_moduli(rep.conductor(), cfg);
    out.rows.resize(qs.size());
    parallel_for(qs.size(), cfg.threads, [&](std::size_t iq) {
        const u64 q = qs[iq];
        QRow row;
        row.q = q;
        row.psi = cfg.psi(static_cast<double>(q) / cfg.Q);
        row.phi_flat = characters::phi_flat(q);
        auto chars = characters::even_primitive_characters(q);
        if (!chars.empty()) {
            // tab[j][c]: values of chi_j * chi_c mod q_j q
            std::array<std::vector<std::vector<cplx>>, 4> tab;
            for (std::size_t j = 0; j < 4; ++j)
                for (const auto& chi : chars) tab[j].push_back(lfunc::product_values(rep.chars()[j], chi));
            std::vector<double> integral(chars.size(), 0.0);
            for (std::size_t iy = 0; iy < ys.size(); ++iy) {
                std::vector<double> prod(chars.size(), gs[iy]);
                for (std::size_t j = 0; j < 4; ++j) {
                    lfunc::HurwitzBank bank(rep.chars()[j].modulus() * q, cplx(0.5, ys[iy]));
                    for (std::size_t c = 0; c < chars.size(); ++c) prod[c] *= std::norm(bank.l_value(tab[j][c]));
                }
                for (std::size_t c = 0; c < chars.size(); ++c) integral[c] += cfg.y_step * prod[c];
            }
            double s = 0.0;
            for (double v : integral) s += v;
            row.lhs = row.psi * s;
        }
        out.rows[iq] = row;
    });
    for (const auto& r : out.rows) out.value += r.lhs;
    return out;
}

namespace {

// sum over q = d r with r | (m +- n) of mu(d) phi(r), both signs; split by d <= D.
struct DivisorWeight {
    double small_d = 0.0;
    double large_d = 0.0;
};

DivisorWeight divisor_weight(u64 q, arith::i64 m, arith::i64 n, double D) {
    DivisorWeight w;
    for (u64 r : arith::divisors(q)) {
        u64 d = q / r;
        int mu = arith::mobius(d);
        if (mu == 0) continue;
        double phi = static_cast<double>(arith::euler_phi(r));
        int hits = 0;
        auto ri = static_cast<arith::i64>(r);
        if ((m - n) % ri == 0) ++hits;
        if ((m + n) % ri == 0) ++hits;
        double v = mu * phi * hits;
        if (static_cast<double>(d) <= D)
            w.small_d += v;
        else
            w.large_d += v;
    }
    return w;
}

double rel(cplx a, cplx b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace

IdentityReport identity_18_19(const GlobalRep& rep, const MomentConfig& cfg) {
    if (!(cfg.Q >= 2.0)) throw std::invalid_argument("moment: Q must be at least 2");
    if (cfg.Q > cfg.max_Q) throw std::length_error("identity_18_19: Q exceeds the budget max_Q");
    const u64 N = rep.conductor();
    const auto& mu = rep.arch();
    const double pm = std::pow(kPi, -mu.frak_m());
    const u64 M = cfg.box;
    IdentityReport out;
    out.box = M;
    const double logQ = std::log(cfg.Q);
    out.D_cut = std::pow(logQ, cfg.delta);
    const double shrink = std::pow(logQ, cfg.alpha);

    auto qs = admissible_moduli(N, cfg);
    auto a = rep.coefficient_table(M);
    if (qs.empty()) {
        out.pass = true;
        return out;
    }

    const double N4 = std::pow(static_cast<double>(N), 0.25);
    const double s_min = static_cast<double>(qs.front()) * N4 / shrink;
    const double s_max = static_cast<double>(qs.back()) * N4;
    arch::KernelConfig kc = cfg.kernel;
    kc.log_ratio_max = std::max(kc.log_ratio_max, std::log(static_cast<double>(M)));
    const double lx_lo = 4.0 * std::log(kPi) - 4.0 * std::log(s_max) - 0.5;
    const double lx_hi = 4.0 * std::log(kPi) + 2.0 * std::log(static_cast<double>(M)) - 4.0 * std::log(s_min) + 0.5;
    arch::VEvaluator V(mu, kc, lx_lo, lx_hi);

    // V cache per q: [m][n] at q N^{1/4} and at the shifted scale
    const std::size_t MM = M * M;
    std::vector<std::vector<cplx>> Vq(qs.size()), Vt(qs.size());
    parallel_for(qs.size(), cfg.threads, [&](std::size_t iq) {
        double sc = static_cast<double>(qs[iq]) * N4;
        Vq[iq].resize(MM);
        for (u64 m = 1; m <= M; ++m)
            for (u64 n = 1; n <= M; ++n)
                Vq[iq][(m - 1) * M + (n - 1)] = V(static_cast<double>(m), static_cast<double>(n), sc);
        if (cfg.alpha == 0.0) {
            Vt[iq] = Vq[iq];
        } else {
            Vt[iq].resize(MM);
            for (u64 m = 1; m <= M; ++m)
                for (u64 n = 1; n <= M; ++n)
                    Vt[iq][(m - 1) * M + (n - 1)] =
                        V(static_cast<double>(m), static_cast<double>(n), sc / shrink);
        }
    });

    std::vector<double> w(M + 1, 0.0);
    std::vector<cplx> coef(MM);
    for (u64 m = 1; m <= M; ++m)
        for (u64 n = 1; n <= M; ++n)
            coef[(m - 1) * M + (n - 1)] =
                a[m] * std::conj(a[n]) / std::sqrt(static_cast<double>(m) * static_cast<double>(n));

    // character side, per q
    std::vector<cplx> char_q(qs.size()), char_t(qs.size());
    parallel_for(qs.size(), cfg.threads, [&](std::size_t iq) {
        const u64 q = qs[iq];
        const double psi = cfg.psi(static_cast<double>(q) / cfg.Q);
        auto chars = characters::even_primitive_characters(q);
        cplx s1 = 0.0, s2 = 0.0;
        std::vector<cplx> vals(M + 1);
        for (const auto& chi : chars) {
            for (u64 m = 1; m <= M; ++m) vals[m] = chi(static_cast<arith::i64>(m % q));
            for (u64 m = 1; m <= M; ++m) {
                if (vals[m] == 0.0) continue;
                for (u64 n = 1; n <= M; ++n) {
                    if (vals[n] == 0.0) continue;
                    std::size_t i = (m - 1) * M + (n - 1);
                    cplx term = coef[i] * vals[m] * std::conj(vals[n]);
                    s1 += term * Vq[iq][i];
                    s2 += term * Vt[iq][i];
                }
            }
        }
        char_q[iq] = psi * s1;
        char_t[iq] = psi * s2;
    });

    // divisor side
    cplx div = 0.0, diag = 0.0, off_small = 0.0, off_large = 0.0;
    for (std::size_t iq = 0; iq < qs.size(); ++iq) {
        const u64 q = qs[iq];
        const double psi = cfg.psi(static_cast<double>(q) / cfg.Q);
        for (u64 m = 1; m <= M; ++m) {
            if (std::gcd(m, q) != 1) continue;
            for (u64 n = 1; n <= M; ++n) {
                if (std::gcd(n, q) != 1) continue;
                std::size_t i = (m - 1) * M + (n - 1);
                auto dw = divisor_weight(q, static_cast<arith::i64>(m), static_cast<arith::i64>(n), out.D_cut);
                div += psi * coef[i] * (dw.small_d + dw.large_d) * Vq[iq][i];
                cplx shifted = 0.5 * psi * coef[i] * Vt[iq][i];
                if (m == n) {
                    diag += shifted * (dw.small_d + dw.large_d);
                } else {
                    off_small += shifted * dw.small_d;
                    off_large += shifted * dw.large_d;
                }
            }
        }
    }
    cplx char_sum = 0.0, tilde = 0.0;
    for (std::size_t iq = 0; iq < qs.size(); ++iq) {
        char_sum += char_q[iq];
        tilde += char_t[iq];
    }
    out.char_side = 2.0 * pm * char_sum;
    out.divisor_side = pm * div;
    out.delta = 0.5 * div;
    out.delta_tilde = tilde;
    out.diag = diag;
    out.off_small_d = off_small;
    out.off_large_d = off_large;
    out.residual_18_19 = rel(out.char_side, out.divisor_side);
    out.residual_21 = rel(out.char_side, 2.0 * pm * out.delta);
    out.residual_partition = rel(out.delta_tilde, diag + off_small + off_large);
    out.pass = out.residual_18_19 < cfg.identity_tol && out.residual_21 < cfg.identity_tol &&
               out.residual_partition < cfg.identity_tol;
    return out;
}

MainTermResult main_term(const GlobalRep& rep, const MomentConfig& cfg) {
    const auto& mu = rep.arch();
    const double pm = std::pow(kPi, -mu.frak_m());
    MainTermResult out;
    out.g_integral = arch::g_integral(mu, cfg.kernel).value;
    out.A = local::a_constant(0.5, cfg.p_max, rep);
    const double A = out.A.value.real();
    for (u64 q : admissible_moduli(rep.conductor(), cfg)) {
        QRow row;
        row.q = q;
        row.psi = cfg.psi(static_cast<double>(q) / cfg.Q);
        row.phi_flat = characters::phi_flat(q);
        row.B_q = local::bq_constant(0.5, q, rep).real();
        double share = static_cast<double>(row.phi_flat) * row.psi * (A / row.B_q) * std::log(static_cast<double>(q));
        row.main = 2.0 * pm * out.g_integral * share;
        out.value += row.main;
        out.rows.push_back(row);
    }
    out.diagonal_value = 2.0 * out.value;
    return out;
}

ResidueCheck residue_expansion_check(u64 q, double t, const GlobalRep& rep, const ResidueConfig& cfg) {
    if (std::gcd(q, rep.conductor()) != 1) throw std::invalid_argument("residue check: gcd(q, N) must be 1");
    if (!(cfg.radius > 0.0 && cfg.radius < 0.25)) throw std::invalid_argument("residue check: radius must be in (0, 1/4)");
    const auto& mu = rep.arch();
    const double Q = cfg.Q > 0.0 ? cfg.Q : static_cast<double>(q);
    const double logX = std::log(static_cast<double>(q)) + 0.25 * std::log(static_cast<double>(rep.conductor())) -
                        std::log(kPi) - cfg.alpha * std::log(std::log(Q));

    auto H = [&](cplx s) {
        auto A = local::a_constant(0.5 + s, cfg.p_max, rep).value;
        auto B = local::bq_constant(0.5 + s, q, rep);
        return A / B * arch::g_kernel(0.5 + s, t, mu) * std::exp(4.0 * s * logX);
    };
    // F(s) = s zeta(1 + 2s) H(s); F'(0) by the trapezoid rule on |s| = r
    cplx acc = 0.0;
    for (int k = 0; k < cfg.nodes; ++k) {
        double th = 2.0 * kPi * (k + 0.5) / cfg.nodes;
        cplx s = std::polar(cfg.radius, th);
        cplx F = s * special::zeta(1.0 + 2.0 * s) * H(s);
        acc += F * std::polar(1.0, -th);
    }
    ResidueCheck out;
    out.exact = acc / (static_cast<double>(cfg.nodes) * cfg.radius);

    // analytic route: H(0) [gamma + (A'/A - B'/B + G_s/G)/2 + 2 log X]
    cplx dlogA = 0.0;
    const auto primes = arith::primes_up_to(static_cast<std::uint32_t>(cfg.p_max));
    for (auto p32 : primes) {
        u64 p = p32;
        auto alpha = rep.local(p);
        double lp = std::log(static_cast<double>(p));
        double x = 1.0 / static_cast<double>(p);  // p^{-2s} at s = 1/2
        dlogA += 2.0 * lp * x / (1.0 - x);
        cplx B = local::bp_series_auto(alpha, p, 0.5).value;
        dlogA += local::bp_series_derivative(alpha, p, 0.5) / B;
    }
    cplx dlogB = 0.0;
    for (const auto& pp : arith::factorize(q)) {
        auto alpha = rep.local(pp.p);
        dlogB += local::bp_series_derivative(alpha, pp.p, 0.5) / local::bp_series_auto(alpha, pp.p, 0.5).value;
    }
    cplx dlogG = 0.0;
    for (const auto& m : mu.mu)
        dlogG += 0.5 * (special::digamma(0.5 * (0.5 + cplx(0.0, t) + m)) +
                        special::digamma(0.5 * (0.5 - cplx(0.0, t) + std::conj(m))));
    cplx H0 = H(0.0);
    out.exact_analytic = H0 * (special::kEulerGamma + 0.5 * (dlogA - dlogB + dlogG) + 2.0 * logX);

    auto A0 = local::a_constant(0.5, cfg.p_max, rep).value;
    auto B0 = local::bq_constant(0.5, q, rep);
    out.two_term = (2.0 * A0 / B0 * arch::g_kernel(0.5, t, mu) * std::log(static_cast<double>(q))).real();
    out.gap = std::abs(out.exact - out.two_term);
    out.route_deviation = std::abs(out.exact - out.exact_analytic) / std::abs(out.exact);
    out.within_band = out.gap < cfg.slack * std::abs(out.two_term);
    return out;
}

MomentReport moment_compare(const EisensteinGL4& rep, const MomentConfig& cfg) {
    MomentReport out;
    out.Q = cfg.Q;
    auto global = rep.to_global_rep();
    out.lhs = moment_lhs_direct(rep, cfg);
    out.main = main_term(global, cfg);
    out.identity = identity_18_19(global, cfg);
    for (std::size_t i = 0; i < out.lhs.rows.size() && i < out.main.rows.size(); ++i) {
        out.lhs.rows[i].main = out.main.rows[i].main;
        out.lhs.rows[i].B_q = out.main.rows[i].B_q;
    }
    out.ratio = out.main.value != 0.0 ? out.lhs.value / out.main.value : 0.0;
    out.ratio_diagonal = out.main.diagonal_value != 0.0 ? out.lhs.value / out.main.diagonal_value : 0.0;
    return out;
}

}  // namespace gl4::moment
