#include "gl4/local_factors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gl4/special.hpp"

namespace gl4::local {

namespace {

double max_abs(const Quad& a) {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, std::abs(x));
    return m;
}

bool unimodular(const Quad& a, double tol = 1e-12) {
    return std::all_of(a.begin(), a.end(), [&](cplx x) { return std::abs(std::abs(x) - 1.0) <= tol; });
}

double min_separation(const Quad& a) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) m = std::min(m, std::abs(a[i] - a[j]));
    return m;
}

cplx p_pow(u64 p, cplx s) { return std::exp(-s * std::log(static_cast<double>(p))); }

double rel_dev(cplx a, cplx b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

ThetaResult bp_theta_integral(const Quad& alpha, u64 p, cplx s, int nodes, double tol) {
    if (nodes < 16) throw std::invalid_argument("bp_theta_integral: nodes must be >= 16");
    const cplx x = p_pow(p, s);
    if (std::abs(x) * max_abs(alpha) >= 1.0)
        throw std::domain_error("bp_theta_integral: p^{-Re s} max|alpha| >= 1 (pole on the circle)");
    auto trap = [&](int n) {
        arith::CompensatedSum<cplx> acc;
        for (int k = 0; k < n; ++k) {
            cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
            cplx f = 1.0;
            for (const auto& a : alpha) f /= (1.0 - a * z * x) * (1.0 - std::conj(a) * std::conj(z) * x);
            acc.add(f);
        }
        return acc.value() / static_cast<double>(n);
    };
    cplx prev = trap(nodes);
    for (int n = 2 * nodes; n <= (1 << 22); n *= 2) {
        cplx cur = trap(n);
        double change = std::abs(cur - prev);
        if (change < 0.1 * tol * std::max(1.0, std::abs(cur))) return {cur, n, change};
        prev = cur;
    }
    throw std::runtime_error("bp_theta_integral: node doubling did not converge");
}

namespace {

double series_tail_bound(u64 p, double sigma, double amax, int R) {
    double x = std::pow(static_cast<double>(p), -2.0 * sigma) * amax * amax;
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(R + 2.0, 8) * std::pow(x, R + 1.0) / (1.0 - x);
}

}  // namespace

SeriesResult bp_series(const Quad& alpha, u64 p, cplx s, int R) {
    if (R < 0) throw std::invalid_argument("bp_series: R must be nonnegative");
    const double sigma = s.real();
    if (std::pow(static_cast<double>(p), -2.0 * sigma) * max_abs(alpha) * max_abs(alpha) >= 1.0)
        throw std::domain_error("bp_series: divergent range p^{-2 Re s} max|alpha|^2 >= 1");
    auto h = satake::hom_coeffs(alpha, R);
    const cplx x = p_pow(p, 2.0 * s);
    // Horner from the top keeps the small terms first.
    cplx acc = 0.0;
    for (int r = R; r >= 0; --r) acc = acc * x + std::norm(h[static_cast<std::size_t>(r)]);
    return {acc, R, series_tail_bound(p, sigma, std::max(1.0, max_abs(alpha)), R)};
}

SeriesResult bp_series_auto(const Quad& alpha, u64 p, cplx s, double tol) {
    const double amax = std::max(1.0, max_abs(alpha));
    int R = 0;
    while (series_tail_bound(p, s.real(), amax, R) >= tol) {
        if (++R > 100000) throw std::domain_error("bp_series_auto: tail bound does not fall below tol");
    }
    return bp_series(alpha, p, s, R);
}

cplx bp_series_derivative(const Quad& alpha, u64 p, cplx s, double tol) {
    int R = bp_series_auto(alpha, p, s, tol).R + 8;
    auto h = satake::hom_coeffs(alpha, R);
    const double lp = std::log(static_cast<double>(p));
    const cplx x = p_pow(p, 2.0 * s);
    cplx acc = 0.0;
    for (int r = R; r >= 1; --r) acc = acc * x + std::norm(h[static_cast<std::size_t>(r)]) * (-2.0 * r * lp);
    return acc * x;
}

namespace {

// First four Taylor coefficients at x of f(z) = z^3 / prod_j (1 - alpha_j z / p).
std::array<cplx, 4> residue_taylor(const Quad& alpha, double pinv, cplx x) {
    auto mul = [](const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
        std::array<cplx, 4> c{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; i + j < 4; ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    std::array<cplx, 4> f{x * x * x, 3.0 * x * x, 3.0 * x, 1.0};
    for (const auto& aj : alpha) {
        const cplx a = aj * pinv, u = 1.0 - a * x, r = a / u;
        f = mul(f, {1.0 / u, r / u, r * r / u, r * r * r / u});
    }
    return f;
}

// The residue sum equals the divided difference f[conj alpha_1, ..., conj alpha_4];
// exactly repeated nodes go through the confluent table.
cplx residue_confluent(const Quad& alpha, double pinv, double separation) {
    Quad x;
    for (std::size_t j = 0; j < 4; ++j) x[j] = std::conj(alpha[j]);
    std::sort(x.begin(), x.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double d = std::abs(x[i] - x[j]);
            if (d > 0.0 && d <= separation)
                throw std::domain_error("bp_residue_closed: near-coincident alpha; use bp_series");
        }
    std::array<std::array<cplx, 4>, 4> taylor;
    for (std::size_t i = 0; i < 4; ++i) taylor[i] = residue_taylor(alpha, pinv, x[i]);
    std::array<cplx, 4> col;
    for (std::size_t i = 0; i < 4; ++i) col[i] = taylor[i][0];
    for (std::size_t k = 1; k < 4; ++k)
        for (std::size_t i = 0; i + k < 4; ++i)
            col[i] = x[i + k] == x[i] ? taylor[i][k] : (col[i + 1] - col[i]) / (x[i + k] - x[i]);
    return col[0];
}

}  // namespace

cplx bp_residue_closed(const Quad& alpha, u64 p, double separation) {
    if (!unimodular(alpha)) throw std::domain_error("bp_residue_closed: alpha must be unimodular");
    const double pinv = 1.0 / static_cast<double>(p);
    if (min_separation(alpha) <= separation) return residue_confluent(alpha, pinv, separation);
    cplx total = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        cplx ak = std::conj(alpha[k]);
        cplx den = 1.0;
        for (std::size_t j = 0; j < 4; ++j) {
            den *= 1.0 - alpha[j] * ak * pinv;
            if (j != k) den *= ak - std::conj(alpha[j]);
        }
        total += ak * ak * ak / den;
    }
    return total;
}

NDValues n_pi_d_pi(const Quad& alpha, u64 p, const fg::FGTables& tables) {
    const auto h = satake::hom_coeffs(alpha, 4);
    const auto s = satake::elementary_from_hom(std::array<cplx, 4>{h[1], h[2], h[3], h[4]});
    const cplx pp(static_cast<double>(p), 0.0);
    NDValues out;
    out.N_fg = tables.numerator(s, pp);
    out.D_fg = tables.denominator(s, pp);
    out.D_direct = 1.0;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            if (j != k) out.D_direct *= pp * alpha[k] - alpha[j];
    if (min_separation(alpha) > 0.0) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            cplx den = 1.0;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != k) den *= (pp * alpha[k] - alpha[j]) * (alpha[j] - alpha[k]);
            acc += alpha[k] * alpha[k] / den;
        }
        out.N_direct = acc * out.D_direct;
        out.N_direct_valid = true;
    }
    return out;
}

namespace {

// N(p) and D(p) can cancel by several digits at small p (|D| ~ 1 against
// p^12 sized terms), so the conversions and both polynomials run in long double.
using lcplx = std::complex<long double>;

std::array<lcplx, 4> widen(const std::array<cplx, 4>& a) {
    std::array<lcplx, 4> w;
    for (std::size_t j = 0; j < 4; ++j) w[j] = lcplx(a[j].real(), a[j].imag());
    return w;
}

cplx assemble_half(const std::array<lcplx, 4>& s, u64 p, const fg::FGTables& tables) {
    const auto pd = static_cast<long double>(p);
    const lcplx pp(pd, 0.0L);
    lcplx N = tables.numerator(s, pp);
    lcplx D = tables.denominator(s, pp);
    if (std::abs(D) < 1e-12L * std::pow(pd, 12))
        throw std::domain_error("B_p(1/2) rational formula: unstable denominator D(p)");
    lcplx B = std::pow(pd, 4) * s[3] / (pd - 1.0L) * N / D;
    return {static_cast<double>(B.real()), static_cast<double>(B.imag())};
}

}  // namespace

cplx bp_half_fg(const Quad& alpha, u64 p, const fg::FGTables& tables) {
    if (!unimodular(alpha)) throw std::domain_error("bp_half_fg: alpha must be unimodular");
    const auto h = satake::hom_coeffs(widen(alpha), 4);
    return assemble_half(satake::elementary_from_hom(std::array<lcplx, 4>{h[1], h[2], h[3], h[4]}), p, tables);
}

cplx bp_half_powersum(const std::array<cplx, 4>& qvals, u64 p, const fg::FGTables& tables) {
    return assemble_half(satake::elementary_from_power(widen(qvals)), p, tables);
}

LocalFactorReport local_factor_report(const Quad& alpha, u64 p, cplx s) {
    LocalFactorReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.s = s;
    auto th = bp_theta_integral(alpha, p, s);
    auto se = bp_series_auto(alpha, p, s);
    rep.B_int = th.value;
    rep.B_series = se.value;
    rep.theta_nodes = th.nodes;
    rep.series_R = se.R;
    rep.series_tail = se.tail_bound;
    std::vector<cplx> vals{rep.B_int, rep.B_series};
    const bool half = std::abs(s - cplx(0.5, 0.0)) < 1e-15;
    if (!half) {
        rep.residue_note = rep.fg_note = "closed forms are stated at s = 1/2 only";
    } else if (!unimodular(alpha)) {
        rep.residue_note = rep.fg_note = "ramified (non-unimodular) alpha: closed forms refuse";
    } else {
        try {
            rep.B_res = bp_residue_closed(alpha, p);
            vals.push_back(*rep.B_res);
        } catch (const std::domain_error& e) {
            rep.residue_note = e.what();
        }
        try {
            rep.B_fg = bp_half_fg(alpha, p);
            vals.push_back(*rep.B_fg);
            std::array<cplx, 4> q{};
            for (int r = 1; r <= 4; ++r) q[static_cast<std::size_t>(r - 1)] = satake::power_sum(alpha, r);
            rep.B_powersum = bp_half_powersum(q, p);
            rep.B_fg_printed = bp_half_fg(alpha, p, fg::printed_tables());
            rep.printed_table_rel_dev = rel_dev(*rep.B_fg_printed, rep.B_series);
        } catch (const std::domain_error& e) {
            rep.fg_note = e.what();
        }
    }
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            rep.max_rel_dev = std::max(rep.max_rel_dev, rel_dev(vals[i], vals[j]));
    return rep;
}

EulerProduct a_constant(cplx s, u64 p_max, const satake::GlobalRep& rep) {
    if (p_max < 2) throw std::invalid_argument("a_constant: P_max must be >= 2");
    if (p_max > 0xffffffffULL) throw std::invalid_argument("a_constant: P_max too large");
    auto primes = arith::primes_up_to(static_cast<std::uint32_t>(p_max));
    arith::CompensatedSum<cplx> logsum;
    double c1_sum = 0.0, c2_max = 0.0;
    std::size_t c_count = 0;
    for (auto p32 : primes) {
        const u64 p = p32;
        const Quad alpha = rep.local(p);
        cplx factor = (1.0 - p_pow(p, 2.0 * s)) * bp_series_auto(alpha, p, s).value;
        logsum.add(std::log(factor));
        if (2 * p > p_max && rep.conductor() % p != 0) {
            auto h = satake::hom_coeffs(alpha, 2);
            c1_sum += std::norm(h[1]) - 1.0;
            c2_max = std::max(c2_max, std::abs(std::norm(h[2]) - std::norm(h[1])));
            ++c_count;
        }
    }
    EulerProduct out;
    cplx lv = logsum.value();
    out.value = std::exp(lv);
    out.log_abs = lv.real();
    out.p_max = p_max;
    out.primes = primes.size();
    const double sigma = s.real();
    const double P = static_cast<double>(p_max);
    const double lP = std::log(P);
    double c1 = c_count ? c1_sum / static_cast<double>(c_count) : 0.0;
    double S2 = 4.0 * sigma > 1.0 ? std::pow(P, 1.0 - 4.0 * sigma) / ((4.0 * sigma - 1.0) * lP)
                                  : std::numeric_limits<double>::infinity();
    double tail = c2_max * S2;
    if (std::abs(c1) > 1e-9) {
        if (2.0 * sigma <= 1.0) {
            out.divergent = true;
            tail = std::numeric_limits<double>::infinity();
        } else {
            tail += std::abs(c1) * std::pow(P, 1.0 - 2.0 * sigma) / ((2.0 * sigma - 1.0) * lP);
        }
    }
    out.tail_estimate = tail;
    return out;
}

cplx bq_unrestricted(cplx s, u64 q, const satake::GlobalRep& rep) {
    if (q == 0) throw std::invalid_argument("bq: q must be positive");
    cplx out = 1.0;
    if (q == 1) return out;
    for (auto [p, k] : arith::factorize(q)) out *= bp_series_auto(rep.local(p), p, s).value;
    return out;
}

cplx bq_constant(cplx s, u64 q, const satake::GlobalRep& rep) {
    if (std::gcd(q, rep.conductor()) != 1)
        throw std::invalid_argument("bq_constant: gcd(q, N) must be 1");
    return bq_unrestricted(s, q, rep);
}

SeriesCheck dirichlet_series_check(cplx s, u64 q, u64 X, const satake::GlobalRep& rep, u64 p_max) {
    if (X < 1) throw std::invalid_argument("dirichlet_series_check: X must be >= 1");
    SeriesCheck out;
    out.X = X;
    out.p_max = p_max ? p_max : std::max<u64>(X, 1000000);
    auto a = rep.coefficient_table(static_cast<std::size_t>(X));
    arith::CompensatedSum<cplx> lhs;
    const cplx e = -(1.0 + 2.0 * s);
    for (u64 n = 1; n <= X; ++n) {
        if (std::gcd(n, q) != 1) continue;
        double w = std::norm(a[n]);
        if (w == 0.0) continue;
        lhs.add(w * std::exp(e * std::log(static_cast<double>(n))));
    }
    out.lhs = lhs.value();
    auto A = a_constant(0.5 + s, out.p_max, rep);
    out.rhs = special::zeta(1.0 + 2.0 * s) * A.value / bq_unrestricted(0.5 + s, q, rep);
    out.rhs_tail_estimate = A.tail_estimate;
    out.rel_dev = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    return out;
}

}  // namespace gl4::local
