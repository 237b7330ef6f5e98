#include "gl4/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/bernoulli.hpp>

namespace gl4::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.14472988584940017414342735135305871;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// B_{2k} for k = 1..10
const std::array<double, 11>& bernoulli_even() {
    static const std::array<double, 11> b = [] {
        std::array<double, 11> out{};
        for (int k = 0; k <= 10; ++k) out[static_cast<std::size_t>(k)] = boost::math::bernoulli_b2n<double>(k);
        return out;
    }();
    return b;
}

cplx log_gamma_stirling(cplx z) {
    const auto& b = bernoulli_even();
    cplx zinv = 1.0 / z;
    cplx z2inv = zinv * zinv;
    cplx series = 0.0;
    cplx pw = zinv;
    for (int k = 1; k <= 10; ++k) {
        double c = b[static_cast<std::size_t>(k)] / (2.0 * k * (2.0 * k - 1.0));
        series += c * pw;
        pw *= z2inv;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series;
}

cplx log_gamma_right(cplx z) {
    // Re z >= 1/2: shift up so Stirling is accurate.
    cplx shift = 0.0;
    while (z.real() < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

cplx digamma_right(cplx z) {
    cplx shift = 0.0;
    while (z.real() < 15.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    const auto& b = bernoulli_even();
    cplx zinv = 1.0 / z;
    cplx z2inv = zinv * zinv;
    cplx series = 0.0;
    cplx pw = z2inv;
    for (int k = 1; k <= 10; ++k) {
        series += b[static_cast<std::size_t>(k)] / (2.0 * k) * pw;
        pw *= z2inv;
    }
    return std::log(z) - 0.5 * zinv - series - shift;
}

double sinpi_real(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(kPi * r);
}

double cospi_real(double x) { return sinpi_real(x + 0.5); }

}  // namespace

cplx log_sinpi(cplx z) {
    double x = z.real(), y = z.imag();
    if (std::abs(y) < 20.0) {
        cplx s(sinpi_real(x) * std::cosh(kPi * y), cospi_real(x) * std::sinh(kPi * y));
        return std::log(s);
    }
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) for y > 0; mirror for y < 0.
    if (y > 0) {
        cplx w = std::exp(cplx(0.0, 2.0 * kPi) * z);
        cplx base(kPi * y - std::numbers::ln2, kPi * (0.5 - x));
        cplx val = base + std::log(1.0 - w);
        // fold the imaginary part into (-pi, pi]
        double im = std::remainder(val.imag(), 2.0 * kPi);
        return {val.real(), im};
    }
    cplx c = log_sinpi(std::conj(z));
    return std::conj(c);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at a nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    double x = z.real(), y = z.imag();
    double branch = std::copysign(2.0 * kPi, y) * std::floor(0.5 * x + 0.25);
    return cplx(kLogPi, branch) - log_sinpi(z) - log_gamma_right(1.0 - z);
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("digamma: pole at a nonpositive integer");
    if (z.real() >= 0.5) return digamma_right(z);
    cplx piz = kPi * z;
    return digamma_right(1.0 - z) - kPi * std::cos(piz) / std::sin(piz);
}

cplx expm1_over(cplx w) {
    if (std::abs(w) < 1e-3) {
        // 1 + w/2 + w^2/6 + w^3/24 + w^4/120
        return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
    }
    return (std::exp(w) - 1.0) / w;
}

namespace {

// Shared Euler-Maclaurin body. The tail term (a+N)^{1-s}/(s-1) is returned
// separately so the regular part can drop the pole analytically.
struct EMParts {
    cplx head;
    double log_aN;
};

EMParts em_body(cplx s, double a) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a must be positive");
    int N = 2 * static_cast<int>(std::ceil(std::abs(s))) + 16;
    cplx head = 0.0;
    for (int n = 0; n < N; ++n) head += std::exp(-s * std::log(a + n));
    double aN = a + N;
    double L = std::log(aN);
    cplx powN = std::exp(-s * L);  // (a+N)^{-s}
    head += 0.5 * powN;
    // sum_{k=1}^{5} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (a+N)^{-s-2k+1}
    const auto& b = bernoulli_even();
    cplx rising = s;  // s(s+1)...(s+2k-2)
    double fact = 2.0;  // (2k)!
    cplx pw = powN / aN;  // (a+N)^{-s-1}
    for (int k = 1; k <= 5; ++k) {
        head += b[static_cast<std::size_t>(k)] / fact * rising * pw;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        pw /= aN * aN;
    }
    return {head, L};
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    auto [head, L] = em_body(s, a);
    return head + std::exp((1.0 - s) * L) / (s - 1.0);
}

cplx hurwitz_zeta_regular(cplx s, double a) {
    auto [head, L] = em_body(s, a);
    // ((a+N)^{1-s} - 1)/(s-1) = -L * expm1_over((1-s) L)
    return head - L * expm1_over((1.0 - s) * L);
}

cplx zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

}  // namespace gl4::special
