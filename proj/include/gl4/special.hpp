#pragma once

#include <complex>

namespace gl4::special {

using cplx = std::complex<double>;

// Principal branch of log Gamma (the continuation from the positive real axis).
cplx log_gamma(cplx z);
cplx digamma(cplx z);

// log(sin(pi z)) without overflow for large |Im z|, on the branch matching
// the reflection formula.
cplx log_sinpi(cplx z);

// Hurwitz zeta by Euler-Maclaurin; s != 1, a > 0.
cplx hurwitz_zeta(cplx s, double a);
// zeta(s, a) - 1/(s - 1), entire in s; equals -digamma(a) at s = 1.
cplx hurwitz_zeta_regular(cplx s, double a);
cplx zeta(cplx s);

// (e^w - 1) / w, continuous at w = 0.
cplx expm1_over(cplx w);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace gl4::special
