#pragma once

// Satake data for a degree-4 Euler product and the symmetric-function algebra
// linking elementary, complete homogeneous and power-sum coordinates.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gl4/arith.hpp"

namespace gl4::satake {

using arith::u64;
using cplx = std::complex<double>;
using Quad = std::array<cplx, 4>;

struct LocalSatake {
    u64 p = 2;
    Quad alpha{};
};

// Unramified tuples must be unimodular; ramified entries are 0 or p^{-m/2}.
void check_tempered(const LocalSatake& local, bool ramified, double tol = 1e-12);

struct ArchParams {
    std::array<cplx, 4> mu{};

    double frak_m() const;
    bool conjugation_closed(double tol = 1e-14) const;
    void check_tempered(double tol = 1e-12) const;
    ArchParams conj() const;
};

template <class T>
std::array<T, 4> elementary(const std::array<T, 4>& a) {
    std::array<T, 4> e{};
    e[0] = a[0] + a[1] + a[2] + a[3];
    e[1] = a[0] * a[1] + a[0] * a[2] + a[0] * a[3] + a[1] * a[2] + a[1] * a[3] + a[2] * a[3];
    e[2] = a[0] * a[1] * a[2] + a[0] * a[1] * a[3] + a[0] * a[2] * a[3] + a[1] * a[2] * a[3];
    e[3] = a[0] * a[1] * a[2] * a[3];
    return e;
}

// h_0..h_R from the recurrence h_r = sum_{k=1}^{4} (-1)^{k-1} e_k h_{r-k}.
template <class T>
std::vector<T> hom_coeffs(const std::array<T, 4>& a, int R) {
    const auto e = elementary(a);
    std::vector<T> h(static_cast<std::size_t>(R) + 1, T(0));
    h[0] = T(1);
    for (int r = 1; r <= R; ++r) {
        T acc = T(0);
        for (int k = 1; k <= 4 && k <= r; ++k) {
            T term = e[static_cast<std::size_t>(k - 1)] * h[static_cast<std::size_t>(r - k)];
            if (k % 2 == 1)
                acc = acc + term;
            else
                acc = acc - term;
        }
        h[static_cast<std::size_t>(r)] = acc;
    }
    return h;
}

template <class T>
T power_sum(const std::array<T, 4>& a, int r) {
    T acc = T(0);
    for (const auto& x : a) {
        T pw = T(1);
        for (int i = 0; i < r; ++i) pw = pw * x;
        acc = acc + pw;
    }
    return acc;
}

cplx hom_coeff(const Quad& alpha, int r);

// Power sums s_1..s_4 from h_1..h_4.
template <class T>
std::array<T, 4> elementary_from_hom(const std::array<T, 4>& h) {
    const T& p1 = h[0];
    const T& p2 = h[1];
    const T& p3 = h[2];
    const T& p4 = h[3];
    std::array<T, 4> s{};
    s[0] = p1;
    s[1] = p1 * p1 - p2;
    s[2] = p1 * p1 * p1 - T(2) * p1 * p2 + p3;
    s[3] = p1 * p1 * p1 * p1 - T(3) * p1 * p1 * p2 + p2 * p2 + T(2) * p1 * p3 - p4;
    return s;
}

// s_1..s_4 from the power sums q_1..q_4.
template <class T>
std::array<T, 4> elementary_from_power(const std::array<T, 4>& q) {
    const T& q1 = q[0];
    const T& q2 = q[1];
    const T& q3 = q[2];
    const T& q4 = q[3];
    std::array<T, 4> s{};
    s[0] = q1;
    s[1] = (q1 * q1 - q2) / T(2);
    s[2] = q3 / T(3) + q1 * q1 * q1 / T(6) - q1 * q2 / T(2);
    s[3] = q1 * q1 * q1 * q1 / T(24) - q1 * q1 * q2 / T(4) + q2 * q2 / T(8) + q1 * q3 / T(3) -
           q4 / T(4);
    return s;
}

enum class DefaultRule { Error, Ones, Eisenstein, UnitTrace };

std::string to_string(DefaultRule rule);
DefaultRule default_rule_from_string(const std::string& name);

// Unimodular tuple with |alpha_1 + ... + alpha_4| = 1, a deterministic function of p.
Quad unit_trace_tuple(u64 p);

class GlobalRep {
public:
    using LocalRule = std::function<Quad(u64)>;

    // `rule_fn` is required for DefaultRule::Eisenstein and ignored otherwise.
    GlobalRep(u64 conductor, ArchParams arch, std::map<u64, Quad> primes, DefaultRule rule,
              LocalRule rule_fn = {});

    u64 conductor() const { return conductor_; }
    const ArchParams& arch() const { return arch_; }
    DefaultRule default_rule() const { return rule_; }
    const std::map<u64, Quad>& listed() const { return primes_; }

    Quad local(u64 p) const;
    cplx coeff(u64 n) const;

    // a(0..K) with a(0) = 0, filled by a smallest-prime-factor sieve.
    std::vector<cplx> coefficient_table(std::size_t K) const;

    // Contragredient: conjugated Satake data and Archimedean parameters.
    GlobalRep dual() const;

    // Temperedness of the Archimedean data and of every listed prime.
    void validate() const;

private:
    u64 conductor_;
    ArchParams arch_;
    std::map<u64, Quad> primes_;
    DefaultRule rule_;
    LocalRule rule_fn_;
    bool conjugated_ = false;
};

}  // namespace gl4::satake
