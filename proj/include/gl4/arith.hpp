#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

namespace gl4::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
    u64 p;
    int k;
};

std::vector<PrimePower> factorize(u64 n);
std::vector<u64> divisors(u64 n);
u64 radical(u64 n);

i64 euler_phi(u64 n);
int mobius(u64 n);
bool is_prime(u64 n);

u64 powmod(u64 base, u64 exp, u64 mod);
u64 primitive_root(u64 p);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Smallest-prime-factor table on [0, n].
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t n);
    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
    std::uint32_t spf(std::uint32_t m) const { return spf_[m]; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Neumaier compensated summation; summation order is the call order.
template <class T>
class CompensatedSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if constexpr (std::is_same_v<T, std::complex<double>>) {
            comp_ += std::complex<double>(fix(sum_.real(), x.real(), t.real()),
                                          fix(sum_.imag(), x.imag(), t.imag()));
        } else {
            comp_ += fix(sum_, x, t);
        }
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    static double fix(double s, double x, double t) {
        return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    }
    T sum_{};
    T comp_{};
};

}  // namespace gl4::arith
