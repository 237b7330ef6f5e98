#include "gl4/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl4::arith {

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.push_back({p, k});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> divs{1};
    for (auto [p, k] : factorize(n)) {
        std::size_t base = divs.size();
        u64 pk = 1;
        for (int e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 radical(u64 n) {
    u64 r = 1;
    for (auto [p, k] : factorize(n)) r *= p;
    return r;
}

i64 euler_phi(u64 n) {
    i64 r = static_cast<i64>(n);
    for (auto [p, k] : factorize(n)) r = r / static_cast<i64>(p) * static_cast<i64>(p - 1);
    return r;
}

int mobius(u64 n) {
    int m = 1;
    for (auto [p, k] : factorize(n)) {
        if (k > 1) return 0;
        m = -m;
    }
    return m;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 powmod(u64 base, u64 exp, u64 mod) {
    unsigned __int128 r = 1 % mod, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<u64>(r);
}

u64 primitive_root(u64 p) {
    if (p == 2) return 1;
    const u64 phi = p - 1;
    auto fs = factorize(phi);
    for (u64 g = 2; g < p; ++g) {
        bool ok = std::all_of(fs.begin(), fs.end(),
                              [&](const PrimePower& f) { return powmod(g, phi / f.p, p) != 1; });
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    if (n < 2) return {};
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

SpfSieve::SpfSieve(std::uint32_t n) : spf_(static_cast<std::size_t>(n) + 1, 0) {
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (p > spf_[i] || m > n) break;
            spf_[m] = p;
        }
    }
    if (n >= 1) spf_[1] = 1;
}

}  // namespace gl4::arith
