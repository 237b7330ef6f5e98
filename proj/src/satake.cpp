#include "gl4/satake.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gl4::satake {

void check_tempered(const LocalSatake& local, bool ramified, double tol) {
    for (const auto& a : local.alpha) {
        double r = std::abs(a);
        if (!ramified) {
            if (std::abs(r - 1.0) > tol)
                throw std::invalid_argument("Satake tuple at p=" + std::to_string(local.p) +
                                            " is not unimodular");
            continue;
        }
        if (r == 0.0) continue;
        // |alpha| = p^{-m/2} for some m >= 0
        double m = -2.0 * std::log(r) / std::log(static_cast<double>(local.p));
        if (m < -tol || std::abs(m - std::round(m)) > 1e-9)
            throw std::invalid_argument("ramified Satake entry at p=" + std::to_string(local.p) +
                                        " has modulus outside {0, p^{-m/2}}");
    }
}

double ArchParams::frak_m() const {
    double m = 0.0;
    for (const auto& x : mu) m += x.real();
    return m;
}

bool ArchParams::conjugation_closed(double tol) const {
    std::array<bool, 4> used{};
    for (const auto& x : mu) {
        bool found = false;
        for (std::size_t j = 0; j < 4 && !found; ++j) {
            if (!used[j] && std::abs(std::conj(x) - mu[j]) <= tol) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

void ArchParams::check_tempered(double tol) const {
    for (const auto& x : mu) {
        double re = x.real();
        if (std::abs(re) > tol && std::abs(re - 1.0) > tol)
            throw std::invalid_argument("Archimedean parameter with Re(mu) not in {0, 1}");
    }
}

ArchParams ArchParams::conj() const {
    ArchParams out = *this;
    for (auto& x : out.mu) x = std::conj(x);
    return out;
}

cplx hom_coeff(const Quad& alpha, int r) {
    if (r < 0) throw std::invalid_argument("hom_coeff: r must be nonnegative");
    return hom_coeffs(alpha, r).back();
}

std::string to_string(DefaultRule rule) {
    switch (rule) {
        case DefaultRule::Error: return "error";
        case DefaultRule::Ones: return "ones";
        case DefaultRule::Eisenstein: return "eisenstein";
        case DefaultRule::UnitTrace: return "unit-trace";
    }
    return "error";
}

DefaultRule default_rule_from_string(const std::string& name) {
    if (name == "error") return DefaultRule::Error;
    if (name == "ones") return DefaultRule::Ones;
    if (name == "eisenstein") return DefaultRule::Eisenstein;
    if (name == "unit-trace") return DefaultRule::UnitTrace;
    throw std::invalid_argument("unknown default rule '" + name + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t& state) {
    state = splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
}

}  // namespace

Quad unit_trace_tuple(u64 p) {
    std::uint64_t state = p * 0x2545f4914f6cdd1dULL;
    const double two_pi = 2.0 * std::numbers::pi;
    while (true) {
        Quad a{};
        cplx s = 0.0;
        for (int j = 0; j < 3; ++j) {
            a[static_cast<std::size_t>(j)] = std::polar(1.0, two_pi * unit_double(state));
            s += a[static_cast<std::size_t>(j)];
        }
        double r = std::abs(s);
        if (r > 2.0 || r < 1e-3) continue;
        // |s + e^{i phi}| = 1  <=>  cos(phi - arg s) = -r / 2
        double phi = std::arg(s) + std::acos(-r / 2.0) * (unit_double(state) < 0.5 ? 1.0 : -1.0);
        a[3] = std::polar(1.0, phi);
        return a;
    }
}

GlobalRep::GlobalRep(u64 conductor, ArchParams arch, std::map<u64, Quad> primes, DefaultRule rule,
                     LocalRule rule_fn)
    : conductor_(conductor),
      arch_(arch),
      primes_(std::move(primes)),
      rule_(rule),
      rule_fn_(std::move(rule_fn)) {
    if (conductor_ == 0) throw std::invalid_argument("GlobalRep: conductor must be positive");
    if (rule_ == DefaultRule::Eisenstein && !rule_fn_)
        throw std::invalid_argument("GlobalRep: the eisenstein rule needs character data");
    for (const auto& [p, a] : primes_)
        if (!arith::is_prime(p))
            throw std::invalid_argument("GlobalRep: listed key " + std::to_string(p) +
                                        " is not prime");
}

Quad GlobalRep::local(u64 p) const {
    Quad a{};
    if (auto it = primes_.find(p); it != primes_.end()) {
        a = it->second;
    } else {
        switch (rule_) {
            case DefaultRule::Error:
                throw std::out_of_range("GlobalRep: no Satake data for p=" + std::to_string(p));
            case DefaultRule::Ones: a = {1.0, 1.0, 1.0, 1.0}; break;
            case DefaultRule::UnitTrace: a = unit_trace_tuple(p); break;
            case DefaultRule::Eisenstein: a = rule_fn_(p); break;
        }
        // rule-generated data is stored unconjugated
        if (conjugated_)
            for (auto& x : a) x = std::conj(x);
    }
    return a;
}

cplx GlobalRep::coeff(u64 n) const {
    if (n == 0) throw std::invalid_argument("coeff: n must be positive");
    cplx out = 1.0;
    if (n == 1) return out;
    for (auto [p, k] : arith::factorize(n)) out *= hom_coeff(local(p), k);
    return out;
}

std::vector<cplx> GlobalRep::coefficient_table(std::size_t K) const {
    std::vector<cplx> a(K + 1, cplx(0.0));
    if (K == 0) return a;
    a[1] = 1.0;
    if (K > 0xffffffffULL) throw std::length_error("coefficient_table: K too large");
    arith::SpfSieve sieve(static_cast<std::uint32_t>(K));
    // h-lists for primes up to sqrt(K); larger primes only need h_1.
    std::size_t root = 1;
    while ((root + 1) * (root + 1) <= K) ++root;
    std::vector<std::vector<cplx>> small(root + 1);
    for (std::size_t n = 2; n <= K; ++n) {
        u64 p = sieve.spf(static_cast<std::uint32_t>(n));
        std::size_t m = n / p;
        if (m % p != 0) {
            if (p * p > K) {
                if (m == 1) {
                    Quad al = local(p);
                    a[n] = al[0] + al[1] + al[2] + al[3];
                } else {
                    a[n] = a[m] * a[p];  // m < p, coprime
                }
                continue;
            }
        }
        int k = 1;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        auto& hp = small[p];
        if (hp.empty()) {
            int R = 1;
            for (u64 pk = p; pk <= K / p; pk *= p) ++R;
            hp = hom_coeffs(local(p), R);
        }
        a[n] = a[m] * hp[static_cast<std::size_t>(k)];
    }
    return a;
}

GlobalRep GlobalRep::dual() const {
    std::map<u64, Quad> primes;
    for (const auto& [p, a] : primes_) {
        Quad c{};
        for (std::size_t j = 0; j < 4; ++j) c[j] = std::conj(a[j]);
        primes.emplace(p, c);
    }
    GlobalRep out(conductor_, arch_.conj(), std::move(primes), rule_, rule_fn_);
    out.conjugated_ = !conjugated_;
    return out;
}

void GlobalRep::validate() const {
    arch_.check_tempered();
    for (const auto& [p, a] : primes_) check_tempered({p, a}, conductor_ % p == 0);
}

}  // namespace gl4::satake
