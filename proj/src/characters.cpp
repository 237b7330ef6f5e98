#include "gl4/characters.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gl4::characters {

namespace {

u64 mod_reduce(i64 n, u64 q) {
    i64 r = n % static_cast<i64>(q);
    if (r < 0) r += static_cast<i64>(q);
    return static_cast<u64>(r);
}

// x = a mod m1, x = 1 mod m2 with gcd(m1, m2) = 1.
u64 crt_lift(u64 a, u64 m1, u64 m2) {
    if (m2 == 1) return a % m1;
    // x = a + m1 * t, need a + m1 t = 1 mod m2
    i64 inv = 0;
    {
        i64 r0 = static_cast<i64>(m1 % m2), r1 = static_cast<i64>(m2), s0 = 1, s1 = 0;
        while (r1 != 0) {
            i64 qq = r0 / r1;
            i64 t = r0 - qq * r1;
            r0 = r1;
            r1 = t;
            t = s0 - qq * s1;
            s0 = s1;
            s1 = t;
        }
        inv = s0;
    }
    i64 need = mod_reduce(1 - static_cast<i64>(a % m2), m2);
    u64 t = mod_reduce(static_cast<i64>((static_cast<__int128>(need) * inv) % static_cast<i64>(m2)), m2);
    return a + m1 * t;
}

std::complex<double> unit_root(u64 k, u64 n) {
    // exact at the quarter points
    k %= n;
    if (4 * k == n) return {0.0, 1.0};
    if (2 * k == n) return {-1.0, 0.0};
    if (4 * k == 3 * n) return {0.0, -1.0};
    if (k == 0) return {1.0, 0.0};
    double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(th), std::sin(th)};
}

u64 v_p(u64 n, u64 p) {
    u64 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

std::size_t default_table_budget() {
    if (const char* env = std::getenv("GL4_TABLE_BUDGET")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (...) {
            throw std::invalid_argument("GL4_TABLE_BUDGET is not a non-negative integer");
        }
    }
    return 1'000'000;
}

UnitGroup::UnitGroup(u64 q, std::size_t table_budget) : q_(q) {
    if (q == 0) throw std::invalid_argument("UnitGroup: modulus must be positive");
    factors_ = q == 1 ? std::vector<arith::PrimePower>{} : arith::factorize(q);
    phi_ = arith::euler_phi(q);
    std::size_t budget = table_budget;
    for (auto [p, k] : factors_) {
        Component c;
        c.p = p;
        c.k = k;
        for (int i = 0; i < k; ++i) c.pk *= p;
        c.first_gen = gens_.size();
        u64 rest = q / c.pk;
        if (p == 2 && k == 1) {
            c.n_gens = 0;
        } else if (p == 2 && k == 2) {
            c.root = 3;
            c.n_gens = 1;
            gens_.push_back({crt_lift(3, 4, rest), 2, comps_.size()});
        } else if (p == 2) {
            c.root = 5;
            c.split2 = true;
            c.n_gens = 2;
            gens_.push_back({crt_lift(c.pk - 1, c.pk, rest), 2, comps_.size()});
            gens_.push_back({crt_lift(5, c.pk, rest), c.pk / 4, comps_.size()});
        } else {
            u64 g = arith::primitive_root(p);
            if (k >= 2 && arith::powmod(g, p - 1, p * p) == 1) g += p;
            c.root = g;
            c.n_gens = 1;
            gens_.push_back({crt_lift(g, c.pk, rest), c.pk / p * (p - 1), comps_.size()});
        }
        if (c.n_gens > 0 && c.pk <= budget) {
            budget -= c.pk;
            c.table.assign(c.pk, -1);
            if (c.split2) {
                c.sign_table.assign(c.pk, 0);
                u64 x = 1;
                for (u64 e = 0; e < c.pk / 4; ++e) {
                    c.table[x] = static_cast<std::int32_t>(e);
                    c.table[c.pk - x] = static_cast<std::int32_t>(e);
                    c.sign_table[c.pk - x] = 1;
                    x = x * 5 % c.pk;
                }
            } else {
                u64 x = 1;
                u64 ord = gens_[c.first_gen].order;
                for (u64 e = 0; e < ord; ++e) {
                    c.table[x] = static_cast<std::int32_t>(e);
                    x = static_cast<u64>(static_cast<unsigned __int128>(x) * c.root % c.pk);
                }
            }
        }
        comps_.push_back(std::move(c));
    }
}

void UnitGroup::dlog_component(const Component& c, u64 r, u64* out) const {
    if (!c.table.empty()) {
        if (c.split2) {
            out[0] = c.sign_table[r];
            out[1] = static_cast<u64>(c.table[r]);
        } else {
            out[0] = static_cast<u64>(c.table[r]);
        }
        return;
    }
    // table budget exhausted: walk the cyclic group
    u64 target = r;
    u64 sign = 0;
    if (c.split2 && r % 4 == 3) {
        target = c.pk - r;
        sign = 1;
    }
    u64 ord = c.split2 ? c.pk / 4 : gens_[c.first_gen].order;
    u64 x = 1;
    for (u64 e = 0; e < ord; ++e) {
        if (x == target) {
            if (c.split2) {
                out[0] = sign;
                out[1] = e;
            } else {
                out[0] = e;
            }
            return;
        }
        x = static_cast<u64>(static_cast<unsigned __int128>(x) * c.root % c.pk);
    }
    throw std::logic_error("UnitGroup: discrete log not found");
}

bool UnitGroup::dlog(i64 n, std::span<u64> exps) const {
    u64 r = mod_reduce(n, q_);
    if (std::gcd(r, q_) != 1 && q_ != 1) return false;
    for (const auto& c : comps_) {
        if (c.n_gens == 0) continue;
        dlog_component(c, r % c.pk, exps.data() + c.first_gen);
    }
    return true;
}

u64 UnitGroup::conductor_of(std::span<const u64> exps) const {
    u64 f = 1;
    for (const auto& c : comps_) {
        if (c.n_gens == 0) continue;
        if (c.split2) {
            u64 e1 = exps[c.first_gen] % 2;
            u64 ord2 = c.pk / 4;
            u64 e2 = exps[c.first_gen + 1] % ord2;
            u64 o2 = ord2 / std::gcd(e2, ord2);
            if (o2 == 1)
                f *= e1 ? 4 : 1;
            else
                f *= u64{1} << (v_p(o2, 2) + 2);
        } else if (c.p == 2) {
            f *= exps[c.first_gen] % 2 ? 4 : 1;
        } else {
            u64 ord = gens_[c.first_gen].order;
            u64 e = exps[c.first_gen] % ord;
            u64 o = ord / std::gcd(e, ord);
            if (o == 1) continue;
            u64 v = v_p(o, c.p);
            for (u64 i = 0; i <= v; ++i) f *= c.p;
        }
    }
    return f;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<u64> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {
    const auto& gens = group_->generators();
    if (exps_.size() != gens.size())
        throw std::invalid_argument("DirichletCharacter: exponent vector has wrong length");
    order_ = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        exps_[i] %= gens[i].order;
        u64 oi = gens[i].order / std::gcd(exps_[i], gens[i].order);
        order_ = std::lcm(order_, oi);
    }
    weights_.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        u64 oi = gens[i].order / std::gcd(exps_[i], gens[i].order);
        // exps_[i] / ord_i expressed over the common denominator order_
        u64 g = std::gcd(exps_[i], gens[i].order);
        u64 reduced = exps_[i] / g;  // numerator over oi
        weights_[i] = (reduced % oi) * (order_ / oi);
    }
    roots_.resize(order_);
    for (u64 k = 0; k < order_; ++k) roots_[k] = unit_root(k, order_);
    conductor_ = group_->conductor_of(exps_);
    even_ = phase(-1) == 0;
}

i64 DirichletCharacter::phase(i64 n) const {
    const auto& gens = group_->generators();
    u64 buf[64];
    if (!group_->dlog(n, std::span<u64>(buf, gens.size()))) return -1;
    unsigned __int128 acc = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc += static_cast<unsigned __int128>(weights_[i]) * buf[i];
    return static_cast<i64>(acc % order_);
}

std::complex<double> DirichletCharacter::operator()(i64 n) const {
    i64 ph = phase(n);
    if (ph < 0) return {0.0, 0.0};
    return roots_[static_cast<std::size_t>(ph)];
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<u64> e(exps_.size());
    const auto& gens = group_->generators();
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (gens[i].order - exps_[i]) % gens[i].order;
    return DirichletCharacter(group_, std::move(e));
}

std::vector<DirichletCharacter> enumerate_characters(u64 q) {
    auto group = std::make_shared<const UnitGroup>(q);
    const auto& gens = group->generators();
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group->phi()));
    std::vector<u64> e(gens.size(), 0);
    while (true) {
        out.emplace_back(group, e);
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (++e[i] < gens[i].order) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (gens.empty()) return out;
    }
}

DirichletCharacter inducing_primitive(const DirichletCharacter& chi) {
    u64 f = chi.conductor();
    const u64 q = chi.modulus();
    for (auto& cand : enumerate_characters(f)) {
        if (!cand.is_primitive()) continue;
        bool ok = true;
        for (u64 n = 1; n <= q && ok; ++n) {
            if (std::gcd(n, q) != 1) continue;
            if (std::abs(cand(static_cast<i64>(n)) - chi(static_cast<i64>(n))) > 1e-12) ok = false;
        }
        if (ok) return cand;
    }
    throw std::logic_error("inducing_primitive: no primitive character found");
}

std::vector<DirichletCharacter> primitive_characters(u64 q) {
    std::vector<DirichletCharacter> out;
    for (auto& c : enumerate_characters(q))
        if (c.is_primitive()) out.push_back(c);
    return out;
}

std::vector<DirichletCharacter> even_primitive_characters(u64 q) {
    std::vector<DirichletCharacter> out;
    for (auto& c : enumerate_characters(q))
        if (c.is_primitive() && c.is_even()) out.push_back(c);
    return out;
}

i64 phi_flat(u64 q) { return static_cast<i64>(even_primitive_characters(q).size()); }

double even_primitive_orthogonality_lhs(std::span<const DirichletCharacter> chars, i64 m, i64 n) {
    arith::CompensatedSum<std::complex<double>> acc;
    for (const auto& chi : chars) {
        i64 pm = chi.phase(m), pn = chi.phase(n);
        if (pm < 0 || pn < 0)
            throw std::invalid_argument("orthogonality: gcd(mn, q) must be 1");
        acc.add(chi.root(static_cast<u64>(pm) + chi.order() - static_cast<u64>(pn)));
    }
    auto v = acc.value();
    if (std::abs(v.imag()) >= 1e-10)
        throw std::logic_error("orthogonality: imaginary part above 1e-10");
    return v.real();
}

double even_primitive_orthogonality_lhs(u64 q, i64 m, i64 n) {
    if (std::gcd(static_cast<u64>(std::abs(m)) % q, q) != 1 && q != 1)
        throw std::invalid_argument("orthogonality: gcd(m, q) must be 1");
    if (std::gcd(static_cast<u64>(std::abs(n)) % q, q) != 1 && q != 1)
        throw std::invalid_argument("orthogonality: gcd(n, q) must be 1");
    auto chars = even_primitive_characters(q);
    return even_primitive_orthogonality_lhs(chars, m, n);
}

boost::rational<long long> even_primitive_orthogonality_rhs(u64 q, i64 m, i64 n) {
    if (q != 1 && (std::gcd(mod_reduce(m, q), q) != 1 || std::gcd(mod_reduce(n, q), q) != 1))
        throw std::invalid_argument("orthogonality: gcd(mn, q) must be 1");
    long long twice = 0;
    for (u64 r : arith::divisors(q)) {
        u64 d = q / r;
        int mu = arith::mobius(d);
        if (mu == 0) continue;
        long long term = mu * arith::euler_phi(r);
        if (mod_reduce(m - n, r) == 0) twice += term;
        if (mod_reduce(m + n, r) == 0) twice += term;
    }
    return {twice, 2};
}

double large_sieve_ratio(u64 Q, i64 M, std::span<const std::complex<double>> a) {
    if (Q < 1) throw std::invalid_argument("large_sieve_ratio: Q must be >= 1");
    if (a.empty()) throw std::invalid_argument("large_sieve_ratio: N must be >= 1");
    double energy = 0.0;
    for (auto z : a) energy += std::norm(z);
    if (energy == 0.0) return 0.0;
    arith::CompensatedSum<double> lhs;
    for (u64 q = 1; q <= Q; ++q) {
        double w = static_cast<double>(q) / static_cast<double>(arith::euler_phi(q));
        for (const auto& chi : primitive_characters(q)) {
            std::complex<double> s{0.0, 0.0};
            for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * chi(M + static_cast<i64>(i));
            lhs.add(w * std::norm(s));
        }
    }
    double n = static_cast<double>(a.size());
    double qq = static_cast<double>(Q);
    return lhs.value() / ((qq * qq + n) * energy);
}

}  // namespace gl4::characters
