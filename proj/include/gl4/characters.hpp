#pragma once

// Dirichlet characters mod q. Characters are exponent vectors over explicit
// generators of (Z/qZ)^x, one cyclic factor per odd prime power and the
// <-1> x <5> split for 2^k with k >= 3.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "gl4/arith.hpp"

namespace gl4::characters {

using arith::i64;
using arith::u64;

// Total number of discrete-log table entries a UnitGroup may allocate.
// Overridden by the GL4_TABLE_BUDGET environment variable.
std::size_t default_table_budget();

struct Generator {
    u64 residue;    // generator as a residue mod q (CRT-lifted, 1 on other factors)
    u64 order;
    std::size_t component;
};

class UnitGroup {
public:
    explicit UnitGroup(u64 q, std::size_t table_budget = default_table_budget());

    u64 modulus() const { return q_; }
    i64 phi() const { return phi_; }
    const std::vector<arith::PrimePower>& factorization() const { return factors_; }
    const std::vector<Generator>& generators() const { return gens_; }

    // Fills one exponent per generator; false when gcd(n, q) > 1.
    bool dlog(i64 n, std::span<u64> exps) const;

    // Conductor of the character with the given exponent vector.
    u64 conductor_of(std::span<const u64> exps) const;

private:
    struct Component {
        u64 p = 0;
        int k = 0;
        u64 pk = 1;
        u64 root = 1;           // cyclic generator mod p^k (5 for the 2-adic split)
        bool split2 = false;    // 2^k, k >= 3
        std::size_t first_gen = 0;
        std::size_t n_gens = 0;
        std::vector<std::int32_t> table;       // residue -> exponent of `root`, -1 off units
        std::vector<std::uint8_t> sign_table;  // residue -> exponent of -1 (split2 only)
    };

    void dlog_component(const Component& c, u64 r, u64* out) const;

    u64 q_;
    i64 phi_;
    std::vector<arith::PrimePower> factors_;
    std::vector<Component> comps_;
    std::vector<Generator> gens_;
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<u64> exps);

    u64 modulus() const { return group_->modulus(); }
    const std::vector<u64>& exponents() const { return exps_; }
    const UnitGroup& group() const { return *group_; }

    u64 order() const { return order_; }
    u64 conductor() const { return conductor_; }
    bool is_even() const { return even_; }
    int parity() const { return even_ ? 1 : -1; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_principal() const { return order_ == 1; }

    // chi(n) = e(phase(n) / order()), or -1 when gcd(n, q) > 1.
    i64 phase(i64 n) const;
    std::complex<double> operator()(i64 n) const;
    std::complex<double> root(u64 k) const { return roots_[k % order_]; }

    DirichletCharacter conj() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<u64> exps_;
    std::vector<u64> weights_;  // order / generator order
    u64 order_ = 1;
    u64 conductor_ = 1;
    bool even_ = true;
    std::vector<std::complex<double>> roots_;
};

// All phi(q) characters mod q in canonical order: mixed radix over the
// generator list, last generator varying fastest. Index 0 is principal.
std::vector<DirichletCharacter> enumerate_characters(u64 q);

// The primitive character inducing chi (searched among characters mod its conductor).
DirichletCharacter inducing_primitive(const DirichletCharacter& chi);

// Number of even primitive characters mod q; phi_flat(1) = 1, phi_flat(2) = 0.
i64 phi_flat(u64 q);

std::vector<DirichletCharacter> even_primitive_characters(u64 q);
std::vector<DirichletCharacter> primitive_characters(u64 q);

// Sum over even primitive chi mod q of chi(m) conj(chi(n)). Requires gcd(mn, q) = 1.
double even_primitive_orthogonality_lhs(u64 q, i64 m, i64 n);
double even_primitive_orthogonality_lhs(std::span<const DirichletCharacter> even_primitive,
                                        i64 m, i64 n);

// (1/2) sum over q = d r, r | (m - n) and r | (m + n) of mu(d) phi(r).
boost::rational<long long> even_primitive_orthogonality_rhs(u64 q, i64 m, i64 n);

// Large-sieve ratio for coefficients a[0..N) attached to n = M, ..., M + N - 1.
// Returns 0 for the zero vector.
double large_sieve_ratio(u64 Q, i64 M, std::span<const std::complex<double>> a);

}  // namespace gl4::characters
