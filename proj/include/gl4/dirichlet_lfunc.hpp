#pragma once

// Dirichlet L-values through Hurwitz zeta, a degree-4 Eisenstein stand-in
// built from four primitive characters, and its completed twisted L-function.

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "gl4/characters.hpp"
#include "gl4/satake.hpp"
#include "gl4/special.hpp"

namespace gl4::lfunc {

using characters::DirichletCharacter;
using satake::cplx;
using satake::u64;
using special::hurwitz_zeta;

// L(s, psi) for psi given by its values psi(0..Q-1) on residues mod Q.
// `principal` must be false unless psi is the trivial character mod Q.
cplx dirichlet_l_table(cplx s, std::span<const cplx> values, bool principal);

cplx dirichlet_l(cplx s, const DirichletCharacter& chi);

// sum chi(n) n^{-s} exp(-(n/X)^2) for n < 6X; differs from L(s, chi) by O(X^{-2}).
cplx dirichlet_l_smoothed(cplx s, const DirichletCharacter& chi, double X);

// zeta(s, a/Q) for every a coprime to Q, reused by all characters mod Q.
class HurwitzBank {
public:
    HurwitzBank(u64 Q, cplx s);
    u64 modulus() const { return Q_; }
    cplx s() const { return s_; }
    cplx l_value(std::span<const cplx> values) const;

private:
    u64 Q_;
    cplx s_;
    cplx q_pow_;  // Q^{-s}
    std::vector<u64> residues_;
    std::vector<cplx> regular_;  // zeta(s, a/Q) - 1/(s-1); the pole cancels in non-principal sums
};

struct CharRef {
    u64 q = 1;
    std::size_t index = 0;
};

// Position of chi in enumerate_characters(chi.modulus()).
std::size_t character_index(const DirichletCharacter& chi);
DirichletCharacter character_from_ref(const CharRef& ref);

// Values of chi1 * chi2 on residues mod q1 q2 (moduli coprime).
std::vector<cplx> product_values(const DirichletCharacter& a, const DirichletCharacter& b);

class EisensteinGL4 {
public:
    explicit EisensteinGL4(const std::array<CharRef, 4>& refs);
    explicit EisensteinGL4(std::array<DirichletCharacter, 4> chars);

    const std::array<DirichletCharacter, 4>& chars() const { return chars_; }
    std::array<CharRef, 4> refs() const;
    u64 conductor() const { return N_; }
    const satake::ArchParams& arch() const { return arch_; }

    // Satake tuple (chi_1(p), ..., chi_4(p)); entries vanish for p | q_j.
    satake::Quad satake(u64 p) const;
    satake::GlobalRep to_global_rep() const;
    EisensteinGL4 dual() const;

private:
    void validate() const;

    std::array<DirichletCharacter, 4> chars_;
    u64 N_ = 1;
    satake::ArchParams arch_;
};

// Four-fold Dirichlet convolution of the characters at n.
cplx eisenstein_coeff(const EisensteinGL4& rep, u64 n);
// Same convolution with every chi_j replaced by chi_j chi.
cplx twisted_coeff(const EisensteinGL4& rep, const DirichletCharacter& chi, u64 n);

struct CompletedValue {
    cplx s;
    cplx value;           // Lambda(1/2 + s, pi x chi)
    cplx log_conductor;   // log of (q^4 N / pi^4)^{s/2} pi^{-m/2}
    cplx gamma;           // prod_j Gamma((1/2 + s + mu_j)/2)
    cplx l_value;         // prod_j L(1/2 + s, chi_j chi)
    std::array<cplx, 4> l_factors{};
};

// chi must be even, primitive and coprime to the conductor.
CompletedValue completed_lambda(cplx s, const EisensteinGL4& rep, const DirichletCharacter& chi);

// Completed L-function of a single primitive character:
// (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi), a the parity bit.
cplx completed_dirichlet(cplx s, const DirichletCharacter& chi);

}  // namespace gl4::lfunc
