#include "gl4/dirichlet_lfunc.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gl4/arith.hpp"

namespace gl4::lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<cplx> character_values(const DirichletCharacter& chi) {
    std::vector<cplx> v(chi.modulus());
    for (u64 a = 0; a < chi.modulus(); ++a) v[a] = chi(static_cast<arith::i64>(a));
    return v;
}

}  // namespace

cplx dirichlet_l_table(cplx s, std::span<const cplx> values, bool principal) {
    const u64 Q = values.size();
    if (Q == 0) throw std::invalid_argument("dirichlet_l: empty character table");
    if (principal && std::abs(s - 1.0) < 1e-8)
        throw std::domain_error("dirichlet_l: principal character at the pole s = 1");
    if (principal) {
        cplx acc = 0.0;
        for (u64 a = 1; a <= Q; ++a)
            if (std::gcd(a, Q) == 1) acc += special::hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(Q));
        return std::exp(-s * std::log(static_cast<double>(Q))) * acc;
    }
    return HurwitzBank(Q, s).l_value(values);
}

cplx dirichlet_l(cplx s, const DirichletCharacter& chi) {
    if (chi.modulus() == 1) {
        if (std::abs(s - 1.0) < 1e-8) throw std::domain_error("dirichlet_l: zeta pole at s = 1");
        return special::zeta(s);
    }
    auto v = character_values(chi);
    return dirichlet_l_table(s, v, chi.is_principal());
}

cplx dirichlet_l_smoothed(cplx s, const DirichletCharacter& chi, double X) {
    if (!(X >= 1.0)) throw std::invalid_argument("dirichlet_l_smoothed: X must be at least 1");
    auto v = character_values(chi);
    const u64 q = chi.modulus();
    const auto n_max = static_cast<u64>(6.0 * X);
    cplx acc = 0.0;
    for (u64 n = n_max; n >= 1; --n) {  // smallest terms first
        cplx c = v[n % q];
        if (c == 0.0) continue;
        double ln = std::log(static_cast<double>(n));
        double r = static_cast<double>(n) / X;
        acc += c * std::exp(-s * ln - r * r);
    }
    return acc;
}

HurwitzBank::HurwitzBank(u64 Q, cplx s) : Q_(Q), s_(s) {
    if (Q == 0) throw std::invalid_argument("HurwitzBank: modulus must be positive");
    q_pow_ = std::exp(-s * std::log(static_cast<double>(Q)));
    for (u64 a = 1; a <= Q; ++a) {
        if (std::gcd(a, Q) != 1) continue;
        double x = static_cast<double>(a) / static_cast<double>(Q);
        residues_.push_back(a % Q);
        regular_.push_back(special::hurwitz_zeta_regular(s, x));
    }
}

cplx HurwitzBank::l_value(std::span<const cplx> values) const {
    if (values.size() != Q_) throw std::invalid_argument("HurwitzBank: table size differs from modulus");
    // sum over a of psi(a) = 0 for non-principal psi, so the pole parts cancel
    cplx acc = 0.0;
    for (std::size_t i = 0; i < residues_.size(); ++i) acc += values[residues_[i]] * regular_[i];
    return q_pow_ * acc;
}

std::size_t character_index(const DirichletCharacter& chi) {
    const auto& gens = chi.group().generators();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) idx = idx * gens[i].order + chi.exponents()[i];
    return idx;
}

DirichletCharacter character_from_ref(const CharRef& ref) {
    auto all = characters::enumerate_characters(ref.q);
    if (ref.index >= all.size())
        throw std::out_of_range("character index " + std::to_string(ref.index) + " out of range for q = " +
                                std::to_string(ref.q) + " (" + std::to_string(all.size()) + " characters)");
    return all[ref.index];
}

std::vector<cplx> product_values(const DirichletCharacter& a, const DirichletCharacter& b) {
    const u64 qa = a.modulus(), qb = b.modulus();
    if (std::gcd(qa, qb) != 1) throw std::invalid_argument("product_values: moduli must be coprime");
    const u64 Q = qa * qb;
    std::vector<cplx> v(Q);
    for (u64 n = 0; n < Q; ++n) v[n] = a(static_cast<arith::i64>(n % qa)) * b(static_cast<arith::i64>(n % qb));
    return v;
}

EisensteinGL4::EisensteinGL4(const std::array<CharRef, 4>& refs)
    : EisensteinGL4(std::array<DirichletCharacter, 4>{character_from_ref(refs[0]), character_from_ref(refs[1]),
                                                      character_from_ref(refs[2]), character_from_ref(refs[3])}) {}

EisensteinGL4::EisensteinGL4(std::array<DirichletCharacter, 4> chars) : chars_(std::move(chars)) {
    validate();
    for (std::size_t j = 0; j < 4; ++j) {
        N_ *= chars_[j].modulus();
        arch_.mu[j] = chars_[j].is_even() ? 0.0 : 1.0;
    }
}

void EisensteinGL4::validate() const {
    for (std::size_t j = 0; j < 4; ++j) {
        const auto& c = chars_[j];
        std::string where = "chars[" + std::to_string(j) + "]";
        if (c.is_principal()) throw std::invalid_argument(where + ": principal character not allowed");
        if (!c.is_primitive()) throw std::invalid_argument(where + ": character is not primitive");
        for (std::size_t k = 0; k < j; ++k)
            if (std::gcd(c.modulus(), chars_[k].modulus()) != 1)
                throw std::invalid_argument(where + ": modulus not coprime to chars[" + std::to_string(k) + "]");
    }
}

std::array<CharRef, 4> EisensteinGL4::refs() const {
    std::array<CharRef, 4> out;
    for (std::size_t j = 0; j < 4; ++j) out[j] = {chars_[j].modulus(), character_index(chars_[j])};
    return out;
}

satake::Quad EisensteinGL4::satake(u64 p) const {
    satake::Quad a;
    for (std::size_t j = 0; j < 4; ++j) a[j] = chars_[j](static_cast<arith::i64>(p % chars_[j].modulus()));
    return a;
}

satake::GlobalRep EisensteinGL4::to_global_rep() const {
    auto self = *this;
    return satake::GlobalRep(N_, arch_, {}, satake::DefaultRule::Eisenstein,
                             [self](u64 p) { return self.satake(p); });
}

EisensteinGL4 EisensteinGL4::dual() const {
    return EisensteinGL4(std::array<DirichletCharacter, 4>{chars_[0].conj(), chars_[1].conj(), chars_[2].conj(),
                                                           chars_[3].conj()});
}

namespace {

template <class F>
cplx convolve4(u64 n, F&& value) {
    // sum over n = d1 d2 d3 d4 of value(0, d1) ... value(3, d4)
    auto divs = arith::divisors(n);
    cplx acc = 0.0;
    for (u64 d1 : divs) {
        cplx v1 = value(0, d1);
        if (v1 == 0.0) continue;
        u64 n1 = n / d1;
        for (u64 d2 : arith::divisors(n1)) {
            cplx v2 = v1 * value(1, d2);
            if (v2 == 0.0) continue;
            u64 n2 = n1 / d2;
            for (u64 d3 : arith::divisors(n2)) {
                cplx v3 = v2 * value(2, d3);
                if (v3 == 0.0) continue;
                acc += v3 * value(3, n2 / d3);
            }
        }
    }
    return acc;
}

}  // namespace

cplx eisenstein_coeff(const EisensteinGL4& rep, u64 n) {
    if (n == 0) throw std::invalid_argument("eisenstein_coeff: n must be positive");
    const auto& c = rep.chars();
    return convolve4(n, [&](std::size_t j, u64 d) { return c[j](static_cast<arith::i64>(d % c[j].modulus())); });
}

cplx twisted_coeff(const EisensteinGL4& rep, const DirichletCharacter& chi, u64 n) {
    if (n == 0) throw std::invalid_argument("twisted_coeff: n must be positive");
    const auto& c = rep.chars();
    std::array<std::vector<cplx>, 4> tab;
    for (std::size_t j = 0; j < 4; ++j) tab[j] = product_values(c[j], chi);
    return convolve4(n, [&](std::size_t j, u64 d) { return tab[j][d % tab[j].size()]; });
}

CompletedValue completed_lambda(cplx s, const EisensteinGL4& rep, const DirichletCharacter& chi) {
    const u64 q = chi.modulus();
    if (!chi.is_primitive()) throw std::invalid_argument("completed_lambda: character must be primitive");
    if (!chi.is_even()) throw std::invalid_argument("completed_lambda: character must be even");
    if (std::gcd(q, rep.conductor()) != 1)
        throw std::invalid_argument("completed_lambda: gcd(q, N) must be 1");
    CompletedValue out;
    out.s = s;
    const cplx w = 0.5 + s;
    out.l_value = 1.0;
    out.gamma = 1.0;
    double m = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        const auto& cj = rep.chars()[j];
        auto v = product_values(cj, chi);
        // chi_j chi is principal only when both are trivial, excluded by validation
        out.l_factors[j] = dirichlet_l_table(w, v, false);
        out.l_value *= out.l_factors[j];
        cplx mu = rep.arch().mu[j];
        out.gamma *= std::exp(special::log_gamma(0.5 * (w + mu)));
        m += mu.real();
    }
    double log_scale = std::log(std::pow(static_cast<double>(q), 4) * static_cast<double>(rep.conductor())) -
                       4.0 * std::log(kPi);
    out.log_conductor = 0.5 * s * log_scale - 0.5 * m * std::log(kPi);
    out.value = std::exp(out.log_conductor) * out.gamma * out.l_value;
    return out;
}

cplx completed_dirichlet(cplx s, const DirichletCharacter& chi) {
    if (!chi.is_primitive()) throw std::invalid_argument("completed_dirichlet: character must be primitive");
    double a = chi.is_even() ? 0.0 : 1.0;
    double q = static_cast<double>(chi.modulus());
    cplx z = 0.5 * (s + a);
    return std::exp(z * std::log(q / kPi) + special::log_gamma(z)) * dirichlet_l(s, chi);
}

}  // namespace gl4::lfunc
