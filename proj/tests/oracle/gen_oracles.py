"""Regenerates tests/unit/oracle_values.hpp from mpmath / sympy / exact arithmetic.

Everything here is computed independently of the C++ sources: characters are
built from sympy primitive roots and brute-force conductors, kernels by
mpmath quadrature at 30 digits. Run from the repository root:

    python3 tests/oracle/gen_oracles.py > tests/unit/oracle_values.hpp
"""

from fractions import Fraction
from math import gcd

import mpmath as mp
import sympy

mp.mp.dps = 30


# ---------------------------------------------------------------- characters

def unit_group_generators(q):
    """Generators of (Z/qZ)^x as (residue mod q, order), CRT-lifted."""
    gens = []
    for p, k in sorted(sympy.factorint(q).items()):
        pk = p**k
        rest = q // pk

        def lift(r):
            # r mod pk, 1 mod rest
            return int(sympy.ntheory.modular.crt([pk, rest], [r, 1])[0]) if rest > 1 else r % pk

        if p == 2:
            if k == 1:
                continue
            gens.append((lift(pk - 1), 2))
            if k >= 3:
                gens.append((lift(5), pk // 4))
        else:
            g = int(sympy.primitive_root(pk))
            gens.append((lift(g), pk - pk // p))
    return gens


def all_characters(q):
    """Each character as a dict n -> complex value on units mod q."""
    gens = unit_group_generators(q)
    units = [n for n in range(1, q + 1) if gcd(n, q) == 1] if q > 1 else [1]
    # exponent vector of every unit by brute force over the generator box
    logs = {}

    def rec(i, val, exps):
        if i == len(gens):
            logs[val % q if q > 1 else 1] = tuple(exps)
            return
        g, o = gens[i]
        v = val
        for e in range(o):
            rec(i + 1, v, exps + [e])
            v = v * g % q

    rec(0, 1, [])
    chars = []

    def rec2(i, ks):
        if i == len(gens):
            vals = {}
            for n in units:
                ph = sum(Fraction(k, o) for k, (g, o), e in zip(ks, gens, logs[n % q if q > 1 else 1]) for _ in range(e))
                vals[n] = mp.expjpi(2 * mp.mpf(ph.numerator) / ph.denominator)
            chars.append(vals)
            return
        for k in range(gens[i][1]):
            rec2(i + 1, ks + [k])

    rec2(0, [])
    return chars


def value(chi, q, n):
    n %= q
    if q == 1:
        return mp.mpc(1)
    return chi.get(n, mp.mpc(0))


def conductor(chi, q):
    for d in sorted(sympy.divisors(q)):
        if all(abs(value(chi, q, n) - 1) < 1e-20 for n in range(1, q + 1) if gcd(n, q) == 1 and (n - 1) % d == 0):
            return d
    return q


def is_even(chi, q):
    return q <= 2 or abs(value(chi, q, q - 1) - 1) < 1e-20


def even_primitive(q):
    return [c for c in all_characters(q) if conductor(c, q) == q and is_even(c, q)]


def phi_flat_by_moebius(q):
    def even_count(d):
        return 1 if d <= 2 else sympy.totient(d) // 2
    return sum(sympy.mobius(q // d) * even_count(d) for d in sympy.divisors(q))


def orth_rhs(q, m, n):
    acc = Fraction(0)
    for r in sympy.divisors(q):
        d = q // r
        mu = sympy.mobius(d)
        hits = ((m - n) % r == 0) + ((m + n) % r == 0)
        acc += mu * sympy.totient(r) * hits
    return acc / 2


def orth_lhs(q, m, n):
    return sum(value(c, q, m) * mp.conj(value(c, q, n)) for c in even_primitive(q))


def large_sieve(Q, M, a):
    num = mp.mpf(0)
    for q in range(1, Q + 1):
        prim = [c for c in all_characters(q) if conductor(c, q) == q]
        w = mp.mpf(q) / sympy.totient(q)
        for c in prim:
            s = sum(an * value(c, q, M + i) for i, an in enumerate(a))
            num += w * abs(s) ** 2
    den = (Q * Q + len(a)) * sum(abs(x) ** 2 for x in a)
    return num / den


# ---------------------------------------------------------------- kernels

def G(s, t, mu):
    acc = mp.mpc(1)
    for m in mu:
        acc *= mp.gamma((s + 1j * t + m) / 2) * mp.gamma((s - 1j * t + mp.conj(m)) / 2)
    return acc


def W(x, t, mu, c=1):
    f = lambda y: G(mp.mpf(0.5) + c + 1j * y, t, mu) * mp.power(x, -(c + 1j * y)) / (c + 1j * y)
    return mp.re(mp.quad(f, [-mp.inf, -20, -5, 0, 5, 20, mp.inf]) / (2 * mp.pi))


def V(xi, eta, mu_scale, mu, h=mp.mpf(1) / 5):
    # Double trapezoid rule: both integrands are analytic in a strip and decay
    # like exp(-2 pi |.|), so the error is far below the comparison tolerance.
    with mp.workdps(20):
        x = mp.pi**4 * xi * eta / mp.mpf(mu_scale) ** 4
        r = mp.log(mp.mpf(eta) / xi)
        c = mp.mpf(1)
        ys = [h * k for k in range(-225, 226)]
        total = mp.mpc(0)
        for kt in range(-150, 151):
            t = h * kt
            w = mp.fsum(G(mp.mpf(0.5) + c + 1j * y, t, mu) * mp.power(x, -(c + 1j * y)) / (c + 1j * y) for y in ys)
            total += mp.expj(r * t) * mp.re(w * h / (2 * mp.pi))
        return total * h


def G_integral(mu):
    return mp.quad(lambda t: mp.re(G(mp.mpf(0.5), t, mu)), [-mp.inf, -10, 0, 10, mp.inf])


# ---------------------------------------------------------------- L-functions

def char_by_values(q, gen, k, order):
    """Character mod prime q with chi(gen) = e(k/order)."""
    for c in all_characters(q):
        if abs(value(c, q, gen) - mp.expjpi(mp.mpf(2 * k) / order)) < 1e-20:
            return c
    raise ValueError


def period_list(chis):
    """Values of the product of characters (coprime moduli) on 0..Q-1."""
    Q = 1
    for q, _ in chis:
        Q *= q
    return [mp.fprod(value(c, q, n) for q, c in chis) for n in range(Q)]


def completed_dirichlet(s, q, c):
    a = 0 if is_even(c, q) else 1
    L = mp.dirichlet(s, period_list([(q, c)]))
    return mp.power(q / mp.pi, (s + a) / 2) * mp.gamma((s + a) / 2) * L


def standin():
    return [
        (3, char_by_values(3, 2, 1, 2)),
        (4, char_by_values(4, 3, 1, 2)),
        (5, char_by_values(5, 2, 1, 4)),
        (7, char_by_values(7, 3, 1, 6)),
    ]


def completed_lambda(s, rep, q, chi):
    w = mp.mpf(0.5) + s
    N = 1
    L = mp.mpc(1)
    gam = mp.mpc(1)
    m = 0
    for qj, cj in rep:
        N *= qj
        L *= mp.dirichlet(w, period_list([(qj, cj), (q, chi)]))
        mu = 0 if is_even(cj, qj) else 1
        gam *= mp.gamma((w + mu) / 2)
        m += mu
    return mp.power(mp.mpf(q) ** 4 * N / mp.pi**4, s / 2) * mp.power(mp.pi, -mp.mpf(m) / 2) * gam * L


def dual(rep):
    return [(q, {n: mp.conj(v) for n, v in c.items()}) for q, c in rep]


# ---------------------------------------------------------------- output

def cpp(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-mp.inf, max_fixed=mp.inf)


def emit(name, x, kind="double"):
    if isinstance(x, Fraction):
        x = mp.mpf(x.numerator) / x.denominator
    if isinstance(x, (mp.mpc, complex)):
        print(f"inline const std::complex<double> {name}{{{cpp(mp.re(x))}, {cpp(mp.im(x))}}};")
    else:
        print(f"inline constexpr {kind} {name} = {cpp(x)};")


def main():
    print("#pragma once")
    print("// Generated by tests/oracle/gen_oracles.py; do not edit by hand.")
    print("#include <array>\n#include <complex>\n\nnamespace oracle {\n")

    emit("log_gamma_quarter", mp.loggamma(mp.mpf(1) / 4))
    emit("log_gamma_c", mp.loggamma(mp.mpc(0.3, 7.5)))
    emit("log_gamma_neg", mp.loggamma(mp.mpc(-2.5, 0.75)))
    emit("digamma_c", mp.digamma(mp.mpc(0.75, 3)))
    emit("hurwitz_half_third", mp.zeta(mp.mpf(0.5), mp.mpf(1) / 3))
    emit("hurwitz_c", mp.zeta(mp.mpc(0.5, 20), mp.mpf(0.2)))
    emit("zeta_crit", mp.zeta(mp.mpc(0.5, 14)))

    chi3 = char_by_values(3, 2, 1, 2)
    chi4 = char_by_values(4, 3, 1, 2)
    emit("L_chi3_two", mp.dirichlet(2, period_list([(3, chi3)])))
    emit("L_chi4_half_i", mp.dirichlet(mp.mpc(0.5, 1), period_list([(4, chi4)])))
    chi11 = char_by_values(11, 2, 2, 10)
    emit("L_chi11_crit", mp.dirichlet(mp.mpc(0.5, 2), period_list([(11, chi11)])))
    emit("completed_chi11", completed_dirichlet(mp.mpc(0.5, 2), 11, chi11))

    rep = standin()
    s = mp.mpc(0.1, 0.3)
    emit("lambda_standin_chi11", completed_lambda(s, rep, 11, chi11))
    t = mp.mpf(0.5)
    pair = completed_lambda(1j * t, rep, 11, chi11) * completed_lambda(-1j * t, dual(rep), 11,
                                                                       {n: mp.conj(v) for n, v in chi11.items()})
    emit("lambda_pair_standin_chi11_t05", pair)

    mu0 = [0, 0, 0, 0]
    mu1 = [1, 1, 1, 1]
    mu_mix = [0, 1, 0, 1]
    emit("G_mu0_half_t0", G(mp.mpf(0.5), 0, mu0))
    emit("G_mu1_half_t2", G(mp.mpf(0.5), 2, mu1))
    emit("G_mix_c", G(mp.mpc(0.8, 0.4), 1.5, mu_mix))
    emit("G_int_mu0", G_integral(mu0))
    emit("G_int_mu1", G_integral(mu1))
    emit("W_mu0_x1_t0", W(1, 0, mu0))
    emit("W_mu1_x03_t05", W(mp.mpf(0.3), mp.mpf(0.5), mu1))
    emit("W_mix_x2_t3", W(2, 3, mu_mix))
    emit("V_mu1_1_2_3", V(1, 2, 3, mu1))

    # zeta^4 pattern: A(1) truncated at p <= 1000
    acc = mp.mpf(1)
    for p in sympy.primerange(2, 1001):
        x = mp.mpf(p) ** -2
        acc *= (1 + 9 * x + 9 * x**2 + x**3) / (1 - x) ** 6
    emit("A_ones_s1_p1000", acc)
    emit("Bp_ones_p5_half", (1 + Fraction(9, 5) + Fraction(9, 25) + Fraction(1, 125)) / Fraction(4, 5) ** 7)

    flat = [phi_flat_by_moebius(q) for q in range(1, 61)]
    print("inline constexpr std::array<long long, 60> phi_flat_1_60{" + ", ".join(map(str, flat)) + "};")

    print("struct OrthCase { unsigned long long q; long long m, n; long long num, den; double lhs; };")
    cases = [(5, 1, 1), (7, 2, 1), (12, 5, 1), (13, 2, 5), (40, 3, 7), (63, 4, 13), (101, 3, 98)]
    rows = []
    for q, m, n in cases:
        r = orth_rhs(q, m, n)
        rows.append(f"{{{q}, {m}, {n}, {r.numerator}, {r.denominator}, {cpp(mp.re(orth_lhs(q, m, n)))}}}")
    print(f"inline constexpr std::array<OrthCase, {len(rows)}> orth_cases{{{{" + ", ".join(rows) + "}};")

    a = [mp.mpc((n % 3) - 1, (n % 2)) for n in range(1, 31)]
    emit("large_sieve_Q6_M1", large_sieve(6, 1, a))

    print("\n}  // namespace oracle")


if __name__ == "__main__":
    main()
