"""Arithmetic in F_q[T]/(f): unit-group exponents, power residue symbols,
m-th roots modulo primes, and modular inverses.

The exponent eps(b) of (F_q[T]/b)^* is assembled from the factorization of b
via the local formula (q^{deg P} - 1) * p^{ceil(log_p k)} for a prime power
P^k, p the characteristic; the char-p part is exact because
(1 + x)^{p^j} = 1 + x^{p^j} in characteristic p.

The m-th power residue symbol of a modulo a prime P is the constant
a^{(q^d - 1)/m} mod P, an m-th root of unity inside the constant copy of F_q
in the residue field (m | q - 1).  Roots are extracted with the
Tonelli-Shanks/AMM digit-peeling method per prime divisor of m; the residue
fields met on the decomposition pipeline are far too large for baby-step
giant-step discrete logs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import _kernel as K
from .gf_poly import Poly, PrimeElem, factor_with_unit


@dataclass(frozen=True)
class ResidueClass:
    """Element of F_q[T]/(modulus); rep is kept reduced."""

    modulus: Poly
    rep: Poly

    def __post_init__(self):
        if self.modulus.is_zero():
            raise ValueError("zero modulus")
        self.modulus._check(self.rep)
        object.__setattr__(self, "rep", self.rep % self.modulus)

    def _check(self, other: "ResidueClass") -> None:
        if self.modulus != other.modulus:
            raise ValueError("residue classes with different moduli")

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        self._check(other)
        return ResidueClass(self.modulus, self.rep + other.rep)

    def __mul__(self, other: "ResidueClass") -> "ResidueClass":
        self._check(other)
        q = self.modulus.q
        prod = K.barrett(q, self.modulus.coeffs).mulmod(self.rep.coeffs, other.rep.coeffs)
        return ResidueClass(self.modulus, Poly(q, prod))

    def __pow__(self, e: int) -> "ResidueClass":
        q = self.modulus.q
        r = K.powmod(q, self.rep.coeffs, e, self.modulus.coeffs)
        return ResidueClass(self.modulus, Poly(q, r))

    def is_unit(self) -> bool:
        from .gf_poly import poly_gcd

        return poly_gcd(self.rep, self.modulus).is_one() if not self.rep.is_zero() else False

    def inverse(self) -> "ResidueClass":
        q = self.modulus.q
        inv = K.invert(q, self.rep.coeffs, self.modulus.coeffs)
        return ResidueClass(self.modulus, Poly(q, inv))

    def is_one(self) -> bool:
        return self.rep.is_one()


@dataclass(frozen=True)
class ExponentData:
    """eps(b) with its prime-power provenance."""

    value: int
    factors: tuple[tuple[PrimeElem, int, int], ...]  # (prime, multiplicity, local exponent)


@dataclass(frozen=True)
class SymbolValue:
    """Value of an m-th power residue symbol: an m-th root of unity in F_q."""

    q: int
    m: int
    root: int

    def __post_init__(self):
        if pow(self.root, self.m, self.q) != 1:
            raise ValueError(f"{self.root} is not an {self.m}-th root of unity in F_{self.q}")

    def is_residue(self) -> bool:
        return self.root == 1


def p_adic_valuation(p: int, n: int) -> int:
    """Largest i with p^i | n; p prime, n >= 1."""
    if p < 2 or K.prime_factors(p) != [p]:
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("valuation needs a positive integer")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def local_unit_exponent(q: int, prime_degree: int, multiplicity: int) -> int:
    """Exponent of (F_q[T]/P^k)^* for deg P = d: (q^d - 1) * p^ceil(log_p k)."""
    pw = 1
    while pw < multiplicity:
        pw *= q
    return (q**prime_degree - 1) * pw


def unit_exponent(b: Poly) -> ExponentData:
    """Exponent of the unit group (F_q[T]/b)^*; b nonzero (units give 1)."""
    if b.is_zero():
        raise ValueError("unit_exponent needs a nonzero modulus")
    if b.is_unit():
        return ExponentData(1, ())
    _, factors = factor_with_unit(b)
    entries = []
    for prime, mult in factors:
        entries.append((prime, mult, local_unit_exponent(b.q, prime.degree, mult)))
    value = lcm(*(e[2] for e in entries))
    return ExponentData(value, tuple(entries))


def norm_mod_prime(a: Poly, P: PrimeElem) -> int:
    """Norm of a mod P down to F_q: a^((q^d - 1)/(q - 1)) mod P = Res(P, a)."""
    a._check(P.monic)
    return K.resultant(P.q, P.monic.coeffs, a.coeffs)


def power_residue_symbol(a: Poly, P: PrimeElem, m: int) -> SymbolValue:
    """m-th power residue symbol of a modulo the prime P, for m | q - 1.

    Equals the constant a^((q^d - 1)/m) mod P, which is 1 exactly when a is an
    m-th power modulo P.  Computed as Norm(a mod P)^((q-1)/m): the exponent
    (q^d - 1)/m factors through the norm, which a resultant evaluates without
    any q^d-sized powmod.
    """
    q = P.q
    if m < 1 or (q - 1) % m != 0:
        raise ValueError(f"m = {m} must divide q - 1 = {q - 1}")
    a._check(P.monic)
    if P.divides(a):
        raise ValueError("symbol undefined: P divides a")
    nrm = norm_mod_prime(a, P)
    if nrm == 0:
        raise AssertionError("zero norm for an element coprime to P")
    return SymbolValue(q, m, pow(nrm, (q - 1) // m, q))


def _find_ell_nonresidue(q: int, modulus: tuple[int, ...], ell: int, group_order: int):
    """First element (canonical scan order) that is not an ell-th power mod P."""
    from .gf_poly import enumerate_offsets

    probe = group_order // ell
    for cand in enumerate_offsets(q):
        if cand.is_zero():
            continue
        c = cand.coeffs
        if len(c) >= len(modulus):
            break
        if K.powmod(q, c, probe, modulus) != (1,):
            return c
    raise AssertionError("no ell-th nonresidue found; group order data inconsistent")


def _ell_th_root(q, modulus, x, ell, group_order):
    """ell-th root of x in the cyclic unit group of F_q[T]/P (x must be one)."""
    bar = K.barrett(q, modulus)
    v = p_adic_valuation(ell, group_order)
    t = group_order // ell**v
    z = _find_ell_nonresidue(q, modulus, ell, group_order)
    g = bar.powmod(z, t)  # generator of the ell-Sylow subgroup, order ell^v
    # dlog of h := x^t in <g> by ell-adic digit peeling
    h = bar.powmod(x, t)
    k = 0
    for i in range(v):
        probe = bar.powmod(bar.mulmod(h, bar.powmod(g, (ell**v - k) % ell**v)), ell ** (v - 1 - i))
        digit = 0
        ref = bar.powmod(g, ell ** (v - 1))
        acc = (1,)
        while acc != probe:
            acc = bar.mulmod(acc, ref)
            digit += 1
            if digit >= ell:
                raise AssertionError("dlog digit out of range; x not in the expected subgroup")
        k += digit * ell**i
    if k % ell != 0:
        raise ValueError("input is not an ell-th power (contract violation)")
    alpha = pow(ell, -1, t) if t > 1 else 0
    c = (alpha * ell - 1) // t
    b_exp = (-(k * c) // ell) % ell ** (v - 1) if v > 1 else 0
    r = bar.mulmod(bar.powmod(x, alpha), bar.powmod(g, b_exp))
    if bar.powmod(r, ell) != bar.reduce(x):
        raise AssertionError("ell-th root reconstruction failed")
    return r


def mth_root_mod_prime(a: Poly, P: PrimeElem, m: int) -> Poly:
    """Some r with r^m = a mod P, deg r < deg P; requires symbol(a, P, m) = 1."""
    q = P.q
    if m < 1 or (q - 1) % m != 0:
        raise ValueError(f"m = {m} must divide q - 1 = {q - 1}")
    if P.divides(a):
        raise ValueError("root extraction undefined: P divides a")
    modulus = P.monic.coeffs
    group_order = q**P.degree - 1
    x = K.mod(q, a.coeffs, modulus)
    for ell in K.prime_factors(m):
        for _ in range(p_adic_valuation(ell, m)):
            x = _ell_th_root(q, modulus, x, ell, group_order)
    r = Poly(q, x)
    if K.powmod(q, x, m, modulus) != K.mod(q, a.coeffs, modulus):
        raise ValueError("input is not an m-th power modulo P (contract violation)")
    return r


def inverse_mod(a: Poly, g: Poly) -> Poly:
    """Inverse of a modulo g; requires gcd(a, g) = 1."""
    a._check(g)
    try:
        return Poly(a.q, K.invert(a.q, a.coeffs, g.coeffs))
    except ZeroDivisionError as exc:
        raise ValueError("inverse_mod requires coprime inputs") from exc
