"""Capped searches for primes in arithmetic progressions and companion
elements with a prescribed exponent gcd.

These realize, effectively over F_q[T], the existence statements the theory
obtains from Dirichlet density and Chebotarev arguments.  Every search
enumerates offsets in a fixed degree-then-lexicographic order (zero first),
so identical inputs give identical outputs, and every returned witness is
re-verified by the defining predicate rather than by search bookkeeping.
Caps convert a fruitless search into a reported ``CapExceeded``.

The inner loop over prime candidates f = a0 + x*b0 is filtered by batched
root checks: f has an irreducible factor of degree dividing d exactly when f
has a root in F_{q^d}, and on the progression the evaluations are affine in
x, so each x costs one short Horner pass per cached field table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernel as K
from .errors import CapExceeded, NonCoprimeInput
from .gf_poly import Poly, PrimeElem, enumerate_offsets, is_prime_element, poly_gcd
from .residue import (
    ExponentData,
    inverse_mod,
    mth_root_mod_prime,
    power_residue_symbol,
    unit_exponent,
)

# Root-filter depths per q: the union of divisors of these d covers every
# factor degree up to 6 (q <= 3), 4 (q = 5) or 3 (q >= 7), with field tables
# of at most a few thousand entries.
_FILTER_DEPTHS = {2: (4, 5, 6), 3: (4, 5, 6), 5: (3, 4), 7: (2, 3), 11: (2, 3), 13: (2, 3)}


@dataclass(frozen=True)
class SearchCaps:
    max_offset_degree: int = 12
    max_candidates: int = 10**6

    def __post_init__(self):
        if self.max_offset_degree < 0 or self.max_candidates < 1:
            raise ValueError("caps must be positive")


@dataclass
class SearchStats:
    """Bookkeeping surfaced into decomposition reports."""

    candidates_tried: int = 0
    accepted_offset_degree: int | None = None

    def as_dict(self) -> dict:
        return {
            "candidates_tried": self.candidates_tried,
            "accepted_offset_degree": self.accepted_offset_degree,
        }


def _horner_codes(q: int, d: int, coeffs, pts, EXP, LOG):
    """Evaluate a polynomial with F_q coefficients at all codes in pts."""
    v = np.zeros_like(pts)
    for c in reversed(coeffs):
        v = EXP[LOG[v] + LOG[pts]]
        if c:
            v = v - (v % q) + ((v % q + c) % q)
    return v


class ProgressionRootFilter:
    """Rejects candidates a0 + x*b0 that have a root in a small extension.

    A match at a point of F_{q^d} exhibits an irreducible factor of degree
    dividing d, so the candidate cannot be prime (its degree always exceeds
    the filter depths on the paths that use the filter; small candidates are
    tested directly and bypass this object).
    """

    def __init__(self, a0: Poly, b0: Poly):
        q = a0.q
        self.q = q
        self.depth = max(_FILTER_DEPTHS[q])
        self.levels = []
        # d = 1 level handled with plain mod-q arithmetic, point 0 included
        xs = np.arange(q, dtype=np.int64)
        a_vals = np.array([a0(int(x)) for x in xs], dtype=np.int64)
        b_vals = np.array([b0(int(x)) for x in xs], dtype=np.int64)
        target = np.full(q, -1, dtype=np.int64)
        ok = b_vals != 0
        target[ok] = (-a_vals[ok] * np.array([pow(int(b), q - 2, q) if b else 0 for b in b_vals])[ok]) % q
        self._lin_pts = xs
        self._lin_target = target
        for d in _FILTER_DEPTHS[q]:
            LOG, EXP = K.gf_ext_tables(q, d)
            pts = np.arange(1, q**d, dtype=np.int64)
            A0 = _horner_codes(q, d, a0.coeffs, pts, EXP, LOG)
            B0 = _horner_codes(q, d, b0.coeffs, pts, EXP, LOG)
            # target = -A0 / B0 where B0 != 0; -1 marks "no constraint"
            inv_b = EXP[(q**d - 1) - LOG[B0]]
            target = K.gf_neg_codes(q, d, EXP[LOG[A0] + LOG[inv_b]])
            target[B0 == 0] = -1
            self.levels.append((d, pts, target, LOG, EXP))

    def passes(self, x: Poly) -> bool:
        q = self.q
        xv = np.zeros_like(self._lin_pts)
        for c in reversed(x.coeffs):
            xv = (xv * self._lin_pts + c) % q
        if np.any(xv == self._lin_target):
            return False
        for d, pts, target, LOG, EXP in self.levels:
            xv = _horner_codes(q, d, x.coeffs, pts, EXP, LOG)
            if np.any(xv == target):
                return False
        return True


@dataclass
class PrimeSearchResult:
    x: Poly
    prime: Poly  # the element a0 + x*b0 itself (unit times monic irreducible)
    stats: SearchStats

    @property
    def prime_elem(self) -> PrimeElem:
        return PrimeElem.from_element(self.prime)


def find_prime_in_class(a0: Poly, b0: Poly, caps: SearchCaps) -> PrimeSearchResult:
    """First x (degree-lex order) with a0 + x*b0 a prime element.

    Requires gcd(a0, b0) = 1 and b0 != 0.
    """
    a0._check(b0)
    if b0.is_zero():
        raise NonCoprimeInput("progression modulus b0 is zero")
    if not poly_gcd(a0, b0).is_one():
        raise NonCoprimeInput(f"gcd(a0, b0) != 1 for a0={a0}, b0={b0}")
    stats = SearchStats()
    filt: ProgressionRootFilter | None = None
    for x in enumerate_offsets(a0.q):
        if x.degree is not None and isinstance(x.degree, int) and x.degree > caps.max_offset_degree:
            raise CapExceeded("find_prime_in_class", stats.candidates_tried, caps)
        stats.candidates_tried += 1
        if stats.candidates_tried > caps.max_candidates:
            raise CapExceeded("find_prime_in_class", stats.candidates_tried, caps)
        cand = a0 + x * b0
        if cand.is_zero() or cand.is_unit():
            continue
        if cand.degree > max(_FILTER_DEPTHS[a0.q]):
            if filt is None:
                filt = ProgressionRootFilter(a0, b0)
            if not filt.passes(x):
                continue
        if is_prime_element(cand):
            stats.accepted_offset_degree = x.degree if x else None
            return PrimeSearchResult(x, cand, stats)
    raise AssertionError("unreachable: offset enumeration is infinite")


@dataclass
class ResiduePrimeSearchResult:
    y: Poly
    prime: Poly  # b2 = a0 + y*b0
    root: Poly  # a_root with a_root^m = a_ref mod b2
    stats: SearchStats

    @property
    def prime_elem(self) -> PrimeElem:
        return PrimeElem.from_element(self.prime)


def find_prime_in_class_with_residue(
    a0: Poly, b0: Poly, m: int, caps: SearchCaps, a_ref: Poly
) -> ResiduePrimeSearchResult:
    """First y with b2 = a0 + y*b0 prime and a_ref an m-th power mod b2.

    Also returns an m-th root of a_ref modulo b2.  For m = 1 the residue
    condition is vacuous and this reduces to find_prime_in_class.
    """
    a0._check(b0)
    a0._check(a_ref)
    if b0.is_zero():
        raise NonCoprimeInput("progression modulus b0 is zero")
    if not poly_gcd(a0, b0).is_one():
        raise NonCoprimeInput(f"gcd(a0, b0) != 1 for a0={a0}, b0={b0}")
    q = a0.q
    if m < 1 or (q - 1) % m != 0:
        raise ValueError(f"m = {m} must divide q - 1 = {q - 1}")
    stats = SearchStats()
    filt: ProgressionRootFilter | None = None
    for y in enumerate_offsets(q):
        if isinstance(y.degree, int) and y.degree > caps.max_offset_degree:
            raise CapExceeded("find_prime_in_class_with_residue", stats.candidates_tried, caps)
        stats.candidates_tried += 1
        if stats.candidates_tried > caps.max_candidates:
            raise CapExceeded("find_prime_in_class_with_residue", stats.candidates_tried, caps)
        cand = a0 + y * b0
        if cand.is_zero() or cand.is_unit():
            continue
        if cand.degree > max(_FILTER_DEPTHS[q]):
            if filt is None:
                filt = ProgressionRootFilter(a0, b0)
            if not filt.passes(y):
                continue
        if not is_prime_element(cand):
            continue
        P = PrimeElem.from_element(cand)
        if P.divides(a_ref):
            continue
        if m > 1 and not power_residue_symbol(a_ref, P, m).is_residue():
            continue
        root = mth_root_mod_prime(a_ref, P, m)
        stats.accepted_offset_degree = y.degree if y else None
        return ResiduePrimeSearchResult(y, cand, root, stats)
    raise AssertionError("unreachable: offset enumeration is infinite")


@dataclass
class CompanionResult:
    c: Poly
    proof: tuple[ExponentData, ExponentData]
    stats: SearchStats


def _companion_reject_degrees(q: int, eps_b: int) -> "callable":
    """Degree filter implementing gcd(eps(b), eps(c)) = q - 1.

    gcd(eps(b), eps(c)) = m fails exactly when some factor of c has degree d
    with v_l(q^d - 1) > e_l for a prime l with v_l(eps(b)) > e_l; that happens
    exactly when r_l | d for r_l the order of q mod l^(e_l + 1).  Multiplicity
    only adds characteristic-power parts, which never divide eps(b).
    """
    from .constant_ext import bad_degree_order
    from .residue import p_adic_valuation

    m = q - 1
    bad_orders = []
    for ell in K.prime_factors(eps_b):
        if ell == q:
            continue
        e_ell = p_adic_valuation(ell, m) if m > 1 else 0
        if p_adic_valuation(ell, eps_b) > e_ell:
            bad_orders.append(bad_degree_order(q, ell, e_ell))
    if not bad_orders:
        return lambda d: False
    return lambda d: any(d % r == 0 for r in bad_orders)


def find_companion(b, g: Poly, u: int, caps: SearchCaps) -> CompanionResult:
    """First c = c0 + t*g with b*c = u mod g and gcd(eps(b), eps(c)) = q - 1.

    b may be a PrimeElem or a nonzero Poly; g must be nonzero and coprime to
    b; u is a nonzero constant.  c0 = u * b^{-1} mod g pins the congruence
    (vacuous when g is a unit), and offsets t are scanned in degree-lex order.
    The returned proof pair re-derives both exponents from scratch.
    """
    b_poly = b.element if isinstance(b, PrimeElem) else b
    q = b_poly.q
    if u % q == 0:
        raise ValueError("u must be a nonzero constant")
    if g.is_zero():
        raise ValueError("modulus g must be nonzero")
    if b_poly.is_zero() or not poly_gcd(b_poly, g).is_one():
        raise NonCoprimeInput(f"gcd(b, g) != 1 for b={b_poly}, g={g}")
    m = q - 1
    eps_b = unit_exponent(b_poly)
    reject = _companion_reject_degrees(q, eps_b.value)
    if g.is_unit():
        c0 = Poly.zero(q)
    else:
        c0 = (Poly.const(q, u) * inverse_mod(b_poly, g)) % g
    stats = SearchStats()
    for t in enumerate_offsets(q):
        if isinstance(t.degree, int) and t.degree > caps.max_offset_degree:
            raise CapExceeded("find_companion", stats.candidates_tried, caps)
        stats.candidates_tried += 1
        if stats.candidates_tried > caps.max_candidates:
            raise CapExceeded("find_companion", stats.candidates_tried, caps)
        c = c0 + t * g
        if c.is_zero():
            continue
        # cheap necessary test on factor degrees, then the real certificate
        if not c.is_unit():
            if K.distinct_factor_degrees(q, c.monic().coeffs, reject) is None:
                continue
        elif m > 1:
            continue  # constant c has eps = 1 < m
        eps_c = unit_exponent(c)
        from math import gcd as int_gcd

        if int_gcd(eps_b.value, eps_c.value) != m:
            continue
        stats.accepted_offset_degree = t.degree if t else None
        return CompanionResult(c, (eps_b, eps_c), stats)
    raise AssertionError("unreachable: offset enumeration is infinite")
