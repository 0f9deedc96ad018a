"""Exact arithmetic in F_q and F_q[T] for small primes q.

``Poly`` is an immutable polynomial over F_q with coefficients stored
constant-term first in canonical form (no trailing zeros).  Field elements
are plain ints reduced into [0, q).  ``PrimeElem`` is a prime element of
F_q[T] in the canonical shape unit * monic-irreducible.

The degree of the zero polynomial is the dedicated sentinel ``NEG_INF``
(never an integer), so ``deg r < deg b`` comparisons behave without special
cases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _kernel as K

NEG_INF = float("-inf")

SUPPORTED_Q = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class Poly:
    """Element of F_q[T]; immutable and hashable."""

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        K.validate_q(self.q)
        c = K.trim(x % self.q for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, q: int) -> "Poly":
        return cls(q, ())

    @classmethod
    def one(cls, q: int) -> "Poly":
        return cls(q, (1,))

    @classmethod
    def const(cls, q: int, c: int) -> "Poly":
        return cls(q, (c,))

    @classmethod
    def T(cls, q: int) -> "Poly":
        return cls(q, (0, 1))

    @property
    def degree(self):
        """Degree; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_unit(self) -> bool:
        """Unit of F_q[T], i.e. a nonzero constant."""
        return len(self.coeffs) == 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "Poly":
        """Monic scalar multiple (zero stays zero)."""
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return Poly(self.q, K.scalar_mul(self.q, pow(self.coeffs[-1], -1, self.q), self.coeffs))

    def _check(self, other: "Poly") -> None:
        if self.q != other.q:
            raise ValueError(f"mixed base fields F_{self.q} and F_{other.q}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.q, K.add(self.q, self.coeffs, other.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.q, K.sub(self.q, self.coeffs, other.coeffs))

    def __neg__(self) -> "Poly":
        return Poly(self.q, K.neg(self.q, self.coeffs))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.q, K.scalar_mul(self.q, other, self.coeffs))
        self._check(other)
        return Poly(self.q, K.mul(self.q, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        self._check(other)
        quot, rem = K.divmod_(self.q, self.coeffs, other.coeffs)
        return Poly(self.q, quot), Poly(self.q, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.q)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        return K.evaluate(self.q, self.coeffs, x)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly(q={self.q}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("T" if c == 1 else f"{c}*T")
            else:
                terms.append(f"T^{i}" if c == 1 else f"{c}*T^{i}")
        return " + ".join(reversed(terms))

    def to_list(self) -> list[int]:
        """Serialized form: coefficient ints, constant first, no trailing zeros."""
        return list(self.coeffs)

    @classmethod
    def from_list(cls, q: int, coeffs) -> "Poly":
        return cls(q, tuple(coeffs))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; requires not both zero."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a._check(b)
    return Poly(a.q, K.gcd(a.q, a.coeffs, b.coeffs))


def poly_xgcd(a: Poly, b: Poly):
    """(g, s, t) with s*a + t*b = g and g the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a._check(b)
    g, s, t = K.xgcd(a.q, a.coeffs, b.coeffs)
    return Poly(a.q, g), Poly(a.q, s), Poly(a.q, t)


def is_irreducible(f: Poly) -> bool:
    """True iff f (deg >= 1) is irreducible over F_q; unit factors ignored."""
    if f.degree is NEG_INF or f.degree < 1:
        raise ValueError("irreducibility is undefined for constants")
    return K.is_irreducible(f.q, f.coeffs)


@dataclass(frozen=True)
class PrimeElem:
    """Prime element of F_q[T]: unit * monic irreducible."""

    monic: Poly
    unit: int

    def __post_init__(self):
        if self.unit % self.monic.q == 0:
            raise ValueError("unit part must be nonzero")
        object.__setattr__(self, "unit", self.unit % self.monic.q)
        if not self.monic.is_monic() or not is_irreducible(self.monic):
            raise ValueError(f"{self.monic} is not monic irreducible")

    @classmethod
    def from_element(cls, f: Poly) -> "PrimeElem":
        """Split a prime element into unit * monic; raises if f is not prime."""
        if f.is_zero() or f.is_unit():
            raise ValueError("not a prime element")
        return cls(f.monic(), f.leading_coeff)

    @property
    def q(self) -> int:
        return self.monic.q

    @property
    def degree(self) -> int:
        return len(self.monic.coeffs) - 1

    @property
    def element(self) -> Poly:
        return self.monic * self.unit

    def divides(self, f: Poly) -> bool:
        return (f % self.monic).is_zero()

    def __str__(self) -> str:
        return str(self.element)


def is_prime_element(f: Poly) -> bool:
    """True iff f generates a prime ideal (unit times monic irreducible)."""
    if f.is_zero() or f.is_unit():
        return False
    return is_irreducible(f)


def factor(f: Poly) -> list[tuple[PrimeElem, int]]:
    """Factor nonzero f as unit * prod monic^e; unit carried by the first factor.

    Returns [(PrimeElem, multiplicity)] sorted by (degree, coeffs); every
    ``PrimeElem`` has unit 1 except that ``factor_unit`` reports the overall
    unit separately via :func:`factor_with_unit`.
    """
    return factor_with_unit(f)[1]


def factor_with_unit(f: Poly) -> tuple[int, list[tuple[PrimeElem, int]]]:
    """(unit, [(PrimeElem monic, multiplicity)]) with exact recomposition."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.leading_coeff
    if f.is_unit():
        return unit, []
    fm = f.monic()
    out = [
        (PrimeElem(Poly(f.q, p), 1), k)
        for p, k in K.factor_monic(f.q, fm.coeffs)
    ]
    return unit, out


def all_polys(q: int, max_degree: int, include_zero: bool = True):
    """Yield every polynomial of degree <= max_degree in degree-lex order."""
    if include_zero:
        yield Poly.zero(q)
    for d in range(max_degree + 1):
        for tail in itertools.product(range(q), repeat=d):
            for lc in range(1, q):
                yield Poly(q, tail + (lc,))


def monic_irreducibles(q: int, degree: int):
    """Yield the monic irreducibles of exact degree in lex order."""
    for tail in itertools.product(range(q), repeat=degree):
        f = Poly(q, tail + (1,))
        if is_irreducible(f):
            yield f


def enumerate_offsets(q: int):
    """Canonical search order: zero, then degree-then-lex on coefficient tuples."""
    yield Poly.zero(q)
    d = 0
    while True:
        for tail in itertools.product(range(q), repeat=d):
            for lc in range(1, q):
                yield Poly(q, tail + (lc,))
        d += 1
