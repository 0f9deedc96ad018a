"""Matrices over F_q[T], elementary factors, words, and exact verification.

An elementary factor E_ij(f) is the identity plus f in off-diagonal position
(i, j); indices are 1-based to match the usual E_12 notation (serialization
uses the same convention).  A ``Word`` multiplies out left-to-right to the
matrix it represents, which is the final currency of the whole package: every
pipeline emits a word and every word is re-verified by exact product replay.

Determinants are computed exactly (cofactor expansion; n stays small here),
but only on demand: construction-time checking would make word replay
quadratically expensive, so ``SLMatrix.assert_sl`` is called at trust
boundaries (deserialization, generation, pipeline entry) and in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import VerificationError
from .gf_poly import Poly

Side = Literal["left", "right"]


@dataclass(frozen=True)
class ElemFactor:
    """E_ij(f): identity plus f at (i, j), 1-based, i != j."""

    i: int
    j: int
    f: Poly

    def __post_init__(self):
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise ValueError(f"bad elementary indices ({self.i}, {self.j})")

    def inverse(self) -> "ElemFactor":
        return ElemFactor(self.i, self.j, -self.f)

    def to_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "f": self.f.to_list()}

    @classmethod
    def from_dict(cls, q: int, d: dict) -> "ElemFactor":
        return cls(int(d["i"]), int(d["j"]), Poly.from_list(q, d["f"]))


@dataclass(frozen=True)
class SidedFactor:
    """An elementary factor together with the side it was applied on.

    Sides are pipeline bookkeeping only; flattening removes them.  Factors are
    recorded in application order: left factors L1, L2, ... mean
    L2*(L1*A) and right factors R1, R2, ... mean (A*R1)*R2.
    """

    side: Side
    factor: ElemFactor


@dataclass(frozen=True)
class SLMatrix:
    """n x n matrix over F_q[T]; the SL condition is checked via assert_sl."""

    q: int
    n: int
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if self.n < 1 or len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries shape does not match n")

    @classmethod
    def identity(cls, q: int, n: int) -> "SLMatrix":
        one, zero = Poly.one(q), Poly.zero(q)
        return cls(q, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[Iterable[Poly]]) -> "SLMatrix":
        entries = tuple(tuple(row) for row in rows)
        return cls(q, len(entries), entries)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Poly, ...]:
        return tuple(self.entries[i][j] for i in range(self.n))

    def __mul__(self, other: "SLMatrix") -> "SLMatrix":
        if self.q != other.q or self.n != other.n:
            raise ValueError("dimension or field mismatch")
        n = self.n
        zero = Poly.zero(self.q)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return SLMatrix(self.q, n, tuple(rows))

    def apply_left(self, e: ElemFactor) -> "SLMatrix":
        """E_ij(f) * self: row i += f * row j."""
        i, j, f = e.i - 1, e.j - 1, e.f
        self._check_indices(e)
        rows = list(self.entries)
        if f:
            rows[i] = tuple(rows[i][k] + f * rows[j][k] for k in range(self.n))
        return SLMatrix(self.q, self.n, tuple(rows))

    def apply_right(self, e: ElemFactor) -> "SLMatrix":
        """self * E_ij(f): col j += f * col i."""
        i, j, f = e.i - 1, e.j - 1, e.f
        self._check_indices(e)
        if not f:
            return self
        rows = [list(r) for r in self.entries]
        for k in range(self.n):
            rows[k][j] = rows[k][j] + f * rows[k][i]
        return SLMatrix(self.q, self.n, tuple(tuple(r) for r in rows))

    def _check_indices(self, e: ElemFactor) -> None:
        if e.i > self.n or e.j > self.n:
            raise ValueError(f"factor indices ({e.i},{e.j}) exceed n={self.n}")

    def det(self) -> Poly:
        """Exact determinant by cofactor expansion."""
        n = self.n
        q = self.q

        def minor_det(rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
            if len(rows) == 1:
                return self.entries[rows[0]][cols[0]]
            acc = Poly.zero(q)
            r = rows[0]
            for idx, c in enumerate(cols):
                a = self.entries[r][c]
                if not a:
                    continue
                sub = minor_det(rows[1:], cols[:idx] + cols[idx + 1 :])
                term = a * sub
                acc = acc + term if idx % 2 == 0 else acc - term
            return acc

        return minor_det(tuple(range(n)), tuple(range(n)))

    def is_sl(self) -> bool:
        return self.det().is_one()

    def assert_sl(self) -> "SLMatrix":
        if not self.is_sl():
            raise ValueError(f"determinant is {self.det()}, not 1")
        return self

    def max_degree(self) -> int:
        degs = [len(p.coeffs) - 1 for row in self.entries for p in row if p.coeffs]
        return max(degs, default=0)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "entries": [[p.to_list() for p in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SLMatrix":
        q, n = int(d["q"]), int(d["n"])
        rows = tuple(
            tuple(Poly.from_list(q, c) for c in row) for row in d["entries"]
        )
        m = cls(q, n, rows)
        return m.assert_sl()

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]" for row in self.entries)


@dataclass(frozen=True)
class Word:
    """Ordered sequence of elementary factors; product is left-to-right."""

    factors: tuple[ElemFactor, ...]

    @classmethod
    def of(cls, factors: Iterable[ElemFactor]) -> "Word":
        return cls(tuple(factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.factors + other.factors)

    def inverse(self) -> "Word":
        return Word(tuple(f.inverse() for f in reversed(self.factors)))

    def to_list(self) -> list[dict]:
        return [f.to_dict() for f in self.factors]

    @classmethod
    def from_list(cls, q: int, items: list[dict]) -> "Word":
        return cls(tuple(ElemFactor.from_dict(q, d) for d in items))


def elem_to_matrix(e: ElemFactor, q: int, n: int) -> SLMatrix:
    """The n x n matrix of E_ij(f)."""
    return SLMatrix.identity(q, n).apply_right(e)


def word_product(w: Word, q: int, n: int) -> SLMatrix:
    """Exact left-to-right product of the word's factors."""
    m = SLMatrix.identity(q, n)
    for e in w.factors:
        m = m.apply_right(e)
    return m


def verify(w: Word, a: SLMatrix) -> bool:
    """True iff the word multiplies out to a, entry by entry."""
    return word_product(w, a.q, a.n) == a


def flatten(
    a: SLMatrix,
    left: Iterable[SidedFactor],
    right: Iterable[SidedFactor],
    final_word: Word = Word(()),
) -> Word:
    """Turn a recorded transformation (prod left)*A*(prod right) = A_final
    into a verified word for A itself.

    ``left`` and ``right`` are in application order; ``final_word`` is a word
    for A_final (empty when the pipeline drove A all the way to the identity).
    Uses E_ij(f)^{-1} = E_ij(-f).  Raises VerificationError on mismatch, which
    signals a pipeline bug rather than bad input.
    """
    lw = [sf.factor.inverse() for sf in left]
    rw = [sf.factor.inverse() for sf in reversed(list(right))]
    w = Word(tuple(lw) + final_word.factors + tuple(rw))
    if not verify(w, a):
        raise VerificationError("flattened word does not reproduce the input matrix")
    return w


def split_sided(factors: Iterable[SidedFactor]) -> tuple[list[SidedFactor], list[SidedFactor]]:
    """Partition a mixed application-ordered transcript into (left, right) lists."""
    left = [sf for sf in factors if sf.side == "left"]
    right = [sf for sf in factors if sf.side == "right"]
    return left, right
