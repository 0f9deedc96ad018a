"""Low-level coefficient arithmetic for F_q[T].

A polynomial is a tuple of ints in [0, q), constant term first, with no
trailing zeros; the zero polynomial is the empty tuple.  Everything here is
private plumbing for :mod:`slnelem.gf_poly`; the functions trust their inputs
to be canonical.

Small operands run through plain Python loops.  Large ones (the decomposition
pipeline routinely handles degrees in the hundreds) are routed through numpy:
multiplication via ``np.convolve``, division via Newton/Barrett inversion of
the reversed divisor, and Frobenius iteration (the F_q-linear map g -> g^q
mod f) via float64 matrix-vector products, which stay exact because every
intermediate value is bounded by deg * (q-1)^2 << 2^53.
"""

from __future__ import annotations

import functools
import random

import numpy as np

# Pure-Python loops win below this operand size; numpy wins above.
_NP_THRESHOLD = 24

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def validate_q(q: int) -> None:
    if q not in _SMALL_PRIMES:
        raise ValueError(f"q must be a prime in {_SMALL_PRIMES}, got {q!r}")


def trim(coeffs) -> tuple[int, ...]:
    """Drop trailing zeros, returning a canonical tuple."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(q: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, bi in enumerate(b):
        c[i] = (c[i] + bi) % q
    return trim(c)


def neg(q: int, a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((q - ai) % q for ai in a)


def sub(q: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    c = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        c[i] = (c[i] - bi) % q
    return trim(c)


def scalar_mul(q: int, s: int, a: tuple[int, ...]) -> tuple[int, ...]:
    s %= q
    if s == 0:
        return ()
    if s == 1:
        return a
    return tuple((s * ai) % q for ai in a)


def mul(q: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if len(a) + len(b) < _NP_THRESHOLD:
        c = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    c[i + j] += ai * bj
        return trim(v % q for v in c)
    c = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % q
    return trim(c.tolist())


def _divmod_school(q, a, b):
    inv_lc = pow(b[-1], -1, q)
    r = list(a)
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        coef = (r[i + db] * inv_lc) % q
        if coef:
            quot[i] = coef
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] - coef * bj) % q
    return trim(quot), trim(r[:db])


def _inv_series(q: int, b: list[int], k: int) -> list[int]:
    # Newton iteration for b^{-1} mod x^k; requires b[0] != 0.
    v = [pow(b[0], -1, q)]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        bv = np.convolve(np.asarray(b[:prec], dtype=np.int64), np.asarray(v, dtype=np.int64)) % q
        t = (-bv[:prec]) % q
        t[0] = (t[0] + 2) % q
        vv = np.convolve(np.asarray(v, dtype=np.int64), t) % q
        v = vv[:prec].tolist()
    return v[:k]


def divmod_(q: int, a: tuple[int, ...], b: tuple[int, ...]):
    """Quotient and remainder with deg r < deg b.  b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    if len(a) < 2 * _NP_THRESHOLD:
        return _divmod_school(q, a, b)
    k = len(a) - len(b) + 1
    rb = list(reversed(b))
    ra = list(reversed(a))[:k]
    v = _inv_series(q, rb, k)
    rq = np.convolve(np.asarray(ra, dtype=np.int64), np.asarray(v, dtype=np.int64)) % q
    quot = trim(rq[:k].tolist()[::-1])
    r = np.asarray(a, dtype=np.int64).copy()
    if quot:
        qb = np.convolve(np.asarray(quot, dtype=np.int64), np.asarray(b, dtype=np.int64))
        r[: len(qb)] -= qb
    return quot, trim((r % q).tolist()[: len(b) - 1])


def mod(q: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return divmod_(q, a, b)[1]


def _gcd2(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # F_2 fast path: polynomials as bit-packed ints.
    x = sum(1 << i for i, c in enumerate(a) if c)
    y = sum(1 << i for i, c in enumerate(b) if c)
    while y:
        dy = y.bit_length()
        dx = x.bit_length()
        while dx >= dy:
            x ^= y << (dx - dy)
            dx = x.bit_length()
        x, y = y, x
    return tuple((x >> i) & 1 for i in range(x.bit_length()))


def gcd(q: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Monic gcd; gcd(0, 0) = 0."""
    if not a and not b:
        return ()
    if q == 2:
        return _gcd2(a, b)
    if max(len(a), len(b)) < _NP_THRESHOLD:
        while b:
            a, b = b, _divmod_school(q, a, b)[1]
        if a[-1] != 1:
            a = scalar_mul(q, pow(a[-1], -1, q), a)
        return a
    inv = [0] + [pow(c, -1, q) for c in range(1, q)]
    u = np.asarray(a, dtype=np.int64).copy()
    v = np.asarray(b, dtype=np.int64).copy()
    lu, lv = len(a), len(b)
    while lv:
        if lu < lv:
            u, v, lu, lv = v, u, lv, lu
        ilc = inv[int(v[lv - 1])]
        while lu >= lv:
            coef = (int(u[lu - 1]) * ilc) % q
            if coef:
                u[lu - lv : lu] = (u[lu - lv : lu] - coef * v[:lv]) % q
            lu -= 1
            while lu and not u[lu - 1]:
                lu -= 1
            if not lu:
                break
        u, v, lu, lv = v, u, lv, lu
    g = trim(u[:lu].tolist())
    if g and g[-1] != 1:
        g = scalar_mul(q, pow(g[-1], -1, q), g)
    return g


def resultant(q: int, f: tuple[int, ...], g: tuple[int, ...]) -> int:
    """Res(f, g) in F_q via the Euclidean recurrence; 0 iff not coprime.

    For monic f of degree d this equals the norm of g from F_q[T]/f down to
    F_q, which is how the residue symbol avoids powmods with q^d-sized
    exponents.
    """
    if not f or not g:
        return 0
    if len(f) == 1:
        return pow(f[0], len(g) - 1, q)
    if len(g) == 1:
        return pow(g[0], len(f) - 1, q)
    if q == 2:
        # over F_2 a nonzero resultant can only be 1
        return 1 if _gcd2(f, g) == (1,) else 0
    inv = [0] + [pow(c, -1, q) for c in range(1, q)]
    u = np.asarray(f, dtype=np.int64).copy()
    v = np.asarray(g, dtype=np.int64).copy()
    lu, lv = len(f), len(g)
    res = 1
    while lv > 1:
        if lu < lv:
            if ((lu - 1) * (lv - 1)) % 2:
                res = (res * (q - 1)) % q
            u, v, lu, lv = v, u, lv, lu
        da, db = lu - 1, lv - 1
        lc_v = int(v[lv - 1])
        ilc = inv[lc_v]
        while lu >= lv:
            coef = (int(u[lu - 1]) * ilc) % q
            if coef:
                u[lu - lv : lu] = (u[lu - lv : lu] - coef * v[:lv]) % q
            lu -= 1
            while lu and not u[lu - 1]:
                lu -= 1
            if not lu:
                return 0
        sign = q - 1 if (da * db) % 2 else 1
        res = (res * sign * pow(lc_v, da - (lu - 1), q)) % q
        u, v, lu, lv = v, u, lv, lu
    return (res * pow(int(v[0]), lu - 1, q)) % q


def xgcd(q: int, a: tuple[int, ...], b: tuple[int, ...]):
    """(g, s, t) with s*a + t*b = g, g monic (or zero for a = b = 0)."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        quot, rem = divmod_(q, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(q, s0, mul(q, quot, s1))
        t0, t1 = t1, sub(q, t0, mul(q, quot, t1))
    if r0 and r0[-1] != 1:
        ilc = pow(r0[-1], -1, q)
        r0 = scalar_mul(q, ilc, r0)
        s0 = scalar_mul(q, ilc, s0)
        t0 = scalar_mul(q, ilc, t0)
    return r0, s0, t0


def invert(q: int, a: tuple[int, ...], m: tuple[int, ...]) -> tuple[int, ...]:
    g, s, _ = xgcd(q, a, m)
    if len(g) != 1:
        raise ZeroDivisionError("inverse does not exist (inputs not coprime)")
    return mod(q, s, m)


def evaluate(q: int, a: tuple[int, ...], x: int) -> int:
    y = 0
    for c in reversed(a):
        y = (y * x + c) % q
    return y


def derivative(q: int, a: tuple[int, ...]) -> tuple[int, ...]:
    return trim(((i * a[i]) % q) for i in range(1, len(a)))


class BarrettContext:
    """Cached Newton inverse for repeated reduction modulo a fixed f."""

    def __init__(self, q: int, f: tuple[int, ...]):
        self.q = q
        self.f = f
        self.n = len(f) - 1
        self._fa = np.asarray(f, dtype=np.int64)
        self._rb = list(reversed(f))
        self._v: list[int] | None = None
        self._v_prec = 0

    def _inv_to(self, k: int) -> list[int]:
        if self._v is None or self._v_prec < k:
            prec = max(k, 2 * max(self.n, 1))
            self._v = _inv_series(self.q, self._rb, prec)
            self._v_prec = prec
        return self._v[:k]

    def reduce(self, c: tuple[int, ...]) -> tuple[int, ...]:
        q, n = self.q, self.n
        if len(c) <= n:
            return c
        if len(c) < 2 * _NP_THRESHOLD:
            return _divmod_school(q, c, self.f)[1]
        k = len(c) - n
        v = np.asarray(self._inv_to(k), dtype=np.int64)
        ra = np.asarray(c[::-1][:k], dtype=np.int64)
        rq = np.convolve(ra, v)[:k] % q
        quot = trim(rq.tolist()[::-1])
        r = np.asarray(c, dtype=np.int64).copy()
        if quot:
            qb = np.convolve(np.asarray(quot, dtype=np.int64), self._fa)
            r[: len(qb)] -= qb
        return trim((r % q).tolist()[:n])

    def mulmod(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return self.reduce(mul(self.q, a, b))

    def powmod(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e < 0:
            a = invert(self.q, a, self.f)
            e = -e
        result: tuple[int, ...] = (1,)
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return self.reduce(result)


@functools.lru_cache(maxsize=128)
def barrett(q: int, f: tuple[int, ...]) -> BarrettContext:
    return BarrettContext(q, f)


def powmod(q: int, a: tuple[int, ...], e: int, m: tuple[int, ...]) -> tuple[int, ...]:
    if not m:
        raise ZeroDivisionError("zero modulus")
    if len(m) == 1:
        return ()
    return barrett(q, m).powmod(a, e)


class FrobeniusData:
    """Frobenius iteration g -> g^q mod f as exact float64 linear algebra.

    Requires monic f with deg f >= 2.  Matrix entries lie in [0, q), so a
    matvec accumulates at most n*(q-1)^2 < 2^53 and float64 stays exact.
    """

    def __init__(self, q: int, f: tuple[int, ...]):
        self.q = q
        self.f = f
        n = len(f) - 1
        self.n = n
        self.barrett = barrett(q, f)
        # x^n mod f, used to reduce the single overflow coefficient on shift
        self._top = np.asarray([(-c) % q for c in f[:n]], dtype=np.float64)
        u = self.barrett.powmod((0, 1), q)
        # U = multiplication-by-u matrix; column j holds u * x^j mod f
        U = np.zeros((n, n), dtype=np.float64)
        col = np.zeros(n, dtype=np.float64)
        col[: len(u)] = u
        U[:, 0] = col
        for j in range(1, n):
            hi = col[n - 1]
            col = np.roll(col, 1)
            col[0] = 0.0
            if hi:
                col = (col + hi * self._top) % q
            U[:, j] = col
        # Phi = Frobenius matrix; column j holds x^{jq} mod f = u^j mod f
        Phi = np.zeros((n, n), dtype=np.float64)
        w = np.zeros(n, dtype=np.float64)
        w[0] = 1.0
        Phi[:, 0] = w
        for j in range(1, n):
            w = (U @ w) % q
            Phi[:, j] = w
        self.Phi = Phi

    def x_vector(self) -> np.ndarray:
        v = np.zeros(self.n, dtype=np.float64)
        if self.n > 1:
            v[1] = 1.0
        return v

    def frob(self, v: np.ndarray) -> np.ndarray:
        return (self.Phi @ v) % self.q

    def poly_of(self, v: np.ndarray) -> tuple[int, ...]:
        return trim(int(c) for c in v)


@functools.lru_cache(maxsize=32)
def frobenius(q: int, f: tuple[int, ...]) -> FrobeniusData:
    return FrobeniusData(q, f)


@functools.lru_cache(maxsize=None)
def first_irreducible(q: int, d: int) -> tuple[int, ...]:
    """First monic irreducible of degree d in degree-lex order."""
    import itertools as _it

    if d == 1:
        return (0, 1)
    for tail in _it.product(range(q), repeat=d):
        if is_irreducible(q, tail + (1,)):
            return tail + (1,)
    raise AssertionError("no irreducible found; unreachable")


@functools.lru_cache(maxsize=None)
def gf_ext_tables(q: int, d: int):
    """(LOG, EXP) tables for F_{q^d} with base-q digit codes, d >= 2.

    LOG[0] is the sentinel 2N and EXP is zero from index 2N-3 on, so
    EXP[LOG[a] + LOG[b]] multiplies codes branch-free, zeros included.
    Only meant for the small fields used by root filters.
    """
    N = q**d
    modulus = first_irreducible(q, d)
    powers = [q**i for i in range(d)]

    def code_of(p: tuple[int, ...]) -> int:
        return sum(c * powers[i] for i, c in enumerate(p))

    def mul_code(a: int, b: int) -> int:
        pa = trim((a // powers[i]) % q for i in range(d))
        pb = trim((b // powers[i]) % q for i in range(d))
        return code_of(mod(q, mul(q, pa, pb), modulus))

    # find a generator of the cyclic group of order N - 1
    for g in range(2, N):
        order = 1
        acc = g
        while acc != 1:
            acc = mul_code(acc, g)
            order += 1
        if order == N - 1:
            break
    else:
        raise AssertionError("no generator found; unreachable")

    LOG = np.zeros(N, dtype=np.int64)
    LOG[0] = 2 * N
    EXP = np.zeros(4 * N + 2, dtype=np.int64)
    acc = 1
    for i in range(N - 1):
        LOG[acc] = i
        EXP[i] = acc
        EXP[i + (N - 1)] = acc
        acc = mul_code(acc, g)
    return LOG, EXP


def gf_add_codes(q: int, d: int, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Digitwise base-q addition of F_{q^d} codes (vectorized)."""
    out = np.zeros_like(A)
    for i in range(d):
        pw = q**i
        out += (((A // pw) % q + (B // pw) % q) % q) * pw
    return out


def gf_neg_codes(q: int, d: int, A: np.ndarray) -> np.ndarray:
    out = np.zeros_like(A)
    for i in range(d):
        pw = q**i
        out += ((q - (A // pw) % q) % q) * pw
    return out


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible_small(q: int, f: tuple[int, ...]) -> bool:
    n = len(f) - 1
    h: tuple[int, ...] = (0, 1)
    for _ in range(n // 2):
        h = powmod(q, h, q, f)
        if len(gcd(q, sub(q, h, (0, 1)), f)) != 1:
            return False
    return True


def is_irreducible(q: int, f: tuple[int, ...]) -> bool:
    """Irreducibility of f over F_q, deg f >= 1; leading units are ignored."""
    n = len(f) - 1
    if n < 1:
        raise ValueError("irreducibility is undefined for constants")
    if n == 1:
        return True
    if f[0] == 0:
        return False  # divisible by T
    if f[-1] != 1:
        f = scalar_mul(q, pow(f[-1], -1, q), f)
    for x in range(q):
        if evaluate(q, f, x) == 0:
            return False
    if n < _NP_THRESHOLD:
        return _is_irreducible_small(q, f)
    fd = frobenius(q, f)
    # Rabin: x^{q^n} = x mod f, and gcd(x^{q^{n/t}} - x, f) = 1 for primes t | n
    checkpoints = sorted({n // t for t in prime_factors(n)})
    x_vec = fd.x_vector()
    v = x_vec.copy()
    k = 0
    for cp in checkpoints:
        while k < cp:
            v = fd.frob(v)
            k += 1
        if len(gcd(q, sub(q, fd.poly_of(v), (0, 1)), f)) != 1:
            return False
    while k < n:
        v = fd.frob(v)
        k += 1
    return np.array_equal(v, x_vec)


def _pth_root(q: int, a: tuple[int, ...]) -> tuple[int, ...]:
    # a = g(T^q) over F_q; coefficients are fixed by Frobenius, so the root
    # just takes every q-th coefficient.
    return tuple(a[i] for i in range(0, len(a), q))


def _squarefree_part(q: int, g: tuple[int, ...]) -> tuple[int, ...]:
    return divmod_(q, g, gcd(q, g, derivative(q, g)))[0]


def _ddf_squarefree(q: int, f: tuple[int, ...]):
    """Distinct-degree decomposition of squarefree monic f: yields (d, product)."""
    current = f
    if len(current) - 1 == 0:
        return
    fd = frobenius(q, current) if len(current) - 1 >= 2 else None
    v = fd.x_vector() if fd is not None else None
    d = 0
    while len(current) - 1 > 0:
        d += 1
        if 2 * d > len(current) - 1:
            yield len(current) - 1, current
            return
        v = fd.frob(v)
        # v = x^{q^d} mod f; gcds against the shrinking "current" stay correct
        # because every factor of current divides f
        g_d = gcd(q, sub(q, fd.poly_of(v), (0, 1)), current)
        if len(g_d) > 1:
            yield d, g_d
            current = divmod_(q, current, g_d)[0]


def _equal_degree_split(q: int, f: tuple[int, ...], d: int, rng) -> tuple[int, ...]:
    # Cantor-Zassenhaus splitter: f = product of >= 2 distinct irreducibles of
    # degree d; returns a proper monic factor.
    n = len(f) - 1
    bar = barrett(q, f)
    while True:
        h = trim([rng.randrange(q) for _ in range(n)])
        if not h:
            continue
        if q == 2:
            t = h
            acc = h
            for _ in range(d - 1):
                t = bar.mulmod(t, t)
                acc = add(q, acc, t)
            g = gcd(q, acc, f)
        else:
            t = bar.powmod(h, (q**d - 1) // 2)
            g = gcd(q, sub(q, t, (1,)), f)
        if 0 < len(g) - 1 < n:
            return g


def _split_same_degree(q: int, prod: tuple[int, ...], d: int, rng) -> list[tuple[int, ...]]:
    out = []
    stack = [prod]
    while stack:
        cur = stack.pop()
        if len(cur) - 1 == d:
            out.append(cur)
        else:
            piece = _equal_degree_split(q, cur, d, rng)
            stack.append(piece)
            stack.append(divmod_(q, cur, piece)[0])
    return out


def factor_monic(q: int, f: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Factor monic f (deg >= 1) into [(monic irreducible, multiplicity)].

    Squarefree reduction + distinct-degree decomposition + Cantor-Zassenhaus.
    Splitting randomness is seeded from the base-q integer code of f, so the
    result is deterministic.
    """
    if not f or f[-1] != 1:
        raise ValueError("factor_monic expects a nonzero monic polynomial")
    code = 0
    for c in reversed(f):
        code = code * q + c
    rng = random.Random(code)

    out: dict[tuple[int, ...], int] = {}
    stack: list[tuple[tuple[int, ...], int]] = [(f, 1)]
    while stack:
        g, mult = stack.pop()
        if len(g) - 1 == 0:
            continue
        gp = derivative(q, g)
        if not gp:
            stack.append((_pth_root(q, g), mult * q))
            continue
        core = _squarefree_part(q, g)
        residual = g
        for d, prod_d in _ddf_squarefree(q, core):
            for p in _split_same_degree(q, prod_d, d, rng):
                k = 0
                while True:
                    quot, rem = divmod_(q, residual, p)
                    if rem:
                        break
                    residual = quot
                    k += 1
                out[p] = out.get(p, 0) + k * mult
        if len(residual) - 1 >= 1:
            # factors whose multiplicity is divisible by the characteristic
            stack.append((residual, mult))
    return sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0]))


def distinct_factor_degrees(q: int, f: tuple[int, ...], reject_degree=None):
    """Degrees of the distinct irreducible factors of monic f (deg >= 1).

    With ``reject_degree`` given, returns None as soon as some factor degree d
    satisfies reject_degree(d); used as a fast negative filter that skips the
    equal-degree splitting entirely.
    """
    degrees: set[int] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if len(g) - 1 == 0:
            continue
        gp = derivative(q, g)
        if not gp:
            stack.append(_pth_root(q, g))
            continue
        core = _squarefree_part(q, g)
        for d, _prod in _ddf_squarefree(q, core):
            if reject_degree is not None and reject_degree(d):
                return None
            degrees.add(d)
        residual = g
        while True:
            quot, rem = divmod_(q, residual, core)
            if rem:
                break
            residual = quot
        if len(residual) - 1 >= 1:
            stack.append(residual)
    return degrees
