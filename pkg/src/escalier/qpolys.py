"""Exact integer-coefficient polynomials, Gaussian binomials, polynomial
determinants, and the two determinantal norm generating functions.

Polynomials are dense coefficient lists over Python integers (index = degree,
trailing zeros stripped).  A polynomial may carry a truncation degree T, in
which case all arithmetic happens modulo x^(T+1); the counting pipelines use
this to cap work at the one coefficient they consume, and truncated results
agree with full arithmetic up to degree T.

Gaussian binomials are built by exact division, one factor (1-x^m)/(1-x^i) at
a time (each partial product is itself a Gaussian binomial, so every division
is exact and any nonzero remainder is a bug, not an input problem).

The generating-function entries can involve monomial prefactors x^N with N
negative; determinants are therefore computed after factoring the minimal
power out of each row, and the global power is reapplied at the end.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence


class IntPoly:
    """Dense univariate polynomial over arbitrary-precision integers."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Sequence[int] = (), trunc: int | None = None):
        cs = list(coeffs)
        if trunc is not None:
            if trunc < 0:
                raise ValueError("truncation degree must be non-negative")
            del cs[trunc + 1:]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.trunc = trunc

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, trunc: int | None = None) -> IntPoly:
        return cls((), trunc)

    @classmethod
    def const(cls, v: int, trunc: int | None = None) -> IntPoly:
        return cls((v,), trunc)

    @classmethod
    def x_power(cls, k: int, trunc: int | None = None) -> IntPoly:
        if k < 0:
            raise ValueError("monomials have non-negative degree")
        return cls((0,) * k + (1,), trunc)

    # -- basic structure -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def low_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient (zero polynomial: -1)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    @staticmethod
    def _join_trunc(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        return IntPoly(cs, self._join_trunc(self.trunc, other.trunc))

    def __sub__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [self.coefficient(k) - other.coefficient(k) for k in range(n)]
        return IntPoly(cs, self._join_trunc(self.trunc, other.trunc))

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs], self.trunc)

    def __mul__(self, other: IntPoly) -> IntPoly:
        trunc = self._join_trunc(self.trunc, other.trunc)
        if self.is_zero() or other.is_zero():
            return IntPoly.zero(trunc)
        limit = len(self.coeffs) + len(other.coeffs) - 1
        if trunc is not None:
            limit = min(limit, trunc + 1)
        cs = [0] * limit
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= limit:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= limit:
                    break
                cs[i + j] += a * b
        return IntPoly(cs, trunc)

    def scale(self, v: int) -> IntPoly:
        return IntPoly([v * c for c in self.coeffs], self.trunc)

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k; negative k divides and requires divisibility."""
        if k >= 0:
            return IntPoly((0,) * k + self.coeffs, self.trunc)
        if any(self.coeffs[:-k]):
            raise ValueError(f"polynomial is not divisible by x^{-k}")
        return IntPoly(self.coeffs[-k:], self.trunc)

    def truncated(self, trunc: int | None) -> IntPoly:
        return IntPoly(self.coeffs, trunc)

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Exact quotient; raises if the division leaves a remainder.

        Untruncated operands use classical long division.  Truncated ones use
        power-series division from the constant term up, which needs the
        divisor to start with a unit (all divisors here are 1 - x^i).
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        trunc = self._join_trunc(self.trunc, other.trunc)
        if trunc is None:
            rem = list(self.coeffs)
            dcs = other.coeffs
            dn = len(dcs) - 1
            lead = dcs[-1]
            qn = len(rem) - 1 - dn
            if qn < 0:
                if any(rem):
                    raise ValueError("inexact polynomial division")
                return IntPoly.zero()
            q = [0] * (qn + 1)
            for k in range(qn, -1, -1):
                head = rem[k + dn]
                if head % lead:
                    raise ValueError("inexact polynomial division")
                q[k] = head // lead
                if q[k]:
                    for j, dc in enumerate(dcs):
                        rem[k + j] -= q[k] * dc
            if any(rem):
                raise ValueError("inexact polynomial division")
            return IntPoly(q)
        unit = other.coefficient(0)
        if unit not in (1, -1):
            raise ValueError("truncated division needs a unit constant term")
        q = [0] * (trunc + 1)
        for k in range(trunc + 1):
            acc = self.coefficient(k)
            for j in range(1, min(k, other.degree) + 1):
                acc -= other.coefficient(j) * q[k - j]
            q[k] = acc * unit  # divide by +-1
        return IntPoly(q, trunc)

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    # -- io ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> IntPoly:
        return cls([int(c) for c in doc["coeffs"]])

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


def one_minus_x_power(m: int, trunc: int | None = None) -> IntPoly:
    """The bracket [m] = 1 - x^m."""
    if m == 0:
        return IntPoly.zero(trunc)
    if m < 0:
        raise ValueError("bracket index must be non-negative")
    return IntPoly((1,) + (0,) * (m - 1) + (-1,), trunc)


@lru_cache(maxsize=4096)
def gauss_binomial(n: int, k: int, trunc: int | None = None) -> IntPoly:
    """The Gaussian polynomial [n]! / ([k]! [n-k]!) in the variable x.

    Total by convention: 1 for k = 0 (any n), 0 whenever k < 0 or n < k.
    Cached: the counting pipelines request the same handful of entries over
    and over while sweeping first-part vectors.  IntPoly is immutable, so
    sharing results is safe.
    """
    if k == 0:
        return IntPoly.const(1, trunc)
    if k < 0 or n < k:
        return IntPoly.zero(trunc)
    k = min(k, n - k)
    result = IntPoly.const(1, trunc)
    for i in range(1, k + 1):
        result = result * one_minus_x_power(n - i + 1, trunc)
        result = result.exact_div(one_minus_x_power(i, trunc))
    return result


def det(matrix: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Exact determinant of a square polynomial matrix.

    Cofactor expansion (memoized over column subsets) up to 6x6 and whenever
    entries are truncated; fraction-free Bareiss elimination otherwise, where
    every division is exact over the integers.
    """
    r = len(matrix)
    if r == 0 or any(len(row) != r for row in matrix):
        raise ValueError("determinant needs a non-empty square matrix")
    truncated = any(e.trunc is not None for row in matrix for e in row)
    if r <= 6 or truncated:
        return _det_expansion(matrix)
    return _det_bareiss([list(row) for row in matrix])


def _det_expansion(matrix) -> IntPoly:
    r = len(matrix)
    cache: dict[int, IntPoly] = {}

    def minor(colmask: int) -> IntPoly:
        if colmask == 0:
            return IntPoly.const(1)
        got = cache.get(colmask)
        if got is not None:
            return got
        row = r - bin(colmask).count("1")
        acc = IntPoly.zero()
        sign = 1
        for col in range(r):
            if not colmask & (1 << col):
                continue
            entry = matrix[row][col]
            if entry:
                term = entry * minor(colmask & ~(1 << col))
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        cache[colmask] = acc
        return acc

    return minor((1 << r) - 1)


def _det_bareiss(m: list[list[IntPoly]]) -> IntPoly:
    r = len(m)
    sign = 1
    prev = IntPoly.const(1)
    for k in range(r - 1):
        if m[k][k].is_zero():
            for swap in range(k + 1, r):
                if not m[swap][k].is_zero():
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return IntPoly.zero()
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
        prev = m[k][k]
    result = m[r - 1][r - 1]
    return result if sign > 0 else -result


def _choose2(m: int) -> int:
    # binomial(m, 2) extended to all integers: m(m-1)/2
    return m * (m - 1) // 2


def _laurent_det(
    entries: dict, r: int, trunc: int | None, extra_shift: int = 0
) -> IntPoly:
    """Determinant of a matrix whose (s,t) entry is x^shift * poly, times a
    global x^extra_shift.  Shifts may be negative; the minimal one is factored
    out of each row, the determinant is taken over plain polynomials, and the
    collected power is reapplied at the end (with a divisibility check when it
    is negative).  Truncation is widened so the final cut stays exact."""
    bases = []
    for s in range(r):
        shifts = [entries[(s, t)][0] for t in range(r) if (s, t) in entries]
        bases.append(min(shifts) if shifts else 0)
    total = sum(bases) + extra_shift
    inner_trunc = None if trunc is None else max(trunc - total, 0)
    matrix = []
    for s in range(r):
        row = []
        for t in range(r):
            e = entries.get((s, t))
            if e is None:
                row.append(IntPoly.zero(inner_trunc))
            else:
                sh, poly = e
                row.append(poly.shift(sh - bases[s]).truncated(inner_trunc))
        matrix.append(row)
    return det(matrix).truncated(None).shift(total).truncated(trunc)


def _check_monotone(name: str, values: Sequence[int]):
    if any(a < b for a, b in zip(values, values[1:])):
        raise ValueError(f"{name} must be weakly decreasing: {values}")


def gf_strict(
    lam: Sequence[int],
    mu: Sequence[int],
    a: Sequence[int],
    b: Sequence[int],
    c: int,
    d: int,
    truncate_at: int | None = None,
) -> IntPoly:
    """Norm generating function for (c,d)-plane partitions of shape lam/mu
    whose first part in row i is at most a[i-1] and last part at least b[i-1].

    The coefficient of x^p counts the partitions of norm p.  The a/b bound
    vectors must satisfy the two admissibility chains; violations raise.
    """
    lam, mu, a, b = tuple(lam), tuple(mu), tuple(a), tuple(b)
    r = len(lam)
    if r == 0 or not len(mu) == len(a) == len(b) == r:
        raise ValueError("lam, mu, a, b must share a positive length")
    _check_monotone("outer shape", lam)
    _check_monotone("inner shape", mu)
    if any(l < m for l, m in zip(lam, mu)):
        raise ValueError("inner shape must sit inside the outer shape")
    for i in range(r - 1):
        if a[i] - c * (mu[i] - mu[i + 1]) + (1 - d) < a[i + 1]:
            raise ValueError(f"first-part bounds fail the chain at row {i + 1}")
        if b[i] + c * (lam[i] - lam[i + 1]) + (1 - d) < b[i + 1]:
            raise ValueError(f"last-part bounds fail the chain at row {i + 1}")
    entries = {}
    for s in range(1, r + 1):
        for t in range(1, r + 1):
            low = lam[s - 1] - s - mu[t - 1] + t
            poly = gauss_binomial(
                (1 - c) * (lam[s - 1] - mu[t - 1]) - d * (s - t)
                + a[t - 1] - b[s - 1] + c,
                low,
                truncate_at,
            )
            if poly.is_zero():
                continue
            power = (
                b[s - 1] * low
                + (1 - c - d) * (_choose2(mu[t - 1] + s - t) - _choose2(mu[t - 1]))
                + c * _choose2(low)
            )
            entries[(s - 1, t - 1)] = (power, poly)
    return _laurent_det(entries, r, truncate_at)


def gf_shifted(
    lam: Sequence[int],
    a: Sequence[int],
    b: Sequence[int],
    c: int,
    d: int,
    truncate_at: int | None = None,
) -> IntPoly:
    """Norm generating function for shifted (c,d)-plane partitions of shape lam
    whose first part in row i equals a[i-1] and last part is at least b[i-1]."""
    lam, a, b = tuple(lam), tuple(a), tuple(b)
    r = len(lam)
    if r == 0 or not len(a) == len(b) == r:
        raise ValueError("lam, a, b must share a positive length")
    _check_monotone("shape", lam)
    if lam[r - 1] < r:
        raise ValueError(f"shifted shape needs lam[{r}] >= {r}")
    for i in range(r - 1):
        if a[i] - c - d < a[i + 1]:
            raise ValueError(f"first parts fail the chain at row {i + 1}")
        if b[i] + c * (lam[i] - lam[i + 1]) + (1 - d) < b[i + 1]:
            raise ValueError(f"last-part bounds fail the chain at row {i + 1}")
    power = sum(
        b[i] * (lam[i] - (i + 1)) + a[i] + c * _choose2(lam[i] - (i + 1))
        for i in range(r)
    )
    entries = {}
    for s in range(1, r + 1):
        for t in range(1, r + 1):
            poly = gauss_binomial(
                (lam[s - 1] - s) * (1 - c) + (1 - c - d) * (s - t)
                + a[t - 1] - b[s - 1],
                lam[s - 1] - s,
                truncate_at,
            )
            if not poly.is_zero():
                entries[(s - 1, t - 1)] = (0, poly)
    return _laurent_det(entries, r, truncate_at, extra_shift=power)
