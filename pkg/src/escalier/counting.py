"""Census pipelines: how many stable / strongly stable zero-dimensional ideals
have a prescribed constant affine Hilbert value p.

Two variables reduce to sums of distinct-part partition counts.  Three
variables run over bar lists (p, h, k): the k = 1 column is again the
two-variable count, and for k > 1 each admissible shape contributes the
x^p coefficient of a determinantal norm generating function, with a first-part
bound vector chosen so the bound never cuts into the norm-p slice.  Counts are
plain Python integers, so there is no overflow anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .partitions import IntPartition, count_Q, enumerate_distinct, minimal_sum
from .qpolys import gf_shifted, gf_strict

STABLE = "stable"
STRONGLY_STABLE = "strongly_stable"


@dataclass(frozen=True)
class ShapeCount:
    shape: IntPartition
    count: int


@dataclass(frozen=True)
class CensusRow:
    bar_list: tuple[int, ...]
    shapes: tuple[ShapeCount, ...]
    subtotal: int


@dataclass(frozen=True)
class BarListCensus:
    p: int
    n: int
    kind: str
    rows: tuple[CensusRow, ...]

    @property
    def total(self) -> int:
        return sum(row.subtotal for row in self.rows)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "vars": self.n,
            "class": self.kind.replace("_", "-"),
            "rows": [
                {
                    "bar_list": list(row.bar_list),
                    "shapes": [
                        {"shape": list(sc.shape), "count": sc.count}
                        for sc in row.shapes
                    ],
                    "subtotal": row.subtotal,
                }
                for row in self.rows
            ],
            "total": self.total,
        }


def _check_kind(kind: str):
    if kind not in (STABLE, STRONGLY_STABLE):
        raise ValueError(f"unknown ideal class {kind!r}")


def max_h_2vars(p: int) -> int:
    """Largest h with h(h+1)/2 <= p, i.e. floor((-1 + sqrt(1+8p)) / 2)."""
    if p < 1:
        raise ValueError("p must be positive")
    return (isqrt(1 + 8 * p) - 1) // 2


def count_2vars(p: int) -> int:
    """Stable (equivalently strongly stable) ideals in two variables."""
    return sum(count_Q(p, i) for i in range(1, max_h_2vars(p) + 1))


def census_2vars(p: int, kind: str = STABLE) -> BarListCensus:
    _check_kind(kind)
    rows = tuple(
        CensusRow((p, h), (ShapeCount((h,), count_Q(p, h)),), count_Q(p, h))
        for h in range(1, max_h_2vars(p) + 1)
    )
    return BarListCensus(p, 2, kind, rows)


def bar_lists_3vars(p: int) -> list[tuple[int, int, int]]:
    """All feasible bar lists (p, h, k), k ascending then h ascending.

    k is capped by the cube bound k^3 + 3k^2 + 2k <= 6p and h runs from the
    forced minimum k(k+1)/2 up to the last value whose distinct-part shapes
    still fit a norm-p staircase.
    """
    if p < 1:
        raise ValueError("p must be positive")
    out = []
    k = 1
    while k * (k + 1) * (k + 2) <= 6 * p:
        h = k * (k + 1) // 2
        while h <= p:
            feasible = any(
                minimal_sum(shape) <= p for shape in enumerate_distinct(h, k)
            )
            if not feasible:
                break
            out.append((p, h, k))
            h += 1
        k += 1
    return out


def a_vector_stable(beta: IntPartition, p: int) -> tuple[int, ...]:
    """First-part bounds for unshifted shapes: the largest top-left entry a
    norm-p partition of this shape can carry, then consecutive descents."""
    a1 = (
        p
        - beta[0] * (beta[0] - 1) // 2
        - sum(b * (b + 1) // 2 for b in beta[1:])
    )
    return tuple(a1 - i for i in range(len(beta)))


def count_stable_barlist(
    p: int, h: int, k: int, truncate: bool = True
) -> tuple[int, tuple[ShapeCount, ...]]:
    """Stable ideals with bar list (p, h, k), plus the per-shape split."""
    if (p, h, k) not in set(bar_lists_3vars(p)):
        raise ValueError(f"({p}, {h}, {k}) is not a feasible bar list")
    if k == 1:
        q = count_Q(p, h)
        return q, (ShapeCount((h,), q),)
    shapes = []
    for beta in enumerate_distinct(h, k):
        a = a_vector_stable(beta, p)
        if a[-1] < 1:
            shapes.append(ShapeCount(beta, 0))
            continue
        poly = gf_strict(
            beta,
            (0,) * k,
            a,
            (1,) * k,
            c=1,
            d=1,
            truncate_at=p if truncate else None,
        )
        shapes.append(ShapeCount(beta, poly.coefficient(p)))
    return sum(sc.count for sc in shapes), tuple(shapes)


def count_stable_3vars(p: int, truncate: bool = True) -> BarListCensus:
    rows = []
    for (pp, h, k) in bar_lists_3vars(p):
        subtotal, shapes = count_stable_barlist(pp, h, k, truncate)
        rows.append(CensusRow((pp, h, k), shapes, subtotal))
    return BarListCensus(p, 3, STABLE, tuple(rows))


def a_vectors_strongly(lam: tuple[int, ...], p: int) -> list[tuple[int, ...]]:
    """All admissible exact first-part vectors for a shifted shape.

    The budget M = p - sum of staircase minima caps every entry; parts then
    strictly increase from a_r up to a_1 within their windows.
    """
    r = len(lam)
    staircases = [lam[0] - 1] + [lam[j] - j for j in range(1, r)]
    M = p - sum(c * (c + 1) // 2 for c in staircases)
    out: list[tuple[int, ...]] = []

    def rec(i: int, prev: int | None, acc: list[int]):
        if i == 0:
            out.append(tuple(reversed(acc)))
            return
        lo = lam[r - 1] - r + 1 if i == r else prev + 1
        for v in range(lo, M - i + 2):
            rec(i - 1, v, acc + [v])

    rec(r, None, [])
    return out


def count_sstable_barlist(
    p: int, h: int, k: int, truncate: bool = True
) -> tuple[int, tuple[ShapeCount, ...]]:
    """Strongly stable ideals with bar list (p, h, k), per-shape split."""
    if (p, h, k) not in set(bar_lists_3vars(p)):
        raise ValueError(f"({p}, {h}, {k}) is not a feasible bar list")
    if k == 1:
        q = count_Q(p, h)
        return q, (ShapeCount((h,), q),)
    shapes = []
    for alpha in enumerate_distinct(h, k):
        lam = tuple(i + 1 + alpha[i] - 1 for i in range(k))
        acc = 0
        for a in a_vectors_strongly(lam, p):
            poly = gf_shifted(
                lam,
                a,
                (1,) * k,
                c=1,
                d=0,
                truncate_at=p if truncate else None,
            )
            acc += poly.coefficient(p)
        shapes.append(ShapeCount(alpha, acc))
    return sum(sc.count for sc in shapes), tuple(shapes)


def count_sstable_3vars(p: int, truncate: bool = True) -> BarListCensus:
    rows = []
    for (pp, h, k) in bar_lists_3vars(p):
        subtotal, shapes = count_sstable_barlist(pp, h, k, truncate)
        rows.append(CensusRow((pp, h, k), shapes, subtotal))
    return BarListCensus(p, 3, STRONGLY_STABLE, tuple(rows))


def closed_form_shape22(p: int) -> int:
    """Shifted row-strict shape-(2,2) partitions of norm p: floor(((p-1)^2+6)/12)."""
    if p < 1:
        raise ValueError("p must be positive")
    return ((p - 1) ** 2 + 6) // 12


def census(p: int, n: int, kind: str, truncate: bool = True) -> BarListCensus:
    """Dispatch by variable count; the two-variable classes coincide."""
    _check_kind(kind)
    if n == 2:
        return census_2vars(p, kind)
    if n == 3:
        if kind == STABLE:
            return count_stable_3vars(p, truncate)
        return count_sstable_3vars(p, truncate)
    raise ValueError("censuses are implemented for 2 and 3 variables")
