"""Brute-force ground truth: exhaustive order-ideal enumeration, definitional
stability counts, and the four-variable conjecture probe.

Order ideals of a given size are generated canonically: grow from {1} and only
ever add a border term Lex-greater than everything present.  Removing the
Lex-maximum of any order ideal in reverse shows each one is produced exactly
once, so no deduplication pass is needed.

The probe compares per-bar-list definitional counts against brute-force counts
of strict / shifted solid partitions.  It records evidence about the n = 4
correspondence; it proves nothing and is deliberately not wired into any
acceptance gate.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass

from .barcode import bar_list, encode
from .counting import STABLE, STRONGLY_STABLE
from .monomials import (
    OrderIdeal,
    Term,
    is_stable,
    is_strongly_stable,
    minimal_generators,
)
from .partitions import (
    SolidPartition,
    enumerate_distinct,
    enumerate_plane_partitions,
    validate_solid,
)

DEFAULT_CAPS = {1: 2000, 2: 24, 3: 12, 4: 8}
_CAP_ENV_PREFIX = "ESCALIER_ORACLE_CAP_N"


def oracle_cap(n: int) -> int:
    """Enumeration cap for n variables; override via ESCALIER_ORACLE_CAP_N<n>."""
    env = os.environ.get(f"{_CAP_ENV_PREFIX}{n}")
    if env is not None:
        return int(env)
    return DEFAULT_CAPS.get(n, 6)


@dataclass(frozen=True)
class EscalierEnumeration:
    n: int
    p: int
    items: tuple[OrderIdeal, ...]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def _frozen_order_ideals(n: int, p: int):
    unit = Term((0,) * n)
    out: list[frozenset[Term]] = []

    def eligible(N: frozenset[Term]) -> list[Term]:
        border = set()
        for t in N:
            for i in range(1, n + 1):
                s = t.times_var(i)
                if s not in N:
                    border.add(s)
        return [
            c
            for c in border
            if all(c.predecessor(i) in N for i in range(1, n + 1) if c.deg(i) > 0)
        ]

    def grow(N: frozenset[Term], top: Term):
        if len(N) == p:
            out.append(N)
            return
        for g in sorted(eligible(N), key=Term.lex_key):
            if g > top:
                grow(N | {g}, g)

    grow(frozenset([unit]), unit)
    return out


def enumerate_order_ideals(n: int, p: int, cap: int | None = None) -> EscalierEnumeration:
    """Every order ideal of cardinality p in n variables, exactly once."""
    if n < 1 or p < 1:
        raise ValueError("need n >= 1 and p >= 1")
    limit = cap if cap is not None else oracle_cap(n)
    if p > limit:
        raise ValueError(f"p={p} exceeds the n={n} enumeration cap {limit}")
    items = tuple(OrderIdeal(N, n) for N in _frozen_order_ideals(n, p))
    return EscalierEnumeration(n, p, items)


def _passes(N: OrderIdeal, kind: str) -> bool:
    gens = minimal_generators(N)
    return is_stable(gens) if kind == STABLE else is_strongly_stable(gens)


def count_by_definition(n: int, p: int, kind: str, cap: int | None = None) -> int:
    """Definitional census: filter the full enumeration by the stability test."""
    if kind not in (STABLE, STRONGLY_STABLE):
        raise ValueError(f"unknown ideal class {kind!r}")
    return sum(
        1 for N in enumerate_order_ideals(n, p, cap) if _passes(N, kind)
    )


def census_by_definition(
    n: int, p: int, kind: str, cap: int | None = None
) -> Counter:
    """Counts keyed by the bar list of each surviving escalier's Bar Code."""
    if kind not in (STABLE, STRONGLY_STABLE):
        raise ValueError(f"unknown ideal class {kind!r}")
    per: Counter = Counter()
    for N in enumerate_order_ideals(n, p, cap):
        if _passes(N, kind):
            per[bar_list(encode(N.terms))] += 1
    return per


# -- solid partition enumeration for the n = 4 probe ------------------------


def _enumerate_strict_solids(rho: tuple[tuple[int, ...], ...], norm: int) -> list[SolidPartition]:
    """Strict solid partitions whose layer shapes are the rows of rho."""
    cells = [
        (l, i, j)
        for l in range(len(rho))
        for i in range(len(rho[l]))
        for j in range(rho[l][i])
    ]
    values: dict[tuple[int, int, int], int] = {}
    out = []

    def rec(idx: int, rem: int):
        if idx == len(cells):
            if rem == 0:
                layers = tuple(
                    tuple(
                        tuple(values[(l, i, j)] for j in range(rho[l][i]))
                        for i in range(len(rho[l]))
                    )
                    for l in range(len(rho))
                )
                out.append(SolidPartition("strict", layers))
            return
        l, i, j = cells[idx]
        hi = rem - (len(cells) - idx - 1)  # everything left needs at least 1
        for prev in ((l, i, j - 1), (l, i - 1, j), (l - 1, i, j)):
            if prev in values:
                hi = min(hi, values[prev] - 1)
        for v in range(hi, 0, -1):
            values[(l, i, j)] = v
            rec(idx + 1, rem - v)
        values.pop((l, i, j), None)

    rec(0, norm)
    return out


def _enumerate_shifted_solids(pi: tuple[tuple[int, ...], ...], norm: int) -> list[SolidPartition]:
    """Shifted solid partitions of shape pi (pi rows on the diagonal)."""
    # cell (l, i, j): layer l, absolute row i >= l, absolute column j >= i
    cells = []
    for l in range(len(pi)):
        for off, width in enumerate(pi[l]):
            i = l + off
            cells.extend((l, i, j) for j in range(i, i + width))
    values: dict[tuple[int, int, int], int] = {}
    out = []

    def rec(idx: int, rem: int):
        if idx == len(cells):
            if rem == 0:
                layers = []
                for l in range(len(pi)):
                    layer = tuple(
                        tuple(values[(l, l + off, j)] for j in range(l + off, l + off + width))
                        for off, width in enumerate(pi[l])
                    )
                    layers.append(layer)
                out.append(SolidPartition("shifted", tuple(layers)))
            return
        l, i, j = cells[idx]
        hi = rem - (len(cells) - idx - 1)
        if (l, i, j - 1) in values:
            hi = min(hi, values[(l, i, j - 1)] - 1)  # rows strict
        if (l, i - 1, j) in values:
            hi = min(hi, values[(l, i - 1, j)])  # columns weak
        if (l - 1, i, j) in values:
            hi = min(hi, values[(l - 1, i, j)])  # stacking weak
        for v in range(hi, 0, -1):
            values[(l, i, j)] = v
            rec(idx + 1, rem - v)
        values.pop((l, i, j), None)

    rec(0, norm)
    return out


def _partition_side_count(bar: tuple[int, int, int, int], kind: str) -> int:
    p, h, k, l = bar
    total = 0
    for shape in enumerate_distinct(k, l):
        if kind == STABLE:
            for pp in enumerate_plane_partitions(
                shape, shifted=False, c=1, d=1, first=None,
                last_min=(1,) * len(shape), norm=h,
            ):
                for solid in _enumerate_strict_solids(pp.rows, p):
                    if not validate_solid(solid):
                        raise AssertionError(f"enumerated invalid solid {solid}")
                    total += 1
        else:
            lam = tuple(i + 1 + shape[i] - 1 for i in range(len(shape)))
            for pp in enumerate_plane_partitions(
                lam, shifted=True, c=1, d=0, first=None,
                last_min=(1,) * len(lam), norm=h,
            ):
                for solid in _enumerate_shifted_solids(pp.rows, p):
                    if not validate_solid(solid):
                        raise AssertionError(f"enumerated invalid solid {solid}")
                    total += 1
    return total


@dataclass(frozen=True)
class ProbeRow:
    bar_list: tuple[int, ...]
    ideal_count: int
    partition_count: int

    @property
    def agree(self) -> bool:
        return self.ideal_count == self.partition_count


@dataclass(frozen=True)
class ConjectureReport:
    p: int
    kind: str
    rows: tuple[ProbeRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(row.agree for row in self.rows)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "vars": 4,
            "class": self.kind.replace("_", "-"),
            "rows": [
                {
                    "bar_list": list(r.bar_list),
                    "ideals": r.ideal_count,
                    "partitions": r.partition_count,
                    "agree": r.agree,
                }
                for r in self.rows
            ],
            "all_agree": self.all_agree,
        }


def conjecture_probe(p: int, kind: str, cap: int | None = None) -> ConjectureReport:
    """Evidence table for the four-variable correspondence at one value of p.

    Each row compares the definitional ideal count for a bar list against the
    matching solid-partition count.  Disagreement is recorded, not raised: for
    n >= 4 the correspondence is conjectural and the array definitions leave
    the index ranges open to interpretation.
    """
    ideal_side = census_by_definition(4, p, kind, cap)
    bars = set(ideal_side)
    partition_side = {}
    for h in range(1, p + 1):
        for k in range(1, h + 1):
            for l in range(1, k + 1):
                bar = (p, h, k, l)
                count = _partition_side_count(bar, kind)
                if count:
                    partition_side[bar] = count
    bars |= set(partition_side)
    rows = tuple(
        ProbeRow(bar, ideal_side.get(bar, 0), partition_side.get(bar, 0))
        for bar in sorted(bars, key=lambda b: (b[3], b[2], b[1]))
    )
    return ConjectureReport(p, kind, rows)
