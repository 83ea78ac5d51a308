"""Terms, the Lex order, order ideals, minimal generators, and stability tests.

Variables are x_1 < x_2 < ... < x_n.  A term is identified with its exponent
vector, so x_1^2*x_3 in three variables is the tuple (2, 0, 1).  Variable
indices in the public API are 1-based throughout, matching the subscripts.

Everything here is immutable and pure; these predicates are the ground truth
the Bar Code and counting machinery is checked against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

LESS, EQUAL, GREATER = -1, 0, 1

_ESCALIER_CAP = 10**6  # refuse to materialize absurdly large staircases
_EXPONENT_CAP = 10**6  # no meaningful input gets anywhere near this

_TERM_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Term:
    """A monomial, stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.exponents:
            raise ValueError("term needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def deg(self, h: int) -> int:
        """Exponent of x_h, h 1-based."""
        return self.exponents[h - 1]

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def lex_key(self) -> tuple[int, ...]:
        # Lex with x_1 < ... < x_n compares the highest-index differing
        # exponent, i.e. the reversed exponent vector lexicographically.
        return tuple(reversed(self.exponents))

    def mul(self, other: Term) -> Term:
        self._check_arity(other)
        return Term(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int) -> Term:
        e = list(self.exponents)
        e[i - 1] += 1
        return Term(tuple(e))

    def predecessor(self, i: int) -> Term:
        """The term tau/x_i; requires x_i | tau."""
        if self.exponents[i - 1] == 0:
            raise ValueError(f"x{i} does not divide {self}")
        e = list(self.exponents)
        e[i - 1] -= 1
        return Term(tuple(e))

    def divides(self, other: Term) -> bool:
        self._check_arity(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def _check_arity(self, other: Term):
        if self.n != other.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n}")

    def __lt__(self, other: Term) -> bool:
        self._check_arity(other)
        return self.lex_key() < other.lex_key()

    def __le__(self, other: Term) -> bool:
        self._check_arity(other)
        return self.lex_key() <= other.lex_key()

    def __gt__(self, other: Term) -> bool:
        return not self <= other

    def __ge__(self, other: Term) -> bool:
        return not self < other

    def __str__(self) -> str:
        return format_term(self)

    def __repr__(self) -> str:
        return f"Term({self.exponents!r})"


def term(*exponents: int) -> Term:
    """Shorthand constructor: term(1, 0, 2) is x_1*x_3^2."""
    return Term(tuple(exponents))


def parse_term(text: str, n: int | None = None) -> Term:
    """Parse 'x1^a*x2^b*...' (unit exponents omitted) or '1' for the unit.

    The arity is inferred from the largest variable index unless given.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty term")
    exps: dict[int, int] = {}
    if text != "1":
        for factor in text.split("*"):
            m = _TERM_FACTOR.match(factor.strip())
            if not m:
                raise ValueError(f"malformed term factor {factor!r}")
            idx = int(m.group(1))
            if idx < 1:
                raise ValueError(f"variable index must be >= 1 in {factor!r}")
            exps[idx] = exps.get(idx, 0) + int(m.group(2) or 1)
            if exps[idx] > _EXPONENT_CAP:
                raise ValueError(f"exponent of x{idx} exceeds the cap")
    arity = n if n is not None else max(exps, default=1)
    if exps and max(exps) > arity:
        raise ValueError(f"variable x{max(exps)} exceeds arity {arity}")
    return Term(tuple(exps.get(i, 0) for i in range(1, arity + 1)))


def format_term(t: Term) -> str:
    parts = []
    for i, e in enumerate(t.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def lex_compare(t1: Term, t2: Term) -> int:
    """Lex order induced by x_1 < ... < x_n; returns -1, 0 or 1."""
    t1._check_arity(t2)
    k1, k2 = t1.lex_key(), t2.lex_key()
    if k1 < k2:
        return LESS
    if k1 > k2:
        return GREATER
    return EQUAL


def p_operator(t: Term, i: int) -> Term:
    """Truncation keeping only the exponents of x_i, ..., x_n."""
    if not 1 <= i <= t.n:
        raise ValueError(f"variable index {i} out of range 1..{t.n}")
    return Term((0,) * (i - 1) + t.exponents[i - 1:])


def min_var(t: Term) -> int:
    """Index of the smallest variable dividing t; undefined for the unit."""
    for i, e in enumerate(t.exponents, start=1):
        if e > 0:
            return i
    raise ValueError("the unit term has no minimal variable")


def _check_uniform(terms: Iterable[Term]) -> int | None:
    arity = None
    for t in terms:
        if arity is None:
            arity = t.n
        elif t.n != arity:
            raise ValueError("mixed arities in term set")
    return arity


def is_order_ideal(terms: Iterable[Term]) -> bool:
    """True iff the set is closed under taking predecessors (divisor-closed)."""
    ts = set(terms)
    _check_uniform(ts)
    for t in ts:
        for i, e in enumerate(t.exponents, start=1):
            if e > 0 and t.predecessor(i) not in ts:
                return False
    return True


@dataclass(frozen=True)
class OrderIdeal:
    """A finite divisor-closed set of terms (a Groebner escalier)."""

    terms: frozenset[Term]
    n: int

    def __post_init__(self):
        for t in self.terms:
            if t.n != self.n:
                raise ValueError("term arity differs from ambient arity")
        if not is_order_ideal(self.terms):
            raise ValueError("set is not closed under division")

    @classmethod
    def of(cls, terms: Iterable[Term], n: int | None = None) -> OrderIdeal:
        ts = frozenset(terms)
        arity = _check_uniform(ts)
        if arity is None and n is None:
            raise ValueError("empty order ideal needs an explicit arity")
        return cls(ts, n if n is not None else arity)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, t: Term) -> bool:
        return t in self.terms

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def sorted(self) -> list[Term]:
        return sorted(self.terms, key=Term.lex_key)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held by its minimal generating set."""

    generators: frozenset[Term]
    n: int

    @classmethod
    def of(cls, terms: Iterable[Term], n: int | None = None) -> MonomialIdeal:
        """Build from any generating set; redundant generators are dropped."""
        ts = set(terms)
        arity = _check_uniform(ts)
        if arity is None and n is None:
            raise ValueError("empty monomial ideal needs an explicit arity")
        minimal = {t for t in ts if not any(s != t and s.divides(t) for s in ts)}
        return cls(frozenset(minimal), n if n is not None else arity)

    def __contains__(self, t: Term) -> bool:
        # membership in the semigroup ideal: divisible by some generator
        return any(g.divides(t) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def sorted(self) -> list[Term]:
        return sorted(self.generators, key=Term.lex_key)


def minimal_generators(N: OrderIdeal) -> MonomialIdeal:
    """The monomial basis of the ideal whose escalier is N.

    These are the terms outside N all of whose predecessors lie in N.
    """
    if not N.terms:
        return MonomialIdeal(frozenset([Term((0,) * N.n)]), N.n)
    candidates = set()
    for t in N:
        for i in range(1, N.n + 1):
            s = t.times_var(i)
            if s not in N:
                candidates.add(s)
    gens = {
        c
        for c in candidates
        if all(c.predecessor(i) in N for i in range(1, N.n + 1) if c.deg(i) > 0)
    }
    return MonomialIdeal(frozenset(gens), N.n)


def border_set(N: OrderIdeal) -> frozenset[Term]:
    """B(I) = {x_h * tau : tau in N} \\ N, or {1} for the empty escalier."""
    if not N.terms:
        return frozenset([Term((0,) * N.n)])
    out = set()
    for t in N:
        for i in range(1, N.n + 1):
            s = t.times_var(i)
            if s not in N:
                out.add(s)
    return frozenset(out)


def escalier(I: MonomialIdeal) -> OrderIdeal:
    """The complement N(I), finite exactly when I is zero-dimensional."""
    bounds = []
    for i in range(1, I.n + 1):
        pure = [g.deg(i) for g in I.generators if g.degree == g.deg(i)]
        if not pure:
            raise ValueError(f"no pure power of x{i}: the escalier is infinite")
        bounds.append(min(pure))
    size = 1
    for b in bounds:
        size *= b
    if size > _ESCALIER_CAP:
        raise ValueError(f"escalier bounding box has {size} cells, above the cap")
    terms = {
        Term(e) for e in product(*(range(b) for b in bounds)) if Term(e) not in I
    }
    return OrderIdeal(frozenset(terms), I.n)


def _stability_moves(t: Term, n: int, strongly: bool) -> Iterator[Term]:
    if t.is_unit():
        return
    if strongly:
        sources = [i for i in range(1, n + 1) if t.deg(i) > 0]
    else:
        sources = [min_var(t)]
    for i in sources:
        for j in range(i + 1, n + 1):
            yield t.predecessor(i).times_var(j)


def is_stable(I: MonomialIdeal) -> bool:
    """Ideal membership of x_j*tau/min(tau) for generators tau, x_j > min(tau)."""
    if not I.generators:
        raise ValueError("empty generator set")
    return all(
        moved in I for g in I.generators for moved in _stability_moves(g, I.n, False)
    )


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Ideal membership of tau*x_j/x_i for generators tau, x_i | tau, x_j > x_i."""
    if not I.generators:
        raise ValueError("empty generator set")
    return all(
        moved in I for g in I.generators for moved in _stability_moves(g, I.n, True)
    )
