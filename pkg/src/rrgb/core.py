"""Reduction-ring contract and the domain-generic reduction engine.

A ring is any :class:`ReductionRing`; elements are plain immutable Python
values (``Fraction``, ``int`` or tuples of monomials) that carry no ring
identity of their own.  Every operation here takes the ambient ring
explicitly.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from .errors import DescriptorMismatchError, ZeroReducerError

Element = Any


class ReductionRing(ABC):
    """A commutative unital ring with a Noetherian strict order and a
    computable one-step reduction.

    Subclasses are immutable descriptors; equal descriptors describe the
    same ring.
    """

    kind: str = ""
    finite: bool = False

    @property
    @abstractmethod
    def zero(self) -> Element: ...

    @property
    @abstractmethod
    def one(self) -> Element: ...

    @abstractmethod
    def contains(self, x) -> bool:
        """True if ``x`` is a canonical element of this ring."""

    @abstractmethod
    def add(self, x, y): ...

    @abstractmethod
    def neg(self, x): ...

    @abstractmethod
    def mul(self, x, y): ...

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def eq(self, x, y) -> bool:
        return x == y

    @abstractmethod
    def below(self, x, y) -> bool:
        """Strict order: ``x`` is smaller than ``y``."""

    @abstractmethod
    def reduce_by(self, a, c):
        """Canonical one-step reduction of ``a`` by nonzero ``c``.

        Returns ``(multiplier, result)`` or None when ``a`` is irreducible
        by ``c``.
        """

    @abstractmethod
    def common_reducibles(self, c1, c2) -> tuple:
        """Minimal non-trivial common reducibles of nonzero ``c1``, ``c2``."""

    def lift_candidates(self, c1, c2) -> tuple:
        """Coefficients placed on the lcm monomial when this ring is the
        coefficient domain of a polynomial ring."""
        return self.common_reducibles(c1, c2)

    def elements(self) -> Iterable:
        raise NotImplementedError(f"{self} is not finite")

    def elements_below(self, a) -> Iterable:
        """Every element strictly below ``a``; finite for enumerable rings."""
        return (x for x in self.elements() if self.below(x, a))

    @abstractmethod
    def render(self, x) -> str: ...

    def check(self, x):
        if not self.contains(x):
            raise DescriptorMismatchError(f"{x!r} is not a canonical element of {self}")
        return x


@dataclass(frozen=True)
class ReductionStep:
    reducer: Element
    multiplier: Element
    result: Element


@dataclass(frozen=True)
class CriticalPair:
    first: Element
    second: Element
    source: Element
    reducers: tuple = (None, None)


def minimal_per_pair(candidates, reduce, c1, c2, drop_trivial):
    """Scan ``candidates`` in ascending order and keep, for every distinct
    pair of canonical reducts, the first (smallest) common reducible.

    With ``drop_trivial`` the candidates whose two reducts coincide are
    skipped, since such a peak is joined by the empty chain.
    """
    seen = set()
    kept = []
    for a in candidates:
        s1 = reduce(a, c1)
        if s1 is None:
            continue
        s2 = reduce(a, c2)
        if s2 is None:
            continue
        key = (s1[1], s2[1])
        if drop_trivial and key[0] == key[1]:
            continue
        if key in seen:
            continue
        seen.add(key)
        kept.append(a)
    return tuple(kept)


def _nonzero(c, ring):
    if ring.is_zero(c):
        raise ZeroReducerError("reducer must be nonzero")


def order_below(x, y, ring: ReductionRing) -> bool:
    ring.check(x)
    ring.check(y)
    return ring.below(x, y)


def reduce_step(a, c, ring: ReductionRing) -> Optional[ReductionStep]:
    ring.check(a)
    ring.check(c)
    _nonzero(c, ring)
    found = ring.reduce_by(a, c)
    if found is None:
        return None
    m, b = found
    return ReductionStep(reducer=c, multiplier=m, result=b)


def is_reducible(a, C: Sequence, ring: ReductionRing) -> bool:
    return any(ring.reduce_by(a, c) is not None for c in C)


STRATEGIES = ("lowest", "highest")


def normal_form(a, C: Sequence, ring: ReductionRing, strategy: str = "lowest",
                steps: Optional[list] = None):
    """Reduce ``a`` modulo ``C`` until irreducible.

    ``strategy`` picks the order in which reducers are tried: ascending
    basis index (``"lowest"``) or descending (``"highest"``).  When a list
    is passed as ``steps`` every :class:`ReductionStep` taken is appended.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    for c in C:
        _nonzero(c, ring)
    order = list(C) if strategy == "lowest" else list(reversed(C))
    while True:
        for c in order:
            found = ring.reduce_by(a, c)
            if found is not None:
                m, a = found
                if steps is not None:
                    steps.append(ReductionStep(c, m, a))
                break
        else:
            return a


def mntcr(c1, c2, ring: ReductionRing) -> tuple:
    _nonzero(c1, ring)
    _nonzero(c2, ring)
    return ring.common_reducibles(c1, c2)


def cp(ck, cl, ring: ReductionRing, k=None, l=None) -> tuple:
    """Critical pairs of ``ck`` and ``cl``, one per common reducible."""
    pairs = []
    for a in mntcr(ck, cl, ring):
        first = ring.reduce_by(a, ck)
        second = ring.reduce_by(a, cl)
        if first is None or second is None:
            raise AssertionError(f"{ring.render(a)} is not a common reducible")
        pairs.append(CriticalPair(first[1], second[1], a, (k, l)))
    return tuple(pairs)


def integer_key(x: int):
    """Order key on Z: magnitude first, positive before negative."""
    return (abs(x), x < 0)
