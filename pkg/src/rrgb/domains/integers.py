from dataclasses import dataclass
from math import lcm

from ..core import ReductionRing, integer_key, minimal_per_pair


def by_magnitude(bound):
    """0, 1, -1, 2, -2, ... up to magnitude ``bound``: ascending order on Z."""
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


@dataclass(frozen=True)
class Integers(ReductionRing):
    """The integers, ordered by magnitude with positives first on ties.

    Reduction by ``c`` moves an element to the smallest member of its coset
    modulo ``c``, so irreducible elements lie in ``(-|c|/2, |c|/2]``.
    """

    kind = "integers"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def below(self, x, y):
        return integer_key(x) < integer_key(y)

    def reduce_by(self, a, c):
        d = c if c > 0 else -c
        r = a % d
        if 2 * r > d:
            r -= d
        # r is the least element of the coset, so r == a means irreducible
        if r == a:
            return None
        return (a - r) // c, r

    def common_reducibles(self, c1, c2):
        window = 2 * lcm(abs(c1), abs(c2))
        return minimal_per_pair(by_magnitude(window), self.reduce_by, c1, c2, drop_trivial=True)

    def lift_candidates(self, c1, c2):
        window = 2 * lcm(abs(c1), abs(c2))
        return minimal_per_pair(by_magnitude(window), self.reduce_by, c1, c2, drop_trivial=False)

    def elements_below(self, a):
        return (x for x in by_magnitude(abs(a)) if self.below(x, a))

    def render(self, x):
        return str(x)

    def __str__(self):
        return "Z"
