from dataclasses import dataclass
from functools import lru_cache

from ..core import ReductionRing, integer_key, minimal_per_pair


def symmetric(r, n):
    """Representative of residue ``r`` in ``(-n/2, n/2]``."""
    return r if 2 * r <= n else r - n


@lru_cache(maxsize=None)
def _best_step(n, a, c):
    best = None
    for m in range(n):
        b = (a - m * c) % n
        key = integer_key(symmetric(b, n))
        if best is None or key < best[0]:
            best = (key, m, b)
    _, m, b = best
    if b == a:
        return None
    return m, b


@dataclass(frozen=True)
class IntegersMod(ReductionRing):
    """Z/n with residues stored in ``0..n-1``.

    The order compares symmetric representatives the way :class:`Integers`
    compares integers.  The canonical reduction searches all ``n``
    multipliers for the smallest reachable residue.
    """

    modulus: int
    kind = "integer-quotient-ring"
    finite = True

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def key(self, x):
        return integer_key(symmetric(x, self.modulus))

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def mul(self, x, y):
        return x * y % self.modulus

    def below(self, x, y):
        return self.key(x) < self.key(y)

    def reduce_by(self, a, c):
        # the smallest reachable residue is below a unless a is already it
        return _best_step(self.modulus, a, c)

    def elements(self):
        return sorted(range(self.modulus), key=self.key)

    def common_reducibles(self, c1, c2):
        return minimal_per_pair(self.elements(), self.reduce_by, c1, c2, drop_trivial=True)

    def lift_candidates(self, c1, c2):
        return minimal_per_pair(self.elements(), self.reduce_by, c1, c2, drop_trivial=False)

    def render(self, x):
        return str(x)

    def __str__(self):
        return f"Z/{self.modulus}"
