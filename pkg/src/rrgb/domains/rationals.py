from dataclasses import dataclass
from fractions import Fraction

from ..core import ReductionRing

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Rationals(ReductionRing):
    """Exact rationals as a field.

    Zero lies below every nonzero element and nonzero elements are pairwise
    incomparable, so every nonzero element reduces to zero in one step.
    """

    kind = "field-of-rationals"

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

    def contains(self, x):
        return isinstance(x, Fraction)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def below(self, x, y):
        return x == 0 and y != 0

    def reduce_by(self, a, c):
        if a == 0:
            return None
        return a / c, ZERO

    def common_reducibles(self, c1, c2):
        return (ONE,)

    def render(self, x):
        return str(x)

    def __str__(self):
        return "Q"
