"""Concrete reduction rings: Q, Z, Z/n and polynomial tuples over them."""

from .integers import Integers
from .polynomials import MONOMIAL_ORDERS, PolynomialRing, leading_monomial, monomial_lcm
from .quotient import IntegersMod
from .rationals import Rationals

__all__ = [
    "Integers",
    "IntegersMod",
    "MONOMIAL_ORDERS",
    "PolynomialRing",
    "Rationals",
    "leading_monomial",
    "monomial_lcm",
]
