"""Gröbner bases in reduction rings by critical-pair/completion."""

from .buchberger import gb, ideals_equal, is_member
from .core import cp, is_reducible, mntcr, normal_form, order_below, reduce_step
from .domains import Integers, IntegersMod, PolynomialRing, Rationals

__all__ = [
    "Integers",
    "IntegersMod",
    "PolynomialRing",
    "Rationals",
    "cp",
    "gb",
    "ideals_equal",
    "is_member",
    "is_reducible",
    "mntcr",
    "normal_form",
    "order_below",
    "reduce_step",
]

__version__ = "0.1.0"
