"""Text syntax for ring descriptors and elements.

Descriptors::

    Q | Z | Z/<n> | poly(<coeff>; <var>,<var>,...[; lex|deglex|degrevlex])

Elements are sums of products of numbers, ``p/q`` literals, variables,
powers and parenthesised subexpressions.  ``*`` may be left out between
factors, so ``3x^2y`` is ``3*x^2*y``.
"""

import re
from fractions import Fraction

from .core import ReductionRing
from .domains import MONOMIAL_ORDERS, Integers, IntegersMod, PolynomialRing, Rationals
from .domains.polynomials import MAX_EXPONENT
from .errors import ExponentOverflowError, ParseError, RangeError, UnsupportedError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")

# multi-term powers beyond this are refused rather than expanded
MAX_EXPANSION = 256


class _Cursor:
    def __init__(self, src):
        self.src = src
        self.pos = 0

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.take(ch):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.src, self.pos)

    def match(self, pattern):
        self.skip()
        m = pattern.match(self.src, self.pos)
        if m:
            self.pos = m.end()
            return m.group()
        return None

    def done(self):
        return self.peek() == ""

    def error(self, message):
        return ParseError(message, self.src, self.pos)


def parse_ring(descriptor: str) -> ReductionRing:
    cur = _Cursor(descriptor)
    ring = _ring(cur, nested=False)
    if not cur.done():
        raise cur.error(f"unexpected {cur.peek()!r}")
    return ring


def _ring(cur, nested):
    start = cur.pos
    name = cur.match(_IDENT)
    if name == "Q":
        return Rationals()
    if name == "Z":
        if not cur.take("/"):
            return Integers()
        digits = cur.match(_INT)
        if digits is None:
            raise cur.error("expected modulus")
        n = int(digits)
        if n < 2:
            raise RangeError(f"modulus {n} is below 2", cur.src, start)
        return IntegersMod(n)
    if name == "poly":
        if nested:
            raise UnsupportedError("polynomial coefficients must not be polynomials")
        cur.expect("(")
        coefficients = _ring(cur, nested=True)
        cur.expect(";")
        variables = [_variable_name(cur)]
        while cur.take(","):
            variables.append(_variable_name(cur))
        if len(set(variables)) != len(variables):
            raise cur.error("variable names must be distinct")
        order = "lex"
        if cur.take(";"):
            cur.skip()
            at = cur.pos
            order = cur.match(_IDENT)
            if order not in MONOMIAL_ORDERS:
                raise ParseError(f"unknown monomial order {order!r}", cur.src, at)
        cur.expect(")")
        return PolynomialRing(coefficients, tuple(variables), order)
    raise ParseError("expected Q, Z, Z/<n> or poly(...)", cur.src, start)


def _variable_name(cur):
    name = cur.match(_IDENT)
    if name is None:
        raise cur.error("expected variable name")
    return name


def coerce(value: Fraction, ring: ReductionRing, where=None):
    """Embed a rational constant into ``ring``."""
    if isinstance(ring, PolynomialRing):
        return ring.constant(coerce(value, ring.coefficients, where))
    if isinstance(ring, Rationals):
        return Fraction(value)
    if isinstance(ring, Integers):
        if value.denominator != 1:
            raise ParseError(f"{value} is not an integer", position=where)
        return int(value)
    if isinstance(ring, IntegersMod):
        n = ring.modulus
        try:
            inverse = pow(value.denominator, -1, n)
        except ValueError:
            raise ParseError(f"{value.denominator} is not invertible modulo {n}", position=where) from None
        return value.numerator * inverse % n
    raise UnsupportedError(f"cannot embed constants into {ring}")


def parse_element(src: str, ring: ReductionRing):
    cur = _Cursor(src)
    if cur.done():
        raise cur.error("empty expression")
    value = _Expr(cur, ring).sum()
    if not cur.done():
        raise cur.error(f"unexpected {cur.peek()!r}")
    return value


class _Expr:
    def __init__(self, cur, ring):
        self.cur = cur
        self.ring = ring
        if isinstance(ring, PolynomialRing):
            # longest names first so that implicit products split greedily
            self.names = sorted(ring.variables, key=len, reverse=True)
        else:
            self.names = []

    def sum(self):
        ring = self.ring
        acc = self.product()
        while True:
            if self.cur.take("+"):
                acc = ring.add(acc, self.product())
            elif self.cur.take("-"):
                acc = ring.sub(acc, self.product())
            else:
                return acc

    def product(self):
        ring = self.ring
        acc = self.signed()
        while True:
            if self.cur.take("*"):
                acc = ring.mul(acc, self.signed())
            elif self.cur.peek() and (self.cur.peek().isalnum() or self.cur.peek() in "(_"):
                acc = ring.mul(acc, self.power())
            else:
                return acc

    def signed(self):
        if self.cur.take("-"):
            return self.ring.neg(self.signed())
        if self.cur.take("+"):
            return self.signed()
        return self.power()

    def power(self):
        base = self.atom()
        if not self.cur.take("^"):
            return base
        where = self.cur.pos
        digits = self.cur.match(_INT)
        if digits is None:
            raise self.cur.error("malformed exponent")
        e = int(digits)
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        return self._pow(base, e, where)

    def _pow(self, base, e, where):
        ring = self.ring
        if isinstance(ring, PolynomialRing) and len(base) == 1:
            (c, exps), = base
            return ring.from_terms([(_scalar_pow(c, e, ring.coefficients, where), tuple(x * e for x in exps))])
        if not isinstance(ring, PolynomialRing):
            return _scalar_pow(base, e, ring, where)
        if e > MAX_EXPANSION:
            raise UnsupportedError(f"refusing to expand a power with exponent {e} at position {where}")
        result = ring.one
        for _ in range(e):
            result = ring.mul(result, base)
        return result

    def atom(self):
        cur = self.cur
        where = cur.pos
        if cur.take("("):
            value = self.sum()
            cur.expect(")")
            return value
        digits = cur.match(_INT)
        if digits is not None:
            value = Fraction(int(digits))
            if cur.take("/"):
                den_at = cur.pos
                den = cur.match(_INT)
                if den is None:
                    raise cur.error("expected denominator")
                if int(den) == 0:
                    raise ParseError("division by zero", cur.src, den_at)
                value /= int(den)
            return coerce(value, self.ring, where)
        ch = cur.peek()
        if ch.isalpha() or ch == "_":
            for name in self.names:
                if cur.src.startswith(name, cur.pos):
                    cur.pos += len(name)
                    return self.ring.variable(name)
            ident = _IDENT.match(cur.src, cur.pos).group()
            raise ParseError(f"unknown variable {ident!r}", cur.src, cur.pos)
        raise cur.error(f"unexpected {ch!r}" if ch else "unexpected end of input")


def _scalar_pow(c, e, ring, where):
    if isinstance(ring, IntegersMod):
        return pow(c, e, ring.modulus)
    if e > MAX_EXPANSION and abs(c) > 1:
        raise UnsupportedError(f"refusing to expand a power with exponent {e} at position {where}")
    return c ** e


def split_list(text: str) -> list:
    """Split a comma-separated element list, respecting parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    parts = [p.strip() for p in parts]
    if any(not p for p in parts):
        raise ParseError("empty entry in element list", text)
    return parts


def render(x, ring: ReductionRing) -> str:
    return ring.render(x)
