"""Multivariate polynomials stored as tuples of monomials.

A polynomial is a tuple of ``(coefficient, exponents)`` pairs sorted strictly
descending in the monomial order, with no zero coefficients.  The empty
tuple is zero.
"""

from dataclasses import dataclass
from typing import Tuple

from ..core import ReductionRing
from ..errors import ContractViolationError, ExponentOverflowError, NoLeadingMonomialError, UnsupportedError

MAX_EXPONENT = 2**63 - 1

Exponents = Tuple[int, ...]


def lex_key(e):
    return e


def deglex_key(e):
    return (sum(e), e)


def degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


MONOMIAL_ORDERS = {
    "lex": lex_key,
    "deglex": deglex_key,
    "degrevlex": degrevlex_key,
}


def monomial_lcm(e1, e2):
    if len(e1) != len(e2):
        raise ContractViolationError("exponent vectors differ in length")
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _checked(e):
    for x in e:
        if x > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {x} exceeds {MAX_EXPONENT}")
    return e


def divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


@dataclass(frozen=True)
class PolynomialRing(ReductionRing):
    """Polynomials over a non-polynomial reduction ring.

    Two polynomials compare term by term from the top: a smaller monomial
    wins first, then a smaller coefficient under the coefficient ring's
    order, and equal leading terms defer to the remaining terms.
    """

    coefficients: ReductionRing
    variables: Tuple[str, ...]
    order: str = "lex"
    kind = "polynomial-tuples"

    def __post_init__(self):
        if isinstance(self.coefficients, PolynomialRing):
            raise UnsupportedError("polynomial coefficients must not be polynomials")
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ContractViolationError("at least one variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise ContractViolationError("variable names must be distinct")
        if self.order not in MONOMIAL_ORDERS:
            raise UnsupportedError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def monomial_key(self):
        return MONOMIAL_ORDERS[self.order]

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return ((self.coefficients.one, (0,) * self.nvars),)

    def from_terms(self, terms):
        """Canonical polynomial from ``(coefficient, exponents)`` pairs;
        repeated exponents are summed."""
        K = self.coefficients
        acc = {}
        for c, e in terms:
            e = _checked(tuple(e))
            acc[e] = K.add(acc[e], c) if e in acc else c
        key = self.monomial_key
        return tuple(sorted(((c, e) for e, c in acc.items() if not K.is_zero(c)),
                            key=lambda t: key(t[1]), reverse=True))

    def constant(self, c):
        return self.from_terms([(c, (0,) * self.nvars)])

    def variable(self, name):
        e = tuple(int(v == name) for v in self.variables)
        if not any(e):
            raise ContractViolationError(f"unknown variable {name!r}")
        return ((self.coefficients.one, e),)

    def contains(self, p):
        if not isinstance(p, tuple):
            return False
        K = self.coefficients
        key = self.monomial_key
        prev = None
        for t in p:
            if not (isinstance(t, tuple) and len(t) == 2):
                return False
            c, e = t
            if not K.contains(c) or K.is_zero(c):
                return False
            if not (isinstance(e, tuple) and len(e) == self.nvars):
                return False
            if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x <= MAX_EXPONENT for x in e):
                return False
            if prev is not None and not key(e) < key(prev):
                return False
            prev = e
        return True

    def add(self, p, q):
        return self.from_terms(p + q)

    def neg(self, p):
        K = self.coefficients
        return tuple((K.neg(c), e) for c, e in p)

    def mul(self, p, q):
        K = self.coefficients
        return self.from_terms(
            (K.mul(c1, c2), tuple(a + b for a, b in zip(e1, e2)))
            for c1, e1 in p for c2, e2 in q)

    def scale(self, c, e, p):
        """The product of the monomial ``c * x^e`` with ``p``."""
        return self.mul(((c, e),), p)

    def below(self, p, q):
        K = self.coefficients
        key = self.monomial_key
        for i in range(len(q)):
            if i == len(p):
                return True
            (cp, ep), (cq, eq) = p[i], q[i]
            if ep != eq:
                return key(ep) < key(eq)
            if cp != cq:
                return K.below(cp, cq)
        return False

    def reduce_by(self, a, c):
        K = self.coefficients
        lc, lm = c[0]
        for coef, e in a:
            if not divides(lm, e):
                continue
            found = K.reduce_by(coef, lc)
            if found is None:
                continue
            k, _ = found
            m = ((k, tuple(x - y for x, y in zip(e, lm))),)
            return m, self.sub(a, self.mul(m, c))
        return None

    def common_reducibles(self, c1, c2):
        (lc1, lm1), (lc2, lm2) = c1[0], c2[0]
        top = monomial_lcm(lm1, lm2)
        return tuple(((k, top),) for k in self.coefficients.lift_candidates(lc1, lc2))

    def render(self, p):
        if not p:
            return "0"
        K = self.coefficients
        out = []
        for idx, (c, e) in enumerate(p):
            text = K.render(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            factors = [v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x]
            if factors and text == "1":
                body = "*".join(factors)
            else:
                body = "*".join([text] + factors)
            if idx == 0:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __str__(self):
        return f"poly({self.coefficients}; {','.join(self.variables)}; {self.order})"


def leading_monomial(p, ring: PolynomialRing):
    """Leading ``(coefficient, exponents)`` of a nonzero polynomial."""
    ring.check(p)
    if not p:
        raise NoLeadingMonomialError("zero polynomial has no leading monomial")
    return p[0]
