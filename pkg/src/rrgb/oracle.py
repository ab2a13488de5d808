"""Brute-force checks for the completion engine.

Reduction graphs here use every multiplier that makes an element smaller,
not just the canonical one the engine picks, so they describe the full
reduction relation.  Graph checks need a finite universe: all of Z/n, or
an interval ``|x| <= bound`` of Z (closed under reduction, since a
reduction never increases magnitude).  Polynomials over Q are checked
against an independent textbook Buchberger instead.
"""

from collections import deque
from fractions import Fraction
from itertools import combinations_with_replacement

from .core import ReductionRing, mntcr
from .domains import Integers, PolynomialRing, Rationals
from .errors import DomainOrderError, UnsupportedError


def multipliers(a, c, ring: ReductionRing):
    """Every multiplier worth trying when reducing ``a`` by ``c``."""
    if ring.finite:
        return ring.elements()
    if isinstance(ring, Integers):
        # |a - m c| <= |a| forces |m| <= 2|a|/|c|
        reach = 2 * abs(a) // abs(c) + 1
        return range(-reach, reach + 1)
    raise UnsupportedError(f"no multiplier enumeration for {ring}")


def any_reducts(a, c, ring: ReductionRing):
    """All ``b = a - m c`` strictly below ``a``, over every multiplier."""
    out = set()
    for m in multipliers(a, c, ring):
        b = ring.sub(a, ring.mul(m, c))
        if ring.below(b, a):
            out.add(b)
    return out


def universe_for(ring: ReductionRing, bound=None):
    if ring.finite:
        return tuple(ring.elements())
    if isinstance(ring, Integers):
        if bound is None:
            raise UnsupportedError("a bound is required for graph checks on Z")
        return tuple(range(-bound, bound + 1))
    raise UnsupportedError(f"graph checks are not available for {ring}")


def default_bound(C):
    return 8 * max((abs(c) for c in C), default=1)


class ReductionGraph:
    """One-step reductions modulo ``C`` between the elements of a universe."""

    def __init__(self, C, ring: ReductionRing, universe):
        self.ring = ring
        self.nodes = tuple(universe)
        members = set(self.nodes)
        self.edges = {}
        for a in self.nodes:
            targets = set()
            for c in C:
                targets |= any_reducts(a, c, ring)
            stray = targets - members
            if stray:
                raise UnsupportedError(f"universe is not closed under reduction: {sorted(stray)[:3]}")
            self.edges[a] = frozenset(targets)
        self._check_acyclic()

    def _check_acyclic(self):
        state = {}
        for root in self.nodes:
            if root in state:
                continue
            state[root] = 1
            stack = [(root, iter(self.edges[root]))]
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    state[node] = 2
                    stack.pop()
                elif state.get(nxt) == 1:
                    raise DomainOrderError(f"reduction cycle through {nxt!r}")
                elif nxt not in state:
                    state[nxt] = 1
                    stack.append((nxt, iter(self.edges[nxt])))

    def reducible(self):
        return frozenset(a for a in self.nodes if self.edges[a])

    def terminal_descendants(self):
        """Map each node to the set of irreducible nodes it reduces to."""
        ring = self.ring
        memo = {}
        # every edge points strictly down, so ascending order is topological
        for a in sorted(self.nodes, key=_sort_key(ring)):
            if not self.edges[a]:
                memo[a] = frozenset((a,))
            else:
                memo[a] = frozenset().union(*(memo[b] for b in self.edges[a]))
        return memo

    def components_below(self, a):
        """Connected components of the undirected graph on nodes below ``a``."""
        ring = self.ring
        keep = {x for x in self.nodes if ring.below(x, a)}
        comp = {}
        adj = {x: set() for x in keep}
        for x in keep:
            for y in self.edges[x]:
                if y in keep:
                    adj[x].add(y)
                    adj[y].add(x)
        label = 0
        for x in keep:
            if x in comp:
                continue
            comp[x] = label
            todo = deque([x])
            while todo:
                u = todo.popleft()
                for v in adj[u]:
                    if v not in comp:
                        comp[v] = label
                        todo.append(v)
            label += 1
        return comp


def _sort_key(ring):
    if isinstance(ring, Integers):
        return lambda x: (abs(x), x < 0)
    return ring.key


def red_set(C, ring: ReductionRing, universe=None, bound=None):
    """Elements of the universe reducible modulo ``C`` by some multiplier."""
    if universe is None:
        universe = universe_for(ring, bound)
    return frozenset(a for a in universe if any(any_reducts(a, c, ring) for c in C))


def is_confluent(C, ring: ReductionRing, universe=None, bound=None) -> bool:
    """Unique normal forms on the universe; for a terminating relation this
    is the same as confluence."""
    if universe is None:
        universe = universe_for(ring, bound)
    nf = ReductionGraph(C, ring, universe).terminal_descendants()
    return all(len(s) == 1 for s in nf.values())


def _universe_below(a, ring, universe):
    # reducts of elements below a stay below a, so this set is closed
    if universe is None:
        return tuple(ring.elements_below(a))
    return tuple(x for x in universe if ring.below(x, a))


def connectible_below(b, bbar, a, C, ring: ReductionRing, universe=None) -> bool:
    """``b`` and ``bbar`` are joined by reductions and inverse reductions
    through elements strictly below ``a`` only."""
    if not (ring.below(b, a) and ring.below(bbar, a)):
        return False
    if b == bbar:
        return True
    graph = ReductionGraph(C, ring, _universe_below(a, ring, universe))
    comp = graph.components_below(a)
    return comp[b] == comp[bbar]


def main_theorem_criterion(C, ring: ReductionRing, bound=None, report=None) -> bool:
    """For every pair of basis elements and each of their minimal
    non-trivial common reducibles ``a``, some pair of one-step reducts of
    ``a`` is connectible below ``a``.

    Failing instances are appended to ``report`` when a list is given.
    """
    C = tuple(C)
    if not C:
        return True
    sources = [(c, cbar, a) for c, cbar in combinations_with_replacement(C, 2) for a in mntcr(c, cbar, ring)]
    if not sources:
        return True
    if isinstance(ring, Integers):
        top = max([abs(a) for _, _, a in sources] + [bound or 0])
        universe = universe_for(ring, top)
    else:
        universe = universe_for(ring)
    graph = ReductionGraph(C, ring, universe)
    key = _sort_key(ring)
    nodes = sorted(graph.nodes, key=key)
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # sweep upwards: when source a is examined, exactly the nodes below a
    # have been merged along their edges
    ok = True
    added = 0
    for c, cbar, a in sorted(sources, key=lambda s: key(s[2])):
        while added < len(nodes) and key(nodes[added]) < key(a):
            x = nodes[added]
            parent[x] = x
            for y in graph.edges[x]:
                parent[find(y)] = find(x)
            added += 1
        joined = any(find(b) == find(bb)
                     for b in any_reducts(a, c, ring)
                     for bb in any_reducts(a, cbar, ring))
        if not joined:
            ok = False
            if report is None:
                return False
            report.append((c, cbar, a))
    return ok


def ideal_enumerate(C, ring: ReductionRing) -> frozenset:
    """The ideal generated by ``C`` in a finite ring, by fixpoint iteration."""
    if not ring.finite:
        raise UnsupportedError(f"{ring} is not finite")
    elements = tuple(ring.elements())
    ideal = {ring.zero} | set(C)
    for _ in range(len(elements)):
        grown = set(ideal)
        for x in ideal:
            grown.update(ring.mul(r, x) for r in elements)
        grown.update(ring.add(x, y) for x in ideal for y in ideal)
        if grown == ideal:
            break
        ideal = grown
    return frozenset(ideal)


# Textbook Buchberger over Q, written against its own dict representation
# so that it shares no reduction code with the engine.

def _order_key(order):
    if order == "lex":
        return lambda e: e
    if order == "deglex":
        return lambda e: (sum(e), e)
    if order == "degrevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    raise UnsupportedError(order)


class _Classical:
    def __init__(self, ring: PolynomialRing):
        if not isinstance(ring, PolynomialRing) or not isinstance(ring.coefficients, Rationals):
            raise UnsupportedError("the classical oracle needs polynomials over Q")
        self.ring = ring
        self.key = _order_key(ring.order)

    def to_dict(self, p):
        return {e: Fraction(c) for c, e in p}

    def from_dict(self, d):
        return self.ring.from_terms((c, e) for e, c in d.items())

    def lead(self, d):
        e = max(d, key=self.key)
        return e, d[e]

    def sub_multiple(self, d, coef, shift, g):
        out = dict(d)
        for e, c in g.items():
            t = tuple(a + b for a, b in zip(e, shift))
            v = out.get(t, 0) - coef * c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def remainder(self, f, G):
        """Full division remainder of ``f`` by ``G``."""
        f = dict(f)
        rem = {}
        while f:
            e, c = self.lead(f)
            for g in G:
                ge, gc = self.lead(g)
                if all(a <= b for a, b in zip(ge, e)):
                    f = self.sub_multiple(f, c / gc, tuple(b - a for a, b in zip(ge, e)), g)
                    break
            else:
                rem[e] = c
                del f[e]
        return rem

    def s_polynomial(self, f, g):
        fe, fc = self.lead(f)
        ge, gc = self.lead(g)
        top = tuple(max(a, b) for a, b in zip(fe, ge))
        left = self.sub_multiple({}, -1 / fc, tuple(t - a for t, a in zip(top, fe)), f)
        return self.sub_multiple(left, 1 / gc, tuple(t - a for t, a in zip(top, ge)), g)

    def buchberger(self, F):
        G = [f for f in F if f]
        todo = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
        while todo:
            i, j = todo.pop(0)
            r = self.remainder(self.s_polynomial(G[i], G[j]), G)
            if r:
                G.append(r)
                todo.extend((k, len(G) - 1) for k in range(len(G) - 1))
        return G


def classical_buchberger(F, ring: PolynomialRing) -> tuple:
    """Gröbner basis of ``F`` by S-polynomials over distinct pairs."""
    cl = _Classical(ring)
    return tuple(cl.from_dict(g) for g in cl.buchberger([cl.to_dict(f) for f in F]))


def classical_remainder(f, G, ring: PolynomialRing):
    cl = _Classical(ring)
    return cl.from_dict(cl.remainder(cl.to_dict(f), [cl.to_dict(g) for g in G if g]))


def s_polynomial_remainders(G, ring: PolynomialRing) -> list:
    """Remainders of every S-polynomial of distinct elements of ``G``."""
    cl = _Classical(ring)
    D = [cl.to_dict(g) for g in G if g]
    return [cl.from_dict(cl.remainder(cl.s_polynomial(D[i], D[j]), D))
            for i in range(len(D)) for j in range(i + 1, len(D))]
