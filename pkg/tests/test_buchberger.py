import random
from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from rrgb.buchberger import (
    BASE, H_ADDED, H_ZERO, LOAD_PAIR, GbState, GbTrace, TraceRecord, app, check_trace, cpd, gb, gbaux,
    ideals_equal, initial_state, is_member, measure_decreases, pairs, update,
)
from rrgb.core import cp, normal_form
from rrgb.domains import Integers, IntegersMod, PolynomialRing, Rationals
from rrgb.errors import (
    ContractViolationError, DescriptorMismatchError, MeasureViolationError, StateCorruptionError, StepLimitExceeded,
)
from rrgb.oracle import ReductionGraph, classical_buchberger, classical_remainder, ideal_enumerate, red_set

from .helpers import random_poly_system, random_zn_basis

Z = Integers()
QXY = PolynomialRing(Rationals(), ("x", "y"), "lex")
X, Y = QXY.variable("x"), QXY.variable("y")


def poly(*terms):
    return QXY.from_terms((Fraction(c), e) for c, e in terms)


X2_1 = poly((1, (2, 0)), (-1, (0, 0)))
XY_1 = poly((1, (1, 1)), (-1, (0, 0)))


def test_pairs_examples():
    assert pairs(0) == ()
    assert pairs(1) == ((1, 1),)
    assert pairs(2) == ((1, 1), (1, 2), (2, 2))


def test_pairs_is_every_ordered_pair_once():
    for n in range(8):
        expected = sorted((k, l) for k in range(1, n + 1) for l in range(1, n + 1) if k <= l)
        assert list(pairs(n)) == expected


def test_update_examples():
    assert update((), 1) == ((1, 1),)
    assert update(((2, 2),), 3) == ((2, 2), (1, 3), (2, 3), (3, 3))
    P = pairs(3)
    assert len(update(P, 4)) == len(P) + 4


def test_update_rejects_inconsistent_index():
    with pytest.raises(StateCorruptionError):
        update(((1, 3),), 3)


def test_app():
    assert app((), 5, Z) == (5,)
    C = app((4, 6), 2, Z)
    assert C == (4, 6, 2) and C.index(2) + 1 == 3
    assert C[:2] == (4, 6)
    with pytest.raises(ContractViolationError):
        app((4,), 0, Z)


def test_cpd_identical_components_is_zero():
    assert cpd(7, 7, 1, 1, (4, 6), Z) == 0


def test_cpd_polynomial_example():
    # both components are irreducible, so h is their plain difference
    h = cpd(Y, X, 1, 2, (X2_1, XY_1), QXY)
    assert h == QXY.sub(Y, X)
    assert classical_remainder(X, (X2_1, XY_1), QXY) == X
    assert classical_remainder(Y, (X2_1, XY_1), QXY) == Y


def test_cpd_matches_unique_normal_forms_on_z8():
    R = IntegersMod(8)
    checked = 0
    for C in product(range(1, 8), repeat=2):
        G, _ = gb(C, R)
        terminals = ReductionGraph(G, R, range(8)).terminal_descendants()
        for k, l in pairs(len(G)):
            for pair in cp(G[k - 1], G[l - 1], R):
                (g,), (gbar,) = terminals[pair.first], terminals[pair.second]
                assert cpd(pair.first, pair.second, k, l, G, R) == R.sub(g, gbar)
                checked += 1
    assert checked > 0


def test_cpd_normal_forms_are_terminal_descendants():
    R = IntegersMod(8)
    for C in product(range(1, 8), repeat=2):
        terminals = ReductionGraph(C, R, range(8)).terminal_descendants()
        for k, l in pairs(2):
            for pair in cp(C[k - 1], C[l - 1], R):
                events = []
                cpd(pair.first, pair.second, k, l, C, R, events)
                assert events[0].output in terminals[pair.first]
                assert events[1].output in terminals[pair.second]


def test_gbaux_base_case():
    for C in ((), (4, 6), (X2_1,)):
        trace = GbTrace()
        ring = QXY if C == (X2_1,) else Z
        assert gbaux(GbState(C, (), 1, 1, ()), ring, trace) == C
        assert [r.action for r in trace] == [BASE]


def test_gbaux_polynomial_example():
    trace = GbTrace()
    G = gbaux(initial_state((X2_1, XY_1)), QXY, trace)
    assert G[:2] == (X2_1, XY_1)
    assert QXY.sub(Y, X) in G or QXY.sub(X, Y) in G
    target = (X2_1, XY_1, QXY.sub(X, Y), poly((1, (0, 2)), (-1, (0, 0))))
    reference = classical_buchberger(target, QXY)
    assert all(not classical_remainder(g, reference, QXY) for g in G)
    reference_g = classical_buchberger(G, QXY)
    assert all(not classical_remainder(t, reference_g, QXY) for t in target)
    check_trace(trace)


@pytest.mark.parametrize("C", list(product(range(6), repeat=2)) + [(1, 2, 3), (2, 3, 4), (5, 4, 3)])
def test_z6_completion_grows_red_set_at_most_six_times(C):
    R = IntegersMod(6)
    G, trace = gb(C, R, check_measure=True)
    added = [r.added for r in trace if r.action == H_ADDED]
    assert len(added) <= 6
    basis = tuple(c for c in C if c)
    for h in added:
        before = red_set(basis, R)
        basis = basis + (h,)
        assert before < red_set(basis, R)
    assert basis == G


def test_gb_empty():
    G, trace = gb((), Z)
    assert G == () and [r.action for r in trace] == [BASE]


def test_gb_strips_zeros():
    G, _ = gb((0, 4, 0, 6), Z)
    assert G[:2] == (4, 6)


def test_gb_integers_four_six():
    G, _ = gb((4, 6), Z)
    assert normal_form(2, G, Z) == 0
    assert normal_form(1, G, Z) != 0


def test_gb_rejects_foreign_elements():
    with pytest.raises(DescriptorMismatchError):
        gb((Fraction(1, 2),), Z)


def test_membership_examples():
    G, _ = gb((4, 6), Z)
    assert is_member(0, G, Z)
    assert is_member(10, G, Z)
    assert not is_member(7, G, Z)
    for x in range(-100, 101):
        assert is_member(x, G, Z) == (x % 2 == 0)


def test_membership_against_enumeration_z8():
    R = IntegersMod(8)
    for C in product(range(8), repeat=2):
        G, _ = gb(C, R)
        ideal = ideal_enumerate(C, R)
        for x in range(8):
            assert is_member(x, G, R) == (x in ideal)


def test_ideals_equal_examples():
    assert ideals_equal((4, 6), (4, 6), Z)
    assert ideals_equal((4, 6), (2,), Z)
    assert not ideals_equal((4, 6), (3,), Z)
    G, _ = gb((X2_1, XY_1), QXY)
    assert ideals_equal((X2_1, XY_1), G, QXY)


def test_ideals_equal_against_gcd():
    rng = random.Random(7)
    for _ in range(100):
        C1 = tuple(rng.randint(-20, 20) for _ in range(rng.randint(1, 3)))
        C2 = tuple(rng.randint(-20, 20) for _ in range(rng.randint(1, 3)))
        g1 = gcd(*C1)
        g2 = gcd(*C2)
        assert ideals_equal(C1, C2, Z) == (g1 == g2)


def test_prefix_stability():
    rng = random.Random(11)
    for n in (4, 6, 9, 12):
        for _ in range(20):
            C = tuple(c for c in random_zn_basis(rng, n) if c)
            G, _ = gb(C, IntegersMod(n))
            assert G[:len(C)] == C
    for _ in range(20):
        C = random_poly_system(rng, QXY)
        G, _ = gb(C, QXY)
        assert G[:len(C)] == C


def test_step_limit():
    with pytest.raises(StepLimitExceeded) as info:
        gb((X2_1, XY_1), QXY, step_limit=3)
    assert info.value.limit == 3


def test_trace_measure_and_actions():
    G, trace = gb((X2_1, XY_1), QXY, check_measure=True)
    check_trace(trace)
    actions = [r.action for r in trace]
    assert actions[0] == LOAD_PAIR and actions[-1] == BASE
    stats = trace.stats()
    assert stats["elements_added"] == len(G) - 2
    assert stats["pairs_processed"] == len(pairs(len(G)))
    assert stats["critical_pairs"] == trace.count(H_ZERO) + trace.count(H_ADDED)


def test_check_trace_rejects_non_decreasing_measure():
    trace = GbTrace()
    trace.append(TraceRecord(LOAD_PAIR, (-2, 3, 0), 1, 1))
    trace.append(TraceRecord(H_ZERO, (-2, 3, 1), 1, 1))
    with pytest.raises(MeasureViolationError):
        check_trace(trace)
    assert not measure_decreases(trace.steps[0], trace.steps[1])


def test_state_invariants():
    with pytest.raises(StateCorruptionError):
        GbState((4,), ((1, 2),), 1, 1, ())
    with pytest.raises(StateCorruptionError):
        GbState((4, 6), (), 3, 1, cp(4, 6, Z))


def test_trace_is_deterministic():
    _, t1 = gb((X2_1, XY_1), QXY)
    _, t2 = gb((X2_1, XY_1), QXY)
    assert t1.steps == t2.steps
