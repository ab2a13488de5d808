"""Critical-pair/completion over an arbitrary reduction ring.

``gb`` starts the completion and ``gbaux`` runs it.  The tail recursion is
unrolled into a loop: one iteration of the loop corresponds to one
recursive call, and one :class:`TraceRecord` is written per iteration.
"""

from dataclasses import dataclass, field
from typing import Optional

from .core import ReductionRing, cp, is_reducible, normal_form
from .errors import ContractViolationError, MeasureViolationError, StateCorruptionError, StepLimitExceeded

DEFAULT_STEP_LIMIT = 10**6

BASE = "base"
LOAD_PAIR = "load-pair"
H_ZERO = "h-zero"
H_ADDED = "h-added"


def pairs(n: int) -> tuple:
    """All index pairs ``(k, l)`` with ``1 <= k <= l <= n``, self-pairs included."""
    return tuple((k, l) for k in range(1, n + 1) for l in range(k, n + 1))


def update(P: tuple, n: int) -> tuple:
    """Queue ``P`` extended by the pairs of the new element with index ``n``."""
    for k, l in P:
        if not 1 <= k <= l < n:
            raise StateCorruptionError(f"pair {(k, l)} is inconsistent with new index {n}")
    return tuple(P) + tuple((k, n) for k in range(1, n + 1))


def app(C: tuple, h, ring: ReductionRing) -> tuple:
    if ring.is_zero(h):
        raise ContractViolationError("only nonzero elements are appended")
    return tuple(C) + (h,)


@dataclass(frozen=True)
class CpdEvent:
    """One step inside ``cpd``: a normal form (``"nf"``) or the final
    subtraction (``"sub"``)."""

    kind: str
    inputs: tuple
    output: object
    reductions: int = 0


def cpd(b, bbar, i, j, C, ring: ReductionRing, events: Optional[list] = None):
    """``nf(b) - nf(bbar)`` modulo ``C``.

    Both sides are brought to normal form before subtracting; the
    difference itself is never reduced.
    """
    steps = []
    g = normal_form(b, C, ring, steps=steps)
    if events is not None:
        events.append(CpdEvent("nf", (b,), g, len(steps)))
    steps_bar = []
    gbar = normal_form(bbar, C, ring, steps=steps_bar)
    if events is not None:
        events.append(CpdEvent("nf", (bbar,), gbar, len(steps_bar)))
    h = ring.sub(g, gbar)
    if events is not None:
        events.append(CpdEvent("sub", (g, gbar), h))
    return h


@dataclass(frozen=True)
class GbState:
    basis: tuple
    queue: tuple
    i: int
    j: int
    crit: tuple

    def __post_init__(self):
        n = len(self.basis)
        if self.crit and not (1 <= self.i <= n and 1 <= self.j <= n):
            raise StateCorruptionError(f"indices {(self.i, self.j)} outside basis of length {n}")
        for k, l in self.queue:
            if not 1 <= k <= l <= n:
                raise StateCorruptionError(f"queued pair {(k, l)} outside basis of length {n}")

    @property
    def measure(self):
        """Termination measure, compared lexicographically.

        The first entry stands in for the reducible set: it only moves when
        an element is appended, and that step is checked separately to
        enlarge the reducible set strictly.
        """
        return (-len(self.basis), len(self.queue), len(self.crit))


@dataclass(frozen=True)
class TraceRecord:
    action: str
    measure: tuple
    i: int
    j: int
    added: object = None
    witness: object = None
    cpd_events: tuple = ()

    @property
    def reductions(self):
        return sum(e.reductions for e in self.cpd_events)


@dataclass
class GbTrace:
    steps: list = field(default_factory=list)

    def append(self, record: TraceRecord):
        self.steps.append(record)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def count(self, action):
        return sum(1 for r in self.steps if r.action == action)

    def stats(self) -> dict:
        return {
            "recursion_steps": len(self.steps),
            "pairs_processed": self.count(LOAD_PAIR),
            "critical_pairs": self.count(H_ZERO) + self.count(H_ADDED),
            "elements_added": self.count(H_ADDED),
            "reductions": sum(r.reductions for r in self.steps),
        }


def measure_decreases(before: TraceRecord, after: TraceRecord) -> bool:
    """Strict lexicographic decrease between consecutive trace records."""
    if before.action == H_ADDED:
        return after.measure[0] < before.measure[0]
    return after.measure[0] == before.measure[0] and after.measure[1:] < before.measure[1:]


def check_trace(trace: GbTrace):
    for before, after in zip(trace.steps, trace.steps[1:]):
        if not measure_decreases(before, after):
            raise MeasureViolationError(f"measure {before.measure} -> {after.measure} after {before.action}")


def _growth_witness(C, h, g, gbar, ring):
    """An element irreducible modulo ``C`` that ``h`` makes reducible."""
    for w in (g, gbar):
        if not is_reducible(w, C, ring) and ring.reduce_by(w, h) is not None:
            return w
    return None


def gbaux(state: GbState, ring: ReductionRing, trace: Optional[GbTrace] = None,
          step_limit: int = DEFAULT_STEP_LIMIT, check_measure: bool = False) -> tuple:
    if trace is None:
        trace = GbTrace()
    prev = None
    for _ in range(step_limit):
        C, P, i, j, M = state.basis, state.queue, state.i, state.j, state.crit
        if not M and not P:
            record = TraceRecord(BASE, state.measure, i, j)
            nxt = None
        elif not M:
            (k, l), rest = P[0], P[1:]
            record = TraceRecord(LOAD_PAIR, state.measure, i, j)
            nxt = GbState(C, rest, k, l, cp(C[k - 1], C[l - 1], ring, k, l))
        else:
            pair, rest = M[0], M[1:]
            events = []
            h = cpd(pair.first, pair.second, i, j, C, ring, events)
            if ring.is_zero(h):
                record = TraceRecord(H_ZERO, state.measure, i, j, cpd_events=tuple(events))
                nxt = GbState(C, P, i, j, rest)
            else:
                g, gbar = events[0].output, events[1].output
                witness = _growth_witness(C, h, g, gbar, ring)
                if check_measure and witness is None:
                    raise MeasureViolationError(f"appending {ring.render(h)} does not enlarge the reducible set")
                record = TraceRecord(H_ADDED, state.measure, i, j, added=h, witness=witness,
                                     cpd_events=tuple(events))
                nxt = GbState(app(C, h, ring), update(P, len(C) + 1), i, j, rest)
        trace.append(record)
        if check_measure and prev is not None and not measure_decreases(prev, record):
            raise MeasureViolationError(f"measure {prev.measure} -> {record.measure}")
        prev = record
        if nxt is None:
            return C
        state = nxt
    raise StepLimitExceeded(step_limit, state)


def initial_state(C: tuple) -> GbState:
    return GbState(tuple(C), pairs(len(C)), 1, 1, ())


def strip_zeros(C, ring: ReductionRing) -> tuple:
    return tuple(ring.check(c) for c in C if not ring.is_zero(ring.check(c)))


def gb(C, ring: ReductionRing, step_limit: int = DEFAULT_STEP_LIMIT, check_measure: bool = False):
    """Gröbner basis of ``C`` together with the full trace.

    Zero generators are dropped first.  The input is always a prefix of the
    result.
    """
    trace = GbTrace()
    basis = gbaux(initial_state(strip_zeros(C, ring)), ring, trace, step_limit, check_measure)
    return basis, trace


def is_member(f, G, ring: ReductionRing) -> bool:
    """Ideal membership; ``G`` must already be a Gröbner basis."""
    return ring.is_zero(normal_form(ring.check(f), strip_zeros(G, ring), ring))


def ideals_equal(C1, C2, ring: ReductionRing, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    G1, _ = gb(C1, ring, step_limit)
    G2, _ = gb(C2, ring, step_limit)
    return all(is_member(c, G2, ring) for c in C1) and all(is_member(c, G1, ring) for c in C2)
