"""Weighted transducers over the tropical semiring (path cost = sum of arc
costs, choice = minimum) with threshold-bounded path enumeration.

Weights are fixed-point with a resolution of 0.0001, so sums of the grammar's
weight values (0, 1.0..1.01, 2, 100) are exact and pruning bounds like
"within 0.2 of the best path" are deterministic, never subject to float
rounding.

Machines built here are acyclic by construction (verbalization lattices are
finite); enumeration validates this and rejects cyclic input.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import CyclicMachineError, NoPathError

EPS = ""  # epsilon label: consumes/emits nothing

_RESOLUTION = 10_000  # fixed-point ticks per weight unit


@dataclass(frozen=True, order=True)
class Weight:
    """Non-negative path cost in fixed-point ticks of 1/10000."""

    ticks: int

    @classmethod
    def of(cls, value: float | int | str) -> "Weight":
        v = float(value)
        if v < 0:
            raise ValueError(f"arc weights must be non-negative, got {value}")
        return cls(round(v * _RESOLUTION))

    @classmethod
    def zero(cls) -> "Weight":
        return cls(0)

    @property
    def value(self) -> float:
        return self.ticks / _RESOLUTION

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.ticks + other.ticks)

    def __str__(self) -> str:
        return f"{self.value:.4f}"


@dataclass(frozen=True)
class Arc:
    src: int
    dst: int
    ilabel: str
    olabel: str
    weight: Weight


@dataclass(frozen=True)
class Path:
    """One accepting path: its arcs, exact weight, and spoken-side output."""

    arcs: tuple[Arc, ...]
    weight: Weight
    output: tuple[str, ...]


class Transducer:
    """Mutable while being built, treated as immutable afterwards.

    States are dense integer ids.  There is one start state; any number of
    final states.  Enumeration and shortest-path allocate per-call state
    only, so a built machine is safe to share across threads.
    """

    def __init__(self):
        self._arcs: list[list[Arc]] = []
        self.start: int | None = None
        self.finals: set[int] = set()

    @property
    def num_states(self) -> int:
        return len(self._arcs)

    @property
    def num_arcs(self) -> int:
        return sum(len(a) for a in self._arcs)

    def add_state(self) -> int:
        self._arcs.append([])
        return len(self._arcs) - 1

    def set_start(self, state: int) -> None:
        self._check_state(state)
        self.start = state

    def add_final(self, state: int) -> None:
        self._check_state(state)
        self.finals.add(state)

    def add_arc(self, src: int, dst: int, ilabel: str, olabel: str, weight: Weight) -> None:
        self._check_state(src)
        self._check_state(dst)
        self._arcs[src].append(Arc(src, dst, ilabel, olabel, weight))

    def arcs(self, state: int) -> tuple[Arc, ...]:
        return tuple(self._arcs[state])

    def _check_state(self, state: int) -> None:
        if not 0 <= state < len(self._arcs):
            raise ValueError(f"state {state} not in transducer with {len(self._arcs)} states")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_pair(cls, written, spoken, weight: Weight | float) -> "Transducer":
        """Linear machine mapping exactly ``written`` to ``spoken``.

        The total weight sits on the first arc; remaining arcs cost 0.  The
        shorter side is padded with epsilons.
        """
        if not isinstance(weight, Weight):
            weight = Weight.of(weight)
        written = tuple(written)
        spoken = tuple(spoken)
        t = cls()
        n = max(len(written), len(spoken))
        if n == 0:
            # empty-to-empty mapping: a single accepting state, plus an
            # epsilon arc if there is weight to carry
            s = t.add_state()
            t.set_start(s)
            if weight.ticks == 0:
                t.add_final(s)
            else:
                f = t.add_state()
                t.add_arc(s, f, EPS, EPS, weight)
                t.add_final(f)
            return t
        states = [t.add_state() for _ in range(n + 1)]
        t.set_start(states[0])
        t.add_final(states[-1])
        for i in range(n):
            ilab = written[i] if i < len(written) else EPS
            olab = spoken[i] if i < len(spoken) else EPS
            w = weight if i == 0 else Weight.zero()
            t.add_arc(states[i], states[i + 1], ilab, olab, w)
        return t

    def dump(self) -> str:
        """Stable text dump, one arc per line: ``src dst input output weight``."""
        lines = [f"# start {self.start}"]
        lines += [f"# final {f}" for f in sorted(self.finals)]
        for state_arcs in self._arcs:
            for a in state_arcs:
                ilab = a.ilabel or "<eps>"
                olab = a.olabel or "<eps>"
                lines.append(f"{a.src} {a.dst} {ilab} {olab} {a.weight}")
        return "\n".join(lines) + "\n"


def union(a: Transducer, b: Transducer) -> Transducer:
    """Machine accepting the union of both path sets, weights unchanged.

    State layout is block-contiguous (a's states first, then b's, then the
    new start), which the lattice layer relies on to map paths back to the
    span that produced each stretch of output.
    """
    t = Transducer()
    offset_a = _copy_states(t, a)
    offset_b = _copy_states(t, b)
    start = t.add_state()
    t.set_start(start)
    t.add_arc(start, a.start + offset_a, EPS, EPS, Weight.zero())
    t.add_arc(start, b.start + offset_b, EPS, EPS, Weight.zero())
    for f in a.finals:
        t.add_final(f + offset_a)
    for f in b.finals:
        t.add_final(f + offset_b)
    return t


def concat(a: Transducer, b: Transducer) -> Transducer:
    """Machine whose paths are a's paths followed by b's; weights add."""
    t = Transducer()
    offset_a = _copy_states(t, a)
    offset_b = _copy_states(t, b)
    t.set_start(a.start + offset_a)
    for f in a.finals:
        t.add_arc(f + offset_a, b.start + offset_b, EPS, EPS, Weight.zero())
    for f in b.finals:
        t.add_final(f + offset_b)
    return t


def _copy_states(dst: Transducer, src: Transducer) -> int:
    if src.start is None or not src.finals:
        raise ValueError("operand transducer has no start or no final state")
    offset = dst.num_states
    for _ in range(src.num_states):
        dst.add_state()
    for state_arcs in src._arcs:
        for a in state_arcs:
            dst.add_arc(a.src + offset, a.dst + offset, a.ilabel, a.olabel, a.weight)
    return offset


def _topological_order(t: Transducer) -> list[int]:
    indeg = [0] * t.num_states
    for state_arcs in t._arcs:
        for a in state_arcs:
            indeg[a.dst] += 1
    queue = [s for s in range(t.num_states) if indeg[s] == 0]
    order = []
    while queue:
        s = queue.pop()
        order.append(s)
        for a in t._arcs[s]:
            indeg[a.dst] -= 1
            if indeg[a.dst] == 0:
                queue.append(a.dst)
    if len(order) != t.num_states:
        raise CyclicMachineError("transducer contains a cycle; path enumeration requires a DAG")
    return order


def _min_completion_ticks(t: Transducer) -> list[float]:
    """Cheapest cost from each state to any final state (inf if none)."""
    best = [float("inf")] * t.num_states
    for s in t.finals:
        best[s] = 0
    for s in reversed(_topological_order(t)):
        for a in t._arcs[s]:
            cand = a.weight.ticks + best[a.dst]
            if cand < best[s]:
                best[s] = cand
    return best


def enumerate_paths(t: Transducer, delta: Weight | float, cap: int) -> list[Path]:
    """All accepting paths within ``delta`` of the best one, cheapest first.

    Paths are emitted in ascending (weight, output-token sequence) order and
    truncated at ``cap``.  The search is best-first on exact cost-to-go, so
    machines whose within-bound path set is huge still pay only for the
    paths actually returned.
    """
    if not isinstance(delta, Weight):
        delta = Weight.of(delta)
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    if t.start is None:
        raise NoPathError("transducer has no start state")
    remaining = _min_completion_ticks(t)
    if remaining[t.start] == float("inf"):
        raise NoPathError("transducer has no accepting path")
    bound = int(remaining[t.start]) + delta.ticks

    # Heap entries are keyed by (exact final-cost lower bound, output so far,
    # insertion order).  Because the bound is exact and outputs only append,
    # completed paths pop in (weight, lexicographic output) order.  Arcs ride
    # along as a parent-pointer chain and are only materialized on emit.
    counter = 0
    heap = [(remaining[t.start], (), counter, t.start, 0, None)]
    results: list[Path] = []
    while heap and len(results) < cap:
        f, output, _, state, g, chain = heapq.heappop(heap)
        if f > bound:
            break
        if state in t.finals:
            arcs: list[Arc] = []
            link = chain
            while link is not None:
                arcs.append(link[0])
                link = link[1]
            results.append(Path(arcs=tuple(reversed(arcs)), weight=Weight(g), output=output))
            if len(results) >= cap:
                break
        for a in t._arcs[state]:
            g2 = g + a.weight.ticks
            f2 = g2 + remaining[a.dst]
            if f2 > bound:
                continue
            out2 = output if a.olabel == EPS else output + (a.olabel,)
            counter += 1
            heapq.heappush(heap, (f2, out2, counter, a.dst, g2, (a, chain)))
    return results


def shortest_path(t: Transducer) -> Path:
    """Minimum-weight path; ties broken lexicographically on output tokens."""
    return enumerate_paths(t, Weight.zero(), 1)[0]
