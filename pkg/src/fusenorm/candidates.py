"""Sentence lattices and pruned candidate generation.

A sentence lattice is the concatenation of one small union machine per span,
where each branch of a union is one Reading of that span.  Every accepting
path is therefore one full-sentence candidate, and its weight decomposes as
the constant cost of the non-semiotic tokens plus the chosen reading weight
of each semiotic span.  Pruning keeps paths within ``delta`` of the best
one, which by the weight scheme admits exactly the fully normalized options.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field

from . import fst
from .errors import NoPathError
from .fst import Path, Transducer, Weight
from .grammars import GrammarSet, Reading, SemioticClass, TokenSpan, readings, tag


@dataclass(frozen=True)
class SpanChoice:
    """Provenance record: which reading a candidate picked for one span."""

    written: str
    spoken: tuple[str, ...]
    cls: SemioticClass
    token_start: int
    token_end: int
    is_semiotic: bool


@dataclass(frozen=True)
class Candidate:
    """One full-sentence normalization option."""

    tokens: tuple[str, ...]
    text: str
    weight: Weight
    span_outputs: tuple[SpanChoice, ...]
    fully_normalized: bool

    @property
    def semiotic_token_ranges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (c.token_start, c.token_end)
            for c in self.span_outputs
            if c.is_semiotic and c.token_end > c.token_start
        )


@dataclass(frozen=True)
class PruneConfig:
    delta: Weight = field(default_factory=lambda: Weight.of(0.2))
    max_candidates: int = 64

    def __post_init__(self):
        if not isinstance(self.delta, Weight):
            object.__setattr__(self, "delta", Weight.of(self.delta))
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be at least 1")


@dataclass(frozen=True)
class SentenceLattice:
    transducer: Transducer
    spans: tuple[TokenSpan, ...]
    span_readings: tuple[tuple[Reading, ...], ...]
    semiotic_count: int
    base_weight: Weight
    _block_starts: tuple[int, ...]  # first state id of each span's block

    def span_of_state(self, state: int) -> int:
        return bisect.bisect_right(self._block_starts, state) - 1


def _span_machine(span: TokenSpan, span_readings: list[Reading]) -> Transducer:
    machine = None
    for r in span_readings:
        branch = Transducer.from_pair(span.tokens, r.spoken, r.weight)
        machine = branch if machine is None else fst.union(machine, branch)
    return machine


def build_lattice(sentence: str, grammar: GrammarSet | None = None) -> SentenceLattice:
    """Tag the sentence and assemble the lattice of all reading choices."""
    grammar = grammar or GrammarSet.default()
    spans = tuple(tag(sentence, grammar))
    all_readings = tuple(tuple(readings(s, grammar)) for s in spans)

    if not spans:
        t = Transducer()
        s = t.add_state()
        t.set_start(s)
        t.add_final(s)
        return SentenceLattice(t, (), (), 0, Weight.zero(), ())

    machine = None
    block_starts = []
    offset = 0
    for span, span_rs in zip(spans, all_readings):
        block_starts.append(offset)
        part = _span_machine(span, list(span_rs))
        offset += part.num_states
        machine = part if machine is None else fst.concat(machine, part)

    base = Weight.zero()
    k = 0
    for span, span_rs in zip(spans, all_readings):
        if span.is_semiotic:
            k += 1
        else:
            base = base + span_rs[0].weight
    return SentenceLattice(machine, spans, all_readings, k, base, tuple(block_starts))


def _path_to_candidate(lattice: SentenceLattice, path: Path) -> Candidate:
    """Group the path's output by span block and look up each span's Reading."""
    per_span: list[list[str]] = [[] for _ in lattice.spans]
    per_ticks = [0] * len(lattice.spans)
    for arc in path.arcs:
        i = lattice.span_of_state(arc.src)
        per_ticks[i] += arc.weight.ticks
        if arc.olabel != fst.EPS:
            per_span[i].append(arc.olabel)

    choices: list[SpanChoice] = []
    tokens: list[str] = []
    fully = True
    for i, span in enumerate(lattice.spans):
        spoken = tuple(per_span[i])
        reading = next(
            (r for r in lattice.span_readings[i] if r.spoken == spoken), None
        )
        if reading is None or reading.weight.ticks != per_ticks[i]:
            raise AssertionError(
                f"path output {spoken!r} does not map back to a reading of {span.text!r}"
            )
        if span.is_semiotic and reading.cls is SemioticClass.PLAIN:
            fully = False
        start = len(tokens)
        tokens.extend(spoken)
        choices.append(
            SpanChoice(span.text, spoken, reading.cls, start, len(tokens), span.is_semiotic)
        )
    return Candidate(
        tokens=tuple(tokens),
        text=detokenize(tokens),
        weight=path.weight,
        span_outputs=tuple(choices),
        fully_normalized=fully,
    )


def generate(lattice: SentenceLattice, cfg: PruneConfig | None = None) -> list[Candidate]:
    """Enumerate candidates within the pruning bound, cheapest first.

    Post-condition checked here: when every semiotic span has at least one
    fully normalized reading, nothing inside the bound can have chosen an
    unchanged reading (its surcharge dwarfs the bound), so every returned
    candidate is fully normalized.
    """
    cfg = cfg or PruneConfig()
    paths = fst.enumerate_paths(lattice.transducer, cfg.delta, cfg.max_candidates)
    cands = [_path_to_candidate(lattice, p) for p in paths]
    # cheapest possible unchanged reading (2) minus costliest normalized one
    # (1.01): any delta below this gap provably excludes unchanged spans
    unchanged_gap = Weight.of(2.0).ticks - Weight.of(1.01).ticks
    all_spans_normalizable = all(
        any(r.cls is not SemioticClass.PLAIN for r in rs)
        for s, rs in zip(lattice.spans, lattice.span_readings)
        if s.is_semiotic
    )
    if all_spans_normalizable and cfg.delta.ticks < unchanged_gap:
        assert all(c.fully_normalized for c in cands), "pruning admitted an unchanged span"
    return cands


def det_normalize(sentence: str, grammar: GrammarSet | None = None) -> Candidate:
    """Baseline mode: the single shortest path, no language model."""
    lattice = build_lattice(sentence, grammar)
    try:
        best = fst.shortest_path(lattice.transducer)
    except NoPathError:
        return Candidate((), "", Weight.zero(), (), True)
    return _path_to_candidate(lattice, best)


_ATTACH_LEFT = re.compile(r"\s+([.,!?;:…)\]}])")
_ATTACH_RIGHT = re.compile(r"([(\[{])\s+")
_GLUE = re.compile(r"\s*([/@])\s*")


def detokenize(tokens) -> str:
    """Join spoken tokens, reattaching punctuation the way prose writes it."""
    text = " ".join(tokens)
    text = _ATTACH_LEFT.sub(r"\1", text)
    text = _ATTACH_RIGHT.sub(r"\1", text)
    text = _GLUE.sub(r"\1", text)
    return text
