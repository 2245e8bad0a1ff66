"""Per-span reading sets: every way the grammar can speak a span.

Each semiotic span yields one Reading per interpretation (already
deduplicated to a single canonical surface each) plus a fallback that leaves
the span as unchanged as possible.  In the fallback, digit runs are still
spoken as cardinals but an unchanged word costs 100 and an unchanged
punctuation character costs 2, which is what makes partially normalized
options like "one/four" expensive enough to prune.
"""

from __future__ import annotations

import re

from ..fst import Weight
from .classes import (
    PLAIN_WORD_WEIGHT,
    PUNCT_WEIGHT,
    Reading,
    SemioticClass,
    semiotic_weight,
)
from .dates import verbalize_date, verbalize_roman
from .electronic import segment_electronic, verbalize_verbatim
from .numbers import MAX_CARDINAL, verbalize_cardinal
from .tagger import PUNCT_CHARS, TokenSpan
from .units import (
    verbalize_cardinal_span,
    verbalize_decimal,
    verbalize_fraction,
    verbalize_measure,
    verbalize_money,
    verbalize_ordinal_span,
    verbalize_time,
)

_RUNS_RE = re.compile(r"\d+|[^\W\d_]+|[\W_]", re.UNICODE)


def _token_cost(tok: str) -> int:
    return (PUNCT_WEIGHT if all(c in PUNCT_CHARS for c in tok) else PLAIN_WORD_WEIGHT).ticks


def plain_reading(span: TokenSpan) -> Reading:
    """A non-semiotic span passes through verbatim at the unchanged cost."""
    ticks = sum(_token_cost(tok) for tok in span.tokens)
    return Reading(SemioticClass.PLAIN, span.tokens, Weight(ticks))


def partial_reading(span: TokenSpan) -> Reading:
    """The not-fully-normalized fallback for a semiotic span.

    Digit runs are still spoken as cardinals, but every unchanged word costs
    100 and every unchanged punctuation character costs 2, so "1/4" comes
    out as "one/four" at roughly 4 instead of 1.
    """
    spoken: list[str] = []
    ticks = 0
    for tok in span.tokens:
        if not any(ch.isdigit() for ch in tok):
            spoken.append(tok)
            ticks += _token_cost(tok)
            continue
        for run in _RUNS_RE.findall(tok):
            if run.isdigit() and int(run) < MAX_CARDINAL:
                spoken.extend(verbalize_cardinal(int(run)))
                ticks += semiotic_weight(SemioticClass.CARDINAL).ticks
            elif run.isalpha() or run.isdigit():
                spoken.append(run)
                ticks += PLAIN_WORD_WEIGHT.ticks
            else:
                spoken.append(run)
                ticks += PUNCT_WEIGHT.ticks
    return Reading(SemioticClass.PLAIN, tuple(spoken), Weight(ticks))


def _class_readings(span: TokenSpan, cls: SemioticClass, grammar) -> list[Reading]:
    text = span.text
    if cls is SemioticClass.DATE:
        return verbalize_date(text, grammar)
    if cls is SemioticClass.TIME:
        return verbalize_time(text)
    if cls is SemioticClass.MONEY:
        return verbalize_money(text, grammar)
    if cls is SemioticClass.MEASURE:
        return verbalize_measure(text, grammar)
    if cls is SemioticClass.DECIMAL:
        return verbalize_decimal(text)
    if cls is SemioticClass.FRACTION:
        return verbalize_fraction(text)
    if cls is SemioticClass.ORDINAL:
        return verbalize_ordinal_span(text)
    if cls is SemioticClass.CARDINAL:
        return verbalize_cardinal_span(text)
    if cls is SemioticClass.ROMAN:
        return verbalize_roman(text)
    if cls is SemioticClass.ELECTRONIC:
        return segment_electronic(text, grammar.seg_words)
    if cls is SemioticClass.VERBATIM:
        r = verbalize_verbatim(text)
        return [r] if r else []
    return []


def readings(span: TokenSpan, grammar) -> list[Reading]:
    """All readings of a span, cheapest first, one per distinct spoken form."""
    if span.classes == frozenset({SemioticClass.PUNCT}):
        return [Reading(SemioticClass.PUNCT, (span.text,), PUNCT_WEIGHT)]
    if not span.is_semiotic:
        return [plain_reading(span)]

    collected: list[Reading] = []
    for cls in sorted(span.classes, key=lambda c: c.value):
        if cls in (SemioticClass.PLAIN, SemioticClass.PUNCT):
            continue
        collected.extend(_class_readings(span, cls, grammar))
    collected.append(partial_reading(span))

    by_spoken: dict[tuple[str, ...], Reading] = {}
    for r in collected:
        if not r.spoken:
            continue
        prior = by_spoken.get(r.spoken)
        if prior is None or r.weight < prior.weight:
            by_spoken[r.spoken] = r
    result = sorted(by_spoken.values(), key=lambda r: (r.weight.ticks, r.spoken))
    return result
