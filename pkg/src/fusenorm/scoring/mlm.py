"""Masked-LM scoring protocol: premasked variants and their aggregation.

A masked scorer is anything with ``masked_score(tokens, premask) -> float``
returning negative average pseudo-log-likelihood over the tokens outside the
premasked spans (each premasked span counts as a single mask placeholder and
contributes nothing to the mean).  ``masked_score_batch`` is used when the
scorer provides it, so remote backends get one request per candidate.

With several semiotic spans in one sentence, each span is judged with all
the others masked out, so no unresolved option biases another; the variant
scores are then averaged.
"""

from __future__ import annotations

from ..errors import ScorerError
from .base import Score, ScoreRequest, validate_spans


def mlm_score_variant(scorer, tokens, premasked) -> Score:
    """Score one masked variant of a sentence."""
    tokens = tuple(tokens)
    premasked = tuple(tuple(s) for s in premasked)
    validate_spans(premasked, len(tokens))
    if sum(end - start for start, end in premasked) >= len(tokens):
        raise ScorerError("all tokens are premasked; nothing left to score")
    return Score(scorer.masked_score(tokens, premasked))


def mlm_aggregate(scorer, request: ScoreRequest) -> Score:
    """Mean of the per-span masked-variant scores.

    With no semiotic spans this is a plain full-sentence score; with one
    span it reduces to that single unmasked variant.
    """
    spans = request.semiotic_spans
    if not spans:
        return mlm_score_variant(scorer, request.tokens, ())
    variants = [
        tuple(s for s in spans if s != keep)
        for keep in spans
    ]
    batch = getattr(scorer, "masked_score_batch", None)
    if batch is not None and len(variants) > 1:
        values = batch([(request.tokens, premask) for premask in variants])
        scores = [Score(v) for v in values]
    else:
        scores = [mlm_score_variant(scorer, request.tokens, premask) for premask in variants]
    return Score(sum(s.value for s in scores) / len(scores))
