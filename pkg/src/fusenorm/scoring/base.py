"""Scoring contract shared by all language-model backends.

Scores are negative average log-likelihood per scored token, so lower is
always better and one argmin serves both autoregressive ranking (perplexity
is ``exp(value)``, order-equivalent) and masked pseudo-log-likelihood.
Scores are only comparable between candidates of the same sentence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

AUTOREGRESSIVE = "autoregressive"
MASKED = "masked"


@dataclass(frozen=True)
class Score:
    """Lower-is-better negative average log-likelihood."""

    value: float

    @property
    def perplexity(self) -> float:
        return math.exp(self.value)


@dataclass(frozen=True)
class ScoreRequest:
    """A candidate's tokens plus the token ranges of its semiotic spans."""

    tokens: tuple[str, ...]
    semiotic_spans: tuple[tuple[int, int], ...]
    mode: str = MASKED

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "semiotic_spans", tuple(tuple(s) for s in self.semiotic_spans))
        validate_spans(self.semiotic_spans, len(self.tokens))


def validate_spans(spans, n_tokens: int) -> None:
    """Spans must be ordered, disjoint, in-bounds, and non-empty."""
    prev_end = 0
    for start, end in spans:
        if not (0 <= start < end <= n_tokens):
            raise ValueError(f"span ({start}, {end}) out of bounds for {n_tokens} tokens")
        if start < prev_end:
            raise ValueError(f"span ({start}, {end}) overlaps an earlier span")
        prev_end = end
