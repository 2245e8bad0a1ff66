"""Candidate ranking: score every pruned option, pick the argmin."""

from __future__ import annotations

from dataclasses import dataclass

from ..candidates import Candidate
from ..errors import ScorerError
from .base import AUTOREGRESSIVE, MASKED, Score, ScoreRequest
from .mlm import mlm_aggregate
from .ngram import score_autoregressive


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: Candidate
    score: Score


def score_candidates(candidates, scorer, mode: str = AUTOREGRESSIVE) -> list[ScoredCandidate]:
    """Score each candidate; order preserved for debug output."""
    scored = []
    for cand in candidates:
        if mode == MASKED:
            request = ScoreRequest(cand.tokens, cand.semiotic_token_ranges, mode)
            score = mlm_aggregate(scorer, request)
        elif mode == AUTOREGRESSIVE:
            score = score_autoregressive(scorer, cand.tokens)
        else:
            raise ValueError(f"unknown scoring mode {mode!r}")
        scored.append(ScoredCandidate(cand, score))
    return scored


def select_best(candidates, scorer, mode: str = AUTOREGRESSIVE) -> ScoredCandidate:
    """Argmin by score; ties break toward lower lattice weight, then text."""
    candidates = list(candidates)
    if not candidates:
        raise ScorerError("cannot select from an empty candidate list")
    scored = score_candidates(candidates, scorer, mode)
    return min(
        scored,
        key=lambda sc: (sc.score.value, sc.candidate.weight.ticks, sc.candidate.text),
    )
