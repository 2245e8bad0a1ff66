"""Language-model scoring: built-in n-gram, masked-LM protocol, remote client."""

from .base import AUTOREGRESSIVE, MASKED, Score, ScoreRequest
from .mlm import mlm_aggregate, mlm_score_variant
from .ngram import NgramModel, lm_tokens, score_autoregressive, train_ngram
from .rank import ScoredCandidate, score_candidates, select_best
from .remote import RemoteScorer, remote_score

__all__ = [
    "AUTOREGRESSIVE",
    "MASKED",
    "NgramModel",
    "RemoteScorer",
    "Score",
    "ScoreRequest",
    "ScoredCandidate",
    "lm_tokens",
    "mlm_aggregate",
    "mlm_score_variant",
    "remote_score",
    "score_autoregressive",
    "score_candidates",
    "select_best",
    "train_ngram",
]
