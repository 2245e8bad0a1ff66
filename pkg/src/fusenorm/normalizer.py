"""The TextNormalizer estimator: written text in, spoken text out.

Follows the scikit-learn protocol so it drops into pipelines: ``fit`` wires
up the grammar and the scorer (training the built-in n-gram model when given
corpus lines), ``transform``/``predict`` normalize written sentences.

Scorer modes:
  - ``det``     single shortest path, no language model
  - ``ngram``   built-in autoregressive n-gram (train on corpus or load a model)
  - ``remote``  masked-LM scoring service over HTTP

When the scorer fails at transform time the sentence falls back to the
deterministic shortest path with a warning; output is never empty.  One
transport failure trips a breaker so the rest of the batch skips the dead
endpoint instead of timing out sentence by sentence.
"""

from __future__ import annotations

import concurrent.futures
import logging

from sklearn.base import BaseEstimator, TransformerMixin

from .candidates import Candidate, PruneConfig, build_lattice, generate
from .errors import ScorerError
from .grammars import GrammarSet
from .scoring import AUTOREGRESSIVE, MASKED, NgramModel, RemoteScorer, select_best, train_ngram

log = logging.getLogger(__name__)

SCORER_MODES = ("det", "ngram", "remote")


def check_sentences(X) -> list[str]:
    """Validate transform input: an iterable of strings, not one bare string."""
    if isinstance(X, str):
        raise TypeError("expected an iterable of sentences, got a single string; wrap it in a list")
    sentences = list(X)
    for i, s in enumerate(sentences):
        if not isinstance(s, str):
            raise TypeError(f"sentence {i} is {type(s).__name__}, expected str")
    return sentences


class TextNormalizer(BaseEstimator, TransformerMixin):
    """Convert written-form sentences to spoken form.

    Parameters mirror the CLI flags.  ``fit(X)`` expects normalized-text
    corpus lines when ``scorer="ngram"`` and no ``lm_path`` is given;
    otherwise ``X`` is ignored and may be None.
    """

    def __init__(
        self,
        scorer: str = "ngram",
        grammar_dir: str | None = None,
        lm_path: str | None = None,
        endpoint: str | None = None,
        delta: float = 0.2,
        max_candidates: int = 64,
        order: int = 3,
        fallback: bool = True,
        jobs: int | None = None,
        timeout: float = 30.0,
        retries: int = 2,
        backoff: float = 0.2,
    ):
        self.scorer = scorer
        self.grammar_dir = grammar_dir
        self.lm_path = lm_path
        self.endpoint = endpoint
        self.delta = delta
        self.max_candidates = max_candidates
        self.order = order
        self.fallback = fallback
        self.jobs = jobs
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff

    def fit(self, X=None, y=None):
        if self.scorer not in SCORER_MODES:
            raise ValueError(f"scorer must be one of {SCORER_MODES}, got {self.scorer!r}")
        self.grammar_ = GrammarSet(self.grammar_dir) if self.grammar_dir else GrammarSet.default()
        self.prune_ = PruneConfig(delta=self.delta, max_candidates=self.max_candidates)
        if self.scorer == "det":
            self.scorer_ = None
            self.mode_ = None
        elif self.scorer == "ngram":
            if self.lm_path:
                self.scorer_ = NgramModel.load(self.lm_path)
            else:
                if X is None:
                    raise ValueError(
                        "scorer='ngram' needs corpus lines in fit(X) or an lm_path"
                    )
                self.scorer_ = train_ngram(check_sentences(X), order=self.order)
            self.mode_ = AUTOREGRESSIVE
        else:
            if not self.endpoint:
                raise ValueError("scorer='remote' needs an endpoint")
            self.scorer_ = RemoteScorer(
                self.endpoint,
                timeout=self.timeout,
                retries=self.retries,
                backoff=self.backoff,
            )
            self.mode_ = MASKED
        return self

    def _check_fitted(self):
        if not hasattr(self, "grammar_"):
            raise RuntimeError("this TextNormalizer is not fitted yet; call fit() first")

    def normalize_candidate(self, sentence: str, _breaker=None) -> Candidate:
        """Full pipeline for one sentence, returning the winning candidate."""
        self._check_fitted()
        lattice = build_lattice(sentence, self.grammar_)
        cands = generate(lattice, self.prune_)
        # candidates come out cheapest-first, so cands[0] is the
        # deterministic shortest path and serves as the fallback
        if self.scorer_ is None or len(cands) == 1:
            return cands[0]
        if _breaker is not None and _breaker.get("open"):
            return cands[0]
        try:
            return select_best(cands, self.scorer_, self.mode_).candidate
        except ScorerError as e:
            if not self.fallback:
                raise
            if _breaker is not None:
                if not _breaker.get("open"):
                    log.warning(
                        "scorer failed (%s); falling back to deterministic output "
                        "for the rest of this batch",
                        e,
                    )
                _breaker["open"] = True
            else:
                log.warning("scorer failed (%s); falling back to deterministic output", e)
            return cands[0]

    def normalize(self, sentence: str) -> str:
        return self.normalize_candidate(sentence).text

    def transform(self, X) -> list[str]:
        """Normalize sentences, preserving input order."""
        self._check_fitted()
        sentences = check_sentences(X)
        breaker: dict = {}
        jobs = self.jobs or 1
        if jobs <= 1 or len(sentences) <= 1:
            return [self.normalize_candidate(s, breaker).text for s in sentences]
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            return [
                c.text
                for c in pool.map(lambda s: self.normalize_candidate(s, breaker), sentences)
            ]

    def predict(self, X) -> list[str]:
        return self.transform(X)
