"""HTTP client for the masked-LM scoring service.

Wire protocol: POST ``{endpoint}/v1/score`` with

    {"mode": "masked", "items": [{"tokens": [...], "premask": [[s, e], ...]}]}

and the response is ``{"scores": [...]}`` in request order (negative average
log-likelihood).  Requests are batched up to 32 items; transport failures
are retried twice with backoff and then surface as ScorerError carrying the
failed batch so the pipeline can fall back.
"""

from __future__ import annotations

import concurrent.futures
import time

import requests

from ..errors import ScorerError

MAX_BATCH = 32


class RemoteScorer:
    """Masked scorer backed by the scoring service."""

    def __init__(
        self,
        endpoint: str,
        timeout: float = 30.0,
        retries: int = 2,
        backoff: float = 0.2,
        parallelism: int = 4,
        session: requests.Session | None = None,
    ):
        self.endpoint = endpoint.rstrip("/")
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff
        self.parallelism = max(1, parallelism)
        self._session = session or requests.Session()

    def masked_score(self, tokens, premask) -> float:
        return self.score_batch([(tokens, premask)])[0]

    def masked_score_batch(self, items) -> list[float]:
        return self.score_batch(items)

    def score_batch(self, items) -> list[float]:
        """Score (tokens, premask) pairs, preserving order across chunks."""
        items = [(list(tokens), [list(s) for s in premask]) for tokens, premask in items]
        if not items:
            return []
        chunks = [items[i : i + MAX_BATCH] for i in range(0, len(items), MAX_BATCH)]
        if len(chunks) == 1:
            return self._post_chunk(chunks[0])
        with concurrent.futures.ThreadPoolExecutor(
            max_workers=min(self.parallelism, len(chunks))
        ) as pool:
            results = list(pool.map(self._post_chunk, chunks))
        return [v for chunk in results for v in chunk]

    def _post_chunk(self, chunk) -> list[float]:
        body = {
            "mode": "masked",
            "items": [{"tokens": tokens, "premask": premask} for tokens, premask in chunk],
        }
        url = f"{self.endpoint}/v1/score"
        last_error = None
        for attempt in range(self.retries + 1):
            if attempt:
                time.sleep(self.backoff * (2 ** (attempt - 1)))
            try:
                resp = self._session.post(url, json=body, timeout=self.timeout)
                resp.raise_for_status()
                payload = resp.json()
                scores = payload.get("scores")
                if not isinstance(scores, list) or len(scores) != len(chunk):
                    raise ScorerError(
                        f"malformed response: expected {len(chunk)} scores, "
                        f"got {scores!r:.80}",
                        batch=chunk,
                    )
                return [float(v) for v in scores]
            except ScorerError:
                raise
            except (requests.RequestException, ValueError) as e:
                last_error = e
        raise ScorerError(
            f"scoring service unreachable after {self.retries + 1} attempts: {last_error}",
            batch=chunk,
        )


def remote_score(endpoint: str, batch, **kwargs) -> list[float]:
    """One-shot convenience over RemoteScorer for a batch of requests."""
    scorer = RemoteScorer(endpoint, **kwargs)
    return scorer.score_batch([(r.tokens, r.semiotic_spans) for r in batch])
