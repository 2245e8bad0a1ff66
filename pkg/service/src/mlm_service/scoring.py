"""Pseudo-log-likelihood over a pretrained masked language model.

Each word of the request either becomes its subword pieces or, when covered
by a premask range, a single mask token that is excluded from scoring.
Every remaining subword position is masked one at a time and scored with the
model's probability of the true piece; the result is the negative mean over
scored positions, matching the client's lower-is-better orientation.
"""

from __future__ import annotations

import torch
from transformers import AutoModelForMaskedLM, AutoTokenizer


class OverLengthError(ValueError):
    """Encoded sequence exceeds the configured token limit (413)."""


class AllMaskedError(ValueError):
    """Premask covers every word; nothing is left to score (422)."""


class BadSpanError(ValueError):
    """Premask ranges are overlapping, unordered, or out of bounds (400)."""


def check_premask(premask, n_tokens: int) -> list[tuple[int, int]]:
    spans = [(int(s), int(e)) for s, e in premask]
    prev_end = 0
    for start, end in spans:
        if not (0 <= start < end <= n_tokens):
            raise BadSpanError(f"premask ({start}, {end}) out of bounds for {n_tokens} tokens")
        if start < prev_end:
            raise BadSpanError(f"premask ({start}, {end}) overlaps an earlier range")
        prev_end = end
    return spans


class MaskedLmScorer:
    """Wraps one checkpoint; stateless across requests, eval mode only."""

    def __init__(self, model_id: str, device: str = "cpu",
                 max_batch: int = 32, max_tokens: int = 128):
        self.model_id = model_id
        self.device = torch.device(device)
        self.max_batch = max_batch
        self.max_tokens = max_tokens
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModelForMaskedLM.from_pretrained(model_id).to(self.device)
        self.model.eval()

    def _encode(self, tokens, premask):
        """Piece ids plus a flag per position for premask placeholders."""
        tok = self.tokenizer
        ids = [tok.cls_token_id]
        placeholder = [True]  # specials are never scored
        i = 0
        spans = dict()
        for start, end in premask:
            spans[start] = end
        n = len(tokens)
        while i < n:
            if i in spans:
                ids.append(tok.mask_token_id)
                placeholder.append(True)
                i = spans[i]
                continue
            pieces = tok.encode(tokens[i], add_special_tokens=False)
            if not pieces:
                pieces = [tok.unk_token_id]
            ids.extend(pieces)
            placeholder.extend([False] * len(pieces))
            i += 1
        ids.append(tok.sep_token_id)
        placeholder.append(True)
        return ids, placeholder

    def pll_detail(self, tokens, premask) -> tuple[float, int]:
        """(negative mean log-likelihood, number of scored positions)."""
        tokens = [str(t) for t in tokens]
        spans = check_premask(premask, len(tokens))
        ids, placeholder = self._encode(tokens, spans)
        if len(ids) > self.max_tokens:
            raise OverLengthError(
                f"sequence is {len(ids)} pieces, limit is {self.max_tokens}"
            )
        positions = [i for i, skip in enumerate(placeholder) if not skip]
        if not positions:
            raise AllMaskedError("every word is premasked; nothing to score")

        base = torch.tensor(ids, dtype=torch.long, device=self.device)
        total = 0.0
        with torch.no_grad():
            for chunk_start in range(0, len(positions), self.max_batch):
                chunk = positions[chunk_start : chunk_start + self.max_batch]
                batch = base.unsqueeze(0).repeat(len(chunk), 1)
                for row, pos in enumerate(chunk):
                    batch[row, pos] = self.tokenizer.mask_token_id
                logits = self.model(input_ids=batch).logits
                log_probs = torch.log_softmax(logits, dim=-1)
                for row, pos in enumerate(chunk):
                    total += log_probs[row, pos, ids[pos]].item()
        return -total / len(positions), len(positions)

    def pll(self, tokens, premask) -> float:
        return self.pll_detail(tokens, premask)[0]
