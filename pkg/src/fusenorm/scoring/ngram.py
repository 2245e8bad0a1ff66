"""Witten-Bell interpolated n-gram model with a binary model file.

This is the self-contained autoregressive scorer: train it on a plain-text
corpus of already-normalized sentences and rank candidates by perplexity.
Witten-Bell needs no tuned discounts, which makes it well behaved on the
tiny corpora this gets used with.

Model file layout (magic ``FNLM1``), all integers big-endian:

    bytes 0-4   magic b"FNLM1"
    byte  5     order (uint8)
    uint32      vocabulary size V
    V times     uint16 length + UTF-8 word bytes (sorted, id = position)
    per order k = 1..order:
        uint32  number of entries
        entries k * uint32 word ids + uint32 count, sorted by id tuple

Context totals and novel-continuation counts are rebuilt at load time, so
the file stores raw counts only.  Training is deterministic: identical
corpus bytes give identical model bytes.
"""

from __future__ import annotations

import math
import struct
from pathlib import Path

from ..errors import DataFormatError, ScorerError
from .base import Score

MAGIC = b"FNLM1"
BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"

UNK_LOG_FLOOR = math.log(1e-7)  # scoring-time floor; distributions still sum to 1

_PUNCT_ONLY = set(".,!?;:'\"()[]{}«»“”‘’…—–-/\\&*+=#@~`|^_<>")


def lm_tokens(tokens) -> list[str]:
    """Shared train/score normalization: lowercase, drop pure punctuation."""
    out = []
    for tok in tokens:
        if tok and all(ch in _PUNCT_ONLY for ch in tok):
            continue
        out.append(tok.lower())
    return out


class NgramModel:
    """Immutable after training/loading; safe for concurrent scoring."""

    def __init__(self, order: int, counts: dict[tuple[str, ...], int]):
        if order < 1:
            raise ValueError("order must be at least 1")
        self.order = order
        self.counts = counts
        self._rebuild_tables()

    def _rebuild_tables(self):
        self.vocab = sorted({ng[-1] for ng in self.counts if len(ng) == 1})
        self._vocab_set = set(self.vocab)
        # context -> total count, and context -> number of distinct next types
        self.context_totals: dict[tuple[str, ...], int] = {}
        self.context_types: dict[tuple[str, ...], int] = {}
        for ng, c in self.counts.items():
            ctx = ng[:-1]
            self.context_totals[ctx] = self.context_totals.get(ctx, 0) + c
            self.context_types[ctx] = self.context_types.get(ctx, 0) + 1
        # vocabulary plus UNK for the uniform base distribution
        self._uniform = 1.0 / (len(self.vocab) + 1)

    def _known(self, word: str) -> str:
        # BOS never enters the vocabulary but is a legitimate context symbol
        if word == BOS or word in self._vocab_set:
            return word
        return UNK

    def prob(self, word: str, context: tuple[str, ...]) -> float:
        """Witten-Bell interpolated P(word | context), summing to 1 over
        vocabulary + UNK for every context."""
        word = self._known(word)
        context = context[len(context) - self.order + 1 :] if self.order > 1 else ()
        context = tuple(self._known(w) for w in context)
        return self._prob(word, context)

    def _prob(self, word: str, context: tuple[str, ...]) -> float:
        if not context:
            total = self.context_totals.get((), 0)
            types = self.context_types.get((), 0)
            if total + types == 0:
                return self._uniform
            count = self.counts.get((word,), 0)
            return (count + types * self._uniform) / (total + types)
        lower = self._prob(word, context[1:])
        total = self.context_totals.get(context, 0)
        types = self.context_types.get(context, 0)
        if total + types == 0:
            return lower
        count = self.counts.get(context + (word,), 0)
        return (count + types * lower) / (total + types)

    def log_prob(self, word: str, context: tuple[str, ...]) -> float:
        return max(math.log(self.prob(word, context)), UNK_LOG_FLOOR)

    # -- serialization --------------------------------------------------------

    def save(self, path: str | Path) -> None:
        words = sorted({w for ng in self.counts for w in ng})
        ids = {w: i for i, w in enumerate(words)}
        chunks = [MAGIC, struct.pack(">B", self.order), struct.pack(">I", len(words))]
        for w in words:
            raw = w.encode("utf-8")
            chunks.append(struct.pack(">H", len(raw)) + raw)
        for k in range(1, self.order + 1):
            grams = sorted(
                (tuple(ids[w] for w in ng), c) for ng, c in self.counts.items() if len(ng) == k
            )
            chunks.append(struct.pack(">I", len(grams)))
            for id_tuple, c in grams:
                chunks.append(struct.pack(f">{k}I", *id_tuple) + struct.pack(">I", c))
        Path(path).write_bytes(b"".join(chunks))

    @classmethod
    def load(cls, path: str | Path) -> "NgramModel":
        data = Path(path).read_bytes()
        if data[:5] != MAGIC:
            raise DataFormatError("not an FNLM1 model file", path=path)
        pos = 5
        (order,) = struct.unpack_from(">B", data, pos)
        pos += 1
        (n_words,) = struct.unpack_from(">I", data, pos)
        pos += 4
        words = []
        for _ in range(n_words):
            (n,) = struct.unpack_from(">H", data, pos)
            pos += 2
            words.append(data[pos : pos + n].decode("utf-8"))
            pos += n
        counts: dict[tuple[str, ...], int] = {}
        for k in range(1, order + 1):
            (n_grams,) = struct.unpack_from(">I", data, pos)
            pos += 4
            for _ in range(n_grams):
                parts = struct.unpack_from(f">{k + 1}I", data, pos)
                pos += 4 * (k + 1)
                counts[tuple(words[i] for i in parts[:-1])] = parts[-1]
        if pos != len(data):
            raise DataFormatError("trailing bytes in model file", path=path)
        return cls(order, counts)

    # -- scoring --------------------------------------------------------------

    def sequence_log_probs(self, tokens) -> list[float]:
        """Conditional log-probabilities of each token plus the end marker."""
        toks = lm_tokens(tokens)
        history: list[str] = [BOS] * (self.order - 1)
        out = []
        for tok in toks + [EOS]:
            out.append(self.log_prob(tok, tuple(history)))
            if self.order > 1:
                history = (history + [tok])[-(self.order - 1) :]
        return out


def train_ngram(corpus_lines, order: int = 3) -> NgramModel:
    """Count-based training over whitespace-tokenized, LM-normalized lines."""
    counts: dict[tuple[str, ...], int] = {}
    n_lines = 0
    for line in corpus_lines:
        toks = lm_tokens(line.split())
        if not toks:
            continue
        n_lines += 1
        padded = [BOS] * (order - 1) + toks + [EOS]
        for k in range(1, order + 1):
            lo = max(0, order - k)  # skip all-BOS prefixes shorter than needed
            for i in range(lo, len(padded) - k + 1):
                ng = tuple(padded[i : i + k])
                if k == 1 and ng == (BOS,):
                    continue
                counts[ng] = counts.get(ng, 0) + 1
    if n_lines == 0:
        raise ScorerError("training corpus is empty")
    return NgramModel(order, counts)


def score_autoregressive(model, tokens) -> Score:
    """Negative mean log P(token | prefix), end marker included."""
    toks = [t for t in tokens]
    if not lm_tokens(toks):
        raise ScorerError("cannot score an empty token sequence")
    log_probs = model.sequence_log_probs(toks)
    return Score(-sum(log_probs) / len(log_probs))
