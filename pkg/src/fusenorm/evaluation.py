"""Dataset loading, the equivalence-relaxed accuracy metric, error buckets.

Sentence accuracy treats a hypothesis as correct when its canonical form
equals the reference's.  Canonicalization lowercases, strips punctuation,
and applies token-level equivalence rules to a fixed point, so different
valid formats of the same phrase ("the fifth of November two thousand
twenty" vs "November fifth twenty twenty") compare equal while genuinely
different readings ("fourteen" vs "fourth") never merge.

Equivalence rules live in a data file, one ``pattern<TAB>rewrite`` per line.
Pattern tokens are literal words or one of the capture classes
``<month>``, ``<ordday>`` (an ordinal day, one or two words), ``<digit>``
(a single digit word), ``<yearcardinal>`` (a cardinal word run naming a year
1100..2099).  Rewrite tokens are literals or the same class names, copying
that capture; the special rewrite ``@yearpair`` replaces a captured year
cardinal with its two-digit-pair reading.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DataFormatError
from .grammars.dates import year_pairwise
from .grammars.numbers import parse_cardinal_words, verbalize_ordinal

_DATA_DIR = Path(__file__).parent / "data"
DEFAULT_RULES_PATH = _DATA_DIR / "equiv_rules.tsv"

_MONTH_WORDS = {
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december",
}
_DIGIT_WORDS = {"zero", "one", "two", "three", "four", "five", "six",
                "seven", "eight", "nine"}
_ORDINAL_DAYS = {tuple(verbalize_ordinal(n)) for n in range(1, 32)}

_NUMBER_WORDS = set()
for _n in list(range(0, 21)) + [30, 40, 50, 60, 70, 80, 90, 100, 1000]:
    from .grammars.numbers import verbalize_cardinal as _vc

    _NUMBER_WORDS.update(_vc(_n))
    if _n:
        _NUMBER_WORDS.update(verbalize_ordinal(_n))
_NUMBER_WORDS.update({"hundred", "thousand", "million", "billion", "trillion", "oh"})

_CLASS_MARKERS = _MONTH_WORDS | {
    "half", "halves", "quarter", "quarters", "divided", "point", "dot", "at",
    "o'clock", "oclock",
}

BUCKETS = (
    "NUMBER",
    "UNKNOWN_FORMAT",
    "HALLUCINATION",
    "OMISSION",
    "CLASS_AMBIGUITY",
    "URL_SPLITTING",
    "OTHER",
)


@dataclass(frozen=True)
class ParallelExample:
    written: str
    spoken: str
    source: str = ""

    def __post_init__(self):
        if not self.written or not self.spoken:
            raise ValueError("parallel example needs non-empty written and spoken sides")


@dataclass(frozen=True)
class EquivRule:
    pattern: tuple[str, ...]
    rewrite: tuple[str, ...]


@dataclass(frozen=True)
class EvalError:
    index: int
    hypothesis: str
    reference: str
    bucket: str
    written: str = ""


@dataclass
class EvalReport:
    total: int
    correct: int
    errors: list[EvalError] = field(default_factory=list)

    @property
    def accuracy(self) -> float:
        return 100.0 * self.correct / self.total if self.total else 100.0

    def format_table(self) -> str:
        lines = [
            f"sentences: {self.total}",
            f"correct:   {self.correct}",
            f"accuracy:  {self.accuracy:.2f}",
        ]
        if self.errors:
            lines.append("")
            lines.append(f"{'#':>5}  {'bucket':<16} hypothesis | reference")
            for e in self.errors:
                lines.append(f"{e.index:>5}  {e.bucket:<16} {e.hypothesis} | {e.reference}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "total": self.total,
                "correct": self.correct,
                "accuracy": round(self.accuracy, 4),
                "errors": [
                    {
                        "index": e.index,
                        "hypothesis": e.hypothesis,
                        "reference": e.reference,
                        "bucket": e.bucket,
                        "written": e.written,
                    }
                    for e in self.errors
                ],
            },
            indent=2,
        )


# -- equivalence rules ---------------------------------------------------------


def load_equiv_rules(path: str | Path | None = None) -> list[EquivRule]:
    path = Path(path) if path else DEFAULT_RULES_PATH
    rules = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise DataFormatError("expected pattern<TAB>rewrite", path=path, line=lineno)
        pattern, rewrite = line.split("\t", 1)
        rules.append(EquivRule(tuple(pattern.split()), tuple(rewrite.split())))
    return rules


def _match_class(name: str, tokens: list[str], i: int) -> list[tuple[int, tuple[str, ...]]]:
    """Possible (consumed, captured) matches of a capture class at i."""
    if name == "month":
        if i < len(tokens) and tokens[i] in _MONTH_WORDS:
            return [(1, (tokens[i],))]
        return []
    if name == "digit":
        if i < len(tokens) and tokens[i] in _DIGIT_WORDS:
            return [(1, (tokens[i],))]
        return []
    if name == "ordday":
        out = []
        for length in (2, 1):
            cand = tuple(tokens[i : i + length])
            if len(cand) == length and cand in _ORDINAL_DAYS:
                out.append((length, cand))
        return out
    if name == "yearcardinal":
        out = []
        for length in range(min(6, len(tokens) - i), 1, -1):
            cand = tokens[i : i + length]
            value = parse_cardinal_words(cand)
            if value is not None and 1100 <= value <= 2099:
                out.append((length, tuple(cand)))
        return out
    raise DataFormatError(f"unknown capture class <{name}>")


_CLASS_TOKEN = re.compile(r"^<(\w+)>$")


def _try_rule(rule: EquivRule, tokens: list[str], i: int) -> tuple[int, list[str]] | None:
    """Match the rule at position i; return (consumed, replacement) or None."""

    def match(pi: int, ti: int, captures: dict[str, tuple[str, ...]]):
        if pi == len(rule.pattern):
            return ti, captures
        ptok = rule.pattern[pi]
        m = _CLASS_TOKEN.match(ptok)
        if m:
            for consumed, captured in _match_class(m.group(1), tokens, ti):
                result = match(pi + 1, ti + consumed, {**captures, m.group(1): captured})
                if result:
                    return result
            return None
        if ti < len(tokens) and tokens[ti] == ptok:
            return match(pi + 1, ti + 1, captures)
        return None

    result = match(0, i, {})
    if not result:
        return None
    end, captures = result
    replacement: list[str] = []
    for rtok in rule.rewrite:
        if rtok == "@yearpair":
            value = parse_cardinal_words(captures["yearcardinal"])
            replacement.extend(year_pairwise(value))
            continue
        m = _CLASS_TOKEN.match(rtok)
        if m:
            replacement.extend(captures[m.group(1)])
        else:
            replacement.append(rtok)
    return end - i, replacement


_MAX_REWRITES = 200


def _apply_rules(tokens: list[str], rules: list[EquivRule]) -> list[str]:
    rewrites = 0
    changed = True
    while changed and rewrites < _MAX_REWRITES:
        changed = False
        i = 0
        while i < len(tokens):
            for rule in rules:
                hit = _try_rule(rule, tokens, i)
                if hit and tokens[i : i + hit[0]] != hit[1]:
                    consumed, replacement = hit
                    tokens = tokens[:i] + replacement + tokens[i + consumed :]
                    rewrites += 1
                    changed = True
                    break
            else:
                i += 1
    return tokens


_STRIP_RE = re.compile(r"[^a-z0-9\s]")


def canonicalize(text: str, rules: list[EquivRule] | None = None) -> str:
    """Lowercase, strip punctuation, collapse whitespace, rewrite to a fixed point."""
    if rules is None:
        rules = load_equiv_rules()
    lowered = text.lower()
    stripped = _STRIP_RE.sub(" ", lowered)
    tokens = stripped.split()
    tokens = _apply_rules(tokens, rules)
    return " ".join(tokens)


# -- metric ---------------------------------------------------------------------


_RUN_RE = re.compile(r"[a-z]+|\d+")


def _bucket_error(hyp_tokens, ref_tokens, written: str) -> str:
    hyp_only = [t for t in hyp_tokens if t not in set(ref_tokens)]
    ref_only = [t for t in ref_tokens if t not in set(hyp_tokens)]
    diff = hyp_only + ref_only
    written_runs = set(_RUN_RE.findall(written.lower())) if written else set()

    # raw pieces of the written form surviving in the hypothesis
    if any(any(ch.isdigit() for ch in t) or (len(t) > 0 and t in written_runs and t not in ref_tokens)
           for t in hyp_only):
        return "UNKNOWN_FORMAT"
    if any(t in ("dot", "at") for t in hyp_tokens + ref_tokens) and any(
        len(t) == 1 for t in diff
    ):
        return "URL_SPLITTING"
    if any(t in _CLASS_MARKERS for t in diff):
        return "CLASS_AMBIGUITY"
    if any(t in _NUMBER_WORDS for t in diff):
        return "NUMBER"
    if hyp_only and all(t not in written_runs for t in hyp_only):
        return "HALLUCINATION"
    if not hyp_only and ref_only:
        return "OMISSION"
    return "OTHER"


def evaluate(hypotheses, references, rules: list[EquivRule] | None = None,
             writtens=None) -> EvalReport:
    """Sentence accuracy under canonical equality, errors bucketed for triage.

    Buckets are heuristic labels for reading the report, not part of the
    pass/fail decision.
    """
    hypotheses = list(hypotheses)
    references = list(references)
    if len(hypotheses) != len(references):
        raise DataFormatError(
            f"hypothesis/reference length mismatch: {len(hypotheses)} vs {len(references)}"
        )
    if rules is None:
        rules = load_equiv_rules()
    writtens = list(writtens) if writtens else [""] * len(hypotheses)

    correct = 0
    errors = []
    for i, (hyp, ref) in enumerate(zip(hypotheses, references)):
        hyp_c = canonicalize(hyp, rules)
        ref_c = canonicalize(ref, rules)
        if hyp_c == ref_c:
            correct += 1
            continue
        bucket = _bucket_error(hyp_c.split(), ref_c.split(), writtens[i])
        errors.append(EvalError(i, hyp, ref, bucket, writtens[i]))
    return EvalReport(total=len(hypotheses), correct=correct, errors=errors)


# -- GoogleTN-format loader ------------------------------------------------------

_EOS = "<eos>"
_SELF = "<self>"
_SIL = "sil"


def read_google_tn_rows(path: str | Path) -> list[list[tuple[str, str, str]]]:
    """Token rows per sentence: (class, written, spoken), separators removed."""
    sentences: list[list[tuple[str, str, str]]] = []
    current: list[tuple[str, str, str]] = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if fields[0] == _EOS:
            if current:
                sentences.append(current)
                current = []
            continue
        if len(fields) != 3:
            raise DataFormatError(
                f"expected class<TAB>written<TAB>spoken, got {len(fields)} fields",
                path=path,
                line=lineno,
            )
        current.append((fields[0], fields[1], fields[2]))
    if current:
        sentences.append(current)
    return sentences


def format_google_tn_rows(sentences) -> str:
    """Inverse of read_google_tn_rows; used by the round-trip tests."""
    lines = []
    for rows in sentences:
        for cls, written, spoken in rows:
            lines.append(f"{cls}\t{written}\t{spoken}")
        lines.append(f"{_EOS}\t{_EOS}")
    return "\n".join(lines) + "\n"


def load_google_tn(path: str | Path) -> list[ParallelExample]:
    """Sentence-level pairs reconstructed from per-token rows."""
    from .candidates import detokenize

    examples = []
    for rows in read_google_tn_rows(path):
        written_tokens = [w for _, w, _ in rows]
        spoken_tokens = []
        for _, written, spoken in rows:
            if spoken == _SELF or spoken == _SIL:
                spoken_tokens.append(written)
            else:
                spoken_tokens.extend(spoken.split())
        examples.append(
            ParallelExample(
                written=detokenize(written_tokens),
                spoken=detokenize(spoken_tokens),
                source=str(path),
            )
        )
    return examples
