"""Tokenization and semiotic-class tagging.

Whitespace chunks are split from their surrounding punctuation, multi-token
patterns (spelled dates, letter/digit code runs) are grabbed with a bounded
lookahead, and every remaining token is classified on its own.  Ambiguous
tokens keep all their classes ("1/4" is both DATE and FRACTION); the lattice
and the language model sort it out later.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from ..errors import DataFormatError
from .classes import SemioticClass
from .electronic import is_electronic
from .numbers import parse_roman
from .units import _DECIMAL_RE, _FRACTION_RE, _MEASURE_RE, _MONEY_RE, _ORDINAL_SPAN_RE, _TIME_RE

log = logging.getLogger(__name__)

MAX_SENTENCE_CHARS = 10_000
MAX_SEMIOTIC_SPANS = 20

PUNCT_CHARS = set(".,!?;:'\"()[]{}«»“”‘’…—–-/\\&*+=#@~`|^_<>%$£€")

_LEAD_STRIP = set("\"'“‘«([{¿¡")
_TRAIL_STRIP = set("\"'”’»)]}.,!?;:…")

_INT_RE = re.compile(r"^-?\d+$|^-?\d{1,3}(,\d{3})+$")
_YEAR_RE = re.compile(r"^\d{4}$")
_SLASH_DATE_RE = re.compile(r"^\d{1,2}/\d{1,2}/\d{4}$|^\d{4}/\d{1,2}/\d{1,2}$")
_ROMAN_CHARS_RE = re.compile(r"^[IVX]{2,}$")
_SINGLE_ROMAN_RE = re.compile(r"^[IVX]$")
_VERBATIM_MIX_RE = re.compile(r"^(?=.*[A-Za-z])(?=.*\d)[A-Za-z0-9]+$")
_CODE_LETTERS_RE = re.compile(r"^[A-Z]{2}$")
_CODE_DIGITS_RE = re.compile(r"^\d{1,4}$")
_DAY_TOKEN_RE = re.compile(r"^(\d{1,2})(?:st|nd|rd|th)?$", re.IGNORECASE)
_AMPM = {"am", "pm", "a.m", "p.m", "a.m.", "p.m."}


@dataclass(frozen=True)
class TokenSpan:
    """A classified stretch of the input sentence."""

    text: str
    start: int
    end: int
    tokens: tuple[str, ...]
    classes: frozenset[SemioticClass]

    @property
    def is_semiotic(self) -> bool:
        return any(
            c not in (SemioticClass.PLAIN, SemioticClass.PUNCT) for c in self.classes
        )


@dataclass(frozen=True)
class _Tok:
    text: str
    start: int
    end: int


def _tokenize(sentence: str) -> list[_Tok]:
    toks: list[_Tok] = []
    for m in re.finditer(r"\S+", sentence):
        text, start = m.group(), m.start()
        lead = 0
        while lead < len(text) and text[lead] in _LEAD_STRIP:
            toks.append(_Tok(text[lead], start + lead, start + lead + 1))
            lead += 1
        trail: list[_Tok] = []
        end = len(text)
        while end > lead and text[end - 1] in _TRAIL_STRIP:
            trail.append(_Tok(text[end - 1], start + end - 1, start + end))
            end -= 1
        if end > lead:
            toks.append(_Tok(text[lead:end], start + lead, start + end))
        toks.extend(reversed(trail))
    return toks


def _is_day(tok: str) -> bool:
    m = _DAY_TOKEN_RE.match(tok)
    return bool(m) and 1 <= int(m.group(1)) <= 31


def _is_year(tok: str) -> bool:
    return bool(_YEAR_RE.match(tok)) and 1000 <= int(tok) <= 2099


def _match_spelled_date(toks: list[_Tok], i: int, grammar) -> int:
    """Length of a "Month D [,] [Y]" or "D Month [Y]" window at i, or 0."""

    def is_month(t: str) -> bool:
        return t[:1].isupper() and t.lower() in grammar.month_names

    window = [t.text for t in toks[i : i + 4]]
    if len(window) >= 2 and is_month(window[0]) and _is_day(window[1]):
        if len(window) >= 4 and window[2] == "," and _is_year(window[3]):
            return 4
        if len(window) >= 3 and _is_year(window[2]):
            return 3
        return 2
    if len(window) >= 2 and _is_day(window[0]) and is_month(window[1]):
        if len(window) >= 3 and _is_year(window[2]):
            return 3
        return 2
    return 0


def _match_code_run(toks: list[_Tok], i: int) -> int:
    """Length of a verbatim letter/digit code run like "CB 10 1 SD", or 0.

    Three tokens minimum: two-token runs ("10 GB") are overwhelmingly normal
    prose, not codes.
    """
    n = 0
    letters = 0
    while i + n < len(toks):
        t = toks[i + n].text
        if _CODE_LETTERS_RE.match(t):
            letters += 1
        elif not _CODE_DIGITS_RE.match(t):
            break
        n += 1
    return n if n >= 3 and letters >= 1 else 0


def _match_time_ampm(toks: list[_Tok], i: int) -> int:
    """Length 2 when a clock time is followed by its am/pm token."""
    if i + 1 >= len(toks):
        return 0
    if _TIME_RE.match(toks[i].text) and toks[i + 1].text.lower() in _AMPM:
        return 2
    return 0


def _classify_token(text: str, prev: str | None, grammar) -> frozenset[SemioticClass]:
    if all(ch in PUNCT_CHARS for ch in text):
        return frozenset({SemioticClass.PUNCT})
    classes: set[SemioticClass] = set()
    if _INT_RE.match(text):
        classes.add(SemioticClass.CARDINAL)
        if _is_year(text):
            classes.add(SemioticClass.DATE)
    if _DECIMAL_RE.match(text):
        classes.add(SemioticClass.DECIMAL)
    m = _FRACTION_RE.match(text)
    if m:
        if int(m.group(2)) != 0:
            classes.add(SemioticClass.FRACTION)
        month, day = int(m.group(1)), int(m.group(2))
        if 1 <= month <= 12 and 1 <= day <= 31:
            classes.add(SemioticClass.DATE)
    if _SLASH_DATE_RE.match(text):
        classes.add(SemioticClass.DATE)
    if _ORDINAL_SPAN_RE.match(text):
        classes.add(SemioticClass.ORDINAL)
    if _TIME_RE.match(text):
        classes.add(SemioticClass.TIME)
    if _MONEY_RE.match(text):
        classes.add(SemioticClass.MONEY)
    mm = _MEASURE_RE.match(text)
    if mm and mm.group(2) in grammar.units:
        classes.add(SemioticClass.MEASURE)
    if _ROMAN_CHARS_RE.match(text) and parse_roman(text) is not None:
        classes.add(SemioticClass.ROMAN)
    elif (
        _SINGLE_ROMAN_RE.match(text)
        and prev is not None
        and prev.lower().strip(".,") in grammar.roman_context
    ):
        classes.add(SemioticClass.ROMAN)
    if is_electronic(text):
        classes.add(SemioticClass.ELECTRONIC)
    if _VERBATIM_MIX_RE.match(text):
        classes.add(SemioticClass.VERBATIM)
    if not classes:
        classes.add(SemioticClass.PLAIN)
    return frozenset(classes)


def tag(sentence: str, grammar) -> list[TokenSpan]:
    """Tile the sentence into classified spans.

    Degenerate input never errors: an unclassifiable token is just PLAIN.
    At most 20 semiotic spans are kept; extras are demoted to PLAIN with a
    warning, which keeps downstream lattices within the pruning math.
    """
    if len(sentence) > MAX_SENTENCE_CHARS:
        raise DataFormatError(
            f"sentence length {len(sentence)} exceeds {MAX_SENTENCE_CHARS} characters"
        )
    toks = _tokenize(sentence)
    spans: list[TokenSpan] = []
    i = 0
    while i < len(toks):
        for run, cls in (
            (_match_spelled_date(toks, i, grammar), SemioticClass.DATE),
            (_match_code_run(toks, i), SemioticClass.VERBATIM),
            (_match_time_ampm(toks, i), SemioticClass.TIME),
        ):
            if run:
                group = toks[i : i + run]
                spans.append(
                    TokenSpan(
                        text=sentence[group[0].start : group[-1].end],
                        start=group[0].start,
                        end=group[-1].end,
                        tokens=tuple(t.text for t in group),
                        classes=frozenset({cls}),
                    )
                )
                i += run
                break
        else:
            prev = toks[i - 1].text if i > 0 else None
            t = toks[i]
            spans.append(
                TokenSpan(
                    text=t.text,
                    start=t.start,
                    end=t.end,
                    tokens=(t.text,),
                    classes=_classify_token(t.text, prev, grammar),
                )
            )
            i += 1

    n_semiotic = sum(1 for s in spans if s.is_semiotic)
    if n_semiotic > MAX_SEMIOTIC_SPANS:
        log.warning(
            "sentence has %d semiotic spans; demoting all beyond the first %d to PLAIN",
            n_semiotic,
            MAX_SEMIOTIC_SPANS,
        )
        budget = MAX_SEMIOTIC_SPANS
        demoted = []
        for s in spans:
            if s.is_semiotic:
                if budget > 0:
                    budget -= 1
                else:
                    s = TokenSpan(
                        s.text, s.start, s.end, s.tokens, frozenset({SemioticClass.PLAIN})
                    )
            demoted.append(s)
        spans = demoted
    return spans
