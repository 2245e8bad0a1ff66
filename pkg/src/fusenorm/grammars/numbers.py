"""English number naming: cardinals, ordinals, digit strings, roman numerals.

American style, no "and" ("ten thousand one", not "ten thousand and one").
All functions return token lists so callers can splice them into lattices.
"""

from __future__ import annotations

import re

MAX_CARDINAL = 10**15
MAX_ORDINAL = 10**6

_UNITS = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen",
]

_TENS = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety",
]

_SCALES = ["", "thousand", "million", "billion", "trillion"]

_ORDINAL_IRREGULAR = {
    "one": "first",
    "two": "second",
    "three": "third",
    "five": "fifth",
    "eight": "eighth",
    "nine": "ninth",
    "twelve": "twelfth",
}


def verbalize_cardinal(n: int) -> list[str]:
    """0 <= n < 10**15 -> cardinal words, e.g. 10001 -> ten thousand one."""
    if not 0 <= n < MAX_CARDINAL:
        raise ValueError(f"cardinal out of range: {n}")
    if n == 0:
        return ["zero"]
    words: list[str] = []
    groups = []
    while n > 0:
        groups.append(n % 1000)
        n //= 1000
    for i in range(len(groups) - 1, -1, -1):
        g = groups[i]
        if g == 0:
            continue
        words.extend(_three_digits(g))
        if _SCALES[i]:
            words.append(_SCALES[i])
    return words


def _three_digits(n: int) -> list[str]:
    words = []
    if n >= 100:
        words.append(_UNITS[n // 100])
        words.append("hundred")
        n %= 100
    if n >= 20:
        words.append(_TENS[n // 10])
        if n % 10:
            words.append(_UNITS[n % 10])
    elif n > 0:
        words.append(_UNITS[n])
    return words


def verbalize_ordinal(n: int) -> list[str]:
    """1 <= n < 10**6 -> ordinal words, e.g. 4 -> fourth, 21 -> twenty first."""
    if not 1 <= n < MAX_ORDINAL:
        raise ValueError(f"ordinal out of range: {n}")
    words = verbalize_cardinal(n)
    last = words[-1]
    if last in _ORDINAL_IRREGULAR:
        words[-1] = _ORDINAL_IRREGULAR[last]
    elif last.endswith("ty"):
        words[-1] = last[:-1] + "ieth"
    else:
        words[-1] = last + "th"
    return words


def verbalize_digits(digits: str) -> list[str]:
    """Digit string spoken one digit at a time: "10" -> one zero."""
    return [_UNITS[int(d)] for d in digits]


_ROMAN_RE = re.compile(r"^X{0,3}(IX|IV|V?I{0,3})$")
_ROMAN_VALUES = {"I": 1, "V": 5, "X": 10}


def parse_roman(text: str) -> int | None:
    """Canonical roman numeral I..XXXIX -> value, else None."""
    if not text or not _ROMAN_RE.match(text):
        return None
    total = 0
    prev = 0
    for ch in reversed(text):
        v = _ROMAN_VALUES[ch]
        total += v if v >= prev else -v
        prev = max(prev, v)
    return total if 1 <= total <= 39 else None


_WORD_VALUES = {w: i for i, w in enumerate(_UNITS)}
_WORD_VALUES.update({w: (i * 10) for i, w in enumerate(_TENS) if w})
_SCALE_VALUES = {"hundred": 100, "thousand": 1000, "million": 10**6,
                 "billion": 10**9, "trillion": 10**12}


def parse_cardinal_words(tokens) -> int | None:
    """Inverse of verbalize_cardinal for well-formed word sequences.

    Returns None when the tokens are not a valid cardinal reading (used by
    the evaluation rules to recognize year phrases, so it is strict: "twenty
    twenty" is not a cardinal, "two thousand twenty" is).
    """
    tokens = list(tokens)
    if not tokens:
        return None
    if tokens == ["zero"]:
        return 0
    total = 0
    group = 0
    for tok in tokens:
        if tok in _WORD_VALUES:
            group += _WORD_VALUES[tok]
        elif tok == "hundred":
            if group == 0:
                return None
            group *= 100
        elif tok in _SCALE_VALUES:
            if group == 0:
                return None
            total += group * _SCALE_VALUES[tok]
            group = 0
        else:
            return None
    total += group
    # canonical-form check rejects loose accumulations like "twenty twenty"
    if not 0 < total < MAX_CARDINAL or verbalize_cardinal(total) != tokens:
        return None
    return total
