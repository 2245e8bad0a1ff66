"""Date and roman-numeral verbalizers.

Dates come out in one canonical surface per interpretation ("January
fourth", never also "the fourth of January"); the evaluation layer treats
the alternative orders as equivalent instead.  Bare years get both customary
readings (pairwise "nineteen seventy" and the full cardinal) because neither
is canonical.
"""

from __future__ import annotations

import re

from .classes import Reading, SemioticClass, make_reading
from .numbers import verbalize_cardinal, verbalize_ordinal

_MDY_RE = re.compile(r"^(\d{1,2})/(\d{1,2})(?:/(\d{4}))?$")
_YMD_RE = re.compile(r"^(\d{4})/(\d{1,2})/(\d{1,2})$")
_YEAR_RE = re.compile(r"^\d{4}$")

YEAR_MIN, YEAR_MAX = 1000, 2099


def year_pairwise(year: int) -> list[str]:
    """Two-digit-pair reading: 1970 -> nineteen seventy, 1905 -> nineteen oh five."""
    century, rest = divmod(year, 100)
    if rest == 0:
        return verbalize_cardinal(century) + ["hundred"]
    if rest < 10:
        return verbalize_cardinal(century) + ["oh"] + verbalize_cardinal(rest)
    return verbalize_cardinal(century) + verbalize_cardinal(rest)


def year_readings(year: int) -> list[list[str]]:
    """Pairwise and full-cardinal readings, deduplicated."""
    pair = year_pairwise(year)
    full = verbalize_cardinal(year)
    return [pair] if pair == full else [pair, full]


def _month_day(month_name: str, day: int, year: int | None) -> list[str]:
    tokens = [month_name] + verbalize_ordinal(day)
    if year is not None:
        tokens += year_pairwise(year)
    return tokens


def verbalize_date(span: str, grammar) -> list[Reading]:
    """Readings for one date-shaped string; empty list when it is not one.

    Handles M/D, M/D/YYYY, YYYY/MM/DD, bare YYYY, and the spelled forms
    "Month D [Y]" / "D Month [Y]" (already joined with single spaces).
    """
    month_names = grammar.month_names
    text = span.strip()

    m = _MDY_RE.match(text)
    if m:
        month, day = int(m.group(1)), int(m.group(2))
        year = int(m.group(3)) if m.group(3) else None
        if 1 <= month <= 12 and 1 <= day <= 31:
            return [make_reading(SemioticClass.DATE, _month_day(grammar.months[month], day, year))]
        return []

    m = _YMD_RE.match(text)
    if m:
        year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
        if 1 <= month <= 12 and 1 <= day <= 31 and YEAR_MIN <= year <= YEAR_MAX:
            return [make_reading(SemioticClass.DATE, _month_day(grammar.months[month], day, year))]
        return []

    if _YEAR_RE.match(text):
        year = int(text)
        if YEAR_MIN <= year <= YEAR_MAX:
            return [make_reading(SemioticClass.DATE, r) for r in year_readings(year)]
        return []

    # spelled month forms: "July 4", "4 July 1776", "July 4, 1776"
    tokens = [t for t in re.split(r"[,\s]+", text) if t]
    month = day = year = None
    if len(tokens) in (2, 3):
        first, second = tokens[0], tokens[1]
        if first.lower() in month_names and _is_day(second):
            month, day = month_names[first.lower()], _day_value(second)
        elif _is_day(first) and second.lower() in month_names:
            month, day = month_names[second.lower()], _day_value(first)
        if month is not None and len(tokens) == 3:
            if _YEAR_RE.match(tokens[2]) and YEAR_MIN <= int(tokens[2]) <= YEAR_MAX:
                year = int(tokens[2])
            else:
                return []
    if month is not None and day is not None:
        return [make_reading(SemioticClass.DATE, _month_day(grammar.months[month], day, year))]
    return []


_DAY_RE = re.compile(r"^(\d{1,2})(?:st|nd|rd|th)?$", re.IGNORECASE)


def _is_day(tok: str) -> bool:
    m = _DAY_RE.match(tok)
    return bool(m) and 1 <= int(m.group(1)) <= 31


def _day_value(tok: str) -> int:
    return int(_DAY_RE.match(tok).group(1))


def verbalize_roman(span: str, context_word: str | None = None) -> list[Reading]:
    """Cardinal, "the Nth", and bare ordinal readings for a roman numeral.

    The language model is the disambiguator ("Henry the third" vs "Chapter
    three"); ``context_word`` is accepted for callers that track it but does
    not change the reading set.
    """
    from .numbers import parse_roman

    value = parse_roman(span)
    if value is None:
        return []
    ordinal = verbalize_ordinal(value)
    return [
        make_reading(SemioticClass.ROMAN, verbalize_cardinal(value)),
        make_reading(SemioticClass.ROMAN, ["the"] + ordinal),
        make_reading(SemioticClass.ROMAN, ordinal),
    ]
