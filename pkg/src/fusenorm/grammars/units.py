"""Verbalizers for measures, money, times, decimals, and fractions."""

from __future__ import annotations

import re

from .classes import Reading, SemioticClass, make_reading
from .numbers import MAX_CARDINAL, verbalize_cardinal, verbalize_digits, verbalize_ordinal

_NUMBER = r"-?\d{1,3}(?:,\d{3})+|-?\d+"
_MEASURE_RE = re.compile(rf"^({_NUMBER}(?:\.\d+)?)\s?°?\s?([A-Za-z/%]+|%)$")
_MONEY_RE = re.compile(rf"^([$£€])({_NUMBER})(?:\.(\d{{1,2}}))?$")
_TIME_RE = re.compile(r"^(\d{1,2}):(\d{2})\s*([ap]\.?m\.?)?$", re.IGNORECASE)
_DECIMAL_RE = re.compile(r"^(-?)(\d+)\.(\d+)$")
_FRACTION_RE = re.compile(r"^(\d+)/(\d+)$")


def _int_words(text: str) -> list[str] | None:
    negative = text.startswith("-")
    digits = text.lstrip("-").replace(",", "")
    value = int(digits)
    if value >= MAX_CARDINAL:
        return None
    words = verbalize_cardinal(value)
    return ["minus"] + words if negative else words


def _number_words(text: str) -> tuple[list[str], bool] | None:
    """Words for an integer or decimal literal, plus whether it equals one."""
    if "." in text:
        m = _DECIMAL_RE.match(text)
        if not m:
            return None
        sign, whole, frac = m.groups()
        words = ([] if not sign else ["minus"]) + verbalize_cardinal(int(whole))
        words += ["point"] + verbalize_digits(frac)
        return words, False
    words = _int_words(text)
    if words is None:
        return None
    return words, text.lstrip("-").replace(",", "") == "1" and not text.startswith("-")


def verbalize_measure(span: str, grammar) -> list[Reading]:
    """"75F" -> seventy five degrees Fahrenheit; unit names from the lexicon."""
    m = _MEASURE_RE.match(span.strip())
    if not m:
        return []
    number, unit = m.groups()
    if unit not in grammar.units:
        return []
    parsed = _number_words(number)
    if parsed is None:
        return []
    words, is_one = parsed
    singular, plural = grammar.units[unit]
    unit_words = list(singular if is_one else plural)
    return [make_reading(SemioticClass.MEASURE, words + unit_words)]


def verbalize_money(span: str, grammar) -> list[Reading]:
    """"$5" -> five dollars; "$5.30" -> five dollars thirty cents."""
    m = _MONEY_RE.match(span.strip())
    if not m:
        return []
    symbol, major_text, minor_text = m.groups()
    if symbol not in grammar.currencies:
        return []
    major_sing, major_plur, minor_sing, minor_plur = grammar.currencies[symbol]
    major = int(major_text.replace(",", ""))
    if major >= MAX_CARDINAL:
        return []
    minor = int(minor_text) if minor_text else 0
    if minor_text and len(minor_text) == 1:
        minor *= 10  # "$5.3" means 30 cents
    words: list[str] = []
    if major or not minor:
        words += verbalize_cardinal(major) + list(major_sing if major == 1 else major_plur)
    if minor:
        words += verbalize_cardinal(minor) + list(minor_sing if minor == 1 else minor_plur)
    return [make_reading(SemioticClass.MONEY, words)]


def verbalize_time(span: str) -> list[Reading]:
    """"3:30" -> three thirty; "3:05 PM" -> three oh five p m."""
    m = _TIME_RE.match(span.strip())
    if not m:
        return []
    hour, minute = int(m.group(1)), int(m.group(2))
    if not (0 <= hour <= 24 and 0 <= minute <= 59):
        return []
    words = verbalize_cardinal(hour)
    if minute == 0:
        words += ["o'clock"]
    elif minute < 10:
        words += ["oh"] + verbalize_cardinal(minute)
    else:
        words += verbalize_cardinal(minute)
    suffix = m.group(3)
    if suffix:
        words += ["a", "m"] if suffix.lower().startswith("a") else ["p", "m"]
    return [make_reading(SemioticClass.TIME, words)]


def verbalize_decimal(span: str) -> list[Reading]:
    """"3.14" -> three point one four."""
    m = _DECIMAL_RE.match(span.strip())
    if not m:
        return []
    parsed = _number_words(span.strip())
    if parsed is None:
        return []
    return [make_reading(SemioticClass.DECIMAL, parsed[0])]


_DENOMINATOR_SPECIAL = {2: ("half", "halves"), 4: ("quarter", "quarters")}


def verbalize_fraction(span: str) -> list[Reading]:
    """Quantity and math readings: "1/4" -> one quarter / one divided by four."""
    m = _FRACTION_RE.match(span.strip())
    if not m:
        return []
    numerator, denominator = int(m.group(1)), int(m.group(2))
    if denominator == 0 or numerator >= MAX_CARDINAL or denominator >= MAX_CARDINAL:
        return []
    readings = []
    if denominator > 1:
        if denominator in _DENOMINATOR_SPECIAL:
            sing, plur = _DENOMINATOR_SPECIAL[denominator]
            denom = [sing] if numerator == 1 else [plur]
        else:
            denom = verbalize_ordinal(denominator)
            if numerator != 1:
                denom = denom[:-1] + [denom[-1] + "s"]
        readings.append(
            make_reading(SemioticClass.FRACTION, verbalize_cardinal(numerator) + denom)
        )
    readings.append(
        make_reading(
            SemioticClass.FRACTION,
            verbalize_cardinal(numerator) + ["divided", "by"] + verbalize_cardinal(denominator),
        )
    )
    return readings


def verbalize_cardinal_span(span: str) -> list[Reading]:
    """Digit-string token (optionally signed / comma-grouped) as a cardinal."""
    words = _int_words(span.strip())
    if words is None:
        return []
    return [make_reading(SemioticClass.CARDINAL, words)]


_ORDINAL_SPAN_RE = re.compile(r"^(\d+)(?:st|nd|rd|th)$", re.IGNORECASE)


def verbalize_ordinal_span(span: str) -> list[Reading]:
    """"4th" -> fourth."""
    m = _ORDINAL_SPAN_RE.match(span.strip())
    if not m:
        return []
    value = int(m.group(1))
    if not 1 <= value < 10**6:
        return []
    return [make_reading(SemioticClass.ORDINAL, verbalize_ordinal(value))]
