"""Semiotic-class grammars: tagging, verbalization, reading sets."""

from .classes import Reading, SemioticClass, semiotic_weight
from .dates import verbalize_date, verbalize_roman, year_pairwise, year_readings
from .electronic import segment_electronic, verbalize_verbatim
from .grammar_set import GrammarSet
from .numbers import parse_cardinal_words, parse_roman, verbalize_cardinal, verbalize_ordinal
from .readings import partial_reading, plain_reading, readings
from .tagger import MAX_SEMIOTIC_SPANS, TokenSpan, tag
from .units import (
    verbalize_decimal,
    verbalize_fraction,
    verbalize_measure,
    verbalize_money,
    verbalize_time,
)

__all__ = [
    "GrammarSet",
    "MAX_SEMIOTIC_SPANS",
    "Reading",
    "SemioticClass",
    "TokenSpan",
    "parse_cardinal_words",
    "parse_roman",
    "partial_reading",
    "plain_reading",
    "readings",
    "segment_electronic",
    "semiotic_weight",
    "tag",
    "verbalize_cardinal",
    "verbalize_date",
    "verbalize_decimal",
    "verbalize_fraction",
    "verbalize_measure",
    "verbalize_money",
    "verbalize_ordinal",
    "verbalize_roman",
    "verbalize_time",
    "verbalize_verbatim",
    "year_pairwise",
    "year_readings",
]
