"""Semiotic classes, their weight bands, and the Reading record.

Weight scheme: normalizing a semiotic token costs just above 1; leaving a
word unchanged costs 100; a punctuation mark costs 2.  Within the semiotic
band [1.0, 1.01], classes get a deterministic micro-weight by fixed priority
rank, which makes single-shortest-path mode reproducible without affecting
pruning (the band is narrower than the pruning threshold per token).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..fst import Weight


class SemioticClass(enum.Enum):
    PLAIN = "PLAIN"
    PUNCT = "PUNCT"
    CARDINAL = "CARDINAL"
    ORDINAL = "ORDINAL"
    DECIMAL = "DECIMAL"
    FRACTION = "FRACTION"
    DATE = "DATE"
    TIME = "TIME"
    MONEY = "MONEY"
    MEASURE = "MEASURE"
    ROMAN = "ROMAN"
    ELECTRONIC = "ELECTRONIC"
    VERBATIM = "VERBATIM"

    def __str__(self) -> str:
        return self.value


# priority order for the micro-weights inside [1.0, 1.01]; earlier = cheaper
SEMIOTIC_PRIORITY = (
    SemioticClass.DATE,
    SemioticClass.TIME,
    SemioticClass.MONEY,
    SemioticClass.MEASURE,
    SemioticClass.DECIMAL,
    SemioticClass.FRACTION,
    SemioticClass.ORDINAL,
    SemioticClass.CARDINAL,
    SemioticClass.ROMAN,
    SemioticClass.ELECTRONIC,
    SemioticClass.VERBATIM,
)

PLAIN_WORD_WEIGHT = Weight.of(100)
PUNCT_WEIGHT = Weight.of(2)

_RANK = {cls: i for i, cls in enumerate(SEMIOTIC_PRIORITY)}


def semiotic_weight(cls: SemioticClass) -> Weight:
    """Band weight 1.0 + 0.01 * rank / n, always inside [1.0, 1.01]."""
    rank = _RANK[cls]
    return Weight(Weight.of(1.0).ticks + round(100 * rank / len(SEMIOTIC_PRIORITY)))


@dataclass(frozen=True)
class Reading:
    """One way to speak a span: its class, spoken tokens, and cost."""

    cls: SemioticClass
    spoken: tuple[str, ...]
    weight: Weight

    def __post_init__(self):
        if not isinstance(self.spoken, tuple):
            object.__setattr__(self, "spoken", tuple(self.spoken))


def make_reading(cls: SemioticClass, spoken) -> Reading:
    return Reading(cls, tuple(spoken), semiotic_weight(cls))
