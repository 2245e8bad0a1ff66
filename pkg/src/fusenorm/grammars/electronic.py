"""URL/email readings and character-by-character verbatim spelling.

A URL label like "WeAreSC" can be spoken letter by letter or split into
dictionary words ("we are s c"); both come out as readings and the language
model votes.  Segmentation is bounded so pathological labels cannot blow up
the lattice.
"""

from __future__ import annotations

import re

from .classes import Reading, SemioticClass, make_reading
from .numbers import verbalize_digits

MAX_SEGMENTATIONS = 16

# TLDs spoken as a word rather than spelled
_TLD_WORDS = {"com", "org", "net", "edu", "gov", "info"}

_EMAIL_RE = re.compile(r"^[A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+$")
_URL_RE = re.compile(r"^(www\.)?[A-Za-z0-9-]+(\.[A-Za-z0-9-]+)+$")
_VERBATIM_RE = re.compile(r"^[A-Za-z0-9]+$")

_CHAR_WORDS = {".": "dot", "@": "at", "-": "dash", "_": "underscore",
               "+": "plus", "%": "percent", "/": "slash", ":": "colon"}


def is_electronic(token: str) -> bool:
    if "://" in token:
        return False
    if _EMAIL_RE.match(token):
        return True
    if _URL_RE.match(token):
        tld = token.rsplit(".", 1)[-1].lower()
        return not tld.isdigit() and len(tld) >= 2
    return False


def spell_chars(text: str) -> list[str]:
    """Spoken form of raw characters: letters lowercased, digits named."""
    out = []
    for ch in text:
        if ch.isdigit():
            out.extend(verbalize_digits(ch))
        elif ch in _CHAR_WORDS:
            out.append(_CHAR_WORDS[ch])
        elif ch.isalpha():
            out.append(ch.lower())
    return out


def verbalize_verbatim(span: str) -> Reading | None:
    """Alphanumeric code spelled out: "CB 10 1 SD" -> c b one zero one s d."""
    parts = span.split()
    if not parts or not all(_VERBATIM_RE.match(p) for p in parts):
        return None
    spoken: list[str] = []
    for part in parts:
        spoken.extend(spell_chars(part))
    return make_reading(SemioticClass.VERBATIM, spoken)


def _camel_pieces(label: str) -> list[str]:
    return [p for p in re.split(r"(?<=[a-z])(?=[A-Z])|(?<=[A-Za-z])(?=\d)|(?<=\d)(?=[A-Za-z])", label) if p]


def _word_segmentations(label: str, words: frozenset[str], limit: int) -> list[tuple[str, ...]]:
    """All ways to read ``label`` as dictionary words plus spelled residue.

    Results are ranked so the segmentations with the most characters covered
    by whole words come first, then truncated at ``limit``.
    """
    label = label.lower()
    n = len(label)
    results: list[tuple[int, tuple[str, ...]]] = []
    seen: set[tuple[str, ...]] = set()

    def walk(pos: int, spoken: tuple[str, ...], spelled: int):
        if len(results) >= limit * 8:
            return
        if pos == n:
            if spoken not in seen:
                seen.add(spoken)
                results.append((spelled, spoken))
            return
        for end in range(n, pos + 1, -1):  # longest dictionary words first
            piece = label[pos:end]
            if len(piece) >= 2 and piece in words:
                walk(end, spoken + (piece,), spelled)
        walk(pos + 1, spoken + tuple(spell_chars(label[pos])), spelled + 1)

    walk(0, (), 0)
    results.sort(key=lambda r: (r[0], len(r[1]), r[1]))
    return [spoken for _, spoken in results[:limit]]


def _label_variants(label: str, words: frozenset[str], spell_only: bool = False) -> list[tuple[str, ...]]:
    spelled = tuple(spell_chars(label))
    if spell_only:
        return [spelled]
    variants = _word_segmentations(label, words, MAX_SEGMENTATIONS)
    # camel-case split: pieces that are words are spoken whole, rest spelled
    pieces = _camel_pieces(label)
    if len(pieces) > 1:
        camel: list[str] = []
        for piece in pieces:
            if piece.lower() in words and len(piece) >= 2:
                camel.append(piece.lower())
            else:
                camel.extend(spell_chars(piece))
        camel_t = tuple(camel)
        if camel_t not in variants:
            variants.insert(0, camel_t)
    if spelled not in variants:
        variants.append(spelled)
    return variants[:MAX_SEGMENTATIONS]


def segment_electronic(span: str, words: frozenset[str]) -> list[Reading]:
    """Readings for a URL or email address.

    Always includes the full character-by-character spelling; dictionary
    segmentations of each label are added when they exist.  Separators are
    spoken as keywords ("dot", "at"); a common TLD is spoken as a word.
    """
    if not is_electronic(span):
        return []
    labels = re.split(r"([.@])", span)
    total = len([l for l in labels if l not in (".", "@")])

    def assemble(pick) -> list[tuple[str, ...]]:
        outs: list[tuple[str, ...]] = [()]
        index = 0
        for part in labels:
            if part in (".", "@"):
                word = _CHAR_WORDS[part]
                outs = [o + (word,) for o in outs]
                continue
            is_tld = index == total - 1 and part.lower() in _TLD_WORDS
            if is_tld:
                choices = [(part.lower(),)]
            else:
                choices = pick(part)
            outs = [o + c for o in outs for c in choices][:MAX_SEGMENTATIONS]
            index += 1
        return outs

    spelled = assemble(lambda label: [tuple(spell_chars(label))])
    segmented = assemble(lambda label: _label_variants(label, words))
    readings = []
    seen: set[tuple[str, ...]] = set()
    # full spelling first so it always survives the cap
    for spoken in spelled + segmented:
        if spoken and spoken not in seen:
            seen.add(spoken)
            readings.append(make_reading(SemioticClass.ELECTRONIC, spoken))
    return readings[:MAX_SEGMENTATIONS]
