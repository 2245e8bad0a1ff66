"""Grammar tables compiled from data files.

All tables live in UTF-8 TSV files (one ``key<TAB>value`` entry per line) so
they can be extended without touching code; ``--grammar-dir`` points the
whole set at an alternative directory.
"""

from __future__ import annotations

import functools
from pathlib import Path

from ..errors import DataFormatError

_DATA_DIR = Path(__file__).parent / "data"


def _read_tsv(path: Path) -> list[tuple[str, str]]:
    rows = []
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataFormatError(f"cannot read grammar table: {e}", path=path)
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise DataFormatError("expected key<TAB>value", path=path, line=lineno)
        key, value = line.split("\t", 1)
        rows.append((key, value))
    return rows


class GrammarSet:
    """Immutable bundle of matcher tables and verbalizer lexicons."""

    def __init__(self, grammar_dir: str | Path | None = None):
        base = Path(grammar_dir) if grammar_dir else _DATA_DIR

        self.months: dict[int, str] = {}
        self.month_names: dict[str, int] = {}
        for key, value in _read_tsv(base / "months.tsv"):
            number = int(key)
            self.months[number] = value
            self.month_names[value.lower()] = number
            self.month_names[value.lower()[:3]] = number
        self.month_names["sept"] = self.month_names.get("sep", 9)

        self.units: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {}
        for key, value in _read_tsv(base / "units.tsv"):
            singular, _, plural = value.partition("|")
            self.units[key] = (tuple(singular.split()), tuple((plural or singular).split()))

        self.currencies: dict[str, tuple[tuple[str, ...], ...]] = {}
        for key, value in _read_tsv(base / "currencies.tsv"):
            parts = value.split("|")
            if len(parts) != 4:
                raise DataFormatError(
                    "currency needs major_sing|major_plur|minor_sing|minor_plur",
                    path=base / "currencies.tsv",
                )
            self.currencies[key] = tuple(tuple(p.split()) for p in parts)

        self.seg_words: frozenset[str] = frozenset(
            key.lower() for key, _ in _read_tsv(base / "words.tsv")
        )
        self.roman_context: frozenset[str] = frozenset(
            key.lower() for key, _ in _read_tsv(base / "roman_context.tsv")
        )

    @classmethod
    @functools.lru_cache(maxsize=4)
    def default(cls) -> "GrammarSet":
        return cls()

    # thin object-style entry points over the functional modules
    def tag(self, sentence: str):
        from .tagger import tag

        return tag(sentence, self)

    def readings(self, span):
        from .readings import readings

        return readings(span, self)
