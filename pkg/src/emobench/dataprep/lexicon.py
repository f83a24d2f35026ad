"""Lexicon loading and per-text emotional weight scoring.

Each matched word contributes its valence/arousal/dominance norms; the three
per-dimension means are summed into a single sampling weight.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping

from ..errors import LexiconMissing
from .cleaning import TextRecord

Stemmer = Callable[[str], str]

_WORD_RE = re.compile(r"\w+", re.UNICODE)


@dataclass(frozen=True)
class LexiconEntry:
    stem: str
    valence: float
    arousal: float
    dominance: float


def identity_stemmer(word: str) -> str:
    """Default stemmer: lowercase only. Morphological stemmers plug in."""
    return word.lower()


def suffix_stemmer(word: str, min_len: int = 4) -> str:
    """Naive Polish-ish fallback: strip one short inflectional suffix."""
    w = word.lower()
    for suffix in ("ami", "ach", "owi", "em", "ie", "ą", "ę", "y", "i", "a", "e", "u", "o"):
        if w.endswith(suffix) and len(w) - len(suffix) >= min_len:
            return w[: -len(suffix)]
    return w


def load_lexicon(path: str | Path) -> dict[str, LexiconEntry]:
    """Read a `stem,valence,arousal,dominance` delimited file.

    Duplicate stems are an input error, not a silent overwrite.
    """
    entries: dict[str, LexiconEntry] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            stem = row["stem"].strip()
            if not stem:
                raise ValueError("empty stem in lexicon")
            if stem in entries:
                raise ValueError(f"duplicate lexicon stem: {stem}")
            entries[stem] = LexiconEntry(
                stem=stem,
                valence=float(row["valence"]),
                arousal=float(row["arousal"]),
                dominance=float(row["dominance"]),
            )
    return entries


def lexicon_score(
    record: TextRecord,
    lexicon: Mapping[str, LexiconEntry],
    stemmer: Stemmer = identity_stemmer,
) -> float:
    """Weight = mean valence + mean arousal + mean dominance over matched
    words (each mean 0 when nothing matches), floored at 0."""
    if not lexicon:
        raise LexiconMissing("lexicon is empty")
    matched = [
        lexicon[stem]
        for stem in (stemmer(w) for w in _WORD_RE.findall(record.clean_text))
        if stem in lexicon
    ]
    if not matched:
        return 0.0
    n = len(matched)
    mean_v = sum(e.valence for e in matched) / n
    mean_a = sum(e.arousal for e in matched) / n
    mean_d = sum(e.dominance for e in matched) / n
    return max(0.0, mean_v + mean_a + mean_d)
