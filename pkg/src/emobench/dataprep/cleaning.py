"""Text cleaning: link/mention masking, whitespace normalization, sentence
splitting and the 280-character pool filter."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

PLATFORMS = ("twitter", "youtube", "facebook", "other")

URL_RE = re.compile(r"(?:https?://\S+|www\.\S+)", re.IGNORECASE)
MENTION_RE = re.compile(r"@\w+")
WS_RE = re.compile(r"\s+")

MAX_CHARS = 280  # inclusive: records at exactly 280 stay in the pool

# Common Polish abbreviations that end with a period but do not close a
# sentence. Lowercased, without the trailing dot.
ABBREVIATIONS = frozenset(
    {
        "prof", "dr", "hab", "mgr", "inż", "lic", "św", "bł", "ks",
        "np", "itp", "itd", "tzn", "tj", "tzw", "m.in", "ok", "ew",
        "ul", "al", "pl", "os", "im", "woj", "pow", "gm", "nr", "r",
        "w", "z", "s", "t", "godz", "min", "sek", "proc", "tys", "mln",
        "mld", "zł", "gr", "art", "ust", "pkt", "poz", "red", "wyd",
        "por", "zob", "cyt", "str", "rys", "tab", "vol", "jr", "sp",
        "mr", "mrs", "ms", "st",
    }
)

_BOUNDARY_RE = re.compile(r"([.!?…]+)\s+(?=[A-ZĄĆĘŁŃÓŚŹŻ0-9])")


@dataclass
class TextRecord:
    id: str
    platform: str
    raw_text: str
    clean_text: str = ""
    char_len: int = 0
    lang_ok: bool = True
    weight: float | None = None

    def __post_init__(self):
        if self.platform not in PLATFORMS:
            raise ValueError(f"unknown platform: {self.platform}")


def clean_text(raw: str) -> str:
    """Mask URLs and @-mentions, then normalize whitespace.

    Idempotent: ``_link_`` / ``_user_`` contain nothing the patterns match.
    """
    text = URL_RE.sub("_link_", raw)
    text = MENTION_RE.sub("_user_", text)
    return WS_RE.sub(" ", text).strip()


def make_record(id: str, platform: str, raw_text: str) -> TextRecord:
    clean = clean_text(raw_text)
    return TextRecord(
        id=id,
        platform=platform,
        raw_text=raw_text,
        clean_text=clean,
        char_len=len(clean),
    )


def _ends_with_abbreviation(chunk: str) -> bool:
    words = chunk.rstrip(".!?…").rsplit(None, 1)
    if not words:
        return False
    last = words[-1].rstrip(".!?…").lower()
    # Single letters act as initials ("A. Nowak")
    return last in ABBREVIATIONS or len(last) == 1


def split_into_sentences(text: str) -> list[str]:
    """Split on sentence-final punctuation followed by an uppercase letter or
    digit, skipping boundaries right after known abbreviations."""
    parts: list[str] = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        candidate = text[start : m.end(1)]
        if _ends_with_abbreviation(candidate):
            continue
        parts.append(candidate.strip())
        start = m.end()
    tail = text[start:].strip()
    if tail:
        parts.append(tail)
    return parts or [text]


def split_sentences(
    record: TextRecord, platforms: Sequence[str] = ("facebook",)
) -> list[TextRecord]:
    """Split long-form records (facebook by default) into one record per
    sentence; other platforms pass through unchanged."""
    if record.platform not in platforms:
        return [record]
    sentences = split_into_sentences(record.clean_text)
    if len(sentences) == 1:
        return [record]
    return [
        TextRecord(
            id=f"{record.id}.{i + 1}",
            platform=record.platform,
            raw_text=record.raw_text,
            clean_text=s,
            char_len=len(s),
            lang_ok=record.lang_ok,
        )
        for i, s in enumerate(sentences)
    ]


def length_filter(
    records: Iterable[TextRecord], max_chars: int = MAX_CHARS
) -> list[TextRecord]:
    return [r for r in records if r.char_len <= max_chars]


def accept_all(text: str) -> bool:
    """Default language predicate; real filters (e.g. langdetect) plug in."""
    return True
