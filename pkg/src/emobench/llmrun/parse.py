"""Parsing single-number LLM replies into 1..5 scores."""

from __future__ import annotations

import re
from dataclasses import dataclass

# Integers not glued to decimals: "4." matches, the "3" and "5" of "3.5"
# do not.
_INT_RE = re.compile(r"(?<![\d.,])(\d+)(?![.,]?\d)")

SCALE_LO, SCALE_HI = 1, 5


@dataclass(frozen=True)
class Rejected:
    reason: str  # no_number | out_of_range | contradiction


def parse_score(raw_reply: str) -> int | Rejected:
    """First integer token wins if it is in 1..5 and no different in-range
    integer follows; everything else is a rejection."""
    tokens = [int(t) for t in _INT_RE.findall(raw_reply.strip().strip("\"'`"))]
    if not tokens:
        return Rejected("no_number")
    first = tokens[0]
    if not SCALE_LO <= first <= SCALE_HI:
        return Rejected("out_of_range")
    for other in tokens[1:]:
        if SCALE_LO <= other <= SCALE_HI and other != first:
            return Rejected("contradiction")
    return first
