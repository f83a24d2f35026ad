"""Core evaluation statistics: Pearson correlation and the before/after
averaging SD profile of the reference annotations."""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from ..errors import DegenerateInput, NoData


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Product-moment correlation; callers apply pairwise deletion first."""
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if xa.shape != ya.shape or xa.ndim != 1:
        raise ValueError("x and y must be 1-D of equal length")
    if len(xa) < 3:
        raise DegenerateInput(f"need at least 3 pairs, got {len(xa)}")
    xd = xa - xa.mean()
    yd = ya - ya.mean()
    sx = float(np.sqrt(np.sum(xd**2)))
    sy = float(np.sqrt(np.sum(yd**2)))
    if sx == 0 or sy == 0:
        raise DegenerateInput("zero variance input")
    return float(np.sum(xd * yd) / (sx * sy))


def sd_profile(
    raw_by_text: Mapping[str, Sequence[float]]
) -> tuple[float, float]:
    """(sd_after_avg, sd_before_avg): population SD of per-text means and of
    all pooled raw labels, both on whatever scale the caller supplies."""
    if not raw_by_text:
        raise NoData("no reference ratings")
    means = np.array([np.mean(v) for v in raw_by_text.values()])
    pooled = np.concatenate([np.asarray(v, dtype=float) for v in raw_by_text.values()])
    return float(means.std()), float(pooled.std())
