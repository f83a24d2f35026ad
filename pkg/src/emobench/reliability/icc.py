"""One-way random-effects intraclass correlations ICC(1) and ICC(1,k) with
F-based 95% confidence intervals and Koo-Li interpretation bands."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateVariance
from .fdist import f_quantile


@dataclass(frozen=True)
class IccResult:
    kind: str  # "ICC1" | "ICC1k"
    estimate: float
    ci95: tuple[float, float]
    f_value: float
    df1: int
    df2: int
    band: str


def interpretation_band(estimate: float) -> str:
    """Koo-Li cutoffs: <0.50 poor, 0.50-0.75 moderate, 0.75-0.90 good,
    >0.90 excellent."""
    if estimate < 0.50:
        return "poor"
    if estimate < 0.75:
        return "moderate"
    if estimate <= 0.90:
        return "good"
    return "excellent"


def _validate(matrix: np.ndarray) -> np.ndarray:
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2:
        raise ValueError("rating matrix must be 2-D")
    n, k = m.shape
    if n < 2 or k < 2:
        raise ValueError(f"need n >= 2 texts and k >= 2 ratings, got {n}x{k}")
    if np.isnan(m).any():
        raise ValueError("rating matrix must be complete")
    return m


def anova_oneway(matrix) -> tuple[float, float]:
    """Between-texts and within-texts mean squares (MSB, MSW)."""
    m = _validate(matrix)
    n, k = m.shape
    row_means = m.mean(axis=1)
    grand = m.mean()
    ssb = k * float(np.sum((row_means - grand) ** 2))
    ssw = float(np.sum((m - row_means[:, None]) ** 2))
    msb = ssb / (n - 1)
    msw = ssw / (n * (k - 1))
    if msb == 0 and msw == 0:
        raise DegenerateVariance("all ratings identical")
    return msb, msw


def _f_bounds(msb: float, msw: float, n: int, k: int, alpha: float):
    df1, df2 = n - 1, n * (k - 1)
    if msw == 0:
        return float("inf"), df1, df2, float("inf"), float("inf")
    f_value = msb / msw
    fl = f_value / f_quantile(1 - alpha / 2, df1, df2)
    fu = f_value * f_quantile(1 - alpha / 2, df2, df1)
    return f_value, df1, df2, fl, fu


def icc1(matrix, alpha: float = 0.05) -> IccResult:
    """Single-rater reliability: (MSB - MSW) / (MSB + (k-1) MSW)."""
    m = _validate(matrix)
    n, k = m.shape
    msb, msw = anova_oneway(m)
    f_value, df1, df2, fl, fu = _f_bounds(msb, msw, n, k, alpha)
    if msw == 0:
        estimate, low, high = 1.0, 1.0, 1.0
    else:
        estimate = (msb - msw) / (msb + (k - 1) * msw)
        low = (fl - 1) / (fl + k - 1)
        high = (fu - 1) / (fu + k - 1)
    return IccResult("ICC1", estimate, (low, high), f_value, df1, df2,
                     interpretation_band(estimate))


def icc1k(matrix, alpha: float = 0.05) -> IccResult:
    """Reliability of the k-rater average: (MSB - MSW) / MSB."""
    m = _validate(matrix)
    n, k = m.shape
    msb, msw = anova_oneway(m)
    f_value, df1, df2, fl, fu = _f_bounds(msb, msw, n, k, alpha)
    if msw == 0:
        estimate, low, high = 1.0, 1.0, 1.0
    else:
        estimate = (msb - msw) / msb
        low = 1 - 1 / fl
        high = 1 - 1 / fu
    return IccResult("ICC1k", estimate, (low, high), f_value, df1, df2,
                     interpretation_band(estimate))


def complete_matrix(
    ratings_by_text: dict[str, list[float]], k: int
) -> tuple[np.ndarray, int]:
    """Stack texts that have exactly k ratings; returns the matrix and the
    count of texts excluded for having a different rating count."""
    rows = [v for v in ratings_by_text.values() if len(v) == k]
    excluded = len(ratings_by_text) - len(rows)
    if len(rows) < 2:
        raise ValueError(f"fewer than 2 texts with exactly {k} ratings")
    return np.array(rows, dtype=float), excluded
