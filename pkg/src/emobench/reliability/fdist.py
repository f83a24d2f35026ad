"""F-distribution CDF and quantile via the regularized incomplete beta
function, as needed for ICC confidence intervals."""

from __future__ import annotations

from scipy.special import betainc, betaincinv


def f_cdf(x: float, df1: float, df2: float) -> float:
    if x <= 0:
        return 0.0
    y = df1 * x / (df1 * x + df2)
    return float(betainc(df1 / 2.0, df2 / 2.0, y))


def f_quantile(p: float, df1: float, df2: float) -> float:
    """Inverse CDF: invert I_y(d1/2, d2/2) = p, then map y back to F."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must be in (0, 1), got {p}")
    if df1 < 1 or df2 < 1:
        raise ValueError("degrees of freedom must be >= 1")
    y = float(betaincinv(df1 / 2.0, df2 / 2.0, p))
    if y >= 1.0:
        return float("inf")
    return df2 * y / (df1 * (1.0 - y))
