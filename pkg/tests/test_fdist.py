"""F quantiles validated against a numerical-integration CDF oracle."""

import numpy as np
import pytest
from scipy.integrate import quad

from emobench.reliability import f_cdf, f_quantile

GRID_P = (0.025, 0.5, 0.975)
GRID_DF = (1, 5, 10, 50, 500)


def oracle_cdf(x, df1, df2):
    """Integrate the F density directly; independent of the beta-function
    implementation route."""
    from scipy.special import gammaln

    lognorm = (
        gammaln((df1 + df2) / 2) - gammaln(df1 / 2) - gammaln(df2 / 2)
        + (df1 / 2) * np.log(df1 / df2)
    )

    def pdf(t):
        return np.exp(
            lognorm + (df1 / 2 - 1) * np.log(t)
            - ((df1 + df2) / 2) * np.log(1 + df1 * t / df2)
        )

    value, _ = quad(pdf, 0, x, limit=200)
    return value


def test_median_symmetry():
    for d in (2, 5, 10, 40):
        assert f_quantile(0.5, d, d) == pytest.approx(1.0, abs=1e-9)


def test_reciprocal_identity():
    for p in GRID_P:
        for d1 in GRID_DF:
            for d2 in GRID_DF:
                left = f_quantile(p, d1, d2)
                right = 1.0 / f_quantile(1 - p, d2, d1)
                assert left == pytest.approx(right, rel=1e-9)


def test_roundtrip_cdf():
    for p in GRID_P:
        for d1 in GRID_DF:
            for d2 in GRID_DF:
                q = f_quantile(p, d1, d2)
                assert abs(f_cdf(q, d1, d2) - p) <= 1e-10


def test_against_integration_oracle():
    q = f_quantile(0.975, 10, 20)
    assert oracle_cdf(q, 10, 20) == pytest.approx(0.975, abs=1e-6)
    q = f_quantile(0.5, 3, 7)
    assert oracle_cdf(q, 3, 7) == pytest.approx(0.5, abs=1e-6)
    q = f_quantile(0.025, 5, 5)
    assert oracle_cdf(q, 5, 5) == pytest.approx(0.025, abs=1e-6)


def test_bad_inputs():
    with pytest.raises(ValueError):
        f_quantile(0.0, 3, 3)
    with pytest.raises(ValueError):
        f_quantile(1.0, 3, 3)
    with pytest.raises(ValueError):
        f_quantile(0.5, 0, 3)
