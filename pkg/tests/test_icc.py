"""ICC estimators checked against an independently coded one-way ANOVA
oracle (plain loops, scipy F quantiles)."""

import numpy as np
import pytest
import scipy.stats

from emobench.errors import DegenerateVariance
from emobench.reliability import anova_oneway, complete_matrix, icc1, icc1k

WORKED = np.array([[1.0, 2.0], [3.0, 3.0], [5.0, 4.0]])


def oracle_anova(matrix):
    n = len(matrix)
    k = len(matrix[0])
    grand = sum(sum(row) for row in matrix) / (n * k)
    row_means = [sum(row) / k for row in matrix]
    ssb = k * sum((rm - grand) ** 2 for rm in row_means)
    ssw = sum((x - rm) ** 2 for row, rm in zip(matrix, row_means) for x in row)
    return ssb / (n - 1), ssw / (n * (k - 1))


def oracle_icc(matrix, alpha=0.05):
    n, k = len(matrix), len(matrix[0])
    msb, msw = oracle_anova(matrix)
    est1 = (msb - msw) / (msb + (k - 1) * msw)
    est1k = (msb - msw) / msb
    f_value = msb / msw
    df1, df2 = n - 1, n * (k - 1)
    fl = f_value / scipy.stats.f.ppf(1 - alpha / 2, df1, df2)
    fu = f_value * scipy.stats.f.ppf(1 - alpha / 2, df2, df1)
    ci1 = ((fl - 1) / (fl + k - 1), (fu - 1) / (fu + k - 1))
    ci1k = (1 - 1 / fl, 1 - 1 / fu)
    return est1, ci1, est1k, ci1k


def random_matrix(rng, n=None, k=None):
    n = n or int(rng.integers(2, 51))
    k = k or int(rng.integers(2, 8))
    return rng.normal(rng.uniform(-2, 2), rng.uniform(0.5, 3), size=(n, k))


def test_worked_anova():
    msb, msw = anova_oneway(WORKED)
    assert msb == pytest.approx(4.5)
    assert msw == pytest.approx(1 / 3)


def test_worked_estimates():
    assert icc1(WORKED).estimate == pytest.approx(0.8621, abs=1e-4)
    assert icc1k(WORKED).estimate == pytest.approx(0.9259, abs=1e-4)


def test_all_equal_degenerate():
    with pytest.raises(DegenerateVariance):
        anova_oneway(np.full((4, 3), 2.0))


def test_zero_within_variance():
    m = np.array([[1.0, 1.0], [3.0, 3.0], [5.0, 5.0]])
    msb, msw = anova_oneway(m)
    assert msw == 0.0 and msb > 0
    assert icc1(m).estimate == 1.0
    assert icc1k(m).estimate == 1.0
    assert icc1(m).ci95 == (1.0, 1.0)


def test_k1_rejected():
    with pytest.raises(ValueError):
        icc1k(np.array([[1.0], [2.0]]))


def test_oracle_equivalence_bulk():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        m = random_matrix(rng)
        est1, ci1, est1k, ci1k = oracle_icc(m)
        r1, r1k = icc1(m), icc1k(m)
        assert r1.estimate == pytest.approx(est1, abs=1e-10)
        assert r1k.estimate == pytest.approx(est1k, abs=1e-10)
        assert r1.ci95 == pytest.approx(ci1, abs=1e-8)
        assert r1k.ci95 == pytest.approx(ci1k, abs=1e-8)


def test_affine_invariance():
    rng = np.random.default_rng(7)
    m = random_matrix(rng, n=20, k=4)
    base = icc1(m).estimate
    assert icc1(3.7 * m + 11.0).estimate == pytest.approx(base, abs=1e-12)


def test_spearman_brown_identity():
    rng = np.random.default_rng(8)
    m = random_matrix(rng, n=30, k=5)
    r1 = icc1(m).estimate
    r1k = icc1k(m).estimate
    k = m.shape[1]
    assert r1k == pytest.approx(k * r1 / (1 + (k - 1) * r1), abs=1e-12)


def test_ci_brackets_estimate():
    rng = np.random.default_rng(9)
    for _ in range(20):
        m = random_matrix(rng)
        for res in (icc1(m), icc1k(m)):
            assert res.ci95[0] <= res.estimate <= res.ci95[1]


def test_column_permutation_invariance():
    rng = np.random.default_rng(10)
    m = random_matrix(rng, n=15, k=5)
    shuffled = np.array([rng.permutation(row) for row in m])
    assert icc1(shuffled).estimate == pytest.approx(icc1(m).estimate, abs=1e-12)


def test_bands():
    rng = np.random.default_rng(11)
    for _ in range(10):
        m = random_matrix(rng)
        res = icc1(m)
        e = res.estimate
        expected = (
            "poor" if e < 0.5 else "moderate" if e < 0.75
            else "good" if e <= 0.9 else "excellent"
        )
        assert res.band == expected


def test_complete_matrix_exclusion():
    ratings = {"a": [1, 2, 3], "b": [2, 2, 2], "c": [1, 2], "d": [3, 3, 3]}
    matrix, excluded = complete_matrix(ratings, k=3)
    assert matrix.shape == (3, 3)
    assert excluded == 1
