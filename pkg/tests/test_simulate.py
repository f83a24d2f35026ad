import numpy as np
import pytest

from emobench.reliability import icc1, icc1k, simulate_raters


def test_no_within_noise_gives_perfect_icc():
    m = simulate_raters(n=50, k=4, sigma_b=1.0, sigma_w=0.0, seed=1)
    assert icc1(m).estimate == 1.0


def test_deterministic_per_seed():
    a = simulate_raters(20, 3, 1.0, 1.0, seed=5)
    b = simulate_raters(20, 3, 1.0, 1.0, seed=5)
    assert np.array_equal(a, b)


def test_discretize_clamps_to_scale():
    m = simulate_raters(200, 5, 2.0, 2.0, seed=2, discretize=True)
    assert m.min() >= 0 and m.max() <= 4
    assert np.array_equal(m, np.rint(m))


def test_recovers_analytic_icc():
    # one-way model: icc1 target sb^2/(sb^2+sw^2) = 0.5,
    # icc1k target k*0.5/(1+(k-1)*0.5) = 0.8333 for k=5
    est1 = [icc1(simulate_raters(500, 5, 1.0, 1.0, seed=s)).estimate for s in range(20)]
    est1k = [icc1k(simulate_raters(500, 5, 1.0, 1.0, seed=s)).estimate for s in range(20)]
    assert np.median(est1) == pytest.approx(0.5, abs=0.05)
    assert np.median(est1k) == pytest.approx(5 * 0.5 / 3, abs=0.05)


def test_invalid_sigmas():
    with pytest.raises(ValueError):
        simulate_raters(10, 3, 0.0, 0.0, seed=0)
    with pytest.raises(ValueError):
        simulate_raters(10, 3, -1.0, 1.0, seed=0)
