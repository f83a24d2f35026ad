"""Synthetic rater matrices from the one-way model x_ij = mu_i + eps_ij,
used to validate the ICC estimators against known variance components."""

from __future__ import annotations

import numpy as np


def simulate_raters(
    n: int,
    k: int,
    sigma_b: float,
    sigma_w: float,
    seed: int,
    discretize: bool = False,
    mean: float = 2.0,
) -> np.ndarray:
    if sigma_b < 0 or sigma_w < 0:
        raise ValueError("sigmas must be nonnegative")
    if sigma_b == 0 and sigma_w == 0:
        raise ValueError("at least one variance component must be positive")
    rng = np.random.default_rng(seed)
    mu = rng.normal(mean, sigma_b, size=n)
    x = mu[:, None] + rng.normal(0.0, sigma_w, size=(n, k))
    if discretize:
        x = np.clip(np.rint(x), 0, 4)
    return x
