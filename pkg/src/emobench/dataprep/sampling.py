"""Without-replacement sampling: a weighted phase using exponential keys
followed by a uniform phase over the remainder."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import AllZeroWeights, InsufficientPool


def exponential_key_sample(
    weights: Sequence[float], n: int, rng: np.random.Generator
) -> list[int]:
    """Indices of n items drawn without replacement, inclusion probability
    monotone in weight (key = Exp(1)/w, n smallest win; zero weight never
    beats positive weight)."""
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0):
        raise ValueError("negative weight")
    positive = int(np.count_nonzero(w > 0))
    if n > positive:
        raise AllZeroWeights(
            f"need {n} weighted picks but only {positive} records have weight > 0"
        )
    keys = np.full(len(w), np.inf)
    mask = w > 0
    keys[mask] = rng.exponential(size=int(mask.sum())) / w[mask]
    order = np.argsort(keys, kind="stable")
    return [int(i) for i in order[:n]]


def weighted_sample(
    ids: Sequence[str],
    weights: Sequence[float],
    n_weighted: int,
    n_uniform: int,
    seed: int,
) -> list[str]:
    """Draw n_weighted ids proportional-ish to weight, then n_uniform
    uniformly from the rest. Deterministic per seed; no duplicates."""
    if len(ids) != len(weights):
        raise ValueError("ids and weights length mismatch")
    if n_weighted + n_uniform > len(ids):
        raise InsufficientPool(
            f"requested {n_weighted}+{n_uniform} from pool of {len(ids)}"
        )
    rng = np.random.default_rng(seed)
    picked = exponential_key_sample(weights, n_weighted, rng)
    chosen = set(picked)
    rest = [i for i in range(len(ids)) if i not in chosen]
    uniform = rng.choice(len(rest), size=n_uniform, replace=False) if n_uniform else []
    return [ids[i] for i in picked] + [ids[rest[int(j)]] for j in uniform]
