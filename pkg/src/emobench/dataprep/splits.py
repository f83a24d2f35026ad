"""Dataset splits: z-score-weighted test sampling with an 8:1:1 overall
ratio, and the deterministic k-fold splitter."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .. import BASIC_EMOTIONS
from ..errors import DegenerateMetric, TooFewRecords
from .sampling import weighted_sample

ZSHIFT_EPS = 1e-6


@dataclass(frozen=True)
class SplitAssignment:
    text_id: str
    partition: str  # train | val | test
    fold: int | None = None


def zscore_test_split(
    labeled: Sequence[tuple[str, Mapping[str, float]]],
    test_frac: float = 0.10,
    seed: int = 0,
    metrics: Sequence[str] = BASIC_EMOTIONS,
) -> list[SplitAssignment]:
    """Sample the test set with per-text weights = sum of per-metric z-scores
    (shifted positive), then split the remainder uniformly so the overall
    ratio is (1-2f):f:f — 8:1:1 at the default fraction."""
    if len(labeled) < 10:
        raise TooFewRecords(f"need at least 10 labeled texts, got {len(labeled)}")
    ids = [tid for tid, _ in labeled]
    values = np.array([[vec[m] for m in metrics] for _, vec in labeled], dtype=float)
    sd = values.std(axis=0)
    for m, s in zip(metrics, sd):
        if s == 0:
            raise DegenerateMetric(f"metric {m} has zero variance")
    z = (values - values.mean(axis=0)) / sd
    raw = z.sum(axis=1)
    weights = raw - raw.min() + ZSHIFT_EPS

    n = len(ids)
    n_test = round(test_frac * n)
    n_val = round(test_frac * n)
    test_ids = set(weighted_sample(ids, weights, n_test, 0, seed))

    rest = [tid for tid in ids if tid not in test_ids]
    rng = np.random.default_rng(seed + 1)
    rng.shuffle(rest)
    val_ids = set(rest[:n_val])

    out = []
    for tid in ids:
        part = "test" if tid in test_ids else "val" if tid in val_ids else "train"
        out.append(SplitAssignment(text_id=tid, partition=part))
    return out


def kfold_split(
    text_ids: Sequence[str],
    k: int = 10,
    train_to_val: tuple[int, int] = (889, 111),
    seed: int = 0,
) -> list[list[SplitAssignment]]:
    """k iterations; fold i held out as test, remainder split train:val at
    the given ratio (±1 from rounding). Each id is held out exactly once."""
    n = len(text_ids)
    if n < k:
        raise TooFewRecords(f"{n} ids for k={k}")
    rng = np.random.default_rng(seed)
    order = list(text_ids)
    rng.shuffle(order)
    folds = [order[i::k] for i in range(k)]

    t, v = train_to_val
    iterations = []
    for i in range(k):
        held = set(folds[i])
        rest = [tid for tid in order if tid not in held]
        rng_i = np.random.default_rng(seed * 1000 + i + 1)
        rng_i.shuffle(rest)
        n_train = round(len(rest) * t / (t + v))
        assigns = [SplitAssignment(tid, "test", fold=i) for tid in folds[i]]
        assigns += [SplitAssignment(tid, "train", fold=i) for tid in rest[:n_train]]
        assigns += [SplitAssignment(tid, "val", fold=i) for tid in rest[n_train:]]
        iterations.append(assigns)
    return iterations
