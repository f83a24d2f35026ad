"""Report builders: shot sweeps, fold aggregation with t-intervals,
label histograms and the cross-source comparison table."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from scipy.stats import t as t_dist

from .. import ALL_METRICS
from ..errors import CoverageMismatch, MissingK, NoData, WrongFoldCount
from .stats import pearson, sd_profile


@dataclass(frozen=True)
class SweepRow:
    k: int
    mean_r: float
    mean_sd: float
    n_rejected: int
    selected: bool = False


def shot_sweep_report(
    per_k: Mapping[int, Mapping[str, dict]], ks: Sequence[int] = range(6)
) -> list[SweepRow]:
    """Rows (Type, r, SD, n Rejected) per k; the argmax-r row is flagged as
    the selected shot count.

    per_k[k][metric] carries {"r": float, "sd": float, "n_rejected": int}.
    """
    missing = [k for k in ks if k not in per_k]
    if missing:
        raise MissingK(f"missing sweep results for k={missing}")
    rows = []
    for k in ks:
        metrics = per_k[k]
        rows.append(
            SweepRow(
                k=k,
                mean_r=float(np.mean([m["r"] for m in metrics.values()])),
                mean_sd=float(np.mean([m["sd"] for m in metrics.values()])),
                n_rejected=int(sum(m["n_rejected"] for m in metrics.values())),
            )
        )
    best = max(range(len(rows)), key=lambda i: rows[i].mean_r)
    rows[best] = SweepRow(
        rows[best].k, rows[best].mean_r, rows[best].mean_sd,
        rows[best].n_rejected, selected=True,
    )
    return rows


def fold_aggregate(
    fold_rs: Sequence[float], k: int = 10, alpha: float = 0.05
) -> tuple[float, tuple[float, float]]:
    """Mean of per-fold correlations with a t-based CI:
    mean ± t(1-alpha/2, k-1) * sd / sqrt(k)."""
    if len(fold_rs) != k:
        raise WrongFoldCount(f"expected {k} fold values, got {len(fold_rs)}")
    arr = np.asarray(fold_rs, dtype=float)
    mean = float(arr.mean())
    sd = float(arr.std(ddof=1))
    half = float(t_dist.ppf(1 - alpha / 2, k - 1)) * sd / math.sqrt(k)
    return mean, (mean - half, mean + half)


def label_histogram(
    labels: Sequence[float],
    bins: int = 5,
    value_range: tuple[float, float] = (0.0, 1.0),
    legacy_divide_by_5: bool = False,
) -> dict:
    """Counts per equal-width bin over canonical [0,1] labels; the legacy
    flag reproduces the legacy raw-label/5 binning convention."""
    if len(labels) == 0:
        raise NoData("no labels to bin")
    arr = np.asarray(labels, dtype=float)
    if legacy_divide_by_5:
        arr = arr / 5.0
    counts, edges = np.histogram(arr, bins=bins, range=value_range)
    return {
        "bins": [float(e) for e in edges],
        "counts": [int(c) for c in counts],
        "n": int(arr.size),
    }


def comparison_table(
    predictions: Mapping[str, Mapping[str, Mapping[str, float]]],
    reference: Mapping[str, Mapping[str, float]],
    raw_reference: Mapping[str, Mapping[str, Sequence[float]]],
    metrics: Sequence[str] = ALL_METRICS,
    min_coverage: float = 0.95,
) -> dict:
    """Per source and metric: Pearson r against the reference aggregates and
    the SD of the source's predictions, plus the two reference SD rows
    (after/before averaging).

    predictions: source -> text_id -> metric -> value (canonical).
    reference:   text_id -> metric -> aggregated canonical value.
    raw_reference: metric -> text_id -> raw canonical labels.
    """
    eval_ids = sorted(reference)
    rows: dict[str, dict[str, dict[str, float]]] = {}
    for source in sorted(predictions):
        covered = [tid for tid in eval_ids if tid in predictions[source]]
        if len(covered) < min_coverage * len(eval_ids):
            raise CoverageMismatch(
                f"source {source} covers {len(covered)}/{len(eval_ids)} texts"
            )
        per_metric = {}
        for metric in metrics:
            pred = [predictions[source][tid][metric] for tid in covered]
            ref = [reference[tid][metric] for tid in covered]
            per_metric[metric] = {
                "r": pearson(pred, ref),
                "sd": float(np.std(pred)),
                "n_pairs": len(covered),
            }
        rows[source] = per_metric

    sd_after = {}
    sd_before = {}
    for metric in metrics:
        after, before = sd_profile(raw_reference[metric])
        sd_after[metric] = after
        sd_before[metric] = before
    return {
        "metrics": list(metrics),
        "sources": rows,
        "annotator_sd_after_avg": sd_after,
        "annotator_sd_before_avg": sd_before,
    }


def icc_table_row(metric: str, result) -> str:
    """`Valence ICC(1) 0.60 [0.59, 0.61]`-shaped rendering."""
    kind = "ICC(1)" if result.kind == "ICC1" else "ICC(1,k)"
    low, high = result.ci95
    return f"{metric.capitalize()} {kind} {result.estimate:.2f} [{low:.2f}, {high:.2f}]"
