"""Assignment planning: partition texts into fixed-size sets and spread them
over annotators so every set gets the required number of distinct raters."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import InfeasiblePlan


@dataclass(frozen=True)
class AssignmentPlan:
    sets: list[tuple[str, list[str]]]
    assignments: dict[str, list[str]]  # annotator_id -> ordered set_ids
    raters_per_set: int = 5
    weekly_quota: int = 5  # advisory pacing metadata, not enforced


def build_plan(
    text_ids: list[str],
    annotator_ids: list[str],
    seed: int,
    set_size: int = 100,
    raters_per_set: int = 5,
    max_sets_per_annotator: int | None = None,
) -> AssignmentPlan:
    """Round-robin over a seeded shuffle of the annotators: set j goes to the
    raters_per_set annotators at positions j*r .. j*r+r-1 (mod A). This keeps
    raters within a set distinct (needs A >= r) and per-annotator loads
    within one set of each other."""
    n = len(text_ids)
    a = len(annotator_ids)
    if n == 0 or n % set_size != 0:
        raise InfeasiblePlan(f"{n} texts not divisible into sets of {set_size}")
    if a < raters_per_set:
        raise InfeasiblePlan(
            f"{a} annotators cannot provide {raters_per_set} distinct raters per set"
        )
    rng = np.random.default_rng(seed)
    texts = list(text_ids)
    rng.shuffle(texts)
    raters = list(annotator_ids)
    rng.shuffle(raters)

    n_sets = n // set_size
    sets = [
        (f"set{j:03d}", texts[j * set_size : (j + 1) * set_size])
        for j in range(n_sets)
    ]
    max_load = math.ceil(n_sets * raters_per_set / a)
    if max_sets_per_annotator is not None and max_load > max_sets_per_annotator:
        raise InfeasiblePlan(
            f"load of {max_load} sets exceeds the {max_sets_per_annotator}-set cap"
        )

    assignments: dict[str, list[str]] = {r: [] for r in raters}
    for j, (set_id, _) in enumerate(sets):
        for i in range(raters_per_set):
            assignments[raters[(j * raters_per_set + i) % a]].append(set_id)
    return AssignmentPlan(
        sets=sets,
        assignments=assignments,
        raters_per_set=raters_per_set,
    )
