"""Exemplar selection for k-shot prompting: combine representativeness
(centroid distance rank) with closeness to per-k target points on the
answer scale."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import PROMPT_SCALE
from ..errors import BadK, NotEnoughCandidates
from .embedding import EmbeddedText


@dataclass(frozen=True)
class Exemplar:
    text_id: str
    clean_text: str
    gold_score: int  # 1..5, the score shown in the prompt


@dataclass(frozen=True)
class ShotPlan:
    metric: str
    k: int
    exemplars: tuple[Exemplar, ...] = ()
    prompt_prefix: str = ""


def target_points(k: int, scale: tuple[float, float] = PROMPT_SCALE) -> list[float]:
    """Scale positions the k exemplars should sit at, in ascending order."""
    lo, hi = scale
    span = hi - lo
    if k == 1:
        return [lo + span / 2]
    if k == 2:
        return [lo, hi]
    if k == 3:
        return sorted(set(target_points(1, scale)) | set(target_points(2, scale)))
    if k == 4:
        return [lo + span * f for f in (0.20, 0.40, 0.60, 0.80)]
    if k == 5:
        return [lo + span * f / 6 for f in (1, 2, 3, 4, 5)]
    raise BadK(f"k must be in 1..5, got {k}")


def to_prompt_score(gold_canonical: float) -> int:
    """Map a canonical [0,1] averaged label to the 1..5 prompt scale,
    rounded half-up."""
    lo, hi = PROMPT_SCALE
    value = lo + gold_canonical * (hi - lo)
    return int(min(hi, max(lo, int(value + 0.5))))


def _competition_ranks(values: dict[str, float]) -> dict[str, int]:
    return {
        tid: 1 + sum(1 for other in values.values() if other < v)
        for tid, v in values.items()
    }


def select_exemplars(
    embedded: list[EmbeddedText],
    texts: dict[str, str],
    gold: dict[str, float],
    metric: str,
    k: int,
) -> ShotPlan:
    """Greedy per-target pick: minimal (centroid-distance rank + scale-
    distance rank) among remaining candidates, lexicographic id tiebreak.
    Gold labels are canonical [0,1]; distances computed on the prompt scale.
    """
    if k == 0:
        return ShotPlan(metric=metric, k=0)
    candidates = {e.text_id: e for e in embedded if e.text_id in gold}
    if len(candidates) < k:
        raise NotEnoughCandidates(f"{len(candidates)} candidates for k={k}")
    lo, hi = PROMPT_SCALE
    pool = dict(candidates)
    chosen: list[tuple[float, Exemplar]] = []
    for t in target_points(k):
        cent_rank = _competition_ranks({tid: e.centroid_dist for tid, e in pool.items()})
        scale_rank = _competition_ranks(
            {tid: abs((lo + gold[tid] * (hi - lo)) - t) for tid in pool}
        )
        best = min(pool, key=lambda tid: (cent_rank[tid] + scale_rank[tid], tid))
        chosen.append(
            (
                t,
                Exemplar(
                    text_id=best,
                    clean_text=texts[best],
                    gold_score=to_prompt_score(gold[best]),
                ),
            )
        )
        del pool[best]
    chosen.sort(key=lambda pair: pair[0])
    return ShotPlan(metric=metric, k=k, exemplars=tuple(e for _, e in chosen))
