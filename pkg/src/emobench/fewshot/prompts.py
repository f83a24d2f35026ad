"""Byte-exact prompt rendering from the shipped Polish templates."""

from __future__ import annotations

from importlib import resources

from .. import BASIC_EMOTIONS
from ..errors import TemplateMissing
from .selection import ShotPlan

# Polish emotion names substituted into the basic-emotion instruction.
EMOTION_NAMES_PL = {
    "happiness": "radość",
    "sadness": "smutek",
    "anger": "złość",
    "disgust": "wstręt",
    "fear": "strach",
    "pride": "duma",
}


def _load(name: str) -> str:
    ref = resources.files("emobench.fewshot").joinpath("templates", name)
    try:
        return ref.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise TemplateMissing(name) from exc


def instruction_for(metric: str) -> str:
    if metric in BASIC_EMOTIONS:
        return _load("basic.txt").replace("{emotion}", EMOTION_NAMES_PL[metric])
    if metric in ("valence", "arousal"):
        return _load(f"{metric}.txt")
    raise TemplateMissing(f"no template for metric {metric}")


def exemplar_block(i: int, text: str, score: int) -> str:
    return (
        _load("exemplar_block.txt")
        .replace("{i}", str(i))
        .replace("{text}", text)
        .replace("{score}", str(score))
    )


def target_block(i: int, text: str) -> str:
    return _load("target_block.txt").replace("{i}", str(i)).replace("{text}", text)


def render_prefix(metric: str, plan: ShotPlan) -> str:
    """Instruction plus the exemplar blocks; everything before the target."""
    parts = [instruction_for(metric)]
    for i, ex in enumerate(plan.exemplars, start=1):
        parts.append(exemplar_block(i, ex.clean_text, ex.gold_score))
    return " ".join(parts)


def render_prompt(metric: str, plan: ShotPlan, target_text: str) -> str:
    prefix = plan.prompt_prefix or render_prefix(metric, plan)
    return prefix + " " + target_block(len(plan.exemplars) + 1, target_text)
