from .embedding import EmbeddedText, embed_batch, local_embedder, http_embedder
from .selection import Exemplar, ShotPlan, select_exemplars, target_points, to_prompt_score
from .prompts import render_prompt, render_prefix, instruction_for, EMOTION_NAMES_PL

__all__ = [
    "EmbeddedText",
    "embed_batch",
    "local_embedder",
    "http_embedder",
    "Exemplar",
    "ShotPlan",
    "select_exemplars",
    "target_points",
    "to_prompt_score",
    "render_prompt",
    "render_prefix",
    "instruction_for",
    "EMOTION_NAMES_PL",
]
