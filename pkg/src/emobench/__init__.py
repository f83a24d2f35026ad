"""Emotion-intensity annotation pipeline and LLM benchmarking toolkit."""

__version__ = "0.1.0"

BASIC_EMOTIONS = ("happiness", "sadness", "anger", "disgust", "fear", "pride")
DIMENSIONS = ("valence", "arousal")
ALL_METRICS = BASIC_EMOTIONS + DIMENSIONS

# Raw rating scales: basic emotions 0..4, valence/arousal 1..5 (pictographic).
EMOTION_SCALE = (0, 4)
DIMENSION_SCALE = (1, 5)
# All prompts ask for an answer on a 1..5 scale.
PROMPT_SCALE = (1, 5)


def raw_scale(metric: str) -> tuple[int, int]:
    if metric in BASIC_EMOTIONS:
        return EMOTION_SCALE
    if metric in DIMENSIONS:
        return DIMENSION_SCALE
    raise ValueError(f"unknown metric: {metric}")


def to_canonical(metric: str, raw: float) -> float:
    """Map a raw-scale label onto the shared [0, 1] scale."""
    lo, hi = raw_scale(metric)
    return (raw - lo) / (hi - lo)


def from_canonical(metric: str, value: float) -> float:
    lo, hi = raw_scale(metric)
    return lo + value * (hi - lo)
