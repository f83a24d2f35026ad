"""Token-based cost accounting per model."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..errors import UnknownModel

# (input, output) price per single token.
PriceTable = Mapping[str, tuple[float, float]]


def estimate_cost(
    outcomes: Iterable, price_table: PriceTable
) -> tuple[float, dict[str, float]]:
    """Total and per-model cost from token counts; every outcome carries
    model_name, tokens_in, tokens_out."""
    per_model: dict[str, float] = {}
    for o in outcomes:
        model = o.model_name
        if model not in price_table:
            raise UnknownModel(model)
        p_in, p_out = price_table[model]
        per_model[model] = (
            per_model.get(model, 0.0) + o.tokens_in * p_in + o.tokens_out * p_out
        )
    return sum(per_model.values()), per_model
