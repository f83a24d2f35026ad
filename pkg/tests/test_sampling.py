import pytest

from emobench.dataprep.sampling import weighted_sample
from emobench.errors import AllZeroWeights, InsufficientPool


def test_zero_weight_never_beats_positive():
    for seed in range(50):
        assert weighted_sample(["a", "b"], [1.0, 0.0], 1, 0, seed) == ["a"]


def test_exhaustive_selects_all():
    ids = ["a", "b", "c"]
    assert sorted(weighted_sample(ids, [1, 2, 3], 3, 0, 7)) == ids


def test_heavy_item_wins_majority():
    wins = sum(
        weighted_sample(["a", "b", "c"], [10, 1, 1], 1, 0, seed)[0] == "a"
        for seed in range(2000)
    )
    assert wins > 1000


def test_deterministic_per_seed():
    ids = [f"t{i}" for i in range(30)]
    weights = [float(i % 7 + 1) for i in range(30)]
    first = weighted_sample(ids, weights, 10, 5, seed=42)
    assert weighted_sample(ids, weights, 10, 5, seed=42) == first
    assert len(set(first)) == 15


def test_uniform_phase_excludes_weighted_picks():
    ids = [f"t{i}" for i in range(20)]
    picked = weighted_sample(ids, [1.0] * 20, 10, 10, seed=1)
    assert sorted(picked) == sorted(ids)


def test_insufficient_pool():
    with pytest.raises(InsufficientPool):
        weighted_sample(["a", "b"], [1, 1], 2, 1, 0)


def test_all_zero_weights():
    with pytest.raises(AllZeroWeights):
        weighted_sample(["a", "b"], [0.0, 0.0], 1, 0, 0)


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        weighted_sample(["a"], [-1.0], 1, 0, 0)
