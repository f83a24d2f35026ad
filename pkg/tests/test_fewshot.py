import numpy as np
import pytest

from emobench.errors import BadK, DegenerateCentroid, NotEnoughCandidates, ProviderError
from emobench.fewshot import (
    EmbeddedText,
    embed_batch,
    local_embedder,
    select_exemplars,
    target_points,
    to_prompt_score,
)


class TestTargetPoints:
    def test_one_shot_midpoint(self):
        assert target_points(1, (0, 1)) == [0.5]
        assert target_points(1, (1, 5)) == [3.0]

    def test_two_shot_endpoints(self):
        assert target_points(2, (1, 5)) == [1, 5]

    def test_three_is_union_of_one_and_two(self):
        for scale in ((0, 1), (1, 5)):
            assert target_points(3, scale) == sorted(
                set(target_points(1, scale)) | set(target_points(2, scale))
            )

    def test_four_shot_fifths(self):
        assert target_points(4, (0, 1)) == pytest.approx([0.2, 0.4, 0.6, 0.8])

    def test_five_shot_sixths(self):
        assert target_points(5, (0, 1)) == pytest.approx([i / 6 for i in range(1, 6)])

    def test_bad_k(self):
        with pytest.raises(BadK):
            target_points(6)
        with pytest.raises(BadK):
            target_points(0)


class TestEmbedBatch:
    def test_identical_texts_zero_distance(self):
        batch = [(f"t{i}", "ten sam tekst") for i in range(4)]
        embedded = embed_batch(batch)
        assert all(e.centroid_dist == pytest.approx(0.0, abs=1e-12) for e in embedded)

    def test_local_vectors_reproducible(self):
        a = embed_batch([("x", "ala ma kota")])[0]
        b = embed_batch([("x", "ala ma kota")])[0]
        assert np.array_equal(a.vector, b.vector)

    def test_antipodal_centroid_degenerate(self):
        def provider(texts):
            return [[1.0, 0.0], [-1.0, 0.0]]

        with pytest.raises(DegenerateCentroid):
            embed_batch([("a", "x"), ("b", "y")], provider=provider)

    def test_provider_length_mismatch(self):
        with pytest.raises(ProviderError):
            embed_batch([("a", "x"), ("b", "y")], provider=lambda t: [[1.0]])


def make_pool(rng, size):
    embedded = [
        EmbeddedText(f"t{i:03d}", np.zeros(2), float(rng.uniform(0, 2)))
        for i in range(size)
    ]
    texts = {e.text_id: f"tekst {e.text_id}" for e in embedded}
    gold = {e.text_id: float(rng.uniform()) for e in embedded}
    return embedded, texts, gold


def brute_force_select(embedded, gold, k):
    """Re-derivation of the combined-rank objective with explicit counting."""
    lo, hi = 1, 5
    pool = list(embedded)
    picked = []
    for t in target_points(k, (lo, hi)):
        scored = []
        for cand in pool:
            cr = 1 + sum(
                1 for o in pool if o.centroid_dist < cand.centroid_dist
            )
            dist = abs((lo + gold[cand.text_id] * (hi - lo)) - t)
            sr = 1 + sum(
                1
                for o in pool
                if abs((lo + gold[o.text_id] * (hi - lo)) - t) < dist
            )
            scored.append((cr + sr, cand.text_id, cand))
        scored.sort(key=lambda s: (s[0], s[1]))
        picked.append((t, scored[0][2].text_id))
        pool = [c for c in pool if c.text_id != scored[0][2].text_id]
    picked.sort(key=lambda p: p[0])
    return [tid for _, tid in picked]


class TestSelectExemplars:
    def test_single_candidate(self):
        embedded = [EmbeddedText("only", np.zeros(2), 0.1)]
        plan = select_exemplars(embedded, {"only": "tekst"}, {"only": 0.5}, "anger", 1)
        assert [e.text_id for e in plan.exemplars] == ["only"]

    def test_perfect_candidate_always_wins(self):
        embedded = [
            EmbeddedText("perfect", np.zeros(2), 0.0),
            EmbeddedText("far", np.zeros(2), 1.0),
            EmbeddedText("farther", np.zeros(2), 2.0),
        ]
        texts = {e.text_id: e.text_id for e in embedded}
        gold = {"perfect": 0.5, "far": 0.9, "farther": 0.1}  # 0.5 -> scale point 3
        plan = select_exemplars(embedded, texts, gold, "fear", 1)
        assert plan.exemplars[0].text_id == "perfect"

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_matches_brute_force(self, k):
        rng = np.random.default_rng(100 + k)
        embedded, texts, gold = make_pool(rng, 100)
        plan = select_exemplars(embedded, texts, gold, "happiness", k)
        assert [e.text_id for e in plan.exemplars] == brute_force_select(embedded, gold, k)

    def test_k_exemplars_no_duplicates(self):
        rng = np.random.default_rng(3)
        embedded, texts, gold = make_pool(rng, 30)
        for k in range(1, 6):
            plan = select_exemplars(embedded, texts, gold, "pride", k)
            ids = [e.text_id for e in plan.exemplars]
            assert len(ids) == k and len(set(ids)) == k

    def test_not_enough_candidates(self):
        embedded = [EmbeddedText("a", np.zeros(2), 0.0)]
        with pytest.raises(NotEnoughCandidates):
            select_exemplars(embedded, {"a": "x"}, {"a": 0.5}, "fear", 2)

    def test_embedding_scale_invariance(self):
        # scaling all vectors leaves cosine distances, hence ranks, unchanged
        rng = np.random.default_rng(12)
        vecs = rng.normal(size=(40, 8))
        texts = [(f"t{i}", f"tekst {i}") for i in range(40)]
        gold = {f"t{i}": float(rng.uniform()) for i in range(40)}
        base = embed_batch(texts, provider=lambda _: vecs.tolist())
        scaled = embed_batch(texts, provider=lambda _: (7.5 * vecs).tolist())
        texts_map = dict(texts)
        for k in (1, 3, 5):
            a = select_exemplars(base, texts_map, gold, "valence", k)
            b = select_exemplars(scaled, texts_map, gold, "valence", k)
            assert [e.text_id for e in a.exemplars] == [e.text_id for e in b.exemplars]


@pytest.mark.parametrize(
    "canonical,score",
    [(0.0, 1), (1.0, 5), (0.5, 3), (0.37, 2), (0.375, 3), (0.9, 5), (0.62, 3)],
)
def test_prompt_score_rounding(canonical, score):
    assert to_prompt_score(canonical) == score
