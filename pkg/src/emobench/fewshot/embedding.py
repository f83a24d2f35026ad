"""Text embeddings for exemplar selection: an HTTP provider speaking the
standard embeddings wire shape, and a deterministic local hashed
bag-of-words fallback for offline runs."""

from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import DegenerateCentroid, ProviderError

Provider = Callable[[Sequence[str]], list[list[float]]]

_TOKEN_RE = re.compile(r"\w+", re.UNICODE)


@dataclass(frozen=True)
class EmbeddedText:
    text_id: str
    vector: np.ndarray
    centroid_dist: float


def local_embedder(dim: int = 256) -> Provider:
    """Hashed bag-of-words vectors: stable across runs and processes."""

    def embed(texts: Sequence[str]) -> list[list[float]]:
        out = []
        for text in texts:
            vec = np.zeros(dim)
            for token in _TOKEN_RE.findall(text.lower()):
                digest = hashlib.md5(token.encode("utf-8")).digest()
                idx = int.from_bytes(digest[:4], "little") % dim
                sign = 1.0 if digest[4] % 2 == 0 else -1.0
                vec[idx] += sign
            out.append(vec.tolist())
        return out

    return embed


def http_embedder(endpoint: str, model: str, token: str = "", timeout: float = 60.0) -> Provider:
    """POST {model, input:[texts]} -> {data:[{embedding:[...]}]}."""
    import httpx

    headers = {"Content-Type": "application/json"}
    if token:
        headers["Authorization"] = f"Bearer {token}"

    def embed(texts: Sequence[str]) -> list[list[float]]:
        try:
            resp = httpx.post(
                endpoint,
                json={"model": model, "input": list(texts)},
                headers=headers,
                timeout=timeout,
            )
            resp.raise_for_status()
            data = resp.json()["data"]
            return [row["embedding"] for row in data]
        except (httpx.HTTPError, KeyError, ValueError) as exc:
            raise ProviderError(f"embedding request failed: {exc}") from exc

    return embed


def cosine_distance(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        raise DegenerateCentroid("zero-norm vector in cosine distance")
    return float(1.0 - np.dot(a, b) / (na * nb))


def euclidean_distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a - b))


def embed_batch(
    texts: Sequence[tuple[str, str]],
    provider: Provider | None = None,
    metric: str = "cosine",
) -> list[EmbeddedText]:
    """Embed (text_id, text) pairs and attach each vector's distance to the
    batch centroid."""
    if provider is None:
        provider = local_embedder()
    if not texts:
        return []
    try:
        vectors = provider([t for _, t in texts])
    except ProviderError:
        raise
    except Exception as exc:
        raise ProviderError(str(exc)) from exc
    if len(vectors) != len(texts):
        raise ProviderError(
            f"provider returned {len(vectors)} vectors for {len(texts)} texts"
        )
    arr = np.array(vectors, dtype=float)
    if arr.ndim != 2:
        raise ProviderError("provider vectors have inconsistent dimensions")
    centroid = arr.mean(axis=0)
    dist = cosine_distance if metric == "cosine" else euclidean_distance
    out = []
    for (text_id, _), vec in zip(texts, arr):
        try:
            d = dist(vec, centroid)
        except DegenerateCentroid as exc:
            raise DegenerateCentroid(f"text {text_id}: {exc}") from exc
        if math.isnan(d):
            raise ProviderError(f"text {text_id}: non-finite distance")
        out.append(EmbeddedText(text_id=text_id, vector=vec, centroid_dist=d))
    return out
