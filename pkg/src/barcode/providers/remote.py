"""HTTP clients for a remote inference service.

Wire format (JSON over POST):

    /embed  {"texts": [...]}            -> {"model_id", "dim", "vectors": [[...], ...]}
    /nli    {"pairs": [[premise, hypothesis], ...]}
                                        -> {"model_id", "scores": [[e, n, c], ...]}

Connection or protocol failures surface as ProviderError; callers never
receive silent zeros.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .. import ProviderError
from .base import NLIScores, l2_normalize


def _post(url: str, payload: dict, timeout: float) -> dict:
    try:
        import httpx

        response = httpx.post(url, json=payload, timeout=timeout)
        response.raise_for_status()
        return response.json()
    except ProviderError:
        raise
    except Exception as exc:
        raise ProviderError(f"remote provider at {url} failed: {exc}") from exc


class RemoteEmbeddingProvider:
    def __init__(self, base_url: str, timeout: float = 60.0):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        probe = _post(f"{self.base_url}/embed", {"texts": ["probe"]}, timeout)
        self.model_id = f"remote:{probe['model_id']}"
        self.dim = int(probe["dim"])

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        if not len(texts):
            return np.zeros((0, self.dim), dtype=np.float32)
        payload = _post(f"{self.base_url}/embed", {"texts": list(texts)}, self.timeout)
        vectors = np.asarray(payload["vectors"], dtype=np.float32)
        if vectors.shape != (len(texts), self.dim):
            raise ProviderError(
                f"remote embed returned shape {vectors.shape}, expected {(len(texts), self.dim)}"
            )
        return l2_normalize(vectors)


class RemoteNliProvider:
    def __init__(self, base_url: str, timeout: float = 60.0):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        probe = _post(f"{self.base_url}/nli", {"pairs": [["a", "a"]]}, timeout)
        self.model_id = f"remote:{probe['model_id']}"

    def score(self, premise: str, hypothesis: str) -> NLIScores:
        payload = _post(
            f"{self.base_url}/nli", {"pairs": [[premise, hypothesis]]}, self.timeout
        )
        try:
            e, n, c = payload["scores"][0]
        except (KeyError, IndexError, ValueError) as exc:
            raise ProviderError(f"remote nli returned malformed payload: {payload}") from exc
        total = e + n + c
        if total <= 0:
            raise ProviderError(f"remote nli returned non-probability scores: {payload}")
        return NLIScores(entail=e / total, neutral=n / total, contradict=c / total)
