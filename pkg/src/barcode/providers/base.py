"""Provider interfaces for the pluggable model backends.

Four capabilities sit behind providers: dependency parsing, QA-SRL
question generation, sentence embedding, and natural-language inference.
Every provider carries a model_id string recorded in build manifests so
stores are reproducible per provider version.

Providers are not assumed shareable across workers: parallel callers
must construct one provider instance per worker.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Protocol, Sequence, runtime_checkable

import numpy as np

if TYPE_CHECKING:
    from ..corpus import SentenceRecord
    from ..deptree import ParseTree
    from ..phrases import QAPair


@dataclass(frozen=True)
class NLIScores:
    entail: float
    neutral: float
    contradict: float

    def __post_init__(self):
        total = self.entail + self.neutral + self.contradict
        if not (0.999999 <= total <= 1.000001):
            raise ValueError(f"NLI scores must sum to 1, got {total}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.entail, self.neutral, self.contradict)

    def argmax(self) -> str:
        names = ("entail", "neutral", "contradict")
        return names[max(range(3), key=lambda i: self.as_tuple()[i])]


@runtime_checkable
class ParseProvider(Protocol):
    model_id: str

    def parse(self, sentence: "SentenceRecord") -> "ParseTree": ...


@runtime_checkable
class SrlProvider(Protocol):
    model_id: str

    def qa_pairs(self, sentence: "SentenceRecord") -> list["QAPair"]: ...


@runtime_checkable
class EmbeddingProvider(Protocol):
    model_id: str
    dim: int

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        """Unit-normalized float32 vectors, one row per text."""
        ...


@runtime_checkable
class NliProvider(Protocol):
    model_id: str

    def score(self, premise: str, hypothesis: str) -> NLIScores: ...


def l2_normalize(matrix: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    return (matrix / norms).astype(np.float32)
