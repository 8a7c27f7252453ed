"""Self-contained deterministic providers.

These run anywhere with no model downloads: embeddings come from feature
hashing (token + character n-grams), NLI scores from lexical coverage
with a small antonym table. They are the defaults for fixture bundles
and smoke tests; retrieval quality comes from the real model providers
in `runtime`.

Determinism matters more than quality here: hashing uses md5, never
Python's salted hash(), so vectors are identical across processes and
platforms.
"""

from __future__ import annotations

import hashlib
from typing import Sequence

import numpy as np

from ..textutil import (
    CONJUNCTIONS,
    DETERMINERS,
    PREPOSITIONS,
    PRONOUNS,
    lemmatize_verb,
    singularize_noun,
    tokenize,
)
from .base import NLIScores, l2_normalize

_STOP = DETERMINERS | PREPOSITIONS | CONJUNCTIONS | PRONOUNS | {
    "be", "is", "are", "was", "were", "to", "that", "which", "not", "no", "also",
}

ANTONYM_PAIRS = [
    ("increase", "decrease"),
    ("increase", "reduce"),
    ("increase", "lower"),
    ("raise", "lower"),
    ("gain", "lose"),
    ("rise", "fall"),
    ("expand", "shrink"),
    ("heat", "cool"),
    ("warm", "cool"),
    ("wet", "dry"),
    ("enter", "exit"),
    ("open", "close"),
    ("attract", "repel"),
    ("accelerate", "decelerate"),
    ("inflate", "deflate"),
    ("float", "sink"),
    ("fast", "slow"),
    ("absorb", "release"),
]


def _content_lemmas(text: str) -> set[str]:
    out = set()
    for tok in tokenize(text.lower()):
        if not tok.isalpha() or tok in _STOP:
            continue
        verb = lemmatize_verb(tok)
        noun = singularize_noun(tok)
        out.add(verb if verb != tok else noun)
    return out


def _bucket(feature: str, dim: int) -> tuple[int, float]:
    digest = hashlib.md5(feature.encode("utf-8")).digest()
    index = int.from_bytes(digest[:4], "little") % dim
    sign = 1.0 if digest[4] & 1 else -1.0
    return index, sign


class HashedEmbeddingProvider:
    """Feature-hashing embeddings: deterministic, no model files."""

    def __init__(self, dim: int = 256):
        self.dim = dim
        self.model_id = f"hashed/v1-{dim}"

    def _features(self, text: str) -> dict[str, float]:
        feats: dict[str, float] = {}
        tokens = [t for t in tokenize(text.lower()) if t.isalpha()]
        for tok in tokens:
            weight = 0.25 if tok in _STOP else 1.0
            lemma = lemmatize_verb(tok)
            lemma = lemma if lemma != tok else singularize_noun(tok)
            feats[f"w:{lemma}"] = feats.get(f"w:{lemma}", 0.0) + weight
            padded = f"^{tok}$"
            for k in range(len(padded) - 2):
                tri = padded[k : k + 3]
                feats[f"c:{tri}"] = feats.get(f"c:{tri}", 0.0) + 0.3 * weight
        return feats

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        matrix = np.zeros((len(texts), self.dim), dtype=np.float32)
        for row, text in enumerate(texts):
            for feature, weight in self._features(text).items():
                index, sign = _bucket(feature, self.dim)
                matrix[row, index] += sign * weight
        return l2_normalize(matrix)


class OverlapNliProvider:
    """Lexical-coverage NLI: how much of the hypothesis the premise covers.

    An antonym pair spanning premise and hypothesis flips the mass toward
    contradiction ("increase water loss" vs "reduce water loss").
    """

    model_id = "overlap/v1"

    def score(self, premise: str, hypothesis: str) -> NLIScores:
        p_set = _content_lemmas(premise)
        h_set = _content_lemmas(hypothesis)
        if not h_set or not p_set:
            return NLIScores(entail=1 / 3, neutral=1 / 3, contradict=1 / 3)
        coverage = len(p_set & h_set) / len(h_set)
        antonym = any(
            (a in p_set and b in h_set) or (b in p_set and a in h_set)
            for a, b in ANTONYM_PAIRS
        )
        if antonym:
            entail = 0.05 + 0.10 * coverage
            contradict = 0.50 + 0.40 * coverage
        else:
            entail = 0.10 + 0.85 * coverage
            contradict = 0.05
        neutral = max(1.0 - entail - contradict, 0.02)
        total = entail + neutral + contradict
        return NLIScores(
            entail=entail / total,
            neutral=neutral / total,
            contradict=contradict / total,
        )
