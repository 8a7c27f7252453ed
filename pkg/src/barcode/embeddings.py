"""Embedding index: phrase vectors plus exact top-n retrieval.

On-disk format is two files:

    embeddings.bin   header: magic "BARC", version u32, d u32, n u64
                     (little-endian), then n*d little-endian float32
    embeddings.ids   one phrase_id per line, row-aligned with the matrix

Vectors are unit-normalized so cosine similarity is a dot product. The
shortlist is exact, never approximate: ties on cosine break by
phrase_id so results are stable across runs.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import BarcodeError
from .providers.base import EmbeddingProvider, l2_normalize

MAGIC = b"BARC"
FORMAT_VERSION = 1


class IndexError_(BarcodeError):
    pass


@dataclass
class EmbeddingIndex:
    phrase_ids: list[str]
    vectors: np.ndarray  # (n, d) float32, unit rows
    model_id: str

    def __post_init__(self):
        if len(self.phrase_ids) != self.vectors.shape[0]:
            raise IndexError_(
                f"{len(self.phrase_ids)} ids vs {self.vectors.shape[0]} vectors"
            )

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __len__(self) -> int:
        return len(self.phrase_ids)


def build_index(
    phrase_ids: Sequence[str], texts: Sequence[str], provider: EmbeddingProvider,
    batch_size: int = 256,
) -> EmbeddingIndex:
    """Embed phrase texts in batches into a unit-norm index."""
    if len(phrase_ids) != len(texts):
        raise IndexError_("phrase_ids and texts must align")
    chunks = []
    for lo in range(0, len(texts), batch_size):
        chunks.append(provider.embed(list(texts[lo : lo + batch_size])))
    if chunks:
        vectors = np.vstack(chunks)
    else:
        vectors = np.zeros((0, provider.dim), dtype=np.float32)
    return EmbeddingIndex(
        phrase_ids=list(phrase_ids),
        vectors=l2_normalize(vectors) if len(vectors) else vectors,
        model_id=provider.model_id,
    )


def save_index(index: EmbeddingIndex, bin_path: Path, ids_path: Path) -> None:
    bin_path, ids_path = Path(bin_path), Path(ids_path)
    bin_path.parent.mkdir(parents=True, exist_ok=True)
    n, d = index.vectors.shape
    with bin_path.open("wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IIQ", FORMAT_VERSION, d, n))
        fh.write(np.ascontiguousarray(index.vectors, dtype="<f4").tobytes())
    with ids_path.open("w", encoding="utf-8") as fh:
        for phrase_id in index.phrase_ids:
            fh.write(phrase_id + "\n")
    # model_id travels in the bundle manifest; the .bin stays self-contained
    # for dimension/count validation.


def load_index(bin_path: Path, ids_path: Path, model_id: str = "") -> EmbeddingIndex:
    data = Path(bin_path).read_bytes()
    if data[:4] != MAGIC:
        raise IndexError_(f"{bin_path}: bad magic {data[:4]!r}")
    version, d, n = struct.unpack("<IIQ", data[4:20])
    if version != FORMAT_VERSION:
        raise IndexError_(f"{bin_path}: unsupported version {version}")
    expected = 20 + 4 * n * d
    if len(data) != expected:
        raise IndexError_(f"{bin_path}: size {len(data)} != expected {expected}")
    vectors = np.frombuffer(data[20:], dtype="<f4").reshape(n, d).copy()
    phrase_ids = Path(ids_path).read_text(encoding="utf-8").splitlines()
    if len(phrase_ids) != n:
        raise IndexError_(f"{ids_path}: {len(phrase_ids)} ids for {n} vectors")
    return EmbeddingIndex(phrase_ids=phrase_ids, vectors=vectors, model_id=model_id)


def shortlist(
    query_vector: np.ndarray, index: EmbeddingIndex, n: int = 4000
) -> list[tuple[str, float]]:
    """The n highest-cosine phrases, exact, sorted descending.

    Ties break by ascending phrase_id. n larger than the index returns
    everything.
    """
    if len(index) == 0:
        raise IndexError_("cannot shortlist an empty index")
    if n < 1:
        raise ValueError("n must be >= 1")
    q = np.asarray(query_vector, dtype=np.float32).reshape(-1)
    sims = index.vectors @ q
    n_keep = min(n, len(index))
    if n_keep < len(index):
        # argpartition narrows the field; take everything tied with the
        # cut value so the final sort decides ties by phrase_id.
        part = np.argpartition(-sims, n_keep - 1)
        threshold = sims[part[n_keep - 1]]
        candidates = np.flatnonzero(sims >= threshold)
    else:
        candidates = np.arange(len(index))
    ranked = sorted(candidates, key=lambda i: (-float(sims[i]), index.phrase_ids[i]))
    return [(index.phrase_ids[i], float(sims[i])) for i in ranked[:n_keep]]


def shortlist_subset(
    query_vector: np.ndarray,
    index: EmbeddingIndex,
    allowed_rows: np.ndarray,
    n: int = 4000,
) -> list[tuple[str, float]]:
    """Shortlist restricted to a boolean row mask (filtered mode)."""
    if not allowed_rows.any():
        return []
    rows = np.flatnonzero(allowed_rows)
    sub = EmbeddingIndex(
        phrase_ids=[index.phrase_ids[i] for i in rows],
        vectors=index.vectors[rows],
        model_id=index.model_id,
    )
    return shortlist(query_vector, sub, n=n)
