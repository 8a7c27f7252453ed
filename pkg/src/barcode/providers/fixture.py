"""Record/replay providers backed by files on disk.

Replay keeps the full test suite runnable with no model downloads:
parses and QA pairs are keyed by sentence_id, embeddings and NLI scores
by content hash. Missing recordings raise ProviderError so callers can
skip-and-log per their contracts.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Sequence

import numpy as np

from .. import ProviderError
from ..corpus import SentenceRecord
from ..deptree import ParseTree
from ..phrases import QAPair
from .base import NLIScores, l2_normalize


def _text_key(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:24]


class FixtureParseProvider:
    """Replays parse trees from ``<root>/parse/<sentence_id>.json``."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.model_id = f"fixture-parse:{self.root.name}"

    def _path(self, sentence_id: str) -> Path:
        return self.root / "parse" / f"{sentence_id.replace('/', '_')}.json"

    def parse(self, sentence: SentenceRecord) -> ParseTree:
        path = self._path(sentence.sentence_id)
        if not path.exists():
            raise ProviderError(f"no parse fixture for {sentence.sentence_id}")
        return ParseTree.from_dict(json.loads(path.read_text(encoding="utf-8")))

    def record(self, sentence_id: str, tree: ParseTree) -> None:
        path = self._path(sentence_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(tree.to_dict(), indent=1, sort_keys=True) + "\n")


class FixtureSrlProvider:
    """Replays QA pairs from ``<root>/srl/<sentence_id>.json``."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.model_id = f"fixture-srl:{self.root.name}"

    def _path(self, sentence_id: str) -> Path:
        return self.root / "srl" / f"{sentence_id.replace('/', '_')}.json"

    def qa_pairs(self, sentence: SentenceRecord) -> list[QAPair]:
        path = self._path(sentence.sentence_id)
        if not path.exists():
            # Absent SRL output is a valid recording of "model produced
            # nothing" only when an empty file marker exists; otherwise
            # the sentence was never recorded.
            raise ProviderError(f"no SRL fixture for {sentence.sentence_id}")
        return [QAPair.from_dict(d) for d in json.loads(path.read_text(encoding="utf-8"))]

    def record(self, sentence_id: str, pairs: list[QAPair]) -> None:
        path = self._path(sentence_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = [
            {"verb": q.verb, "verb_lemma": q.verb_lemma, "question": q.question, "answer": q.answer}
            for q in pairs
        ]
        path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")


class FixtureEmbeddingProvider:
    """Replays vectors from ``<root>/embeddings.json`` (text hash -> vector)."""

    def __init__(self, root: Path):
        self.root = Path(root)
        path = self.root / "embeddings.json"
        if not path.exists():
            raise ProviderError(f"no embedding recordings at {path}")
        payload = json.loads(path.read_text(encoding="utf-8"))
        self.model_id = payload["model_id"]
        self.dim = payload["dim"]
        self._vectors = {k: np.asarray(v, dtype=np.float32) for k, v in payload["vectors"].items()}

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        rows = []
        for text in texts:
            key = _text_key(text)
            if key not in self._vectors:
                raise ProviderError(f"no recorded embedding for {text!r}")
            rows.append(self._vectors[key])
        return l2_normalize(np.stack(rows)) if rows else np.zeros((0, self.dim), np.float32)

    @staticmethod
    def record(root: Path, model_id: str, texts: Sequence[str], vectors: np.ndarray) -> None:
        path = Path(root) / "embeddings.json"
        payload = {"model_id": model_id, "dim": int(vectors.shape[1]), "vectors": {}}
        if path.exists():
            payload = json.loads(path.read_text(encoding="utf-8"))
        for text, vec in zip(texts, vectors):
            payload["vectors"][_text_key(text)] = [round(float(x), 7) for x in vec]
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, sort_keys=True) + "\n")


class FixtureNliProvider:
    """Replays score triples from ``<root>/nli.json`` (pair hash -> triple)."""

    def __init__(self, root: Path):
        self.root = Path(root)
        path = self.root / "nli.json"
        if not path.exists():
            raise ProviderError(f"no NLI recordings at {path}")
        payload = json.loads(path.read_text(encoding="utf-8"))
        self.model_id = payload["model_id"]
        self._scores = payload["scores"]

    @staticmethod
    def _key(premise: str, hypothesis: str) -> str:
        return _text_key(premise + "\x1f" + hypothesis)

    def score(self, premise: str, hypothesis: str) -> NLIScores:
        key = self._key(premise, hypothesis)
        if key not in self._scores:
            raise ProviderError(f"no recorded NLI score for {premise!r} / {hypothesis!r}")
        e, n, c = self._scores[key]
        return NLIScores(entail=e, neutral=n, contradict=c)

    @staticmethod
    def record(root: Path, model_id: str, triples: dict[tuple[str, str], NLIScores]) -> None:
        path = Path(root) / "nli.json"
        payload = {"model_id": model_id, "scores": {}}
        if path.exists():
            payload = json.loads(path.read_text(encoding="utf-8"))
        for (premise, hypothesis), s in triples.items():
            payload["scores"][FixtureNliProvider._key(premise, hypothesis)] = [
                round(s.entail, 7), round(s.neutral, 7), round(s.contradict, 7)
            ]
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, sort_keys=True) + "\n")
