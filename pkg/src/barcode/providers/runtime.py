"""In-process model providers (reference checkpoints).

Imports happen lazily so the package works without the model stacks
installed; constructing a provider when its stack is missing raises
ProviderError with the install hint. The checkpoint ids default to the
reference models the retrieval pipeline was tuned against.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .. import ProviderError
from ..corpus import SentenceRecord
from ..deptree import Entity, ParseTree, Token
from .base import NLIScores, l2_normalize

REFERENCE_EMBEDDING_MODEL = "sentence-transformers/multi-qa-mpnet-base-dot-v1"
REFERENCE_NLI_MODEL = "cross-encoder/nli-deberta-v3-base"
REFERENCE_PARSE_MODEL = "en_core_web_sm"


class SentenceTransformerEmbedding:
    def __init__(self, model_name: str = REFERENCE_EMBEDDING_MODEL):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise ProviderError(
                "sentence-transformers is not installed; pip install sentence-transformers"
            ) from exc
        try:
            self._model = SentenceTransformer(model_name)
        except Exception as exc:
            raise ProviderError(f"cannot load embedding model {model_name!r}: {exc}") from exc
        self.model_id = f"st:{model_name}"
        self.dim = self._model.get_sentence_embedding_dimension()

    def embed(self, texts: Sequence[str]) -> np.ndarray:
        vectors = self._model.encode(list(texts), convert_to_numpy=True, show_progress_bar=False)
        return l2_normalize(np.asarray(vectors, dtype=np.float32))


class TransformersNli:
    def __init__(self, model_name: str = REFERENCE_NLI_MODEL):
        try:
            import torch  # noqa: F401
            from transformers import AutoModelForSequenceClassification, AutoTokenizer
        except ImportError as exc:
            raise ProviderError(
                "transformers/torch are not installed; pip install transformers torch"
            ) from exc
        try:
            self._tokenizer = AutoTokenizer.from_pretrained(model_name)
            self._model = AutoModelForSequenceClassification.from_pretrained(model_name)
        except Exception as exc:
            raise ProviderError(f"cannot load NLI model {model_name!r}: {exc}") from exc
        self._model.eval()
        self.model_id = f"nli:{model_name}"
        labels = {v.lower(): k for k, v in self._model.config.id2label.items()}
        self._order = (
            labels.get("entailment", 1),
            labels.get("neutral", 2),
            labels.get("contradiction", 0),
        )

    def score(self, premise: str, hypothesis: str) -> NLIScores:
        import torch

        inputs = self._tokenizer(premise, hypothesis, return_tensors="pt", truncation=True)
        with torch.no_grad():
            logits = self._model(**inputs).logits[0]
        probs = torch.softmax(logits, dim=-1).tolist()
        e, n, c = (probs[i] for i in self._order)
        total = e + n + c
        return NLIScores(entail=e / total, neutral=n / total, contradict=c / total)


class SpacyParseProvider:
    """Dependency parses + entities from a spaCy pipeline."""

    def __init__(self, model_name: str = REFERENCE_PARSE_MODEL):
        try:
            import spacy
        except ImportError as exc:
            raise ProviderError("spacy is not installed; pip install spacy") from exc
        try:
            self._nlp = spacy.load(model_name)
        except OSError as exc:
            raise ProviderError(
                f"spaCy model {model_name!r} missing; python -m spacy download {model_name}"
            ) from exc
        self.model_id = f"spacy:{model_name}"

    def parse(self, sentence: SentenceRecord) -> ParseTree:
        doc = self._nlp(sentence.text)
        tokens = [
            Token(
                i=t.i,
                text=t.text,
                lemma=t.lemma_.lower(),
                pos=t.pos_,
                dep=t.dep_,
                head=t.i if t.dep_ == "ROOT" else t.head.i,
                start=t.idx,
                end=t.idx + len(t.text),
            )
            for t in doc
        ]
        ents = [Entity(label=e.label_, start=e.start, end=e.end) for e in doc.ents]
        return ParseTree(tokens=tokens, ents=ents)
