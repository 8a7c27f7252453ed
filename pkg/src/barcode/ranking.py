"""Query-time ranking: shortlist by embedding, re-score with NLI, combine.

The pipeline per query:

    1. optional bio-inspiration filter (keep sentences scoring >= tau)
    2. exact top-n shortlist of candidate phrases by cosine similarity
    3. NLI on each survivor (phrase as premise, query as hypothesis)
    4. classifier turns (cosine, entail, neutral, contradict) into one
       signed score
    5. per-sentence max over its phrases, top-k sentences out

Everything is deterministic: ties break by cosine, then sentence id.
A BM25 scorer over raw sentence text hangs behind the same interface as
a lexical baseline for evaluation runs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classifier import RelevanceClassifier
from .corpus import SentenceRecord
from .embeddings import EmbeddingIndex, shortlist, shortlist_subset
from .phrases import CandidatePhrase
from .providers.base import EmbeddingProvider, NliProvider, NLIScores
from .textutil import tokenize

DEFAULT_SHORTLIST = 4000
DEFAULT_K = 15


@dataclass(frozen=True)
class Query:
    text: str
    k: int = DEFAULT_K
    use_filtered: bool = False

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("query text must be non-empty")
        if self.k < 1:
            raise ValueError("k must be >= 1")


@dataclass(frozen=True)
class RankedResult:
    rank: int
    sentence_id: str
    organism: str
    sentence_text: str
    matched_phrase: CandidatePhrase
    features: tuple[float, float, float, float]  # cosine, entail, neutral, contradict
    combined_score: float

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "sentence_id": self.sentence_id,
            "organism": self.organism,
            "sentence_text": self.sentence_text,
            "matched_phrase": self.matched_phrase.to_dict(),
            "features": {
                "cosine": self.features[0],
                "entail": self.features[1],
                "neutral": self.features[2],
                "contradict": self.features[3],
            },
            "combined_score": self.combined_score,
        }


@dataclass
class RankResponse:
    results: list[RankedResult]
    status: str = "ok"


def _bidirectional(forward: NLIScores, backward: NLIScores) -> NLIScores:
    entail = (forward.entail + backward.entail) / 2
    neutral = (forward.neutral + backward.neutral) / 2
    contradict = (forward.contradict + backward.contradict) / 2
    total = entail + neutral + contradict
    return NLIScores(entail / total, neutral / total, contradict / total)


def rank(
    query: Query,
    index: EmbeddingIndex,
    phrases: dict[str, CandidatePhrase],
    sentences: dict[str, SentenceRecord],
    bio_scores: dict[str, float],
    classifier: RelevanceClassifier,
    embedding_provider: EmbeddingProvider,
    nli_provider: NliProvider,
    shortlist_n: int = DEFAULT_SHORTLIST,
    tau: float = 0.5,
    bidirectional_nli: bool = False,
) -> RankResponse:
    """Rank corpus sentences for one query; one result per sentence."""
    query_vector = embedding_provider.embed([query.text])[0]

    if query.use_filtered:
        allowed = {sid for sid, score in bio_scores.items() if score >= tau}
        mask = np.array(
            [phrases[pid].sentence_id in allowed for pid in index.phrase_ids], dtype=bool
        )
        if not mask.any():
            return RankResponse(results=[], status="empty: no sentences pass the bio filter")
        pool = shortlist_subset(query_vector, index, mask, n=shortlist_n)
    else:
        if len(index) == 0:
            return RankResponse(results=[], status="empty: index has no phrases")
        pool = shortlist(query_vector, index, n=shortlist_n)

    best_per_sentence: dict[str, tuple[float, float, CandidatePhrase, tuple]] = {}
    for phrase_id, cosine in pool:
        phrase = phrases[phrase_id]
        nli = nli_provider.score(phrase.text, query.text)
        if bidirectional_nli:
            nli = _bidirectional(nli, nli_provider.score(query.text, phrase.text))
        features = (cosine, nli.entail, nli.neutral, nli.contradict)
        combined = classifier.decision(features)
        prev = best_per_sentence.get(phrase.sentence_id)
        if prev is None or _better(combined, cosine, phrase.phrase_id, prev):
            best_per_sentence[phrase.sentence_id] = (combined, cosine, phrase, features)

    ordered = sorted(
        best_per_sentence.items(),
        key=lambda kv: (-kv[1][0], -kv[1][1], kv[0]),
    )
    results = []
    for rank_pos, (sentence_id, (combined, _cosine, phrase, features)) in enumerate(
        ordered[: query.k], start=1
    ):
        record = sentences[sentence_id]
        results.append(
            RankedResult(
                rank=rank_pos,
                sentence_id=sentence_id,
                organism=record.organism,
                sentence_text=record.text,
                matched_phrase=phrase,
                features=features,
                combined_score=combined,
            )
        )
    return RankResponse(results=results, status="ok")


def _better(
    combined: float,
    cosine: float,
    phrase_id: str,
    prev: tuple[float, float, CandidatePhrase, tuple],
) -> bool:
    """Higher combined wins, then higher cosine, then smaller phrase_id."""
    prev_combined, prev_cosine, prev_phrase, _ = prev
    if combined != prev_combined:
        return combined > prev_combined
    if cosine != prev_cosine:
        return cosine > prev_cosine
    return phrase_id < prev_phrase.phrase_id


class Bm25Baseline:
    """Lexical baseline over raw sentence text (Okapi BM25, k1=1.5, b=0.75).

    Stands in for a stock search engine in evaluation comparisons; exact
    score compatibility with any particular engine is a non-goal.
    """

    def __init__(self, sentences: Sequence[SentenceRecord], k1: float = 1.5, b: float = 0.75):
        self.k1 = k1
        self.b = b
        self.records = list(sentences)
        self._tokens = [
            [t.lower() for t in tokenize(rec.text) if t.isalnum()] for rec in self.records
        ]
        self._doc_len = np.array([len(t) for t in self._tokens], dtype=float)
        self._avg_len = float(self._doc_len.mean()) if len(self._doc_len) else 0.0
        self._doc_freq: Counter = Counter()
        for toks in self._tokens:
            self._doc_freq.update(set(toks))

    def _idf(self, term: str) -> float:
        df = self._doc_freq.get(term, 0)
        n = len(self.records)
        return math.log((n - df + 0.5) / (df + 0.5) + 1.0)

    def rank(
        self, query_text: str, k: int = DEFAULT_K, allowed_ids: set[str] | None = None
    ) -> list[tuple[str, float]]:
        terms = [t.lower() for t in tokenize(query_text) if t.isalnum()]
        scores = []
        for i, rec in enumerate(self.records):
            if allowed_ids is not None and rec.sentence_id not in allowed_ids:
                continue
            counts = Counter(self._tokens[i])
            score = 0.0
            for term in terms:
                tf = counts.get(term, 0)
                if not tf:
                    continue
                denom = tf + self.k1 * (
                    1 - self.b + self.b * self._doc_len[i] / (self._avg_len or 1.0)
                )
                score += self._idf(term) * tf * (self.k1 + 1) / denom
            scores.append((rec.sentence_id, score))
        scores.sort(key=lambda kv: (-kv[1], kv[0]))
        return scores[:k]
