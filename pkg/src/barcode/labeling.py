"""Labeling functions: weak votes on whether a candidate is bio-inspirational.

Three LFs vote POSITIVE on cues that a sentence describes an organism
solving a problem (the word "adaptation", a known engineering problem
from the patent lexicon, an auxiliary verb introducing the problem);
two vote NEGATIVE on cues it does not (a non-biological main verb, an
entity that functional sentences rarely contain). Everything else is
an ABSTAIN.

Votes are evaluated over the whole sentence, not just the candidate
spans: the cues in the source material are sentence-level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Sequence

import numpy as np

from .clausal import ClausalCandidate
from .corpus import SentenceRecord
from .deptree import ParseTree
from .patents import ProblemLexicon, contains_known_problem, text_lemmas
from .textutil import STANDALONE_PRONOUNS, tokenize

ADAPTATION_FORMS = frozenset(
    {"adaptation", "adapt", "adapted", "adaptive", "adapts", "adapting"}
)

DEFAULT_AUX_VERBS = ("allow", "help", "enable", "let", "permit", "serve")

_UNLIKELY_SYMBOLS = {"&", "@", "$"}
_UNLIKELY_ENTITY_LABELS = {"PERSON", "ORG", "DATE"}


class Vote(IntEnum):
    NEGATIVE = -1
    ABSTAIN = 0
    POSITIVE = 1


@dataclass(frozen=True)
class LabelVote:
    lf_name: str
    vote: Vote


def _sentence_lemmas(sentence: SentenceRecord, tree: ParseTree | None) -> list[str]:
    if tree is not None and len(tree):
        return [t.lemma for t in tree.tokens]
    return text_lemmas(sentence.text)


def lf_adaptation(
    candidate: ClausalCandidate,
    sentence: SentenceRecord,
    tree: ParseTree | None = None,
) -> LabelVote:
    lemmas = _sentence_lemmas(sentence, tree)
    raw = [t.lower() for t in tokenize(sentence.text)]
    if any(l in ADAPTATION_FORMS for l in lemmas) or any(t in ADAPTATION_FORMS for t in raw):
        return LabelVote("adaptation", Vote.POSITIVE)
    return LabelVote("adaptation", Vote.ABSTAIN)


def lf_known_problem(
    candidate: ClausalCandidate,
    sentence: SentenceRecord,
    lexicon: ProblemLexicon,
    tree: ParseTree | None = None,
    window: int = 5,
) -> LabelVote:
    lemmas = _sentence_lemmas(sentence, tree)
    if contains_known_problem(lemmas, lexicon, window=window):
        return LabelVote("known_problem", Vote.POSITIVE)
    return LabelVote("known_problem", Vote.ABSTAIN)


def lf_auxiliary_verb(
    candidate: ClausalCandidate,
    sentence: SentenceRecord,
    tree: ParseTree | None = None,
    aux_lemmas: Sequence[str] = DEFAULT_AUX_VERBS,
) -> LabelVote:
    lemmas = set(_sentence_lemmas(sentence, tree))
    if lemmas & set(aux_lemmas):
        return LabelVote("auxiliary_verb", Vote.POSITIVE)
    return LabelVote("auxiliary_verb", Vote.ABSTAIN)


def lf_non_bio_verb(
    candidate: ClausalCandidate,
    sentence: SentenceRecord,
    tree: ParseTree | None,
    exclusion: Sequence[str],
) -> LabelVote:
    if tree is None or not len(tree):
        return LabelVote("non_bio_verb", Vote.ABSTAIN)
    root = tree.root
    if root.pos != "VERB":
        return LabelVote("non_bio_verb", Vote.ABSTAIN)
    if root.lemma in set(exclusion):
        return LabelVote("non_bio_verb", Vote.NEGATIVE)
    return LabelVote("non_bio_verb", Vote.ABSTAIN)


def lf_unlikely_entity(
    candidate: ClausalCandidate,
    sentence: SentenceRecord,
    tree: ParseTree | None = None,
) -> LabelVote:
    """Person/org names, dates, pronouns and symbols mark non-functional text.

    Pronoun means a standalone referent ("It is a member ..."); possessive
    determiners ("its wings") and relativizers ("that", "which") are
    routine in functional prose and do not vote.
    """
    if tree is not None:
        for ent in tree.ents:
            if ent.label in _UNLIKELY_ENTITY_LABELS:
                return LabelVote("unlikely_entity", Vote.NEGATIVE)
    for tok in tokenize(sentence.text):
        if tok in _UNLIKELY_SYMBOLS:
            return LabelVote("unlikely_entity", Vote.NEGATIVE)
        if tok.lower() in STANDALONE_PRONOUNS:
            return LabelVote("unlikely_entity", Vote.NEGATIVE)
    return LabelVote("unlikely_entity", Vote.ABSTAIN)


LF_NAMES = (
    "adaptation",
    "known_problem",
    "auxiliary_verb",
    "non_bio_verb",
    "unlikely_entity",
)


@dataclass
class LabelMatrix:
    candidate_ids: list[str]
    sentence_ids: list[str]
    lf_names: list[str]
    votes: np.ndarray  # (n, m) int8 in {-1, 0, 1}

    @property
    def n(self) -> int:
        return self.votes.shape[0]

    @property
    def m(self) -> int:
        return self.votes.shape[1]


def apply_labeling_functions(
    candidates: Sequence[ClausalCandidate],
    sentences: dict[str, SentenceRecord],
    trees: dict[str, ParseTree],
    lexicon: ProblemLexicon,
    non_bio_verbs: Sequence[str],
    aux_verbs: Sequence[str] = DEFAULT_AUX_VERBS,
    window: int = 5,
) -> LabelMatrix:
    """Vote every LF on every candidate; one matrix row per candidate."""
    votes = np.zeros((len(candidates), len(LF_NAMES)), dtype=np.int8)
    for row, cand in enumerate(candidates):
        sent = sentences[cand.sentence_id]
        tree = trees.get(cand.sentence_id)
        row_votes = (
            lf_adaptation(cand, sent, tree),
            lf_known_problem(cand, sent, lexicon, tree, window=window),
            lf_auxiliary_verb(cand, sent, tree, aux_lemmas=aux_verbs),
            lf_non_bio_verb(cand, sent, tree, exclusion=non_bio_verbs),
            lf_unlikely_entity(cand, sent, tree),
        )
        for col, lv in enumerate(row_votes):
            votes[row, col] = int(lv.vote)
    return LabelMatrix(
        candidate_ids=[c.candidate_id for c in candidates],
        sentence_ids=[c.sentence_id for c in candidates],
        lf_names=list(LF_NAMES),
        votes=votes,
    )


def load_wordlist(path: Path) -> list[str]:
    """One lemma per line; blank lines and #-comments ignored."""
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if word and not word.startswith("#"):
            out.append(word.lower())
    return out
