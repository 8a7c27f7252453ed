"""Generative label model over labeling-function votes.

Votes are noisy; the model learns, without ground truth, how accurate
each labeling function is, then emits a posterior probability per
candidate. Parameterization: conditionally independent LFs with
symmetric accuracies,

    P(vote agrees with truth | vote cast) = a_j         (per LF)
    P(truth = POSITIVE) = pi.

Fitting is two-stage: the class prior comes from the majority vote over
rows with a non-tied vote (learning it jointly lets EM collapse into an
"everything is one class" solution on sparse matrices, where the prior
entropy term dominates the likelihood); accuracies are then fit by EM
with the prior held fixed. Abstains carry no signal. Accuracies are
constrained to be at least chance (heuristic LFs are designed to beat a
coin flip), which also makes posteriors monotone in added positive votes.

A majority-vote scorer sits behind the same interface for ablations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import BarcodeError
from .labeling import LabelMatrix

_ACC_FLOOR = 0.5 + 1e-3
_ACC_CEIL = 1.0 - 1e-3
_PRIOR_FLOOR = 1e-4
# MAP smoothing for the M-step: a Beta prior centered on the design
# assumption that a labeling function beats chance. On sparse matrices
# most rows carry a single vote, whose posterior evidence is circular
# (the vote's own weight); a prior centered on 0.5 turns the update into
# a contraction that drags every accuracy to the chance floor. A couple
# of pseudo-counts are negligible at corpus scale but keep small-corpus
# fits anchored.
_ACC_PRIOR_CENTER = 0.7
_ACC_PRIOR_STRENGTH = 2.0


class LabelModelError(BarcodeError):
    pass


@dataclass
class LabelModel:
    lf_names: list[str]
    accuracies: np.ndarray  # (m,) in (0, 1)
    class_prior: float
    metadata: dict = field(default_factory=dict)

    def posterior(self, votes: np.ndarray) -> np.ndarray:
        """P(POSITIVE | votes) for each row of a {-1,0,1} vote matrix."""
        votes = np.asarray(votes)
        log_acc = np.log(self.accuracies)
        log_inacc = np.log1p(-self.accuracies)
        pos = votes == 1
        neg = votes == -1
        logit = math.log(self.class_prior) - math.log1p(-self.class_prior)
        logit = logit + pos @ (log_acc - log_inacc) + neg @ (log_inacc - log_acc)
        return 1.0 / (1.0 + np.exp(-logit))

    def to_dict(self) -> dict:
        return {
            "lf_names": self.lf_names,
            "accuracies": [float(a) for a in self.accuracies],
            "class_prior": self.class_prior,
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LabelModel":
        return cls(
            lf_names=list(d["lf_names"]),
            accuracies=np.asarray(d["accuracies"], dtype=float),
            class_prior=float(d["class_prior"]),
            metadata=dict(d.get("metadata", {})),
        )


def train_label_model(
    matrix: LabelMatrix,
    lr: float = 0.0001,
    epochs: int = 3000,
    seed: int = 0,
    tol: float = 1e-10,
) -> LabelModel:
    """Fit accuracies and prior by EM.

    Candidates of the same sentence share every sentence-level cue, so
    their vote rows are identical; training deduplicates them (one
    effective row per distinct (sentence, votes) pair) to avoid
    pseudo-replicated evidence. `epochs` caps EM iterations (with early
    stop on convergence). The updates are closed-form, so `lr` and `seed`
    do not influence the fit; both are recorded in the model metadata.
    """
    if matrix.m < 2:
        raise LabelModelError(f"need at least 2 labeling functions, got {matrix.m}")
    if not np.any(matrix.votes != 0):
        raise LabelModelError("no signal: every vote is an abstain")

    seen: dict[tuple, None] = {}
    keep_rows = []
    for row, sent_id in enumerate(matrix.sentence_ids):
        key = (sent_id, matrix.votes[row].tobytes())
        if key not in seen:
            seen[key] = None
            keep_rows.append(row)
    votes = matrix.votes[keep_rows]
    n, m = votes.shape

    pos = votes == 1
    neg = votes == -1
    cast = pos | neg
    cast_counts = cast.sum(axis=0).astype(float)

    # Stage 1: class prior from the majority vote (tied rows excluded).
    margins = pos.sum(axis=1) - neg.sum(axis=1)
    decided = int((margins > 0).sum() + (margins < 0).sum())
    prior = float(
        np.clip(((margins > 0).sum() + 1.0) / (decided + 2.0), _PRIOR_FLOOR, 1 - _PRIOR_FLOOR)
    )

    # Stage 2: EM over accuracies, prior fixed.
    acc = np.full(m, 0.7)
    prior_logit = math.log(prior) - math.log1p(-prior)
    for iteration in range(max(1, epochs)):
        log_acc = np.log(acc)
        log_inacc = np.log1p(-acc)
        logit = prior_logit + pos @ (log_acc - log_inacc) + neg @ (log_inacc - log_acc)
        q = 1.0 / (1.0 + np.exp(-logit))
        agree = pos.T @ q + neg.T @ (1.0 - q)
        new_acc = (agree + _ACC_PRIOR_STRENGTH * _ACC_PRIOR_CENTER) / (
            cast_counts + _ACC_PRIOR_STRENGTH
        )
        new_acc = np.clip(new_acc, _ACC_FLOOR, _ACC_CEIL)
        delta = float(np.max(np.abs(new_acc - acc)))
        acc = new_acc
        if delta < tol:
            break
    return LabelModel(
        lf_names=list(matrix.lf_names),
        accuracies=acc,
        class_prior=prior,
        metadata={
            "lr": lr,
            "epochs": epochs,
            "seed": seed,
            "em_iterations": iteration + 1,
            "n_candidates": matrix.n,
            "n_training_rows": n,
        },
    )


class MajorityVoteModel:
    """Vote-count scorer behind the LabelModel interface (for ablation)."""

    lf_names: list[str] = []
    class_prior = 0.5

    def posterior(self, votes: np.ndarray) -> np.ndarray:
        votes = np.asarray(votes)
        n_pos = (votes == 1).sum(axis=1)
        n_neg = (votes == -1).sum(axis=1)
        cast = np.maximum(n_pos + n_neg, 1)
        return 0.5 + 0.5 * (n_pos - n_neg) / cast


@dataclass(frozen=True)
class BioInspirationScore:
    sentence_id: str
    score: float
    best_candidate_id: str

    def to_dict(self) -> dict:
        return {
            "sentence_id": self.sentence_id,
            "score": self.score,
            "best_candidate_id": self.best_candidate_id,
        }


def score_corpus(
    model,
    matrix: LabelMatrix,
    all_sentence_ids: Sequence[str] | None = None,
) -> list[BioInspirationScore]:
    """Per-sentence max over candidate posteriors; no candidates -> 0."""
    posteriors = model.posterior(matrix.votes) if matrix.n else np.zeros(0)
    best: dict[str, tuple[float, str]] = {}
    for cand_id, sent_id, p in zip(matrix.candidate_ids, matrix.sentence_ids, posteriors):
        p = float(p)
        prev = best.get(sent_id)
        # Ties keep the lexicographically smallest candidate id.
        if prev is None or p > prev[0] or (p == prev[0] and cand_id < prev[1]):
            best[sent_id] = (p, cand_id)
    ids = list(all_sentence_ids) if all_sentence_ids is not None else sorted(best)
    out = []
    for sent_id in ids:
        score, cand = best.get(sent_id, (0.0, ""))
        out.append(BioInspirationScore(sentence_id=sent_id, score=score, best_candidate_id=cand))
    return out


def filter_scores(scores: Sequence[BioInspirationScore], tau: float = 0.5) -> set[str]:
    """Sentence ids whose bio-inspiration score passes the threshold."""
    return {s.sentence_id for s in scores if s.score >= tau}


def save_scores(scores: Sequence[BioInspirationScore], path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for s in scores:
            fh.write(json.dumps(s.to_dict(), sort_keys=True) + "\n")


def load_scores(path: Path) -> list[BioInspirationScore]:
    out = []
    with Path(path).open(encoding="utf-8") as fh:
        for line in fh:
            d = json.loads(line)
            out.append(
                BioInspirationScore(
                    sentence_id=d["sentence_id"],
                    score=float(d["score"]),
                    best_candidate_id=d.get("best_candidate_id", ""),
                )
            )
    return out
