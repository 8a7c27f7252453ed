"""Relevance classifier combining the four match features.

A polynomial-kernel SVM (degree 2) turns (cosine, entail, neutral,
contradict) into one signed score: the distance from the decision
boundary. Training uses scikit-learn; the fitted machine is frozen to
JSON (support vectors + dual coefficients) and scoring at query time is
plain numpy, so a deployed index needs no sklearn and reloads are
bit-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import BarcodeError

FEATURE_NAMES = ("cosine", "entail", "neutral", "contradict")


class ClassifierError(BarcodeError):
    pass


@dataclass
class RelevanceClassifier:
    support_vectors: np.ndarray  # (s, 4)
    dual_coef: np.ndarray  # (s,)
    intercept: float
    gamma: float = 0.1
    degree: int = 2
    coef0: float = 0.0
    metadata: dict = field(default_factory=dict)

    def decision(self, features: Sequence[float] | np.ndarray) -> float:
        """Signed distance from the boundary; positive means relevant."""
        return float(self.decision_many(np.asarray(features, dtype=float).reshape(1, -1))[0])

    def decision_many(self, features: np.ndarray) -> np.ndarray:
        features = np.asarray(features, dtype=float)
        kernel = (self.gamma * (features @ self.support_vectors.T) + self.coef0) ** self.degree
        return kernel @ self.dual_coef + self.intercept

    def predict(self, features: Sequence[float]) -> bool:
        return self.decision(features) > 0

    def to_dict(self) -> dict:
        return {
            "format_version": 1,
            "kernel": "poly",
            "degree": self.degree,
            "gamma": self.gamma,
            "coef0": self.coef0,
            "intercept": self.intercept,
            "feature_names": list(FEATURE_NAMES),
            "support_vectors": [[float(x) for x in row] for row in self.support_vectors],
            "dual_coef": [float(x) for x in self.dual_coef],
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RelevanceClassifier":
        if d.get("kernel") != "poly":
            raise ClassifierError(f"unsupported kernel {d.get('kernel')!r}")
        return cls(
            support_vectors=np.asarray(d["support_vectors"], dtype=float),
            dual_coef=np.asarray(d["dual_coef"], dtype=float),
            intercept=float(d["intercept"]),
            gamma=float(d["gamma"]),
            degree=int(d["degree"]),
            coef0=float(d.get("coef0", 0.0)),
            metadata=dict(d.get("metadata", {})),
        )

    def save(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), sort_keys=True) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "RelevanceClassifier":
        try:
            return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise ClassifierError(f"cannot load classifier from {path}: {exc}") from exc


def train_relevance_classifier(
    labeled_pairs: Sequence[tuple[Sequence[float], int]],
    c: float = 100.0,
    degree: int = 2,
    gamma: float = 0.1,
    seed: int = 13,
    holdout_fraction: float = 0.3,
) -> tuple[RelevanceClassifier, dict]:
    """Fit the SVM on (features, label) pairs and report holdout quality.

    Labels are 1 (relevant) / 0 (irrelevant); both classes must appear.
    Returns the frozen classifier and holdout metrics (precision for the
    relevant class, accuracy, split sizes).
    """
    from sklearn.model_selection import train_test_split
    from sklearn.svm import SVC

    features = np.asarray([list(f) for f, _ in labeled_pairs], dtype=float)
    labels = np.asarray([int(bool(l)) for _, l in labeled_pairs], dtype=int)
    if len(set(labels.tolist())) < 2:
        raise ClassifierError("training data must contain both classes")

    if 0.0 < holdout_fraction < 1.0 and len(labels) >= 10:
        x_train, x_test, y_train, y_test = train_test_split(
            features, labels, test_size=holdout_fraction, random_state=seed, stratify=labels
        )
    else:
        x_train = x_test = features
        y_train = y_test = labels

    svm = SVC(C=c, kernel="poly", degree=degree, gamma=gamma, coef0=0.0)
    svm.fit(x_train, y_train)

    predicted = svm.predict(x_test)
    predicted_pos = int((predicted == 1).sum())
    true_pos = int(((predicted == 1) & (y_test == 1)).sum())
    precision = true_pos / predicted_pos if predicted_pos else 0.0
    accuracy = float((predicted == y_test).mean())

    clf = RelevanceClassifier(
        support_vectors=np.asarray(svm.support_vectors_, dtype=float),
        dual_coef=np.asarray(svm.dual_coef_[0], dtype=float),
        intercept=float(svm.intercept_[0]),
        gamma=gamma,
        degree=degree,
        coef0=0.0,
        metadata={
            "C": c,
            "seed": seed,
            "n_train": int(len(y_train)),
            "n_holdout": int(len(y_test)),
            "holdout_precision": precision,
            "holdout_accuracy": accuracy,
            "positive_fraction": float(labels.mean()),
        },
    )
    metrics = {
        "holdout_precision": precision,
        "holdout_accuracy": accuracy,
        "n_train": int(len(y_train)),
        "n_holdout": int(len(y_test)),
    }
    return clf, metrics
