"""Evaluation runner: score ranking runs against relevance judgments.

File formats (TSV, no header):

    qrels:  query_id <TAB> sentence_id <TAB> challenge(0/1) <TAB> strategy(0/1)
    run:    query_id <TAB> rank <TAB> sentence_id <TAB> score

Judgments cover two aspects per sentence: does it contain a challenge
similar to the query, and does it contain a strategy. The report gives
mean P@k and NDCG@k per aspect at each cutoff. Queries present in the
run but absent from the qrels are flagged and excluded from means.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import BarcodeError
from .metrics import ndcg_at_k, precision_at_k, rbo, shared_items

ASPECTS = ("challenge", "strategy")


class EvaluationError(BarcodeError):
    pass


@dataclass
class Qrels:
    """(query_id, sentence_id) -> (challenge_relevant, strategy_relevant)."""

    judgments: dict[tuple[str, str], tuple[bool, bool]] = field(default_factory=dict)

    def add(self, query_id: str, sentence_id: str, challenge: bool, strategy: bool) -> None:
        key = (query_id, sentence_id)
        if key in self.judgments:
            raise EvaluationError(f"duplicate qrels entry for {key}")
        self.judgments[key] = (challenge, strategy)

    def queries(self) -> set[str]:
        return {q for q, _ in self.judgments}

    def relevant_count(self, query_id: str, aspect: str) -> int:
        col = ASPECTS.index(aspect)
        return sum(
            1
            for (q, _), flags in self.judgments.items()
            if q == query_id and flags[col]
        )

    def is_relevant(self, query_id: str, sentence_id: str, aspect: str) -> bool:
        col = ASPECTS.index(aspect)
        flags = self.judgments.get((query_id, sentence_id))
        return bool(flags and flags[col])


@dataclass
class RunFile:
    """query_id -> ordered sentence ids (the system ranking)."""

    rankings: dict[str, list[str]] = field(default_factory=dict)

    def add(self, query_id: str, sentence_id: str) -> None:
        ranking = self.rankings.setdefault(query_id, [])
        if sentence_id in ranking:
            raise EvaluationError(
                f"duplicate sentence {sentence_id!r} in ranking for {query_id!r}"
            )
        ranking.append(sentence_id)


def load_qrels(path: Path) -> Qrels:
    qrels = Qrels()
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise EvaluationError(f"{path}:{line_no}: expected 4 tab-separated fields")
        query_id, sentence_id, challenge, strategy = parts
        qrels.add(query_id, sentence_id, challenge.strip() == "1", strategy.strip() == "1")
    return qrels


def load_run(path: Path) -> RunFile:
    rows = []
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise EvaluationError(f"{path}:{line_no}: expected 4 tab-separated fields")
        query_id, rank, sentence_id, _score = parts
        rows.append((query_id, int(rank), sentence_id))
    run = RunFile()
    rows.sort(key=lambda r: (r[0], r[1]))
    for query_id, _rank, sentence_id in rows:
        run.add(query_id, sentence_id)
    return run


def save_run(run: RunFile, path: Path, scores: dict[str, list[float]] | None = None) -> None:
    lines = []
    for query_id in sorted(run.rankings):
        for i, sentence_id in enumerate(run.rankings[query_id]):
            score = scores[query_id][i] if scores else 0.0
            lines.append(f"{query_id}\t{i + 1}\t{sentence_id}\t{score:.6f}")
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def evaluate_run(run: RunFile, qrels: Qrels, ks: Sequence[int]) -> dict:
    """Mean P@k and NDCG@k per aspect across judged queries."""
    if any(k < 1 for k in ks):
        raise EvaluationError("cutoffs must be >= 1")
    judged = sorted(q for q in run.rankings if q in qrels.queries())
    unjudged = sorted(q for q in run.rankings if q not in qrels.queries())

    per_query: dict[str, dict] = {}
    for query_id in judged:
        ranking = run.rankings[query_id]
        entry: dict = {}
        for aspect in ASPECTS:
            flags = [qrels.is_relevant(query_id, sid, aspect) for sid in ranking]
            total_relevant = qrels.relevant_count(query_id, aspect)
            entry[aspect] = {
                str(k): {
                    "precision": precision_at_k(flags, k),
                    "ndcg": ndcg_at_k(flags, k, n_relevant=total_relevant),
                }
                for k in ks
            }
        per_query[query_id] = entry

    aspects_report: dict[str, dict] = {}
    for aspect in ASPECTS:
        aspects_report[aspect] = {}
        for k in ks:
            if judged:
                precision = sum(
                    per_query[q][aspect][str(k)]["precision"] for q in judged
                ) / len(judged)
                ndcg = sum(per_query[q][aspect][str(k)]["ndcg"] for q in judged) / len(judged)
            else:
                precision = ndcg = 0.0
            aspects_report[aspect][str(k)] = {"precision": precision, "ndcg": ndcg}

    return {
        "ks": list(ks),
        "n_queries": len(judged),
        "unjudged_queries": unjudged,
        "aspects": aspects_report,
        "per_query": per_query,
    }


def format_report(report: dict) -> str:
    """Aligned-column text table of the evaluation report."""
    lines = []
    header = f"{'Aspect':<10} {'Method':<14} {'P':>8} {'NDCG':>8}"
    lines.append(header)
    lines.append("-" * len(header))
    for aspect in ASPECTS:
        for k in report["ks"]:
            cell = report["aspects"][aspect][str(k)]
            lines.append(
                f"{aspect:<10} {'@' + str(k):<14} {cell['precision']:>8.3f} {cell['ndcg']:>8.3f}"
            )
    lines.append(f"queries evaluated: {report['n_queries']}")
    if report["unjudged_queries"]:
        lines.append("unjudged (excluded): " + ", ".join(report["unjudged_queries"]))
    return "\n".join(lines)


def robustness_report(
    run_a: RunFile, run_b: RunFile, p: float = 0.9, depth: int = 15
) -> dict:
    """RBO + shared-item count between two runs, per query and averaged."""
    common = sorted(set(run_a.rankings) & set(run_b.rankings))
    per_query = {}
    for query_id in common:
        a = run_a.rankings[query_id][:depth]
        b = run_b.rankings[query_id][:depth]
        per_query[query_id] = {
            "rbo": rbo(a, b, p=p, depth=depth),
            "shared": shared_items(a, b),
        }
    n = len(common)
    return {
        "p": p,
        "depth": depth,
        "n_queries": n,
        "mean_rbo": sum(v["rbo"] for v in per_query.values()) / n if n else 0.0,
        "mean_shared": sum(v["shared"] for v in per_query.values()) / n if n else 0.0,
        "per_query": per_query,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def load_asknature_queries() -> list[str]:
    """The 24 benchmark queries derived from curated strategy titles."""
    text = resources.files("barcode.data").joinpath("asknature_queries.txt").read_text()
    return [line.strip() for line in text.splitlines() if line.strip()]


def load_paraphrase_pairs() -> list[tuple[str, str]]:
    """The 18 (query, technical paraphrase) pairs used for robustness."""
    text = resources.files("barcode.data").joinpath("paraphrases.tsv").read_text()
    pairs = []
    for line in text.splitlines():
        if line.strip():
            original, paraphrase = line.split("\t")
            pairs.append((original.strip(), paraphrase.strip()))
    return pairs
