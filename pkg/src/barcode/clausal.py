"""Clausal candidates: (Strategy, Solver, Problem) span triples.

The weak-supervision filter scores candidates, not raw sentences, so we
first detect clause structures that tend to carry a coping strategy and
the problem it addresses. Four detectors are native:

    advcl_problem    the problem is an adverbial clause modifying the
                     strategy clause
    relcl_problem    the problem heads a relative clause; the strategy
                     sits in the main clause
    acl_problem      the problem heads an adjectival clause; the
                     strategy clause is the sentence root
    csubj_gerund     the strategy is a gerund clausal subject of the
                     problem clause

Additional clausal patterns (e.g. the remaining rule-based ones) load
from ``patterns/clausal_patterns.json``; each entry names which matched
node plays which role and spans are the matched nodes' subtrees.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import ConfigError
from .corpus import SentenceRecord
from .deptree import ParseTree, Token, attach_char_spans
from .patterns import DependencyPattern, match_pattern, parse_pattern

_RELCL_DEPS = ("relcl", "acl:relcl")
_SUBJECT_DEPS = ("nsubj", "nsubjpass", "nsubj:pass")
_RELATIVIZERS = frozenset({"that", "which", "who", "whom", "whose"})


@dataclass(frozen=True)
class ClausalCandidate:
    candidate_id: str
    sentence_id: str
    strategy_span: tuple[int, int]
    solver_span: tuple[int, int]
    problem_span: tuple[int, int]
    pattern_name: str

    def to_dict(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "sentence_id": self.sentence_id,
            "strategy_span": list(self.strategy_span),
            "solver_span": list(self.solver_span),
            "problem_span": list(self.problem_span),
            "pattern_name": self.pattern_name,
        }


@dataclass(frozen=True)
class ClausalPatternFile:
    name: str
    pattern: DependencyPattern
    roles: dict[str, str]  # role -> node id


def _span_of(tokens: list[Token]) -> tuple[int, int]:
    """Char span over non-punctuation tokens (edges stay clean)."""
    content = [t for t in tokens if t.pos != "PUNCT" and t.start >= 0]
    if not content:
        return (0, 0)
    return (min(t.start for t in content), max(t.end for t in content))


def _subtree_span(tree: ParseTree, i: int) -> tuple[int, int]:
    return _span_of(tree.subtree(i))


def _problem_span(tree: ParseTree, i: int) -> tuple[int, int]:
    """Subtree span minus the relativizer that introduces the clause."""
    tokens = [t for t in tree.subtree(i) if t.text.lower() not in _RELATIVIZERS]
    return _span_of(tokens)


def _clause_minus(tree: ParseTree, head: int, removed: int) -> tuple[int, int]:
    removed_ids = {t.i for t in tree.subtree(removed)}
    kept = [t for t in tree.subtree(head) if t.i not in removed_ids]
    return _span_of(kept)


def _clause_verb(tree: ParseTree, start: int) -> int:
    """Nearest ancestor (inclusive) that is a verb; the root if none."""
    probe = start
    seen = set()
    while probe not in seen:
        seen.add(probe)
        if tree.tokens[probe].pos == "VERB":
            return probe
        head = tree.tokens[probe].head
        if head == probe:
            return probe
        probe = head
    return probe


def _strategy_clause_span(tree: ParseTree, clause_verb: int, problem_root: int) -> tuple[int, int]:
    """The verb phrase of the main clause: clause subtree minus the
    problem clause, the subject, and the verb's leading auxiliaries."""
    drop = {t.i for t in tree.subtree(problem_root)}
    for child in tree.children(clause_verb):
        if child.dep in _SUBJECT_DEPS:
            drop |= {t.i for t in tree.subtree(child.i)}
        if child.dep in ("aux", "auxpass", "aux:pass") and child.i < clause_verb:
            drop.add(child.i)
    kept = [t for t in tree.subtree(clause_verb) if t.i not in drop]
    return _span_of(kept)


def _subject_span(tree: ParseTree, verb: int) -> tuple[int, int]:
    """Subject subtree of the verb, walking up to the root if needed."""
    probe = verb
    visited = set()
    while probe not in visited:
        visited.add(probe)
        for child in tree.children(probe):
            if child.dep in _SUBJECT_DEPS:
                return _subtree_span(tree, child.i)
        if tree.tokens[probe].head == probe:
            break
        probe = tree.tokens[probe].head
    tok = tree.tokens[verb]
    return (tok.start, tok.end) if tok.start >= 0 else (0, 0)


def extract_clausal_candidates(
    tree: ParseTree,
    sentence: SentenceRecord | None = None,
    extra_patterns: list[ClausalPatternFile] | None = None,
) -> list[ClausalCandidate]:
    """One candidate per clausal-pattern match, ids stable per sentence."""
    sentence_id = sentence.sentence_id if sentence else ""
    if sentence is not None:
        tree = attach_char_spans(tree, sentence.text)
    found: list[tuple[str, tuple, tuple, tuple]] = []

    for tok in tree.tokens:
        head = tok.head
        if tok.dep == "advcl" and head != tok.i:
            found.append(
                (
                    "advcl_problem",
                    _clause_minus(tree, head, tok.i),
                    _subject_span(tree, head),
                    _problem_span(tree, tok.i),
                )
            )
        if tok.dep in _RELCL_DEPS and head != tok.i:
            clause_verb = _clause_verb(tree, head)
            found.append(
                (
                    "relcl_problem",
                    _strategy_clause_span(tree, clause_verb, tok.i),
                    _subject_span(tree, clause_verb),
                    _problem_span(tree, tok.i),
                )
            )
        if tok.dep == "acl" and head != tok.i:
            root = tree.root.i
            found.append(
                (
                    "acl_problem",
                    _strategy_clause_span(tree, root, tok.i),
                    _subject_span(tree, root),
                    _problem_span(tree, tok.i),
                )
            )
        if tok.dep == "csubj" and head != tok.i and tok.text.lower().endswith("ing"):
            found.append(
                (
                    "csubj_gerund",
                    _subtree_span(tree, tok.i),
                    _solver_for_csubj(tree, head, tok.i),
                    _clause_minus(tree, head, tok.i),
                )
            )

    for extra in extra_patterns or []:
        for match in match_pattern(tree, extra.pattern):
            strategy = _subtree_span(tree, match[extra.roles["strategy"]])
            problem = _subtree_span(tree, match[extra.roles["problem"]])
            if "solver" in extra.roles:
                solver = _subtree_span(tree, match[extra.roles["solver"]])
            else:
                anchor = tree.tokens[match[extra.pattern.anchor]]
                solver = (max(anchor.start, 0), max(anchor.end, 0))
            found.append((extra.name, strategy, solver, problem))

    found.sort(key=lambda f: (f[0], f[3], f[1]))
    return [
        ClausalCandidate(
            candidate_id=f"{sentence_id}#c{k}" if sentence_id else f"#c{k}",
            sentence_id=sentence_id,
            strategy_span=strategy,
            solver_span=solver,
            problem_span=problem,
            pattern_name=name,
        )
        for k, (name, strategy, solver, problem) in enumerate(found)
    ]


def _solver_for_csubj(tree: ParseTree, head: int, strategy_root: int) -> tuple[int, int]:
    """Solver for gerund-subject clauses: an object of the problem verb."""
    for child in tree.children(head):
        if child.i != strategy_root and child.dep in ("dobj", "obj") + _SUBJECT_DEPS:
            return _subtree_span(tree, child.i)
    tok = tree.tokens[head]
    return (tok.start, tok.end) if tok.start >= 0 else (0, 0)


def load_clausal_patterns(path: Path) -> list[ClausalPatternFile]:
    """Read extra clausal patterns; empty file or list means none."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise ConfigError(f"{path}: expected a list of clausal patterns")
    out = []
    for k, entry in enumerate(raw):
        try:
            name = entry["name"]
            pattern = parse_pattern(1000 + k, entry["pattern"])
            roles = entry["roles"]
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"{path}: bad clausal pattern entry {k}: {exc}") from exc
        for role in ("strategy", "problem"):
            if role not in roles:
                raise ConfigError(f"{path}: pattern {name!r} missing role {role!r}")
            if roles[role] not in pattern.node_ids:
                raise ConfigError(
                    f"{path}: pattern {name!r} role {role!r} names unknown node {roles[role]!r}"
                )
        out.append(ClausalPatternFile(name=name, pattern=pattern, roles=roles))
    return out
