"""Semgrex-style pattern matching over dependency trees.

Patterns use the four keys LEFT_ID / REL_OP / RIGHT_ID / RIGHT_ATTRS.
The first node declares the anchor (always a verb); every later node is
tied to an earlier one through a relation operator:

    ">"  left is the immediate head of right
    "<"  left is an immediate dependent of right
    "."  left immediately precedes right in the sentence

RIGHT_ATTRS constrains DEP and/or POS, either to a single value or to
one of several via {"IN": [...]}. Patterns ship as data in
``patterns/dep_patterns.json`` so new ones can be added without code
changes; malformed patterns fail at load time, never during matching.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import ConfigError
from .deptree import ParseTree

REL_OPS = (">", "<", ".")


@dataclass(frozen=True)
class AttrConstraint:
    """Allowed values per token attribute; empty set means unconstrained."""

    dep: frozenset[str] = frozenset()
    pos: frozenset[str] = frozenset()

    def admits(self, dep: str, pos: str) -> bool:
        if self.dep and dep not in self.dep:
            return False
        if self.pos and pos not in self.pos:
            return False
        return True


@dataclass(frozen=True)
class PatternEdge:
    left_id: str
    rel_op: str
    right_id: str


@dataclass(frozen=True)
class DependencyPattern:
    pattern_id: int
    node_ids: tuple[str, ...]  # in declaration order; [0] is the anchor verb
    attrs: dict[str, AttrConstraint] = field(hash=False)
    edges: tuple[PatternEdge, ...] = ()

    @property
    def anchor(self) -> str:
        return self.node_ids[0]


def _parse_attrs(raw: dict, where: str) -> AttrConstraint:
    dep: frozenset[str] = frozenset()
    pos: frozenset[str] = frozenset()
    for key, value in raw.items():
        if isinstance(value, dict):
            if set(value) != {"IN"} or not isinstance(value["IN"], list):
                raise ConfigError(f"{where}: bad attribute constraint {value!r}")
            values = frozenset(value["IN"])
        elif isinstance(value, str):
            values = frozenset([value])
        else:
            raise ConfigError(f"{where}: bad attribute value {value!r}")
        if key == "DEP":
            dep = values
        elif key == "POS":
            pos = values
        else:
            raise ConfigError(f"{where}: unsupported attribute {key!r}")
    return AttrConstraint(dep=dep, pos=pos)


def parse_pattern(pattern_id: int, nodes: list[dict]) -> DependencyPattern:
    """Validate and compile one pattern from its JSON node list."""
    where = f"pattern {pattern_id}"
    if not nodes:
        raise ConfigError(f"{where}: empty pattern")
    seen: list[str] = []
    attrs: dict[str, AttrConstraint] = {}
    edges: list[PatternEdge] = []
    for pos_in_list, node in enumerate(nodes):
        if "RIGHT_ID" not in node or "RIGHT_ATTRS" not in node:
            raise ConfigError(f"{where}: node {pos_in_list} missing RIGHT_ID/RIGHT_ATTRS")
        right_id = node["RIGHT_ID"]
        if right_id in seen:
            raise ConfigError(f"{where}: duplicate node id {right_id!r}")
        if pos_in_list == 0:
            if "LEFT_ID" in node or "REL_OP" in node:
                raise ConfigError(f"{where}: first node must declare the anchor only")
        else:
            if "LEFT_ID" not in node or "REL_OP" not in node:
                raise ConfigError(f"{where}: node {right_id!r} missing LEFT_ID/REL_OP")
            if node["LEFT_ID"] not in seen:
                raise ConfigError(
                    f"{where}: node {right_id!r} references undeclared id {node['LEFT_ID']!r}"
                )
            if node["REL_OP"] not in REL_OPS:
                raise ConfigError(f"{where}: unsupported REL_OP {node['REL_OP']!r}")
            edges.append(PatternEdge(node["LEFT_ID"], node["REL_OP"], right_id))
        attrs[right_id] = _parse_attrs(node["RIGHT_ATTRS"], where)
        seen.append(right_id)
    if "VERB" not in attrs[seen[0]].pos:
        raise ConfigError(f"{where}: anchor node must be constrained to POS=VERB")
    return DependencyPattern(
        pattern_id=pattern_id,
        node_ids=tuple(seen),
        attrs=attrs,
        edges=tuple(edges),
    )


def load_patterns(path: Path) -> list[DependencyPattern]:
    """Load the pattern file: a JSON list of {pattern_id, pattern} objects."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read pattern file {path}: {exc}") from exc
    if not isinstance(raw, list):
        raise ConfigError(f"{path}: expected a list of patterns")
    patterns = []
    for entry in raw:
        patterns.append(parse_pattern(entry["pattern_id"], entry["pattern"]))
    ids = [p.pattern_id for p in patterns]
    if len(set(ids)) != len(ids):
        raise ConfigError(f"{path}: duplicate pattern_id")
    return patterns


def _rel_holds(tree: ParseTree, left: int, op: str, right: int) -> bool:
    if op == ">":
        return tree.is_dependent(right, left)
    if op == "<":
        return tree.is_dependent(left, right)
    # "." strict linear adjacency
    return left + 1 == right


def match_pattern(tree: ParseTree, pattern: DependencyPattern) -> list[dict[str, int]]:
    """All assignments of tree tokens to pattern nodes, sorted.

    Each match maps node id -> token index. Matching proceeds node by
    node in declaration order, narrowing by the edge that ties each new
    node to an already-bound one.
    """
    edges_by_right = {e.right_id: e for e in pattern.edges}
    assignments: list[dict[str, int]] = [{}]
    for node_id in pattern.node_ids:
        constraint = pattern.attrs[node_id]
        candidates = [t.i for t in tree.tokens if constraint.admits(t.dep, t.pos)]
        edge = edges_by_right.get(node_id)
        new_assignments = []
        for partial in assignments:
            for idx in candidates:
                if edge is not None and not _rel_holds(tree, partial[edge.left_id], edge.rel_op, idx):
                    continue
                extended = dict(partial)
                extended[node_id] = idx
                new_assignments.append(extended)
        assignments = new_assignments
        if not assignments:
            return []
    assignments.sort(key=lambda m: tuple(m[nid] for nid in pattern.node_ids))
    return assignments


def match_all(
    tree: ParseTree, patterns: list[DependencyPattern]
) -> list[tuple[DependencyPattern, dict[str, int]]]:
    out = []
    for pattern in patterns:
        for match in match_pattern(tree, pattern):
            out.append((pattern, match))
    return out
