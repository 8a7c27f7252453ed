import json

import pytest

from barcode import ConfigError
from barcode.deptree import ParseTree
from barcode.patterns import load_patterns, match_all, match_pattern, parse_pattern

from .oracles import brute_force_matches


def tree_from(tokens):
    return ParseTree.from_dict({"tokens": tokens})


SIMPLE = tree_from([
    {"text": "bats", "pos": "NOUN", "dep": "nsubj", "head": 1},
    {"text": "detect", "pos": "VERB", "dep": "ROOT", "head": 1},
    {"text": "faint", "pos": "ADJ", "dep": "amod", "head": 3},
    {"text": "echoes", "pos": "NOUN", "dep": "dobj", "head": 1},
])


def test_pattern_file_loads_ten(dep_patterns):
    assert [p.pattern_id for p in dep_patterns] == list(range(1, 11))
    assert all(p.node_ids[0] == "verb" for p in dep_patterns)


def test_simple_dobj_match(dep_patterns):
    p1 = dep_patterns[0]
    matches = match_pattern(SIMPLE, p1)
    assert matches == [{"verb": 1, "object": 3}]


def test_modifier_pattern_match(dep_patterns):
    p2 = dep_patterns[1]
    assert match_pattern(SIMPLE, p2) == [{"verb": 1, "object": 3, "mod/comp": 2}]


def test_no_verb_tree_matches_nothing(dep_patterns):
    tree = tree_from([
        {"text": "quiet", "pos": "ADJ", "dep": "amod", "head": 1},
        {"text": "night", "pos": "NOUN", "dep": "ROOT", "head": 1},
    ])
    assert match_all(tree, dep_patterns) == []


def test_adjacency_operator_is_strict():
    tree = tree_from([
        {"text": "took", "pos": "VERB", "dep": "ROOT", "head": 0},
        {"text": "quickly", "pos": "ADV", "dep": "advmod", "head": 0},
        {"text": "off", "pos": "ADP", "dep": "prt", "head": 0},
    ])
    pattern = parse_pattern(9, [
        {"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}},
        {"LEFT_ID": "verb", "REL_OP": ".", "RIGHT_ID": "adposition",
         "RIGHT_ATTRS": {"DEP": "prt", "POS": "ADP"}},
    ])
    assert match_pattern(tree, pattern) == []  # "quickly" breaks adjacency


def test_root_self_loop_is_not_a_dependent():
    tree = tree_from([
        {"text": "dives", "pos": "VERB", "dep": "dobj", "head": 0},
    ])
    pattern = parse_pattern(1, [
        {"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}},
        {"LEFT_ID": "verb", "REL_OP": ">", "RIGHT_ID": "object",
         "RIGHT_ATTRS": {"DEP": "dobj"}},
    ])
    assert match_pattern(tree, pattern) == []


@pytest.mark.parametrize("bad_nodes,message", [
    ([{"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}},
      {"LEFT_ID": "ghost", "REL_OP": ">", "RIGHT_ID": "o", "RIGHT_ATTRS": {"DEP": "dobj"}}],
     "undeclared"),
    ([{"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}},
      {"LEFT_ID": "verb", "REL_OP": ">>", "RIGHT_ID": "o", "RIGHT_ATTRS": {"DEP": "dobj"}}],
     "REL_OP"),
    ([{"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "NOUN"}}], "anchor"),
    ([{"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}},
      {"LEFT_ID": "verb", "REL_OP": ">", "RIGHT_ID": "verb", "RIGHT_ATTRS": {"DEP": "dobj"}}],
     "duplicate"),
])
def test_malformed_patterns_fail_at_load(bad_nodes, message):
    with pytest.raises(ConfigError, match=message):
        parse_pattern(99, bad_nodes)


def test_malformed_pattern_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text('{"not": "a list"}')
    with pytest.raises(ConfigError):
        load_patterns(path)


def load_random_trees(fixtures_dir):
    trees = []
    with (fixtures_dir / "random_trees.jsonl").open() as fh:
        for line in fh:
            trees.append(ParseTree.from_dict(json.loads(line)))
    return trees


def test_engine_equals_brute_force_on_random_trees(fixtures_dir, dep_patterns):
    """Exact match-set equality on the 100 shipped random trees."""
    trees = load_random_trees(fixtures_dir)
    assert len(trees) == 100
    total = 0
    for tree in trees:
        assert len(tree) <= 25
        for pattern in dep_patterns:
            fast = match_pattern(tree, pattern)
            slow = brute_force_matches(tree, pattern)
            assert fast == slow, f"pattern {pattern.pattern_id} diverges"
            total += len(fast)
    assert total >= 50  # the fixture set must actually exercise the engine


def test_match_soundness_replay(fixtures_dir, dep_patterns):
    """Every emitted match satisfies its constraints when replayed."""
    trees = load_random_trees(fixtures_dir)[:30]
    for tree in trees:
        for pattern, match in match_all(tree, dep_patterns):
            for node_id, idx in match.items():
                token = tree.tokens[idx]
                assert pattern.attrs[node_id].admits(token.dep, token.pos)
            for edge in pattern.edges:
                left, right = match[edge.left_id], match[edge.right_id]
                if edge.rel_op == ">":
                    assert tree.tokens[right].head == left and left != right
                elif edge.rel_op == "<":
                    assert tree.tokens[left].head == right and left != right
                else:
                    assert left + 1 == right
