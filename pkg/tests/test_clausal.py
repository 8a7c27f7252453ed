import pytest

from barcode import ConfigError
from barcode.clausal import extract_clausal_candidates, load_clausal_patterns
from barcode.corpus import SentenceRecord
from barcode.deptree import ParseTree

from .conftest import load_fixture_tree


def rec(sentence_id, text):
    return SentenceRecord(sentence_id=sentence_id, article_id=sentence_id.split("#")[0],
                          organism="x", text=text, char_offset=0)


ISOPODA_TEXT = (
    "The dorsal (upper) surface of the animal is covered by a series of "
    "overlapping, articulated plates which give protection while also "
    "providing flexibility."
)
YUCCA_TEXT = (
    "Some desert plants have an oily coating on their leaves or pads that traps "
    "moisture, thereby reducing water loss."
)


def span_text(text, span):
    return text[span[0] : span[1]]


def test_isopoda_strategy_and_problem_spans():
    tree = load_fixture_tree("isopoda#0")
    sentence = rec("isopoda#0", ISOPODA_TEXT)
    candidates = extract_clausal_candidates(tree, sentence=sentence)
    relcl = [c for c in candidates if c.pattern_name == "relcl_problem"]
    assert len(relcl) == 1
    assert span_text(ISOPODA_TEXT, relcl[0].strategy_span) == (
        "covered by a series of overlapping, articulated plates"
    )
    assert span_text(ISOPODA_TEXT, relcl[0].problem_span) == (
        "give protection while also providing flexibility"
    )


def test_yucca_problem_span_covers_quoted_text():
    tree = load_fixture_tree("yucca#0")
    sentence = rec("yucca#0", YUCCA_TEXT)
    candidates = extract_clausal_candidates(tree, sentence=sentence)
    relcl = [c for c in candidates if c.pattern_name == "relcl_problem"]
    assert relcl, [c.pattern_name for c in candidates]
    problem = span_text(YUCCA_TEXT, relcl[0].problem_span)
    assert "traps moisture, thereby reducing water loss" in problem
    assert span_text(YUCCA_TEXT, relcl[0].solver_span) == "Some desert plants"


def test_no_subordinate_clause_no_candidates():
    tree = ParseTree.from_dict({"tokens": [
        {"text": "The", "pos": "DET", "dep": "det", "head": 1},
        {"text": "bird", "pos": "NOUN", "dep": "nsubj", "head": 2},
        {"text": "migrates", "pos": "VERB", "dep": "ROOT", "head": 2},
    ]})
    assert extract_clausal_candidates(tree) == []


def test_gerund_clausal_subject_pattern():
    tree = load_fixture_tree("gecko#0")
    sentence = rec("gecko#0",
                   "Increasing humidity typically fortifies gecko adhesion, even on "
                   "hydrophobic surfaces, yet is reduced if completely immersed in water.")
    candidates = extract_clausal_candidates(tree, sentence=sentence)
    gerund = [c for c in candidates if c.pattern_name == "csubj_gerund"]
    assert len(gerund) == 1
    assert span_text(sentence.text, gerund[0].strategy_span) == "Increasing humidity"


def test_candidate_ids_stable_and_unique():
    tree = load_fixture_tree("peregrine-falcon#0")
    sentence = rec("peregrine-falcon#0", "x" * 400)
    candidates = extract_clausal_candidates(tree, sentence=sentence)
    ids = [c.candidate_id for c in candidates]
    assert len(ids) == len(set(ids))
    assert all(i.startswith("peregrine-falcon#0#c") for i in ids)


def test_spans_within_sentence_bounds(corpus_store, parse_provider):
    for sentence in corpus_store.sentences():
        try:
            tree = parse_provider.parse(sentence)
        except Exception:
            continue
        for cand in extract_clausal_candidates(tree, sentence=sentence):
            for span in (cand.strategy_span, cand.solver_span, cand.problem_span):
                assert 0 <= span[0] <= span[1] <= len(sentence.text)


def test_extra_patterns_from_file(tmp_path):
    path = tmp_path / "clausal.json"
    path.write_text("""
    [{"name": "xcomp_purpose",
      "pattern": [
        {"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}},
        {"LEFT_ID": "verb", "REL_OP": ">", "RIGHT_ID": "purpose",
         "RIGHT_ATTRS": {"DEP": "xcomp"}}],
      "roles": {"strategy": "verb", "problem": "purpose"}}]
    """)
    extra = load_clausal_patterns(path)
    tree = ParseTree.from_dict({"tokens": [
        {"text": "dives", "pos": "VERB", "dep": "ROOT", "head": 0,
         "start": 0, "end": 5},
        {"text": "to", "pos": "PART", "dep": "aux", "head": 2, "start": 6, "end": 8},
        {"text": "hunt", "pos": "VERB", "dep": "xcomp", "head": 0, "start": 9, "end": 13},
    ]})
    candidates = extract_clausal_candidates(tree, extra_patterns=extra)
    assert [c.pattern_name for c in candidates] == ["xcomp_purpose"]


def test_bad_role_name_rejected(tmp_path):
    path = tmp_path / "clausal.json"
    path.write_text("""
    [{"name": "broken",
      "pattern": [{"RIGHT_ID": "verb", "RIGHT_ATTRS": {"POS": "VERB"}}],
      "roles": {"strategy": "verb", "problem": "ghost"}}]
    """)
    with pytest.raises(ConfigError, match="ghost"):
        load_clausal_patterns(path)


def test_shipped_pattern_file_is_valid(repo_root):
    assert load_clausal_patterns(repo_root / "patterns" / "clausal_patterns.json") == []
