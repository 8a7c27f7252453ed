import pytest
from hypothesis import given
from hypothesis import strategies as st

from barcode.patents import (
    ProblemPair,
    build_lexicon,
    contains_known_problem,
    extract_problem_pairs,
    load_lexicon,
    save_lexicon,
    text_lemmas,
)


class TestExtraction:
    def test_collecting_liquid(self):
        pairs = extract_problem_pairs(
            "A surface cleaning apparatus comprising a second collecting "
            "apparatus for collecting liquid from the surface"
        )
        assert pairs == [ProblemPair("collect", "liquid")]

    def test_no_gerund_no_pair(self):
        assert extract_problem_pairs("the device is for sale") == []

    def test_two_coordinated_phrases(self):
        pairs = extract_problem_pairs("a lens for focusing light and for filtering noise")
        assert pairs == [ProblemPair("focus", "light"), ProblemPair("filter", "noise")]

    def test_determiners_skipped_head_noun_kept(self):
        pairs = extract_problem_pairs("a pump for collecting the waste liquid")
        assert pairs == [ProblemPair("collect", "liquid")]

    def test_phrase_bounded_by_preposition(self):
        pairs = extract_problem_pairs("a trap for holding specimens in the chamber")
        assert pairs == [ProblemPair("hold", "specimen")]


class TestLexicon:
    def test_top_n_by_count(self):
        stream = [ProblemPair("a", "b")] * 3 + [ProblemPair("c", "d")]
        lexicon = build_lexicon(stream, top_n=1)
        assert lexicon.pairs == frozenset({("a", "b")})
        assert lexicon.size == 1

    def test_top_n_larger_than_distinct(self):
        lexicon = build_lexicon([ProblemPair("a", "b"), ProblemPair("c", "d")], top_n=99)
        assert lexicon.size == 2

    def test_empty_stream_valid(self):
        assert build_lexicon([], top_n=5).size == 0

    def test_tie_break_lexicographic(self):
        lexicon = build_lexicon(
            [ProblemPair("z", "z"), ProblemPair("a", "a")], top_n=1
        )
        assert lexicon.pairs == frozenset({("a", "a")})

    @given(st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from("xyz")),
                    max_size=40), st.randoms())
    def test_order_independence(self, raw, rng):
        pairs = [ProblemPair(v, n) for v, n in raw]
        shuffled = list(pairs)
        rng.shuffle(shuffled)
        a = build_lexicon(pairs, top_n=5)
        b = build_lexicon(shuffled, top_n=5)
        assert a.pairs == b.pairs
        assert a.source_hash == b.source_hash

    def test_tsv_roundtrip(self, tmp_path):
        lexicon = build_lexicon(
            [ProblemPair("sense", "light")] * 2 + [ProblemPair("tilt", "movement")],
            top_n=10,
        )
        save_lexicon(lexicon, tmp_path / "problems.tsv")
        loaded = load_lexicon(tmp_path / "problems.tsv")
        assert loaded.pairs == lexicon.pairs
        assert loaded.counts == lexicon.counts
        first_line = (tmp_path / "problems.tsv").read_text().splitlines()[0]
        assert first_line == "sense\tlight\t2"


class TestProximity:
    @pytest.fixture()
    def lexicon(self):
        return build_lexicon([ProblemPair("sense", "light")], top_n=10)

    def test_within_window(self, lexicon):
        lemmas = text_lemmas("the apparatus can sense dim light")
        assert contains_known_problem(lemmas, lexicon, window=5)

    def test_adjacency_window_too_small(self, lexicon):
        lemmas = text_lemmas("the apparatus can sense dim light")
        assert not contains_known_problem(lemmas, lexicon, window=1)

    def test_empty_lexicon(self):
        empty = build_lexicon([], top_n=1)
        assert not contains_known_problem(["sense", "light"], empty, window=5)

    def test_either_order(self, lexicon):
        assert contains_known_problem(["light", "to", "sense"], lexicon, window=3)

    @given(st.integers(min_value=1, max_value=8))
    def test_monotone_in_window(self, window):
        lexicon = build_lexicon([ProblemPair("sense", "light")], top_n=10)
        lemmas = ["sense", "a", "b", "c", "light"]
        if contains_known_problem(lemmas, lexicon, window=window):
            for wider in range(window, 10):
                assert contains_known_problem(lemmas, lexicon, window=wider)

    def test_reference_pairs_present(self, repo_root):
        lexicon = load_lexicon(repo_root / "lexicon" / "problems.tsv")
        for pair in [("tilt", "movement"), ("sense", "light"), ("extract", "signal"),
                     ("encode", "information"), ("collect", "liquid")]:
            assert pair in lexicon.pairs
