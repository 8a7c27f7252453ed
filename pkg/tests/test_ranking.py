import numpy as np
import pytest

from barcode.providers.base import NLIScores
from barcode.providers.lightweight import OverlapNliProvider
from barcode.ranking import Bm25Baseline, Query, rank


class TestQueryContract:
    def test_empty_text_rejected(self):
        with pytest.raises(ValueError):
            Query(text="   ")

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            Query(text="reduce drag", k=0)


class TestOverlapNli:
    provider = OverlapNliProvider()

    def test_scores_sum_to_one(self):
        scores = self.provider.score("trap moisture", "reduce water loss")
        assert sum(scores.as_tuple()) == pytest.approx(1.0, abs=1e-6)

    def test_identical_pair_entails(self):
        assert self.provider.score("reduce drag", "reduce drag").argmax() == "entail"

    def test_antonym_pair_contradicts(self):
        scores = self.provider.score("increase water loss", "reduce water loss")
        assert scores.argmax() == "contradict"

    def test_deterministic(self):
        a = self.provider.score("avoid sinking", "prevent sinking")
        b = self.provider.score("avoid sinking", "prevent sinking")
        assert a == b


def _rank(bundle, text, k=15, filtered=False, **kw):
    from barcode.providers import make_embedding_provider, make_nli_provider

    return rank(
        Query(text=text, k=k, use_filtered=filtered),
        bundle.embedding_index,
        bundle.phrases,
        bundle.sentences,
        bundle.bio_scores,
        bundle.classifier,
        make_embedding_provider(bundle.config.embedding_provider),
        make_nli_provider(bundle.config.nli_provider),
        shortlist_n=kw.get("shortlist_n", bundle.config.shortlist_n),
        tau=kw.get("tau", bundle.config.tau),
    )


class TestRankPipeline:
    def test_prevent_sinking_surfaces_avoid_sinking(self, bundle):
        response = _rank(bundle, "prevent sinking", k=15)
        assert response.status == "ok"
        ids = [r.sentence_id for r in response.results]
        assert "ctenophora#0" in ids
        hit = next(r for r in response.results if r.sentence_id == "ctenophora#0")
        assert hit.matched_phrase.text == "avoid sinking"

    def test_results_sorted_and_ranked(self, bundle):
        response = _rank(bundle, "collect water from humid air", k=10)
        scores = [r.combined_score for r in response.results]
        assert scores == sorted(scores, reverse=True)
        assert [r.rank for r in response.results] == list(range(1, len(scores) + 1))

    def test_one_result_per_sentence(self, bundle):
        response = _rank(bundle, "reduce drag", k=50)
        ids = [r.sentence_id for r in response.results]
        assert len(ids) == len(set(ids))

    def test_k_larger_than_corpus_returns_all_ranked(self, bundle):
        response = _rank(bundle, "store liquid", k=10_000)
        sentences_with_phrases = {p.sentence_id for p in bundle.phrases.values()}
        assert len(response.results) == len(sentences_with_phrases)

    def test_filtered_mode_containment(self, bundle):
        tau = bundle.config.tau
        response = _rank(bundle, "sense light", k=50, filtered=True)
        assert response.results
        for result in response.results:
            assert bundle.bio_scores[result.sentence_id] >= tau

    def test_filtered_empty_is_status_not_error(self, bundle):
        response = _rank(bundle, "sense light", k=5, filtered=True, tau=1.5)
        assert response.results == []
        assert response.status.startswith("empty")

    def test_determinism(self, bundle):
        a = _rank(bundle, "regulate temperature", k=15)
        b = _rank(bundle, "regulate temperature", k=15)
        assert [r.to_dict() for r in a.results] == [r.to_dict() for r in b.results]

    def test_combined_score_is_max_over_sentence_phrases(self, bundle):
        from barcode.providers import make_embedding_provider, make_nli_provider

        embed = make_embedding_provider(bundle.config.embedding_provider)
        nli = make_nli_provider(bundle.config.nli_provider)
        query_text = "avoid sinking in water"
        response = _rank(bundle, query_text, k=5)
        top = response.results[0]
        query_vec = embed.embed([query_text])[0]
        best = -1e9
        for phrase in bundle.phrases.values():
            if phrase.sentence_id != top.sentence_id:
                continue
            cos = float(embed.embed([phrase.text])[0] @ query_vec)
            scores = nli.score(phrase.text, query_text)
            decision = bundle.classifier.decision(
                [cos, scores.entail, scores.neutral, scores.contradict])
            best = max(best, decision)
        assert top.combined_score == pytest.approx(best, abs=1e-9)


class TestBm25:
    def test_exact_term_match_ranks_first(self, corpus_store):
        baseline = Bm25Baseline(list(corpus_store.sentences()))
        top = baseline.rank("fog droplets hardened wings", k=5)
        assert top[0][0] == "stenocara#0"

    def test_allowed_filter(self, corpus_store):
        records = list(corpus_store.sentences())
        baseline = Bm25Baseline(records)
        allowed = {"yucca#0"}
        results = baseline.rank("moisture", k=5, allowed_ids=allowed)
        assert [sid for sid, _ in results] == ["yucca#0"]

    def test_deterministic_tie_break(self, corpus_store):
        baseline = Bm25Baseline(list(corpus_store.sentences()))
        a = baseline.rank("the", k=10)
        b = baseline.rank("the", k=10)
        assert a == b


class TestNliScoresType:
    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            NLIScores(entail=0.9, neutral=0.9, contradict=0.9)

    def test_argmax(self):
        assert NLIScores(0.2, 0.7, 0.1).argmax() == "neutral"
