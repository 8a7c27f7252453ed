import os

import numpy as np
import pytest

from barcode import ConfigError, ProviderError
from barcode.corpus import SentenceRecord
from barcode.providers import (
    make_embedding_provider,
    make_nli_provider,
    make_parse_provider,
    make_srl_provider,
)
from barcode.providers.base import NLIScores
from barcode.providers.fixture import (
    FixtureEmbeddingProvider,
    FixtureNliProvider,
    FixtureParseProvider,
    FixtureSrlProvider,
)
from barcode.providers.lightweight import HashedEmbeddingProvider


def rec(sentence_id="a#0", text="The beetle catches fog droplets."):
    return SentenceRecord(sentence_id=sentence_id, article_id="a", organism="x",
                          text=text, char_offset=0)


class TestFixtureReplay:
    def test_parse_record_replay(self, tmp_path):
        from barcode.deptree import ParseTree

        provider = FixtureParseProvider(tmp_path)
        tree = ParseTree.from_dict({"tokens": [
            {"text": "catches", "pos": "VERB", "dep": "ROOT", "head": 0},
        ]})
        provider.record("a#0", tree)
        replayed = provider.parse(rec())
        assert replayed.tokens[0].text == "catches"

    def test_parse_missing_raises(self, tmp_path):
        with pytest.raises(ProviderError, match="a#0"):
            FixtureParseProvider(tmp_path).parse(rec())

    def test_srl_record_replay_and_empty_marker(self, tmp_path):
        from barcode.phrases import QAPair

        provider = FixtureSrlProvider(tmp_path)
        provider.record("a#0", [QAPair("catches", "catch", "What is caught?", "droplets")])
        provider.record("b#0", [])
        assert provider.qa_pairs(rec())[0].verb_lemma == "catch"
        assert provider.qa_pairs(rec("b#0")) == []
        with pytest.raises(ProviderError):
            provider.qa_pairs(rec("c#0"))

    def test_embedding_record_replay(self, tmp_path):
        source = HashedEmbeddingProvider(dim=32)
        texts = ["trap moisture", "avoid sinking"]
        FixtureEmbeddingProvider.record(tmp_path, source.model_id, texts,
                                        source.embed(texts))
        replay = FixtureEmbeddingProvider(tmp_path)
        assert replay.model_id == source.model_id
        got = replay.embed(["avoid sinking"])
        assert np.allclose(got[0], source.embed(["avoid sinking"])[0], atol=1e-6)
        with pytest.raises(ProviderError, match="recorded"):
            replay.embed(["never recorded text"])

    def test_nli_record_replay(self, tmp_path):
        triple = NLIScores(entail=0.7, neutral=0.2, contradict=0.1)
        FixtureNliProvider.record(tmp_path, "test-nli",
                                  {("stay moist", "reduce water loss"): triple})
        replay = FixtureNliProvider(tmp_path)
        got = replay.score("stay moist", "reduce water loss")
        assert got.argmax() == "entail"
        with pytest.raises(ProviderError):
            replay.score("x", "y")


class TestFactory:
    def test_hashed_with_dim(self):
        provider = make_embedding_provider("hashed/v1-64")
        assert provider.dim == 64

    def test_overlap(self):
        assert make_nli_provider("overlap/v1").model_id == "overlap/v1"

    def test_fixture_specs(self, fixtures_dir):
        assert make_parse_provider(f"fixture:{fixtures_dir}") is not None
        assert make_srl_provider(f"fixture:{fixtures_dir}") is not None

    @pytest.mark.parametrize("factory,spec", [
        (make_embedding_provider, "bogus"),
        (make_nli_provider, "bogus"),
        (make_parse_provider, "bogus"),
        (make_srl_provider, "bogus"),
    ])
    def test_unknown_spec_rejected(self, factory, spec):
        with pytest.raises(ConfigError):
            factory(spec)


class TestRemote:
    def _fake_httpx(self, monkeypatch, handler):
        import httpx

        class FakeResponse:
            def __init__(self, payload):
                self._payload = payload

            def raise_for_status(self):
                pass

            def json(self):
                return self._payload

        def fake_post(url, json=None, timeout=None):
            return FakeResponse(handler(url, json))

        monkeypatch.setattr(httpx, "post", fake_post)

    def test_remote_embedding(self, monkeypatch):
        def handler(url, payload):
            assert url.endswith("/embed")
            n = len(payload["texts"])
            return {"model_id": "stub", "dim": 4, "vectors": [[1, 0, 0, 0]] * n}

        self._fake_httpx(monkeypatch, handler)
        from barcode.providers.remote import RemoteEmbeddingProvider

        provider = RemoteEmbeddingProvider("http://inference.local")
        assert provider.model_id == "remote:stub"
        vectors = provider.embed(["a", "b"])
        assert vectors.shape == (2, 4)
        assert np.allclose(np.linalg.norm(vectors, axis=1), 1.0)

    def test_remote_nli(self, monkeypatch):
        def handler(url, payload):
            if url.endswith("/nli"):
                return {"model_id": "stub", "scores": [[0.1, 0.2, 0.7]]}
            raise AssertionError(url)

        self._fake_httpx(monkeypatch, handler)
        from barcode.providers.remote import RemoteNliProvider

        provider = RemoteNliProvider("http://inference.local")
        assert provider.score("a", "b").argmax() == "contradict"

    def test_remote_failure_is_provider_error(self, monkeypatch):
        import httpx

        def fake_post(url, json=None, timeout=None):
            raise httpx.ConnectError("down")

        monkeypatch.setattr(httpx, "post", fake_post)
        from barcode.providers.remote import RemoteEmbeddingProvider

        with pytest.raises(ProviderError, match="remote provider"):
            RemoteEmbeddingProvider("http://inference.local")


@pytest.mark.skipif(os.environ.get("BARCODE_REFERENCE_PROVIDERS") != "1",
                    reason="needs the reference NLI checkpoint")
class TestReferenceNli:
    """Behaviors quoted for the reference inference model."""

    def test_directional_examples(self):
        from barcode.providers.runtime import TransformersNli

        nli = TransformersNli()
        assert nli.score("stay moist", "reduce water loss").argmax() == "entail"
        assert nli.score("increase water loss", "reduce water loss").argmax() == "contradict"
