import json
import shutil
from pathlib import Path

import pytest

from barcode.bundle import IndexBundle, build_bundle
from barcode.config import load_config
from barcode.corpus import CorpusStore, ingest, read_articles_jsonl
from barcode.patterns import load_patterns
from barcode.providers.fixture import FixtureParseProvider, FixtureSrlProvider

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return REPO


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def dep_patterns():
    return load_patterns(REPO / "patterns" / "dep_patterns.json")


@pytest.fixture(scope="session")
def parse_provider():
    return FixtureParseProvider(FIXTURES)


@pytest.fixture(scope="session")
def srl_provider():
    return FixtureSrlProvider(FIXTURES)


@pytest.fixture(scope="session")
def fixture_config():
    return load_config(REPO / "barcode.toml")


@pytest.fixture(scope="session")
def corpus_store(tmp_path_factory) -> CorpusStore:
    index_dir = tmp_path_factory.mktemp("corpus_only")
    store, _ = ingest(read_articles_jsonl(FIXTURES / "articles.jsonl"), index_dir)
    return store


@pytest.fixture(scope="session")
def sentence_map(corpus_store):
    return corpus_store.sentence_map()


@pytest.fixture(scope="session")
def built_bundle_dir(tmp_path_factory, fixture_config) -> Path:
    """Full pipeline run over the fixture corpus, sealed."""
    index_dir = tmp_path_factory.mktemp("bundle")
    build_bundle(FIXTURES / "articles.jsonl", index_dir, fixture_config)
    return index_dir


@pytest.fixture(scope="session")
def bundle(built_bundle_dir) -> IndexBundle:
    return IndexBundle.load(built_bundle_dir)


@pytest.fixture()
def bundle_copy(built_bundle_dir, tmp_path) -> Path:
    """A private mutable copy for tamper tests."""
    target = tmp_path / "bundle"
    shutil.copytree(built_bundle_dir, target)
    return target


def load_fixture_tree(sentence_id: str):
    payload = json.loads(
        (FIXTURES / "parse" / f"{sentence_id}.json").read_text(encoding="utf-8")
    )
    from barcode.deptree import ParseTree

    return ParseTree.from_dict(payload)
