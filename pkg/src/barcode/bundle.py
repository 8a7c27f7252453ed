"""Index bundle: build, seal, verify, load, query.

A bundle directory holds every artifact the query engine needs:

    corpus/              articles.jsonl, sentences.jsonl, stats.json
    phrases.jsonl        candidate phrase table
    candidates.jsonl     clausal candidates (provenance for bio scores)
    bio_scores.jsonl     query-independent bio-inspiration scores
    labelmodel.json      fitted label-model parameters
    embeddings.bin/.ids  phrase embedding index
    relevance.json       frozen relevance classifier
    config.json          resolved config snapshot
    manifest.json        component hashes; written last = sealed

Builds run in stages with ``.stages/<name>.done`` markers, so an
interrupted build resumes at the failed stage. The manifest hash covers
component hashes and versions but not timestamps: rebuilding from
identical inputs yields an identical hash. Loading verifies every
component against the manifest and refuses tampered or unsealed bundles.
"""

from __future__ import annotations

import hashlib
import json
import logging
import shutil
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import BarcodeError, ProviderError, __version__
from .classifier import RelevanceClassifier
from .clausal import extract_clausal_candidates, load_clausal_patterns
from .config import Config, config_from_snapshot
from .corpus import CorpusStore, ingest, read_articles_jsonl
from .embeddings import EmbeddingIndex, build_index as build_embedding_index, load_index, save_index
from .labeling import apply_labeling_functions, load_wordlist
from .labelmodel import (
    LabelModel,
    LabelModelError,
    load_scores,
    save_scores,
    score_corpus,
    train_label_model,
)
from .patents import build_lexicon, load_lexicon
from .patterns import load_patterns
from .phrases import PhraseTable, extract_all
from .providers import (
    make_embedding_provider,
    make_nli_provider,
    make_parse_provider,
    make_srl_provider,
)
from .ranking import Query, RankResponse, rank
from .textutil import SEGMENTER_VERSION

logger = logging.getLogger(__name__)

STAGES = ("corpus", "phrases", "bio", "embed", "classifier", "config")

_COMPONENT_FILES = (
    "corpus/articles.jsonl",
    "corpus/sentences.jsonl",
    "corpus/stats.json",
    "phrases.jsonl",
    "candidates.jsonl",
    "bio_scores.jsonl",
    "labelmodel.json",
    "embeddings.bin",
    "embeddings.ids",
    "relevance.json",
    "config.json",
)


class BundleError(BarcodeError):
    pass


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _manifest_hash(components: dict[str, str], versions: dict[str, str]) -> str:
    canonical = json.dumps(
        {"components": components, "versions": versions}, sort_keys=True
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _stage_marker(index_dir: Path, stage: str) -> Path:
    return index_dir / ".stages" / f"{stage}.done"


def _mark_done(index_dir: Path, stage: str) -> None:
    marker = _stage_marker(index_dir, stage)
    marker.parent.mkdir(parents=True, exist_ok=True)
    marker.write_text("done\n")


def build_bundle(articles_path: Path, index_dir: Path, config: Config) -> dict:
    """Run every pipeline stage and seal the bundle; returns the manifest."""
    index_dir = Path(index_dir)
    index_dir.mkdir(parents=True, exist_ok=True)
    manifest_path = index_dir / "manifest.json"
    if manifest_path.exists():
        manifest_path.unlink()  # a rebuild invalidates the old seal

    parse_provider = make_parse_provider(config.parse_provider)
    srl_provider = make_srl_provider(config.srl_provider)
    embedding_provider = make_embedding_provider(config.embedding_provider)

    if not _stage_marker(index_dir, "corpus").exists():
        ingest(read_articles_jsonl(articles_path), index_dir)
        _mark_done(index_dir, "corpus")
    store = CorpusStore(index_dir / "corpus")

    if not _stage_marker(index_dir, "phrases").exists():
        patterns = load_patterns(Path(config.patterns_file))
        extract_all(store, parse_provider, srl_provider, patterns, index_dir / "phrases.jsonl")
        _mark_done(index_dir, "phrases")

    if not _stage_marker(index_dir, "bio").exists():
        _run_bio_stage(store, parse_provider, index_dir, config)
        _mark_done(index_dir, "bio")

    if not _stage_marker(index_dir, "embed").exists():
        table = list(PhraseTable(index_dir / "phrases.jsonl"))
        emb_index = build_embedding_index(
            [p.phrase_id for p in table], [p.text for p in table], embedding_provider
        )
        save_index(emb_index, index_dir / "embeddings.bin", index_dir / "embeddings.ids")
        _mark_done(index_dir, "embed")

    if not _stage_marker(index_dir, "classifier").exists():
        source = Path(config.classifier_file)
        if not source.exists():
            raise BundleError(f"classifier file not found: {source}")
        RelevanceClassifier.load(source)  # validate before copying
        shutil.copyfile(source, index_dir / "relevance.json")
        _mark_done(index_dir, "classifier")

    if not _stage_marker(index_dir, "config").exists():
        (index_dir / "config.json").write_text(config.to_json() + "\n", encoding="utf-8")
        _mark_done(index_dir, "config")

    return seal_bundle(index_dir, embedding_model=embedding_provider.model_id,
                       nli_model=config.nli_provider)


def _run_bio_stage(store: CorpusStore, parse_provider, index_dir: Path, config: Config) -> None:
    lexicon_path = Path(config.problem_lexicon_file)
    if lexicon_path.exists():
        lexicon = load_lexicon(lexicon_path)
    else:
        logger.warning("problem lexicon missing at %s; known-problem LF will abstain", lexicon_path)
        lexicon = build_lexicon([], top_n=1)
    non_bio = load_wordlist(Path(config.non_bio_verbs_file))
    aux = load_wordlist(Path(config.aux_verbs_file))
    clausal_path = Path(config.clausal_patterns_file)
    extra_patterns = load_clausal_patterns(clausal_path) if clausal_path.exists() else []

    sentences = store.sentence_map()
    trees = {}
    candidates = []
    for sentence in store.sentences():
        try:
            tree = parse_provider.parse(sentence)
        except ProviderError:
            continue  # unparsed sentences simply have no candidates
        trees[sentence.sentence_id] = tree
        candidates.extend(
            extract_clausal_candidates(tree, sentence=sentence, extra_patterns=extra_patterns)
        )

    with (index_dir / "candidates.jsonl").open("w", encoding="utf-8") as fh:
        for cand in candidates:
            fh.write(json.dumps(cand.to_dict(), sort_keys=True) + "\n")

    matrix = apply_labeling_functions(
        candidates, sentences, trees, lexicon, non_bio, aux, window=config.problem_window
    )
    all_ids = sorted(sentences)
    try:
        model = train_label_model(
            matrix, lr=config.label_lr, epochs=config.label_epochs, seed=config.seed
        )
        scores = score_corpus(model, matrix, all_sentence_ids=all_ids)
        model_payload = model.to_dict()
    except LabelModelError as exc:
        logger.warning("label model not trained (%s); all bio scores set to 0", exc)
        scores = score_corpus(_ZeroModel(), matrix, all_sentence_ids=all_ids)
        model_payload = {"untrained": str(exc)}
    save_scores(scores, index_dir / "bio_scores.jsonl")
    (index_dir / "labelmodel.json").write_text(
        json.dumps(model_payload, sort_keys=True) + "\n", encoding="utf-8"
    )


class _ZeroModel:
    def posterior(self, votes) -> np.ndarray:
        return np.zeros(len(votes))


def seal_bundle(index_dir: Path, embedding_model: str = "", nli_model: str = "") -> dict:
    """Hash every component and write the manifest (the seal)."""
    index_dir = Path(index_dir)
    components = {}
    for rel in _COMPONENT_FILES:
        path = index_dir / rel
        if not path.exists():
            raise BundleError(f"cannot seal: missing component {rel}")
        components[rel] = _sha256(path)
    versions = {
        "package": __version__,
        "segmenter": SEGMENTER_VERSION,
        "embedding_model": embedding_model,
        "nli_model": nli_model,
    }
    manifest = {
        "format_version": 1,
        "created_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "components": components,
        "versions": versions,
        "manifest_hash": _manifest_hash(components, versions),
        "sealed": True,
    }
    (index_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return manifest


def verify_bundle(index_dir: Path) -> dict:
    """Check the seal and every component hash; returns the manifest."""
    index_dir = Path(index_dir)
    manifest_path = index_dir / "manifest.json"
    if not manifest_path.exists():
        raise BundleError(f"bundle at {index_dir} is unsealed (no manifest)")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    if not manifest.get("sealed"):
        raise BundleError(f"bundle at {index_dir} is not sealed")
    expected = _manifest_hash(manifest["components"], manifest["versions"])
    if manifest.get("manifest_hash") != expected:
        raise BundleError("manifest mismatch: manifest_hash does not cover contents")
    for rel, recorded in manifest["components"].items():
        path = index_dir / rel
        if not path.exists():
            raise BundleError(f"manifest mismatch: missing component {rel}")
        actual = _sha256(path)
        if actual != recorded:
            raise BundleError(f"manifest mismatch: {rel} hash {actual[:12]} != {recorded[:12]}")
    return manifest


@dataclass
class IndexBundle:
    """Loaded, verified bundle plus the providers needed at query time."""

    index_dir: Path
    manifest: dict
    config: Config
    store: CorpusStore
    sentences: dict
    articles: dict
    phrases: dict
    embedding_index: EmbeddingIndex
    bio_scores: dict[str, float]
    classifier: RelevanceClassifier
    label_model: LabelModel | None

    @classmethod
    def load(cls, index_dir: Path) -> "IndexBundle":
        index_dir = Path(index_dir)
        manifest = verify_bundle(index_dir)
        config = config_from_snapshot(json.loads((index_dir / "config.json").read_text()))
        store = CorpusStore(index_dir / "corpus")
        phrases = PhraseTable(index_dir / "phrases.jsonl").by_id()
        embedding_index = load_index(
            index_dir / "embeddings.bin",
            index_dir / "embeddings.ids",
            model_id=manifest["versions"].get("embedding_model", ""),
        )
        bio = {s.sentence_id: s.score for s in load_scores(index_dir / "bio_scores.jsonl")}
        classifier = RelevanceClassifier.load(index_dir / "relevance.json")
        model_payload = json.loads((index_dir / "labelmodel.json").read_text())
        label_model = (
            LabelModel.from_dict(model_payload) if "lf_names" in model_payload else None
        )
        return cls(
            index_dir=index_dir,
            manifest=manifest,
            config=config,
            store=store,
            sentences=store.sentence_map(),
            articles=store.article_map(),
            phrases=phrases,
            embedding_index=embedding_index,
            bio_scores=bio,
            classifier=classifier,
            label_model=label_model,
        )

    def __post_init__(self):
        self._embedding_provider = make_embedding_provider(self.config.embedding_provider)
        self._nli_provider = make_nli_provider(self.config.nli_provider)

    def query(self, text: str, k: int | None = None, filtered: bool = False) -> RankResponse:
        return rank(
            Query(text=text, k=k or self.config.default_k, use_filtered=filtered),
            self.embedding_index,
            self.phrases,
            self.sentences,
            self.bio_scores,
            self.classifier,
            self._embedding_provider,
            self._nli_provider,
            shortlist_n=self.config.shortlist_n,
            tau=self.config.tau,
            bidirectional_nli=self.config.bidirectional_nli,
        )

    def filtered_sentence_ids(self, tau: float | None = None) -> set[str]:
        cutoff = self.config.tau if tau is None else tau
        return {sid for sid, score in self.bio_scores.items() if score >= cutoff}
