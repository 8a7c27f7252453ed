"""Corpus ingestion: articles in, sentence records out.

Articles arrive as JSONL (one per line); ingestion segments them into
sentences, assigns stable ids of the form ``<article_id>#<index>`` and
persists an immutable on-disk store under ``<index_dir>/corpus/``:

    articles.jsonl    one Article per line
    sentences.jsonl   one SentenceRecord per line
    stats.json        counts + segmenter version

Re-ingesting identical input produces a byte-identical store.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator

from . import BarcodeError
from .textutil import SEGMENTER_VERSION, split_sentences

logger = logging.getLogger(__name__)


class CorpusError(BarcodeError):
    pass


@dataclass(frozen=True)
class Article:
    article_id: str
    title: str
    organism: str
    source_url: str
    text: str

    @classmethod
    def from_dict(cls, d: dict) -> "Article":
        return cls(
            article_id=d["article_id"],
            title=d.get("title", ""),
            organism=d.get("organism") or d.get("title", ""),
            source_url=d.get("source_url", ""),
            text=d.get("text", ""),
        )


@dataclass(frozen=True)
class SentenceRecord:
    sentence_id: str
    article_id: str
    organism: str
    text: str
    char_offset: int


@dataclass(frozen=True)
class CorpusStats:
    n_articles: int
    n_sentences: int


def segment(article: Article) -> list[SentenceRecord]:
    """Split an article into sentence records with contiguous indices."""
    if not article.text.strip():
        raise CorpusError(f"article {article.article_id!r} has empty text")
    records = []
    for index, (text, offset) in enumerate(split_sentences(article.text)):
        records.append(
            SentenceRecord(
                sentence_id=f"{article.article_id}#{index}",
                article_id=article.article_id,
                organism=article.organism,
                text=text,
                char_offset=offset,
            )
        )
    return records


@dataclass(frozen=True)
class IngestReport:
    stats: CorpusStats
    skipped_empty: int


class CorpusStore:
    """Read-only view over an ingested corpus directory."""

    def __init__(self, corpus_dir: Path):
        self.corpus_dir = Path(corpus_dir)
        if not (self.corpus_dir / "stats.json").exists():
            raise CorpusError(f"no corpus store at {self.corpus_dir}")

    @property
    def stats(self) -> CorpusStats:
        d = json.loads((self.corpus_dir / "stats.json").read_text())
        return CorpusStats(n_articles=d["n_articles"], n_sentences=d["n_sentences"])

    def articles(self) -> Iterator[Article]:
        with (self.corpus_dir / "articles.jsonl").open() as fh:
            for line in fh:
                yield Article.from_dict(json.loads(line))

    def sentences(self) -> Iterator[SentenceRecord]:
        with (self.corpus_dir / "sentences.jsonl").open() as fh:
            for line in fh:
                yield SentenceRecord(**json.loads(line))

    def sentence_map(self) -> dict[str, SentenceRecord]:
        return {rec.sentence_id: rec for rec in self.sentences()}

    def article_map(self) -> dict[str, Article]:
        return {a.article_id: a for a in self.articles()}


def _dump(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def ingest(articles: Iterable[Article], index_dir: Path) -> tuple[CorpusStore, IngestReport]:
    """Segment and persist an article stream under ``index_dir/corpus``.

    Duplicate article ids are rejected; articles with empty text are
    skipped and counted. Single-writer: callers must not ingest into the
    same directory concurrently.
    """
    corpus_dir = Path(index_dir) / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)

    seen: set[str] = set()
    skipped_empty = 0
    n_articles = 0
    n_sentences = 0

    with (corpus_dir / "articles.jsonl").open("w", encoding="utf-8") as art_fh, (
        corpus_dir / "sentences.jsonl"
    ).open("w", encoding="utf-8") as sent_fh:
        for article in articles:
            if not article.article_id:
                raise CorpusError("article with empty article_id")
            if article.article_id in seen:
                raise CorpusError(f"duplicate article_id: {article.article_id!r}")
            seen.add(article.article_id)
            if not article.text.strip():
                skipped_empty += 1
                logger.warning("skipping article %r: empty text", article.article_id)
                continue
            art_fh.write(_dump(asdict(article)) + "\n")
            n_articles += 1
            for rec in segment(article):
                sent_fh.write(_dump(asdict(rec)) + "\n")
                n_sentences += 1

    stats = {
        "n_articles": n_articles,
        "n_sentences": n_sentences,
        "segmenter": SEGMENTER_VERSION,
    }
    (corpus_dir / "stats.json").write_text(_dump(stats) + "\n", encoding="utf-8")
    report = IngestReport(
        stats=CorpusStats(n_articles, n_sentences), skipped_empty=skipped_empty
    )
    if skipped_empty:
        logger.info("ingest complete: %s (skipped %d empty)", report.stats, skipped_empty)
    return CorpusStore(corpus_dir), report


def read_articles_jsonl(path: Path) -> Iterator[Article]:
    """Parse the JSONL article interchange format."""
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield Article.from_dict(json.loads(line))
            except (json.JSONDecodeError, KeyError) as exc:
                raise CorpusError(f"{path}:{line_no}: bad article record: {exc}") from exc
