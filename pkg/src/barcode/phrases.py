"""Candidate phrase extraction: "[verb] [object]" units for matching.

Two extractors feed the phrase table:

* QA-SRL conversion: question-answer pairs produced for each verb are
  turned into "<verb lemma> <answer>" phrases. When/Who questions and
  questions not ending with a verb are dropped; they rarely carry a
  challenge-related verb-object pair.
* Dependency patterns: Semgrex-style patterns over the parse tree emit
  the anchor verb lemma plus the matched dependents in sentence order.
  This catches what QA-SRL misses (auxiliary constructions like "keep
  buoyant") and yields terser phrases.

Identical texts from both extractors merge with method BOTH.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from . import ProviderError
from .corpus import CorpusStore, SentenceRecord
from .deptree import ParseTree, attach_char_spans
from .patterns import DependencyPattern, match_pattern
from .textutil import lemmatize_verb, normalize_phrase

logger = logging.getLogger(__name__)

METHOD_QASRL = "QASRL"
METHOD_DEP = "DEP"
METHOD_BOTH = "BOTH"

_DROPPED_WH_WORDS = ("when", "who")


@dataclass(frozen=True)
class QAPair:
    verb: str
    verb_lemma: str
    question: str
    answer: str

    @classmethod
    def from_dict(cls, d: dict) -> "QAPair":
        return cls(
            verb=d["verb"],
            verb_lemma=d.get("verb_lemma") or lemmatize_verb(d["verb"]),
            question=d["question"],
            answer=d["answer"],
        )


@dataclass(frozen=True)
class CandidatePhrase:
    sentence_id: str
    text: str
    method: str
    verb_lemma: str
    span: tuple[int, int]
    phrase_id: str = ""

    def to_dict(self) -> dict:
        return {
            "phrase_id": self.phrase_id,
            "sentence_id": self.sentence_id,
            "text": self.text,
            "method": self.method,
            "verb_lemma": self.verb_lemma,
            "span": list(self.span),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CandidatePhrase":
        return cls(
            sentence_id=d["sentence_id"],
            text=d["text"],
            method=d["method"],
            verb_lemma=d["verb_lemma"],
            span=(d["span"][0], d["span"][1]),
            phrase_id=d.get("phrase_id", ""),
        )


def qa_pair_usable(qa: QAPair) -> bool:
    """Keep a pair only if its question targets the verb.

    Drops When/Who questions outright, then requires the question's final
    token to be a form of the pair's verb ("what is being reduced?" passes,
    "what reduces something?" does not).
    """
    words = qa.question.strip().rstrip("?!. ").split()
    if not words:
        return False
    if words[0].lower() in _DROPPED_WH_WORDS:
        return False
    final = words[-1].lower()
    return final == qa.verb.lower() or lemmatize_verb(final) == qa.verb_lemma.lower()


def qasrl_to_phrases(sentence: SentenceRecord, qa_pairs: Iterable[QAPair]) -> list[CandidatePhrase]:
    """Convert usable QA pairs into "<verb lemma> <answer>" phrases."""
    phrases = []
    for qa in qa_pairs:
        if not qa_pair_usable(qa):
            continue
        text = normalize_phrase(f"{qa.verb_lemma} {qa.answer}")
        span = _qa_span(sentence.text, qa)
        phrases.append(
            CandidatePhrase(
                sentence_id=sentence.sentence_id,
                text=text,
                method=METHOD_QASRL,
                verb_lemma=qa.verb_lemma.lower(),
                span=span,
            )
        )
    return phrases


def _qa_span(sentence_text: str, qa: QAPair) -> tuple[int, int]:
    """Char span covering the answer and, when locatable, the verb."""
    ans_start = sentence_text.find(qa.answer)
    if ans_start < 0:
        lowered = sentence_text.lower()
        ans_start = lowered.find(qa.answer.lower())
    if ans_start < 0:
        return (0, len(sentence_text))
    ans_end = ans_start + len(qa.answer)
    verb_start = sentence_text.lower().find(qa.verb.lower())
    if verb_start < 0:
        return (ans_start, ans_end)
    verb_end = verb_start + len(qa.verb)
    return (min(ans_start, verb_start), max(ans_end, verb_end))


def _joined_token_spans(tree: ParseTree) -> list[tuple[int, int]]:
    """Spans of each token inside `tree.text()` (single-space joined)."""
    spans = []
    pos = 0
    for tok in tree.tokens:
        spans.append((pos, pos + len(tok.text)))
        pos += len(tok.text) + 1
    return spans


def render_match(tree: ParseTree, pattern: DependencyPattern, match: dict[str, int]) -> CandidatePhrase:
    """Build a phrase from one pattern match.

    The anchor verb is lemmatized; every other matched token keeps its
    surface form, ordered by sentence position.
    """
    anchor_idx = match[pattern.anchor]
    anchor = tree.tokens[anchor_idx]
    verb_lemma = (anchor.lemma or lemmatize_verb(anchor.text)).lower()
    others = sorted(i for name, i in match.items() if name != pattern.anchor)
    words = [verb_lemma] + [tree.tokens[i].text for i in others]
    text = normalize_phrase(" ".join(words))

    matched = sorted(match.values())
    if all(tree.tokens[i].start >= 0 for i in matched):
        span = (tree.tokens[matched[0]].start, tree.tokens[matched[-1]].end)
    else:
        joined = _joined_token_spans(tree)
        span = (joined[matched[0]][0], joined[matched[-1]][1])
    return CandidatePhrase(
        sentence_id="",
        text=text,
        method=METHOD_DEP,
        verb_lemma=verb_lemma,
        span=span,
    )


def match_patterns(
    tree: ParseTree,
    patterns: list[DependencyPattern],
    sentence: SentenceRecord | None = None,
) -> list[CandidatePhrase]:
    """Run every pattern over a tree and render all matches as phrases."""
    if sentence is not None:
        tree = attach_char_spans(tree, sentence.text)
    out = []
    for pattern in patterns:
        for match in match_pattern(tree, pattern):
            phrase = render_match(tree, pattern, match)
            if sentence is not None:
                phrase = CandidatePhrase(
                    sentence_id=sentence.sentence_id,
                    text=phrase.text,
                    method=phrase.method,
                    verb_lemma=phrase.verb_lemma,
                    span=phrase.span,
                )
            out.append(phrase)
    return out


def merge_phrases(phrases: Iterable[CandidatePhrase]) -> list[CandidatePhrase]:
    """Dedup by normalized text; same text from both extractors -> BOTH.

    Near-duplicates (same text, different spans) keep the shorter span.
    """
    by_text: dict[str, CandidatePhrase] = {}
    for p in phrases:
        prev = by_text.get(p.text)
        if prev is None:
            by_text[p.text] = p
            continue
        method = prev.method if prev.method == p.method else METHOD_BOTH
        span = min((prev.span, p.span), key=lambda s: (s[1] - s[0], s[0]))
        by_text[p.text] = CandidatePhrase(
            sentence_id=prev.sentence_id,
            text=prev.text,
            method=method,
            verb_lemma=prev.verb_lemma,
            span=span,
        )
    return sorted(by_text.values(), key=lambda p: (p.span[0], p.span[1], p.text))


@dataclass
class ExtractionReport:
    n_sentences: int = 0
    n_skipped: int = 0
    n_phrases: int = 0
    n_qa_dropped: int = 0


def extract_sentence(
    sentence: SentenceRecord,
    parse_provider,
    srl_provider,
    patterns: list[DependencyPattern],
) -> tuple[list[CandidatePhrase], int]:
    """Union of both extractors for one sentence, merged and id-stamped."""
    qa_pairs = srl_provider.qa_pairs(sentence)
    tree = parse_provider.parse(sentence)
    n_dropped = sum(1 for qa in qa_pairs if not qa_pair_usable(qa))
    collected = qasrl_to_phrases(sentence, qa_pairs)
    collected.extend(match_patterns(tree, patterns, sentence=sentence))
    merged = merge_phrases(collected)
    stamped = [
        CandidatePhrase(
            sentence_id=p.sentence_id,
            text=p.text,
            method=p.method,
            verb_lemma=p.verb_lemma,
            span=p.span,
            phrase_id=f"{sentence.sentence_id}#p{k}",
        )
        for k, p in enumerate(merged)
    ]
    return stamped, n_dropped


def extract_all(
    store: CorpusStore,
    parse_provider,
    srl_provider,
    patterns: list[DependencyPattern],
    out_path: Path,
) -> ExtractionReport:
    """Extract phrases for the whole corpus and persist the table."""
    report = ExtractionReport()
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="utf-8") as fh:
        for sentence in store.sentences():
            report.n_sentences += 1
            try:
                phrases, dropped = extract_sentence(
                    sentence, parse_provider, srl_provider, patterns
                )
            except ProviderError as exc:
                report.n_skipped += 1
                logger.warning("skipping sentence %s: %s", sentence.sentence_id, exc)
                continue
            report.n_qa_dropped += dropped
            for p in phrases:
                fh.write(json.dumps(p.to_dict(), ensure_ascii=False, sort_keys=True) + "\n")
                report.n_phrases += 1
    logger.info(
        "phrase extraction: %d sentences, %d phrases, %d skipped, %d QA pairs dropped",
        report.n_sentences, report.n_phrases, report.n_skipped, report.n_qa_dropped,
    )
    return report


class PhraseTable:
    """Read-only access to a persisted phrase table."""

    def __init__(self, path: Path):
        self.path = Path(path)

    def __iter__(self) -> Iterator[CandidatePhrase]:
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                yield CandidatePhrase.from_dict(json.loads(line))

    def by_id(self) -> dict[str, CandidatePhrase]:
        return {p.phrase_id: p for p in self}
