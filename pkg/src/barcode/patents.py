"""Known-problems lexicon mined from patent claim sentences.

Claim sentences state what a patent is for; strings shaped like
"for [verb]-ing [noun]" therefore name problems worth solving. The
lexicon keeps the most common (verb, noun) lemma pairs and answers
proximity queries for the weak-supervision labeling function.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Protocol, Sequence

from .textutil import (
    CONJUNCTIONS,
    DETERMINERS,
    PREPOSITIONS,
    PRONOUNS,
    is_known_verb,
    lemmatize_verb,
    singularize_noun,
    tokenize,
)


@dataclass(frozen=True)
class ProblemPair:
    verb_lemma: str
    noun_lemma: str
    count: int = 1


class PosTagger(Protocol):
    def tags(self, tokens: Sequence[str]) -> list[str]: ...


# "-ing" words that are nouns far more often than gerunds in claims text.
_ING_NOUNS = frozenset(
    "thing something anything nothing everything string spring wing ring king "
    "ceiling housing casing bearing coating".split()
)


class HeuristicPosTagger:
    """Coarse tags sufficient for the claim-sentence extraction rule."""

    def tags(self, tokens: Sequence[str]) -> list[str]:
        out = []
        for tok in tokens:
            low = tok.lower()
            if not any(c.isalnum() for c in tok):
                out.append("PUNCT")
            elif low.isdigit():
                out.append("NUM")
            elif low in DETERMINERS:
                out.append("DET")
            elif low in PREPOSITIONS:
                out.append("ADP")
            elif low in CONJUNCTIONS:
                out.append("CCONJ")
            elif low in PRONOUNS:
                out.append("PRON")
            elif low.endswith("ing") and len(low) > 4 and low not in _ING_NOUNS:
                out.append("VERB")
            else:
                out.append("NOUN")
        return out


def extract_problem_pairs(
    claim_sentence: str, tagger: PosTagger | None = None
) -> list[ProblemPair]:
    """All "for [verb]-ing [noun]" pairs in one claim sentence.

    The object is the head (final token) of the noun chunk that follows
    the gerund, truncated at the first token leaving the prepositional
    phrase (another preposition, conjunction, verb, or punctuation).
    """
    tagger = tagger or HeuristicPosTagger()
    tokens = tokenize(claim_sentence)
    tags = tagger.tags(tokens)
    pairs = []
    for i, tok in enumerate(tokens):
        if tok.lower() != "for" or i + 1 >= len(tokens):
            continue
        g = i + 1
        if tags[g] != "VERB" or not tokens[g].lower().endswith("ing"):
            continue
        head = None
        for j in range(g + 1, len(tokens)):
            tag = tags[j]
            if tag in ("DET",):
                continue
            if tag in ("NOUN", "NUM"):
                head = tokens[j]
                continue
            break  # ADP / CCONJ / VERB / PUNCT / PRON ends the phrase
        if head is not None:
            pairs.append(
                ProblemPair(
                    verb_lemma=lemmatize_verb(tokens[g]),
                    noun_lemma=singularize_noun(head),
                )
            )
    return pairs


@dataclass(frozen=True)
class ProblemLexicon:
    pairs: frozenset[tuple[str, str]]
    counts: dict[tuple[str, str], int]
    source_hash: str

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self.pairs


def build_lexicon(pair_stream: Iterable[ProblemPair], top_n: int = 2000) -> ProblemLexicon:
    """Keep the top_n most common pairs; ties break lexicographically."""
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    counter: Counter[tuple[str, str]] = Counter()
    for pair in pair_stream:
        counter[(pair.verb_lemma, pair.noun_lemma)] += pair.count
    ranked = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))[:top_n]
    counts = dict(ranked)
    digest = hashlib.sha256()
    for (verb, noun), count in sorted(counts.items()):
        digest.update(f"{verb}\t{noun}\t{count}\n".encode("utf-8"))
    return ProblemLexicon(
        pairs=frozenset(counts),
        counts=counts,
        source_hash=digest.hexdigest(),
    )


def contains_known_problem(
    lemmas: Sequence[str], lexicon: ProblemLexicon, window: int = 5
) -> bool:
    """True when some lexicon pair co-occurs within `window` tokens.

    Order-insensitive: the noun may precede the verb. Distance is the
    difference of token indices, so adjacency is distance 1.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    if not lexicon.pairs:
        return False
    positions: dict[str, list[int]] = {}
    for i, lemma in enumerate(lemmas):
        positions.setdefault(lemma, []).append(i)
    for verb, noun in lexicon.pairs:
        for vi in positions.get(verb, ()):
            for ni in positions.get(noun, ()):
                if vi != ni and abs(vi - ni) <= window:
                    return True
    return False


def text_lemmas(text: str) -> list[str]:
    """Lemma per token for lexicon matching when no parse is available."""
    out = []
    for tok in tokenize(text):
        low = tok.lower()
        verb = lemmatize_verb(low)
        if verb != low and is_known_verb(verb):
            out.append(verb)
        else:
            out.append(singularize_noun(low))
    return out


def save_lexicon(lexicon: ProblemLexicon, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        f"{verb}\t{noun}\t{count}"
        for (verb, noun), count in sorted(lexicon.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    ]
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def load_lexicon(path: Path) -> ProblemLexicon:
    counts: dict[tuple[str, str], int] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        verb, noun, count = line.split("\t")
        counts[(verb, noun)] = int(count)
    digest = hashlib.sha256()
    for (verb, noun), count in sorted(counts.items()):
        digest.update(f"{verb}\t{noun}\t{count}\n".encode("utf-8"))
    return ProblemLexicon(
        pairs=frozenset(counts), counts=counts, source_hash=digest.hexdigest()
    )
