"""Dependency parse trees as plain data.

A tree is a list of tokens; each token records its surface form, lemma,
coarse POS tag, dependency label and the index of its head. The root
points at itself. Trees arrive from a parsing provider (or from replay
fixtures) already tagged; nothing here does linguistic analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import BarcodeError


class TreeError(BarcodeError):
    pass


@dataclass(frozen=True)
class Token:
    i: int
    text: str
    lemma: str
    pos: str
    dep: str
    head: int
    start: int = -1  # char offset into the sentence, -1 when unknown
    end: int = -1


@dataclass(frozen=True)
class Entity:
    label: str
    start: int  # token index range [start, end)
    end: int


@dataclass
class ParseTree:
    tokens: list[Token]
    ents: list[Entity] = field(default_factory=list)

    def __post_init__(self):
        n = len(self.tokens)
        roots = 0
        for tok in self.tokens:
            if not 0 <= tok.head < n:
                raise TreeError(f"token {tok.i}: head {tok.head} out of range")
            if tok.head == tok.i:
                roots += 1
        if n and roots != 1:
            raise TreeError(f"expected exactly one root, found {roots}")

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def root(self) -> Token:
        for tok in self.tokens:
            if tok.head == tok.i:
                return tok
        raise TreeError("empty tree has no root")

    def children(self, i: int) -> list[Token]:
        return [t for t in self.tokens if t.head == i and t.i != i]

    def is_dependent(self, child: int, head: int) -> bool:
        """True when `child` is an immediate dependent of `head`."""
        return child != head and self.tokens[child].head == head

    def subtree(self, i: int) -> list[Token]:
        """Tokens of the subtree rooted at i, in sentence order."""
        keep = {i}
        changed = True
        while changed:
            changed = False
            for t in self.tokens:
                if t.head in keep and t.i not in keep:
                    keep.add(t.i)
                    changed = True
        return [t for t in self.tokens if t.i in keep]

    def text(self) -> str:
        return " ".join(t.text for t in self.tokens)

    def to_dict(self) -> dict:
        return {
            "tokens": [
                {
                    "text": t.text,
                    "lemma": t.lemma,
                    "pos": t.pos,
                    "dep": t.dep,
                    "head": t.head,
                    **({"start": t.start, "end": t.end} if t.start >= 0 else {}),
                }
                for t in self.tokens
            ],
            "ents": [
                {"label": e.label, "start": e.start, "end": e.end} for e in self.ents
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ParseTree":
        tokens = [
            Token(
                i=i,
                text=t["text"],
                lemma=t.get("lemma", t["text"].lower()),
                pos=t.get("pos", ""),
                dep=t.get("dep", ""),
                head=t["head"],
                start=t.get("start", -1),
                end=t.get("end", -1),
            )
            for i, t in enumerate(d["tokens"])
        ]
        ents = [Entity(**e) for e in d.get("ents", [])]
        return cls(tokens=tokens, ents=ents)


def attach_char_spans(tree: ParseTree, sentence: str) -> ParseTree:
    """Fill in token char offsets by aligning token texts left-to-right.

    Provider fixtures may omit offsets; alignment is exact because token
    texts are substrings of the sentence in order.
    """
    pos = 0
    new_tokens = []
    for tok in tree.tokens:
        if tok.start >= 0:
            new_tokens.append(tok)
            pos = max(pos, tok.end)
            continue
        found = sentence.find(tok.text, pos)
        if found < 0:
            # Token not literally present (rare normalization mismatch):
            # keep unknown offsets rather than guessing.
            new_tokens.append(tok)
            continue
        new_tokens.append(
            Token(tok.i, tok.text, tok.lemma, tok.pos, tok.dep, tok.head,
                  start=found, end=found + len(tok.text))
        )
        pos = found + len(tok.text)
    return ParseTree(tokens=new_tokens, ents=list(tree.ents))
