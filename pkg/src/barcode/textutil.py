"""Tokenization, lemmatization, and sentence segmentation.

Everything here is rule-based and deterministic so the whole pipeline can
run (and be tested) without model downloads. The segmenter is versioned:
stores record the version string so identical input always yields an
identical store.
"""

from __future__ import annotations

import re

SEGMENTER_VERSION = "rule/v1"

_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*|[^\sA-Za-z0-9]")

# Sentence boundary: terminal punctuation (+ optional closing quote/bracket),
# whitespace, then an upper-case letter, digit or opening quote.
_BOUNDARY_RE = re.compile(r"(?<=[.!?])[\"')\]]*\s+(?=[\"'(\[]?[A-Z0-9])")

# Tokens that end with '.' but do not close a sentence.
_ABBREVIATIONS = frozenset(
    {
        "e.g.", "i.e.", "cf.", "vs.", "etc.", "sp.", "spp.", "subsp.",
        "approx.", "ca.", "no.", "fig.", "dr.", "mr.", "mrs.", "ms.",
        "prof.", "st.",
    }
)

PRONOUNS = frozenset(
    """
    i me my mine myself we us our ours ourselves you your yours yourself
    yourselves he him his himself she her hers herself it its itself they
    them their theirs themselves this these those oneself
    """.split()
)

# Pronouns that stand in for an unnamed referent. Possessive determiners
# ("its wings") are excluded: they are routine in functional biology prose
# and do not make a sentence context-dependent the way "It is ..." does.
STANDALONE_PRONOUNS = frozenset(
    """
    i me myself we us ourselves you yourself yourselves he him himself
    she her herself it itself they them themselves this these those
    oneself
    """.split()
)

DETERMINERS = frozenset("a an the".split())

PREPOSITIONS = frozenset(
    """
    of in to for with on at by from into through during against between
    among under over above below across behind beyond within without
    along around near toward towards upon onto off out up down about as
    """.split()
)

CONJUNCTIONS = frozenset("and or but nor so yet while whereas".split())

# Irregular verb forms -> lemma. Covers common English plus forms that
# show up in biological prose.
_IRREGULAR_VERBS = {
    "is": "be", "are": "be", "was": "be", "were": "be", "been": "be",
    "being": "be", "am": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do",
    "goes": "go", "went": "go", "gone": "go",
    "came": "come", "become": "become", "became": "become",
    "gave": "give", "given": "give",
    "took": "take", "taken": "take",
    "made": "make", "found": "find", "kept": "keep", "left": "leave",
    "got": "get", "gotten": "get", "ran": "run", "swam": "swim",
    "swum": "swim", "flew": "fly", "flown": "fly", "grew": "grow",
    "grown": "grow", "built": "build", "fed": "feed", "held": "hold",
    "lay": "lie", "lain": "lie", "laid": "lay", "dug": "dig",
    "bred": "breed", "sought": "seek", "caught": "catch",
    "taught": "teach", "brought": "bring", "thought": "think",
    "said": "say", "saw": "see", "seen": "see", "ate": "eat",
    "eaten": "eat", "dove": "dive", "hid": "hide", "hidden": "hide",
    "bit": "bite", "bitten": "bite", "met": "meet", "lost": "lose",
    "shed": "shed", "let": "let", "set": "set", "put": "put",
    "cut": "cut", "spread": "spread", "sent": "send", "spent": "spend",
    "meant": "mean", "felt": "feel", "knew": "know", "known": "know",
    "led": "lead", "sang": "sing", "sung": "sing", "hung": "hang",
    "stood": "stand", "understood": "understand", "won": "win",
    "worn": "wear", "wore": "wear", "drew": "draw", "drawn": "draw",
    "blew": "blow", "blown": "blow", "threw": "throw", "thrown": "throw",
    "rose": "rise", "risen": "rise", "fell": "fall", "fallen": "fall",
    "froze": "freeze", "frozen": "freeze", "chose": "choose",
    "chosen": "choose", "stuck": "stick", "struck": "strike",
    "slid": "slide", "sank": "sink", "sunk": "sink", "shook": "shake",
    "shaken": "shake", "sped": "speed", "fled": "flee", "clung": "cling",
    "dove.": "dive", "wove": "weave", "woven": "weave", "shot": "shoot",
    "bound": "bind", "ground": "grind", "spun": "spin", "stung": "sting",
    "sprang": "spring", "sprung": "spring", "burst": "burst",
}

# Base forms used to disambiguate suffix stripping ("sensing" -> "sense"
# rather than "sens"). Not exhaustive; the heuristics below cover the rest.
_VERB_BASES = frozenset(
    """
    absorb accumulate achieve act adapt add adhere aid allow anchor angle
    appear apply approach arrange arrive assemble assess attach attack
    attract avoid balance be bear beat begin behave bend bind bite bleed
    blend block blow boost bore bounce breathe breed bring build burrow
    burst bury buzz calculate camouflage capture care carry catch cause
    change charge chase chew choose clean clear climb cling close coat
    collect combine come communicate compare compete comprise conceal
    condense conduct connect conserve consist construct consume contain
    continue contract contribute control convert cool cope cover crawl
    create cross crush cushion cut dance dampen decide decline decrease
    defend deflect deliver demonstrate deposit derive describe design
    detect deter develop differ dig digest direct disappear discover
    disperse displace dissolve distribute dive divide do drag drain draw
    drift drink drive drop dry eat echo eject emerge emit employ enable
    enclose encode encounter endure engage enhance enjoy ensure enter
    escape establish evade evaporate evolve exceed exchange exert exhibit
    expand expel experience explain explore expose extend extract feed
    feel fight fill filter find fit fix flap flatten flee float flow fly
    focus fold follow forage form fortify freeze function gain gather
    generate get give glide glow go grasp grind grip grow guard guide
    hang happen harden harvest hatch have heal hear heat help hide hold
    hop hover hunt improve include increase indicate inflate inhabit
    inject insulate interact involve jump keep kill know land launch lay
    lead leap learn leave let lie lift limit line live locate lock lose
    love lower maintain make maneuver manipulate mate measure meet melt
    migrate mimic minimize mix modify monitor move navigate need nest
    note notice obtain occur open operate orient oscillate overcome
    overlap pass penetrate perceive perch perform permit persist pick
    pierce pivot play possess pounce pour power predate prefer press
    prevent prey process produce propel protect provide pull pump pursue
    push radiate raise range reach read rebound receive recognize record
    recover reduce reflect refract regenerate regrow regulate reinforce
    relate release rely remain remove renew repel require resemble
    resist respire respond rest retain retract retrieve return reuse
    reveal ride rise roll rotate run say scan scatter scavenge score
    scrape screen seal search secrete secure see seek seem seize select
    sense separate serve settle shake shape share shed shield shift
    shoot show shrink signal sing sink sit skim sleep slide slip slow
    smell snap soak soar solve sound span spawn speed spin spend spread
    spring sprint squeeze stabilize stalk stand start stay steer stick
    sting store stretch stride strike study stun submerge suck suggest
    supply support suppress survive sustain swallow sweep swell swim
    swing take tap taste teach tear tend thrive throw tilt tolerate
    touch track transfer transform translate transmit transport trap
    travel trigger tuck tunnel turn twist understand undergo undulate
    use vary venture vibrate wade walk want warm warn wash watch wave
    wear weave weigh win withstand work wrap write
    """.split()
)

_NOUN_INVARIANTS = frozenset(
    "species series fish sheep deer moose offspring aircraft means".split()
)

_VOWELS = set("aeiou")


def tokenize_spans(text: str) -> list[tuple[str, int, int]]:
    """Split text into tokens with (text, start, end) character spans."""
    return [(m.group(0), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def tokenize(text: str) -> list[str]:
    return [t for t, _, _ in tokenize_spans(text)]


def _strip_ing(word: str) -> str:
    stem = word[:-3]
    if len(stem) < 2:
        return word
    candidates = []
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS:
        candidates.append(stem[:-1])
    candidates.extend([stem, stem + "e"])
    for cand in candidates:
        if cand in _VERB_BASES:
            return cand
    # Heuristic fallback: undouble trailing consonant pairs except the
    # ones English words legitimately end with, then restore a silent e
    # after consonant + [csvz]u? patterns that rarely close a word.
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-2:] not in ("ll", "ss", "ff", "zz")
    ):
        return stem[:-1]
    if stem[-1] in "uv" or (stem[-1] in "csz" and stem[-2] not in _VOWELS):
        return stem + "e"
    return stem


def _strip_ed(word: str) -> str:
    if word.endswith("ied") and len(word) > 4:
        return word[:-3] + "y"
    stem = word[:-2]
    if len(stem) < 2:
        return word
    candidates = []
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS:
        candidates.append(stem[:-1])
    candidates.extend([stem, word[:-1]])  # "reduced" -> "reduce" via word[:-1]
    for cand in candidates:
        if cand in _VERB_BASES:
            return cand
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-2:] not in ("ll", "ss", "ff", "zz")
    ):
        return stem[:-1]
    if stem[-1] in "uv" or (stem[-1] in "csz" and stem[-2] not in _VOWELS):
        return stem + "e"
    return stem


def is_known_verb(lemma: str) -> bool:
    return lemma in _VERB_BASES or lemma in _IRREGULAR_VERBS.values()


def lemmatize_verb(word: str) -> str:
    """Best-effort base form of an English verb (lowercased)."""
    w = word.lower()
    if w in _IRREGULAR_VERBS:
        return _IRREGULAR_VERBS[w]
    if w in _VERB_BASES:
        return w
    if w.endswith("ing") and len(w) > 4:
        return _strip_ing(w)
    if w.endswith("ed") and len(w) > 3:
        return _strip_ed(w)
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("es") and len(w) > 3:
        if w[:-2] in _VERB_BASES:
            return w[:-2]
        if w[:-1] in _VERB_BASES:
            return w[:-1]
        if w.endswith(("ches", "shes", "sses", "xes", "zes", "oes")):
            return w[:-2]
        return w[:-1]
    if w.endswith("s") and len(w) > 2 and not w.endswith("ss"):
        return w[:-1]
    return w


def singularize_noun(word: str) -> str:
    """Best-effort singular form of an English noun (lowercased)."""
    w = word.lower()
    if w in _NOUN_INVARIANTS:
        return w
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("ches", "shes", "sses", "xes", "zes")):
        return w[:-2]
    if w.endswith("s") and len(w) > 2 and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    return w


def _is_abbreviation(text: str, pos: int) -> bool:
    """True when the '.' closing position `pos` ends a known abbreviation."""
    start = pos
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start : pos + 1].lower() in _ABBREVIATIONS


def split_sentences(text: str) -> list[tuple[str, int]]:
    """Split text into (sentence, char_offset) pairs.

    Offsets index into the original text; sentences are stripped.
    Concatenating the sentences recovers the input modulo whitespace.
    """
    pieces = []
    starts = [0]
    for m in _BOUNDARY_RE.finditer(text):
        # Walk back to the terminal punctuation mark that triggered this
        # match; a '.' closing a known abbreviation is not a boundary.
        probe = m.start() - 1
        while probe >= 0 and text[probe] in "\"')]":
            probe -= 1
        if probe >= 0 and text[probe] == "." and _is_abbreviation(text, probe):
            continue
        starts.append(m.end())
    for i, start in enumerate(starts):
        end = starts[i + 1] if i + 1 < len(starts) else len(text)
        raw = text[start:end]
        stripped = raw.strip()
        if not stripped:
            continue
        offset = start + (len(raw) - len(raw.lstrip()))
        pieces.append((stripped, offset))
    return pieces


def normalize_phrase(text: str) -> str:
    """Lowercase and collapse runs of whitespace to single spaces."""
    return " ".join(text.lower().split())
