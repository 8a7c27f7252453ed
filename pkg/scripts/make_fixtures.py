#!/usr/bin/env python3
"""Regenerate every derived fixture under fixtures/ and models/.

Parse trees for the showcase sentences are hand-crafted here as compact
token tuples (text, pos, dep, head[, lemma]) and written out in the
replay-provider format, together with recorded QA pairs, the synthetic
patent-claims file + mined problem lexture, random trees for the
matcher-equivalence suite, the report-fixture run/qrels pair, and the
labeled feature pairs + frozen relevance classifier.

Run from the repo root:  python scripts/make_fixtures.py
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from barcode.classifier import train_relevance_classifier
from barcode.corpus import Article, segment
from barcode.deptree import Entity, ParseTree, Token
from barcode.patents import build_lexicon, extract_problem_pairs, save_lexicon
from barcode.patterns import load_patterns
from barcode.phrases import QAPair, extract_sentence
from barcode.providers.fixture import FixtureParseProvider, FixtureSrlProvider
from barcode.providers.lightweight import HashedEmbeddingProvider, OverlapNliProvider
from barcode.textutil import lemmatize_verb, singularize_noun

FIX = ROOT / "fixtures"


# ----------------------------------------------------------------------
# tree construction helpers
# ----------------------------------------------------------------------

def T(spec):
    """Build a ParseTree from (text, pos, dep, head[, lemma]) tuples."""
    tokens = []
    for i, entry in enumerate(spec):
        text, pos, dep, head = entry[:4]
        if len(entry) > 4:
            lemma = entry[4]
        elif pos == "VERB":
            lemma = lemmatize_verb(text)
        elif pos == "NOUN":
            lemma = singularize_noun(text)
        else:
            lemma = text.lower()
        tokens.append(Token(i=i, text=text, lemma=lemma, pos=pos, dep=dep, head=head))
    return ParseTree(tokens=tokens)


def qa(verb, question, answer, lemma=None):
    return QAPair(verb=verb, verb_lemma=lemma or lemmatize_verb(verb), question=question,
                  answer=answer)


# ----------------------------------------------------------------------
# showcase sentences (trees transcribed in spaCy-style annotations)
# ----------------------------------------------------------------------

CTENOPHORA = (
    "If they enter less dense brackish water, the ciliary rosettes in the body "
    "cavity may pump this into the mesoglea to increase its bulk and decrease "
    "its density, to avoid sinking."
)
CTENOPHORA_TREE = [
    ("If", "SCONJ", "mark", 2), ("they", "PRON", "nsubj", 2), ("enter", "VERB", "advcl", 16),
    ("less", "ADV", "advmod", 4), ("dense", "ADJ", "amod", 6), ("brackish", "ADJ", "amod", 6),
    ("water", "NOUN", "dobj", 2), (",", "PUNCT", "punct", 16), ("the", "DET", "det", 10),
    ("ciliary", "ADJ", "amod", 10), ("rosettes", "NOUN", "nsubj", 16), ("in", "ADP", "prep", 10),
    ("the", "DET", "det", 14), ("body", "NOUN", "compound", 14), ("cavity", "NOUN", "pobj", 11),
    ("may", "AUX", "aux", 16), ("pump", "VERB", "ROOT", 16), ("this", "PRON", "dobj", 16),
    ("into", "ADP", "prep", 16), ("the", "DET", "det", 20), ("mesoglea", "NOUN", "pobj", 18),
    ("to", "PART", "aux", 22), ("increase", "VERB", "advcl", 16), ("its", "PRON", "poss", 24),
    ("bulk", "NOUN", "dobj", 22), ("and", "CCONJ", "cc", 22), ("decrease", "VERB", "conj", 22),
    ("its", "PRON", "poss", 28), ("density", "NOUN", "dobj", 26), (",", "PUNCT", "punct", 16),
    ("to", "PART", "aux", 31), ("avoid", "VERB", "advcl", 16), ("sinking", "VERB", "xcomp", 31),
    (".", "PUNCT", "punct", 16),
]
CTENOPHORA_QA = [
    qa("avoid", "What does something avoid?", "sinking"),
    qa("pump", "What does something pump?", "this"),
    qa("increase", "What does something increase?", "its bulk"),
    qa("enter", "When does something enter?", "if they enter less dense brackish water"),
]

BARYCHELIDAE = (
    "Others can avoid drowning by trapping air bubbles within the hairs "
    "covering their bodies."
)
BARYCHELIDAE_TREE = [
    ("Others", "NOUN", "nsubj", 2), ("can", "AUX", "aux", 2), ("avoid", "VERB", "ROOT", 2),
    ("drowning", "VERB", "xcomp", 2), ("by", "ADP", "prep", 2), ("trapping", "VERB", "pcomp", 4),
    ("air", "NOUN", "compound", 7), ("bubbles", "NOUN", "dobj", 5),
    ("within", "ADP", "prep", 5), ("the", "DET", "det", 10), ("hairs", "NOUN", "pobj", 8),
    ("covering", "VERB", "acl", 10), ("their", "PRON", "poss", 13),
    ("bodies", "NOUN", "dobj", 11), (".", "PUNCT", "punct", 2),
]
BARYCHELIDAE_QA = [
    qa("avoid", "What does something avoid?", "drowning"),
    qa("trapping", "What is being trapped?", "air bubbles", lemma="trap"),
]

PELICAN = (
    "The air sacs serve to keep the pelican remarkably buoyant in the water and "
    "may also cushion the impact of the pelican's body on the water surface when "
    "they dive from flight into water to catch fish."
)
PELICAN_TREE = [
    ("The", "DET", "det", 2), ("air", "NOUN", "compound", 2), ("sacs", "NOUN", "nsubj", 3),
    ("serve", "VERB", "ROOT", 3), ("to", "PART", "aux", 5), ("keep", "VERB", "xcomp", 3),
    ("the", "DET", "det", 7), ("pelican", "NOUN", "dobj", 5),
    ("remarkably", "ADV", "advmod", 9), ("buoyant", "ADJ", "oprd", 5),
    ("in", "ADP", "prep", 9), ("the", "DET", "det", 12), ("water", "NOUN", "pobj", 10),
    ("and", "CCONJ", "cc", 3), ("may", "AUX", "aux", 16), ("also", "ADV", "advmod", 16),
    ("cushion", "VERB", "conj", 3), ("the", "DET", "det", 18), ("impact", "NOUN", "dobj", 16),
    ("of", "ADP", "prep", 18), ("the", "DET", "det", 21), ("pelican", "NOUN", "poss", 23),
    ("'s", "PART", "case", 21), ("body", "NOUN", "pobj", 19), ("on", "ADP", "prep", 16),
    ("the", "DET", "det", 27), ("water", "NOUN", "compound", 27),
    ("surface", "NOUN", "pobj", 24), ("when", "ADV", "advmod", 30),
    ("they", "PRON", "nsubj", 30), ("dive", "VERB", "advcl", 16),
    ("from", "ADP", "prep", 30), ("flight", "NOUN", "pobj", 31), ("into", "ADP", "prep", 30),
    ("water", "NOUN", "pobj", 33), ("to", "PART", "aux", 36), ("catch", "VERB", "advcl", 30),
    ("fish", "NOUN", "dobj", 36), (".", "PUNCT", "punct", 3),
]
PELICAN_QA = [
    qa("keep", "What does something keep?", "pelican"),
    qa("cushion", "What does something cushion?", "the impact of the pelican's body"),
    qa("dive", "Who dives?", "they"),
]

CEPHALOPOD = (
    "Other cephalopods use ammonium in a similar way, storing the ions as "
    "ammonium chloride to reduce their overall density and increase buoyancy."
)
CEPHALOPOD_TREE = [
    ("Other", "ADJ", "amod", 1), ("cephalopods", "NOUN", "nsubj", 2),
    ("use", "VERB", "ROOT", 2), ("ammonium", "NOUN", "dobj", 2), ("in", "ADP", "prep", 2),
    ("a", "DET", "det", 7), ("similar", "ADJ", "amod", 7), ("way", "NOUN", "pobj", 4),
    (",", "PUNCT", "punct", 2), ("storing", "VERB", "advcl", 2), ("the", "DET", "det", 11),
    ("ions", "NOUN", "dobj", 9), ("as", "ADP", "prep", 9),
    ("ammonium", "NOUN", "compound", 14), ("chloride", "NOUN", "pobj", 12),
    ("to", "PART", "aux", 16), ("reduce", "VERB", "advcl", 9), ("their", "PRON", "poss", 19),
    ("overall", "ADJ", "amod", 19), ("density", "NOUN", "dobj", 16),
    ("and", "CCONJ", "cc", 16), ("increase", "VERB", "conj", 16),
    ("buoyancy", "NOUN", "dobj", 21), (".", "PUNCT", "punct", 2),
]
CEPHALOPOD_QA = [
    qa("use", "What does something use?", "ammonium"),
    qa("storing", "What is being stored?",
       "the ions as ammonium chloride to reduce their overall density and increase buoyancy",
       lemma="store"),
]

STENOCARA_1 = (
    "Facing into the breeze, with its body angled at 45 degrees, the beetle "
    "catches fog droplets on its hardened wings."
)
STENOCARA_1_TREE = [
    ("Facing", "VERB", "advcl", 15), ("into", "ADP", "prep", 0), ("the", "DET", "det", 3),
    ("breeze", "NOUN", "pobj", 1), (",", "PUNCT", "punct", 15), ("with", "ADP", "prep", 15),
    ("its", "PRON", "poss", 7), ("body", "NOUN", "pobj", 5), ("angled", "VERB", "acl", 7),
    ("at", "ADP", "prep", 8), ("45", "NUM", "nummod", 11), ("degrees", "NOUN", "pobj", 9),
    (",", "PUNCT", "punct", 15), ("the", "DET", "det", 14), ("beetle", "NOUN", "nsubj", 15),
    ("catches", "VERB", "ROOT", 15), ("fog", "NOUN", "compound", 17),
    ("droplets", "NOUN", "dobj", 15), ("on", "ADP", "prep", 15), ("its", "PRON", "poss", 21),
    ("hardened", "ADJ", "amod", 21), ("wings", "NOUN", "pobj", 18), (".", "PUNCT", "punct", 15),
]
STENOCARA_1_QA = [
    qa("catches", "What does something catch?", "fog droplets", lemma="catch"),
    qa("angled", "What is angled?", "its body", lemma="angle"),
]

STENOCARA_2 = (
    "Droplets flatten as they make contact with the hydrophilic surfaces, "
    "preventing them from being blown by wind and providing a surface for "
    "other droplets to attach."
)
STENOCARA_2_TREE = [
    ("Droplets", "NOUN", "nsubj", 1), ("flatten", "VERB", "ROOT", 1),
    ("as", "SCONJ", "mark", 4), ("they", "PRON", "nsubj", 4), ("make", "VERB", "advcl", 1),
    ("contact", "NOUN", "dobj", 4), ("with", "ADP", "prep", 5), ("the", "DET", "det", 9),
    ("hydrophilic", "ADJ", "amod", 9), ("surfaces", "NOUN", "pobj", 6),
    (",", "PUNCT", "punct", 1), ("preventing", "VERB", "advcl", 1),
    ("them", "PRON", "dobj", 11), ("from", "ADP", "prep", 11),
    ("being", "AUX", "auxpass", 15), ("blown", "VERB", "pcomp", 13),
    ("by", "ADP", "agent", 15), ("wind", "NOUN", "pobj", 16), ("and", "CCONJ", "cc", 11),
    ("providing", "VERB", "conj", 11), ("a", "DET", "det", 21),
    ("surface", "NOUN", "dobj", 19), ("for", "ADP", "prep", 21),
    ("other", "ADJ", "amod", 24), ("droplets", "NOUN", "pobj", 22),
    ("to", "PART", "aux", 26), ("attach", "VERB", "advcl", 19), (".", "PUNCT", "punct", 1),
]
STENOCARA_2_QA = [
    qa("preventing", "What does something prevent?",
       "them from being blown by wind", lemma="prevent"),
    qa("providing", "What does something provide?",
       "a surface for other droplets to attach", lemma="provide"),
]

YUCCA = (
    "Some desert plants have an oily coating on their leaves or pads that traps "
    "moisture, thereby reducing water loss."
)
# "traps" deliberately carries a noun mis-tag (common parser output for the
# plural-looking form), which is why the dependency route misses this phrase
# and only QA-SRL extracts it.
YUCCA_TREE = [
    ("Some", "DET", "det", 2), ("desert", "NOUN", "compound", 2),
    ("plants", "NOUN", "nsubj", 3), ("have", "VERB", "ROOT", 3), ("an", "DET", "det", 6),
    ("oily", "ADJ", "amod", 6), ("coating", "NOUN", "dobj", 3), ("on", "ADP", "prep", 6),
    ("their", "PRON", "poss", 9), ("leaves", "NOUN", "pobj", 7), ("or", "CCONJ", "cc", 9),
    ("pads", "NOUN", "conj", 9), ("that", "PRON", "nsubj", 13),
    ("traps", "NOUN", "relcl", 6, "trap"), ("moisture", "NOUN", "dobj", 13),
    (",", "PUNCT", "punct", 13), ("thereby", "ADV", "advmod", 17),
    ("reducing", "VERB", "advcl", 13), ("water", "NOUN", "compound", 19),
    ("loss", "NOUN", "dobj", 17), (".", "PUNCT", "punct", 3),
]
YUCCA_QA = [
    qa("traps", "What does something trap?", "moisture", lemma="trap"),
    qa("reducing", "What is being reduced?", "water loss", lemma="reduce"),
]

KANGAROO_RAT = (
    "To reduce loss of moisture through respiration when sleeping, a kangaroo "
    "rat buries its nose in its fur to accumulate a small pocket of moist air."
)
KANGAROO_RAT_TREE = [
    ("To", "PART", "aux", 1), ("reduce", "VERB", "advcl", 13), ("loss", "NOUN", "dobj", 1),
    ("of", "ADP", "prep", 2), ("moisture", "NOUN", "pobj", 3), ("through", "ADP", "prep", 1),
    ("respiration", "NOUN", "pobj", 5), ("when", "ADV", "advmod", 8),
    ("sleeping", "VERB", "advcl", 1), (",", "PUNCT", "punct", 13), ("a", "DET", "det", 12),
    ("kangaroo", "NOUN", "compound", 12), ("rat", "NOUN", "nsubj", 13),
    ("buries", "VERB", "ROOT", 13), ("its", "PRON", "poss", 15), ("nose", "NOUN", "dobj", 13),
    ("in", "ADP", "prep", 13), ("its", "PRON", "poss", 18), ("fur", "NOUN", "pobj", 16),
    ("to", "PART", "aux", 20), ("accumulate", "VERB", "advcl", 13), ("a", "DET", "det", 23),
    ("small", "ADJ", "amod", 23), ("pocket", "NOUN", "dobj", 20), ("of", "ADP", "prep", 23),
    ("moist", "ADJ", "amod", 26), ("air", "NOUN", "pobj", 24), (".", "PUNCT", "punct", 13),
]
KANGAROO_RAT_QA = [
    qa("accumulate", "What does something accumulate?", "a small pocket of moist air"),
    qa("buries", "What does something bury?", "its nose", lemma="bury"),
    qa("reduce", "What is being reduced?", "loss of moisture through respiration"),
]

FALCON = (
    "The air pressure from such a dive could possibly damage a bird's lungs, "
    "but small bony tubercles on a falcon's nostrils guide the powerful airflow "
    "away from the nostrils, enabling the bird to breathe more easily while "
    "diving by reducing the change in air pressure."
)
FALCON_TREE = [
    ("The", "DET", "det", 2), ("air", "NOUN", "compound", 2), ("pressure", "NOUN", "nsubj", 9),
    ("from", "ADP", "prep", 2), ("such", "ADJ", "amod", 6), ("a", "DET", "det", 6),
    ("dive", "NOUN", "pobj", 3), ("could", "AUX", "aux", 9), ("possibly", "ADV", "advmod", 9),
    ("damage", "VERB", "ROOT", 9), ("a", "DET", "det", 11), ("bird", "NOUN", "poss", 13),
    ("'s", "PART", "case", 11), ("lungs", "NOUN", "dobj", 9), (",", "PUNCT", "punct", 9),
    ("but", "CCONJ", "cc", 9), ("small", "ADJ", "amod", 18), ("bony", "ADJ", "amod", 18),
    ("tubercles", "NOUN", "nsubj", 24), ("on", "ADP", "prep", 18), ("a", "DET", "det", 21),
    ("falcon", "NOUN", "poss", 23), ("'s", "PART", "case", 21),
    ("nostrils", "NOUN", "pobj", 19), ("guide", "VERB", "conj", 9), ("the", "DET", "det", 27),
    ("powerful", "ADJ", "amod", 27), ("airflow", "NOUN", "dobj", 24),
    ("away", "ADV", "advmod", 24), ("from", "ADP", "prep", 24), ("the", "DET", "det", 31),
    ("nostrils", "NOUN", "pobj", 29), (",", "PUNCT", "punct", 24),
    ("enabling", "VERB", "advcl", 24), ("the", "DET", "det", 35), ("bird", "NOUN", "dobj", 33),
    ("to", "PART", "aux", 37), ("breathe", "VERB", "xcomp", 33), ("more", "ADV", "advmod", 39),
    ("easily", "ADV", "advmod", 37), ("while", "SCONJ", "mark", 41),
    ("diving", "VERB", "advcl", 37), ("by", "ADP", "prep", 41),
    ("reducing", "VERB", "pcomp", 42), ("the", "DET", "det", 45),
    ("change", "NOUN", "dobj", 43), ("in", "ADP", "prep", 45), ("air", "NOUN", "compound", 48),
    ("pressure", "NOUN", "pobj", 46), (".", "PUNCT", "punct", 9),
]
FALCON_QA = [
    qa("reducing", "What reduces something?", "the bird", lemma="reduce"),
    qa("reducing", "What is being reduced?", "the change in air pressure", lemma="reduce"),
    qa("enabling", "What does something enable?", "the bird to breathe more easily",
       lemma="enable"),
    qa("damage", "What does something damage?", "a bird's lungs"),
]

ISOPODA = (
    "The dorsal (upper) surface of the animal is covered by a series of "
    "overlapping, articulated plates which give protection while also "
    "providing flexibility."
)
ISOPODA_TREE = [
    ("The", "DET", "det", 5), ("dorsal", "ADJ", "amod", 5), ("(", "PUNCT", "punct", 3),
    ("upper", "ADJ", "amod", 5), (")", "PUNCT", "punct", 3),
    ("surface", "NOUN", "nsubjpass", 10), ("of", "ADP", "prep", 5), ("the", "DET", "det", 8),
    ("animal", "NOUN", "pobj", 6), ("is", "AUX", "auxpass", 10),
    ("covered", "VERB", "ROOT", 10), ("by", "ADP", "agent", 10), ("a", "DET", "det", 13),
    ("series", "NOUN", "pobj", 11), ("of", "ADP", "prep", 13),
    ("overlapping", "ADJ", "amod", 18), (",", "PUNCT", "punct", 18),
    ("articulated", "ADJ", "amod", 18), ("plates", "NOUN", "pobj", 14),
    ("which", "PRON", "nsubj", 20), ("give", "VERB", "relcl", 18),
    ("protection", "NOUN", "dobj", 20), ("while", "SCONJ", "mark", 24),
    ("also", "ADV", "advmod", 24), ("providing", "VERB", "advcl", 20),
    ("flexibility", "NOUN", "dobj", 24), (".", "PUNCT", "punct", 10),
]
ISOPODA_QA = [
    qa("covered", "What is covered?", "The dorsal (upper) surface of the animal",
       lemma="cover"),
    qa("give", "What does something give?", "protection"),
]

GUILLEMOT = (
    "Trills can be performed singly or as duets between pairs; if performed as "
    "a duet then the call also functions to help reinforce pair bond."
)
GUILLEMOT_TREE = [
    ("Trills", "NOUN", "nsubjpass", 3), ("can", "AUX", "aux", 3), ("be", "AUX", "auxpass", 3),
    ("performed", "VERB", "ROOT", 3), ("singly", "ADV", "advmod", 3),
    ("or", "CCONJ", "cc", 3), ("as", "ADP", "prep", 3), ("duets", "NOUN", "pobj", 6),
    ("between", "ADP", "prep", 7), ("pairs", "NOUN", "pobj", 8), (";", "PUNCT", "punct", 3),
    ("if", "SCONJ", "mark", 12), ("performed", "VERB", "advcl", 20), ("as", "ADP", "prep", 12),
    ("a", "DET", "det", 15), ("duet", "NOUN", "pobj", 13), ("then", "ADV", "advmod", 20),
    ("the", "DET", "det", 18), ("call", "NOUN", "nsubj", 20), ("also", "ADV", "advmod", 20),
    ("functions", "VERB", "conj", 3), ("to", "PART", "aux", 22), ("help", "VERB", "xcomp", 20),
    ("reinforce", "VERB", "xcomp", 22), ("pair", "NOUN", "compound", 25),
    ("bond", "NOUN", "dobj", 23), (".", "PUNCT", "punct", 3),
]
GUILLEMOT_QA = [
    qa("reinforce", "What does something reinforce?", "pair bond"),
    qa("performed", "What is performed?", "Trills", lemma="perform"),
]

MORGAN_HORSE = (
    "By the 1870s, however, longer-legged horses came into fashion, and Morgan "
    "horses were crossed with those of other breeds."
)
MORGAN_HORSE_TREE = [
    ("By", "ADP", "prep", 8), ("the", "DET", "det", 2), ("1870s", "NOUN", "pobj", 0),
    (",", "PUNCT", "punct", 8), ("however", "ADV", "advmod", 8), (",", "PUNCT", "punct", 8),
    ("longer-legged", "ADJ", "amod", 7), ("horses", "NOUN", "nsubj", 8),
    ("came", "VERB", "ROOT", 8), ("into", "ADP", "prep", 8), ("fashion", "NOUN", "pobj", 9),
    (",", "PUNCT", "punct", 8), ("and", "CCONJ", "cc", 8),
    ("Morgan", "PROPN", "compound", 14), ("horses", "NOUN", "nsubjpass", 16),
    ("were", "AUX", "auxpass", 16), ("crossed", "VERB", "conj", 8),
    ("with", "ADP", "prep", 16), ("those", "PRON", "pobj", 17), ("of", "ADP", "prep", 18),
    ("other", "ADJ", "amod", 21), ("breeds", "NOUN", "pobj", 19), (".", "PUNCT", "punct", 8),
]
MORGAN_HORSE_ENTS = [Entity(label="DATE", start=1, end=3)]
MORGAN_HORSE_QA = [
    qa("crossed", "What is crossed?", "Morgan horses", lemma="cross"),
]

MYNA = (
    "It is a member of the starling family (Sturnidae), resident in hill "
    "regions of South Asia and Southeast Asia."
)
MYNA_TREE = [
    ("It", "PRON", "nsubj", 1), ("is", "AUX", "ROOT", 1, "be"), ("a", "DET", "det", 3),
    ("member", "NOUN", "attr", 1), ("of", "ADP", "prep", 3), ("the", "DET", "det", 7),
    ("starling", "NOUN", "compound", 7), ("family", "NOUN", "pobj", 4),
    ("(", "PUNCT", "punct", 9), ("Sturnidae", "PROPN", "appos", 7),
    (")", "PUNCT", "punct", 9), (",", "PUNCT", "punct", 3), ("resident", "ADJ", "acl", 3),
    ("in", "ADP", "prep", 12), ("hill", "NOUN", "compound", 15),
    ("regions", "NOUN", "pobj", 13), ("of", "ADP", "prep", 15),
    ("South", "PROPN", "compound", 18), ("Asia", "PROPN", "pobj", 16),
    ("and", "CCONJ", "cc", 18), ("Southeast", "PROPN", "compound", 21),
    ("Asia", "PROPN", "conj", 18), (".", "PUNCT", "punct", 1),
]
MYNA_QA = []

SHARK_TEETH = (
    "Their dermal teeth give them hydrodynamic advantages as they reduce "
    "turbulence when swimming."
)
SHARK_TEETH_TREE = [
    ("Their", "PRON", "poss", 2), ("dermal", "ADJ", "amod", 2), ("teeth", "NOUN", "nsubj", 3),
    ("give", "VERB", "ROOT", 3), ("them", "PRON", "dative", 3),
    ("hydrodynamic", "ADJ", "amod", 6), ("advantages", "NOUN", "dobj", 3),
    ("as", "SCONJ", "mark", 9), ("they", "PRON", "nsubj", 9), ("reduce", "VERB", "advcl", 3),
    ("turbulence", "NOUN", "dobj", 9), ("when", "ADV", "advmod", 12),
    ("swimming", "VERB", "advcl", 9), (".", "PUNCT", "punct", 3),
]
SHARK_TEETH_QA = [
    qa("reduce", "What does something reduce?", "turbulence"),
    qa("give", "What does something give?", "hydrodynamic advantages"),
]

SHARK_SENSE = (
    "However, as with most other sharks, including other members of the family "
    "Scyliorhinidae, they are believed to have a well-developed sense of smell, "
    "and are electroreceptive, which allows them to detect electricity emitted "
    "by other animals, and may also allow them to detect magnetic fields, which "
    "aids in navigation."
)
SHARK_SENSE_TREE = [
    ("However", "ADV", "advmod", 18), (",", "PUNCT", "punct", 18), ("as", "ADP", "prep", 18),
    ("with", "ADP", "prep", 2), ("most", "ADJ", "amod", 6), ("other", "ADJ", "amod", 6),
    ("sharks", "NOUN", "pobj", 3), (",", "PUNCT", "punct", 6),
    ("including", "ADP", "prep", 6), ("other", "ADJ", "amod", 10),
    ("members", "NOUN", "pobj", 8), ("of", "ADP", "prep", 10), ("the", "DET", "det", 13),
    ("family", "NOUN", "pobj", 11), ("Scyliorhinidae", "PROPN", "appos", 13),
    (",", "PUNCT", "punct", 18), ("they", "PRON", "nsubjpass", 18),
    ("are", "AUX", "auxpass", 18), ("believed", "VERB", "ROOT", 18),
    ("to", "PART", "aux", 20), ("have", "VERB", "xcomp", 18), ("a", "DET", "det", 23),
    ("well-developed", "ADJ", "amod", 23), ("sense", "NOUN", "dobj", 20),
    ("of", "ADP", "prep", 23), ("smell", "NOUN", "pobj", 24), (",", "PUNCT", "punct", 20),
    ("and", "CCONJ", "cc", 20), ("are", "AUX", "conj", 20, "be"),
    ("electroreceptive", "ADJ", "acomp", 28), (",", "PUNCT", "punct", 32),
    ("which", "PRON", "nsubj", 32), ("allows", "VERB", "relcl", 29),
    ("them", "PRON", "dobj", 32), ("to", "PART", "aux", 35), ("detect", "VERB", "xcomp", 32),
    ("electricity", "NOUN", "dobj", 35), ("emitted", "VERB", "acl", 36),
    ("by", "ADP", "agent", 37), ("other", "ADJ", "amod", 40), ("animals", "NOUN", "pobj", 38),
    (",", "PUNCT", "punct", 32), ("and", "CCONJ", "cc", 32), ("may", "AUX", "aux", 45),
    ("also", "ADV", "advmod", 45), ("allow", "VERB", "conj", 32),
    ("them", "PRON", "dobj", 45), ("to", "PART", "aux", 48), ("detect", "VERB", "xcomp", 45),
    ("magnetic", "ADJ", "amod", 50), ("fields", "NOUN", "dobj", 48),
    (",", "PUNCT", "punct", 53), ("which", "PRON", "nsubj", 53), ("aids", "VERB", "relcl", 50),
    ("in", "ADP", "prep", 53), ("navigation", "NOUN", "pobj", 54), (".", "PUNCT", "punct", 18),
]
SHARK_SENSE_QA = [
    qa("emitted", "what is emitted?", "electricity", lemma="emit"),
    qa("allows", "what does something allow?",
       "to detect electricity emitted by other animals", lemma="allow"),
    qa("detect", "what is being detected?", "magnetic fields"),
    qa("detect", "what does something detect?", "electricity emitted by other animals"),
    qa("aids", "what does something aid?", "in navigation", lemma="aid"),
    qa("detects", "Who detects something?", "them", lemma="detect"),
]

FROG = (
    "The webbing between the toes increases the area of the foot and helps "
    "propel the frog powerfully through the water."
)
FROG_TREE = [
    ("The", "DET", "det", 1), ("webbing", "NOUN", "nsubj", 5), ("between", "ADP", "prep", 1),
    ("the", "DET", "det", 4), ("toes", "NOUN", "pobj", 2), ("increases", "VERB", "ROOT", 5),
    ("the", "DET", "det", 7), ("area", "NOUN", "dobj", 5), ("of", "ADP", "prep", 7),
    ("the", "DET", "det", 10), ("foot", "NOUN", "pobj", 8), ("and", "CCONJ", "cc", 5),
    ("helps", "VERB", "conj", 5), ("propel", "VERB", "xcomp", 12), ("the", "DET", "det", 15),
    ("frog", "NOUN", "dobj", 13), ("powerfully", "ADV", "advmod", 13),
    ("through", "ADP", "prep", 13), ("the", "DET", "det", 19), ("water", "NOUN", "pobj", 17),
    (".", "PUNCT", "punct", 5),
]
FROG_QA = [
    qa("propel", "What does something propel?", "the frog"),
    qa("increases", "What does something increase?", "the area of the foot",
       lemma="increase"),
]

SKIMMER = (
    "The eyes appear to be narrowly open due to the lowered upper eyelid, "
    "probably an adaptation to shield the eyes from the sun's glare."
)
SKIMMER_TREE = [
    ("The", "DET", "det", 1), ("eyes", "NOUN", "nsubj", 2), ("appear", "VERB", "ROOT", 2),
    ("to", "PART", "aux", 6), ("be", "AUX", "aux", 6), ("narrowly", "ADV", "advmod", 6),
    ("open", "ADJ", "xcomp", 2), ("due", "ADP", "prep", 6), ("to", "ADP", "pcomp", 7),
    ("the", "DET", "det", 12), ("lowered", "ADJ", "amod", 12), ("upper", "ADJ", "amod", 12),
    ("eyelid", "NOUN", "pobj", 8), (",", "PUNCT", "punct", 2),
    ("probably", "ADV", "advmod", 16), ("an", "DET", "det", 16),
    ("adaptation", "NOUN", "appos", 12), ("to", "PART", "aux", 18),
    ("shield", "VERB", "acl", 16), ("the", "DET", "det", 20), ("eyes", "NOUN", "dobj", 18),
    ("from", "ADP", "prep", 18), ("the", "DET", "det", 25), ("sun", "NOUN", "poss", 25),
    ("'s", "PART", "case", 23), ("glare", "NOUN", "pobj", 21), (".", "PUNCT", "punct", 2),
]
SKIMMER_QA = [
    qa("shield", "What does something shield?", "the eyes"),
]

GECKO = (
    "Increasing humidity typically fortifies gecko adhesion, even on "
    "hydrophobic surfaces, yet is reduced if completely immersed in water."
)
GECKO_TREE = [
    ("Increasing", "VERB", "csubj", 3), ("humidity", "NOUN", "dobj", 0),
    ("typically", "ADV", "advmod", 3), ("fortifies", "VERB", "ROOT", 3),
    ("gecko", "NOUN", "compound", 5), ("adhesion", "NOUN", "dobj", 3),
    (",", "PUNCT", "punct", 3), ("even", "ADV", "advmod", 8), ("on", "ADP", "prep", 3),
    ("hydrophobic", "ADJ", "amod", 10), ("surfaces", "NOUN", "pobj", 8),
    (",", "PUNCT", "punct", 3), ("yet", "CCONJ", "cc", 3), ("is", "AUX", "auxpass", 14),
    ("reduced", "VERB", "conj", 3), ("if", "SCONJ", "mark", 17),
    ("completely", "ADV", "advmod", 17), ("immersed", "VERB", "advcl", 14),
    ("in", "ADP", "prep", 17), ("water", "NOUN", "pobj", 18), (".", "PUNCT", "punct", 3),
]
GECKO_QA = [
    qa("fortifies", "What does something fortify?", "gecko adhesion", lemma="fortify"),
]

TERMITE = (
    "Wind blowing across the tops of the towers enhances the circulation of air "
    "through the mounds, which also include side vents in their construction."
)
TERMITE_TREE = [
    ("Wind", "NOUN", "nsubj", 8), ("blowing", "VERB", "acl", 0), ("across", "ADP", "prep", 1),
    ("the", "DET", "det", 4), ("tops", "NOUN", "pobj", 2), ("of", "ADP", "prep", 4),
    ("the", "DET", "det", 7), ("towers", "NOUN", "pobj", 5), ("enhances", "VERB", "ROOT", 8),
    ("the", "DET", "det", 10), ("circulation", "NOUN", "dobj", 8), ("of", "ADP", "prep", 10),
    ("air", "NOUN", "pobj", 11), ("through", "ADP", "prep", 8), ("the", "DET", "det", 15),
    ("mounds", "NOUN", "pobj", 13), (",", "PUNCT", "punct", 15),
    ("which", "PRON", "nsubj", 19), ("also", "ADV", "advmod", 19),
    ("include", "VERB", "relcl", 15), ("side", "NOUN", "compound", 21),
    ("vents", "NOUN", "dobj", 19), ("in", "ADP", "prep", 19), ("their", "PRON", "poss", 24),
    ("construction", "NOUN", "pobj", 22), (".", "PUNCT", "punct", 8),
]
TERMITE_QA = [
    qa("enhances", "What does something enhance?", "the circulation of air",
       lemma="enhance"),
]

DISCOVERY = "Researchers discovered the species in 1901."
DISCOVERY_TREE = [
    ("Researchers", "NOUN", "nsubj", 1), ("discovered", "VERB", "ROOT", 1),
    ("the", "DET", "det", 3), ("species", "NOUN", "dobj", 1), ("in", "ADP", "prep", 1),
    ("1901", "NUM", "pobj", 4), (".", "PUNCT", "punct", 1),
]
DISCOVERY_ENTS = [Entity(label="DATE", start=5, end=6)]

CUTTLEFISH = "The cuttlefish encodes information with its rapid skin patterns."
CUTTLEFISH_TREE = [
    ("The", "DET", "det", 1), ("cuttlefish", "NOUN", "nsubj", 2),
    ("encodes", "VERB", "ROOT", 2), ("information", "NOUN", "dobj", 2),
    ("with", "ADP", "prep", 2), ("its", "PRON", "poss", 8), ("rapid", "ADJ", "amod", 8),
    ("skin", "NOUN", "compound", 8), ("patterns", "NOUN", "pobj", 4),
    (".", "PUNCT", "punct", 2),
]


# ----------------------------------------------------------------------
# filler articles from templates (known trees by construction)
# ----------------------------------------------------------------------

def t_advcl(n1, v1, adj, n2, v2, n3):
    """The N1 V1 ADJ N2 to V2 N3."""
    text = f"The {n1} {v1} {adj} {n2} to {v2} {n3}."
    tree = [
        ("The", "DET", "det", 1), (n1, "NOUN", "nsubj", 2), (v1, "VERB", "ROOT", 2),
        (adj, "ADJ", "amod", 4), (n2, "NOUN", "dobj", 2), ("to", "PART", "aux", 6),
        (v2, "VERB", "advcl", 2), (n3, "NOUN", "dobj", 6), (".", "PUNCT", "punct", 2),
    ]
    pairs = [qa(v1, f"What does something {lemmatize_verb(v1)}?", f"{adj} {n2}")]
    return text, tree, pairs


def t_prep(n1, v1, n2, adj, n3):
    """The N1 V1 N2 with its ADJ N3."""
    text = f"The {n1} {v1} {n2} with its {adj} {n3}."
    tree = [
        ("The", "DET", "det", 1), (n1, "NOUN", "nsubj", 2), (v1, "VERB", "ROOT", 2),
        (n2, "NOUN", "dobj", 2), ("with", "ADP", "prep", 2), ("its", "PRON", "poss", 7),
        (adj, "ADJ", "amod", 7), (n3, "NOUN", "pobj", 4), (".", "PUNCT", "punct", 2),
    ]
    return text, tree, []


def t_help(adj, n1, n2, v, n3):
    """Its ADJ N1 helps the N2 V N3."""
    text = f"Its {adj} {n1} helps the {n2} {v} {n3}."
    tree = [
        ("Its", "PRON", "poss", 2), (adj, "ADJ", "amod", 2), (n1, "NOUN", "nsubj", 3),
        ("helps", "VERB", "ROOT", 3), ("the", "DET", "det", 5), (n2, "NOUN", "nsubj", 6),
        (v, "VERB", "ccomp", 3), (n3, "NOUN", "dobj", 6), (".", "PUNCT", "punct", 3),
    ]
    return text, tree, [qa(v, f"What does something {lemmatize_verb(v)}?", n3)]


def t_relcl(n1, v0, adj, n2, v, n3):
    """The N1 V0 a ADJ N2 that V N3."""
    text = f"The {n1} {v0} a {adj} {n2} that {v} {n3}."
    tree = [
        ("The", "DET", "det", 1), (n1, "NOUN", "nsubj", 2), (v0, "VERB", "ROOT", 2),
        ("a", "DET", "det", 5), (adj, "ADJ", "amod", 5), (n2, "NOUN", "dobj", 2),
        ("that", "PRON", "nsubj", 7), (v, "VERB", "relcl", 5), (n3, "NOUN", "dobj", 7),
        (".", "PUNCT", "punct", 2),
    ]
    return text, tree, [qa(v, f"What does something {lemmatize_verb(v)}?", n3)]


def t_when(n1, v1, n2, v2ing, n3):
    """The N1 V1 N2 when V2ing N3."""
    text = f"The {n1} {v1} {n2} when {v2ing} {n3}."
    tree = [
        ("The", "DET", "det", 1), (n1, "NOUN", "nsubj", 2), (v1, "VERB", "ROOT", 2),
        (n2, "NOUN", "dobj", 2), ("when", "ADV", "advmod", 5), (v2ing, "VERB", "advcl", 2),
        (n3, "NOUN", "dobj", 5), (".", "PUNCT", "punct", 2),
    ]
    return text, tree, []


def t_organ(n1, adj, n2, v, n3):
    """The N1 has a ADJ N2 that helps the animal V N3."""
    text = f"The {n1} has a {adj} {n2} that helps the animal {v} {n3}."
    tree = [
        ("The", "DET", "det", 1), (n1, "NOUN", "nsubj", 2), ("has", "VERB", "ROOT", 2),
        ("a", "DET", "det", 5), (adj, "ADJ", "amod", 5), (n2, "NOUN", "dobj", 2),
        ("that", "PRON", "nsubj", 7), ("helps", "VERB", "relcl", 5),
        ("the", "DET", "det", 9), ("animal", "NOUN", "nsubj", 10), (v, "VERB", "ccomp", 7),
        (n3, "NOUN", "dobj", 10), (".", "PUNCT", "punct", 2),
    ]
    return text, tree, [qa(v, f"What does something {lemmatize_verb(v)}?", n3)]


def t_adaptation(adj, n1, v, n2):
    """Its ADJ N1 are an adaptation that helps the animal V N2."""
    text = f"Its {adj} {n1} are an adaptation that helps the animal {v} {n2}."
    tree = [
        ("Its", "PRON", "poss", 2), (adj, "ADJ", "amod", 2), (n1, "NOUN", "nsubj", 3),
        ("are", "AUX", "ROOT", 3, "be"), ("an", "DET", "det", 5),
        ("adaptation", "NOUN", "attr", 3), ("that", "PRON", "nsubj", 7),
        ("helps", "VERB", "relcl", 5), ("the", "DET", "det", 9),
        ("animal", "NOUN", "nsubj", 10), (v, "VERB", "ccomp", 7), (n2, "NOUN", "dobj", 10),
        (".", "PUNCT", "punct", 3),
    ]
    return text, tree, []


# Non-functional prose (taxonomy, history, range): the bulk of real species
# articles. These carry the negative cues the label model learns from.

def t_family(n1, adj, year):
    """The N1 belongs to a ADJ family that was described in YEAR."""
    text = f"The {n1} belongs to a {adj} family that was described in {year}."
    tree = [
        ("The", "DET", "det", 1), (n1, "NOUN", "nsubj", 2), ("belongs", "VERB", "ROOT", 2),
        ("to", "ADP", "prep", 2), ("a", "DET", "det", 6), (adj, "ADJ", "amod", 6),
        ("family", "NOUN", "pobj", 3), ("that", "PRON", "nsubjpass", 9),
        ("was", "AUX", "auxpass", 9), ("described", "VERB", "relcl", 6),
        ("in", "ADP", "prep", 9), (year, "NUM", "pobj", 10), (".", "PUNCT", "punct", 2),
    ]
    ents = [Entity(label="DATE", start=11, end=12)]
    return text, tree, [], ents


def t_recorded(place, n1):
    """It was first recorded near PLACE when naturalists surveyed the N1."""
    text = f"It was first recorded near {place} when naturalists surveyed the {n1}."
    tree = [
        ("It", "PRON", "nsubjpass", 3), ("was", "AUX", "auxpass", 3),
        ("first", "ADV", "advmod", 3), ("recorded", "VERB", "ROOT", 3),
        ("near", "ADP", "prep", 3), (place, "PROPN", "pobj", 4),
        ("when", "ADV", "advmod", 8), ("naturalists", "NOUN", "nsubj", 8),
        ("surveyed", "VERB", "advcl", 3), ("the", "DET", "det", 10),
        (n1, "NOUN", "dobj", 8), (".", "PUNCT", "punct", 3),
    ]
    return text, tree, [], []


def t_range(adj, place):
    """They inhabit ADJ regions that stretch across PLACE."""
    text = f"They inhabit {adj} regions that stretch across {place}."
    tree = [
        ("They", "PRON", "nsubj", 1), ("inhabit", "VERB", "ROOT", 1),
        (adj, "ADJ", "amod", 3), ("regions", "NOUN", "dobj", 1),
        ("that", "PRON", "nsubj", 5), ("stretch", "VERB", "relcl", 3),
        ("across", "ADP", "prep", 5), (place, "PROPN", "pobj", 6),
        (".", "PUNCT", "punct", 1),
    ]
    return text, tree, [], []


FILLERS = [
    ("octopus", "Octopus", t_advcl("octopus", "changes", "bright", "patterns", "confuse", "predators")),
    ("chameleon", "Chameleon", t_relcl("chameleon", "has", "long", "tongue", "catches", "insects")),
    ("woodpecker", "Woodpecker", t_prep("woodpecker", "grips", "bark", "strong", "claws")),
    ("hummingbird", "Hummingbird", t_when("hummingbird", "sips", "nectar", "hovering", "midair")),
    ("camel", "Camel", t_advcl("camel", "stores", "dense", "fat", "survive", "droughts")),
    ("penguin", "Penguin", t_help("thick", "plumage", "penguin", "retain", "heat")),
    ("firefly", "Firefly", t_advcl("firefly", "emits", "cold", "light", "attract", "mates")),
    ("beaver", "Beaver", t_relcl("beaver", "has", "flat", "tail", "slaps", "water")),
    ("owl", "Owl", t_prep("owl", "hunts", "mice", "silent", "wings")),
    ("dolphin", "Dolphin", t_when("dolphin", "emits", "clicks", "locating", "prey")),
    ("cactus", "Cactus", t_advcl("cactus", "grows", "waxy", "spines", "deter", "herbivores")),
    ("polar-bear", "Polar bear", t_help("dense", "fur", "bear", "trap", "warmth")),
    ("spider", "Spider", t_relcl("spider", "spins", "sticky", "web", "snares", "flies")),
    ("bat", "Bat", t_when("bat", "emits", "pulses", "navigating", "darkness")),
    ("elephant", "Elephant", t_prep("elephant", "sprays", "dust", "long", "trunk")),
    ("lotus", "Lotus", t_advcl("lotus", "sheds", "excess", "water", "repel", "dirt")),
    ("mangrove", "Mangrove", t_relcl("mangrove", "has", "salt", "gland", "excretes", "brine")),
    ("salmon", "Salmon", t_when("salmon", "senses", "currents", "finding", "rivers")),
    ("tardigrade", "Tardigrade", t_advcl("tardigrade", "enters", "deep", "dormancy", "endure", "desiccation")),
    ("kingfisher", "Kingfisher", t_prep("kingfisher", "pierces", "water", "streamlined", "beak")),
    ("moth", "Moth", t_help("furry", "thorax", "moth", "prevent", "overheating")),
    ("seal", "Seal", t_advcl("seal", "stores", "rich", "blubber", "insulate", "organs")),
    ("icefish", "Icefish", t_relcl("icefish", "has", "special", "protein", "prevents", "freezing")),
    ("sunflower", "Sunflower", t_when("sunflower", "tracks", "sunlight", "maximizing", "photosynthesis")),
    ("squid", "Squid", t_prep("squid", "ejects", "ink", "muscular", "siphon")),
    ("mantis-shrimp", "Mantis shrimp", t_organ("shrimp", "compound", "eye", "sense", "light")),
    ("pit-viper", "Pit viper", t_organ("viper", "facial", "pit", "sense", "heat")),
    ("electric-eel", "Electric eel", t_organ("eel", "elongated", "organ", "detect", "electricity")),
    ("desert-snail", "Desert snail", t_organ("snail", "ribbed", "shell", "retain", "moisture")),
    ("water-spider", "Water spider", t_organ("spider", "silken", "bell", "collect", "air")),
    ("remora", "Remora", t_organ("remora", "ridged", "disc", "grip", "surfaces")),
    ("fennec-fox", "Fennec fox", t_adaptation("oversized", "ears", "release", "heat")),
    ("snow-leopard", "Snow leopard", t_adaptation("wide", "paws", "grip", "snow")),
]

NON_FUNCTIONAL = [
    ("marsh-wren", "Marsh wren", t_family("wren", "large", "1810")),
    ("sand-viper", "Sand viper", t_family("viper", "venomous", "1827")),
    ("reef-crab", "Reef crab", t_family("crab", "diverse", "1874")),
    ("stone-moss", "Stone moss", t_family("moss", "ancient", "1801")),
    ("dune-skink", "Dune skink", t_family("skink", "small", "1839")),
    ("night-heron", "Night heron", t_recorded("Lisbon", "wetlands")),
    ("cave-cricket", "Cave cricket", t_recorded("Naples", "caverns")),
    ("fen-orchid", "Fen orchid", t_recorded("Norfolk", "marshes")),
    ("sea-hare", "Sea hare", t_recorded("Crete", "lagoons")),
    ("rock-ptarmigan", "Rock ptarmigan", t_recorded("Reykjavik", "highlands")),
    ("gray-langur", "Gray langur", t_range("wooded", "India")),
    ("banded-newt", "Banded newt", t_range("humid", "Anatolia")),
    ("plains-zebra", "Plains zebra", t_range("grassy", "Africa")),
    ("harbor-porpoise", "Harbor porpoise", t_range("coastal", "Europe")),
]

KEY_ARTICLES = [
    ("ctenophora", "Ctenophora", [(CTENOPHORA, CTENOPHORA_TREE, CTENOPHORA_QA, [])]),
    ("barychelidae", "Barychelidae", [(BARYCHELIDAE, BARYCHELIDAE_TREE, BARYCHELIDAE_QA, [])]),
    ("pelican", "Pelican", [(PELICAN, PELICAN_TREE, PELICAN_QA, [])]),
    ("cephalopod", "Cephalopod", [(CEPHALOPOD, CEPHALOPOD_TREE, CEPHALOPOD_QA, [])]),
    ("stenocara", "Stenocara gracilipes", [
        (STENOCARA_1, STENOCARA_1_TREE, STENOCARA_1_QA, []),
        (STENOCARA_2, STENOCARA_2_TREE, STENOCARA_2_QA, []),
    ]),
    ("yucca", "Yucca", [(YUCCA, YUCCA_TREE, YUCCA_QA, [])]),
    ("kangaroo-rat", "Kangaroo rat", [(KANGAROO_RAT, KANGAROO_RAT_TREE, KANGAROO_RAT_QA, [])]),
    ("peregrine-falcon", "Peregrine falcon", [(FALCON, FALCON_TREE, FALCON_QA, [])]),
    ("isopoda", "Isopoda", [(ISOPODA, ISOPODA_TREE, ISOPODA_QA, [])]),
    ("pigeon-guillemot", "Pigeon guillemot", [(GUILLEMOT, GUILLEMOT_TREE, GUILLEMOT_QA, [])]),
    ("morgan-horse", "Morgan horse", [(MORGAN_HORSE, MORGAN_HORSE_TREE, MORGAN_HORSE_QA, MORGAN_HORSE_ENTS)]),
    ("common-hill-myna", "Common hill myna", [(MYNA, MYNA_TREE, MYNA_QA, [])]),
    ("shark", "Shark", [
        (SHARK_TEETH, SHARK_TEETH_TREE, SHARK_TEETH_QA, []),
        (SHARK_SENSE, SHARK_SENSE_TREE, SHARK_SENSE_QA, []),
    ]),
    ("frog", "Frog", [(FROG, FROG_TREE, FROG_QA, [])]),
    ("black-skimmer", "Black skimmer", [(SKIMMER, SKIMMER_TREE, SKIMMER_QA, [])]),
    ("gecko", "Gecko", [(GECKO, GECKO_TREE, GECKO_QA, [])]),
    ("termite", "Termite", [(TERMITE, TERMITE_TREE, TERMITE_QA, [])]),
    ("kakapo", "Kakapo", [
        t_advcl("kakapo", "climbs", "tall", "trees", "reach", "fruit") + ((),),
        (DISCOVERY, DISCOVERY_TREE, [], DISCOVERY_ENTS),
    ]),
    ("cuttlefish", "Cuttlefish", [(CUTTLEFISH, CUTTLEFISH_TREE, [], [])]),
]

# Articles with no recorded parses; the extractor must skip them cleanly.
UNPARSED = [
    ("moon-jelly", "Moon jelly",
     "The moon jelly drifts with ocean currents. Its translucent bell ripples gently."),
    ("lichen", "Lichen",
     "Lichens colonize bare rock surfaces."),
]


PATENT_CLAIMS = """\
A valve assembly for reducing pressure in a hydraulic line.
An insulating panel for reducing loss of heat through exterior walls.
A protective housing for giving protection to electronic components.
A photodiode array for sensing light under low illumination.
A gimbal mount for tilting movement of the camera platform.
A filter bank for extracting signal from background noise.
A processor for encoding information onto the carrier wave.
A surface cleaning apparatus comprising a second collecting apparatus for collecting liquid from the surface.
An electrode grid for detecting electricity in living tissue.
A membrane for trapping moisture inside the sealed chamber.
A regulator valve for reducing pressure across the manifold.
A heat exchanger jacket for reducing loss of thermal energy.
A sensor for sensing light at the photoreceptor plane.
A stage actuator for tilting movement of the specimen holder.
An amplifier for extracting signal from the weak input channel.
A codec for encoding information into compressed frames.
A drainage conduit for collecting liquid from the basin floor.
A probe for detecting electricity within the circuit board.
A desiccant cartridge for trapping moisture in the storage vessel.
A damper for reducing vibration in the support frame.
A nozzle for spraying coolant onto the workpiece.
A clamp for holding workpieces during machining.
A shield for deflecting debris away from the operator.
A turbine blade for converting flow into rotation.
A lens array for focusing light onto the sensor plane.
A baffle for directing airflow through the housing.
A coating for repelling water from the windshield surface.
A fin stack for dissipating heat from the processor.
A bracket for supporting loads under continuous stress.
A seal for preventing leakage around the piston rod.
A thermopile for sensing heat across a distance.
A liner for retaining moisture within the package.
An intake manifold for collecting air into the chamber.
A vacuum pad for gripping surfaces during transport.
A radiator fin for releasing heat from the engine block.
"""


# ----------------------------------------------------------------------
# generation steps
# ----------------------------------------------------------------------

def write_corpus_fixtures():
    parse_provider = FixtureParseProvider(FIX)
    srl_provider = FixtureSrlProvider(FIX)
    articles = []

    def add_article(art_id, organism, sentence_specs):
        text = " ".join(spec[0] for spec in sentence_specs)
        article = Article(
            article_id=art_id, title=organism, organism=organism,
            source_url=f"https://en.wikipedia.org/wiki/{organism.replace(' ', '_')}",
            text=text,
        )
        records = segment(article)
        assert len(records) == len(sentence_specs), (
            f"{art_id}: segmented into {len(records)} sentences, "
            f"expected {len(sentence_specs)}: {[r.text for r in records]}"
        )
        for record, spec in zip(records, sentence_specs):
            sent_text, tree_spec, qa_pairs, ents = spec
            assert record.text == sent_text, (record.text, sent_text)
            tree = T(tree_spec)
            tree.ents = list(ents)
            joined = [t.text for t in tree.tokens]
            cursor = 0
            for tok in joined:
                found = sent_text.find(tok, cursor)
                assert found >= 0, f"{art_id}: token {tok!r} not in sentence"
                cursor = found + len(tok)
            parse_provider.record(record.sentence_id, tree)
            srl_provider.record(record.sentence_id, qa_pairs)
        articles.append(article)

    for art_id, organism, sentence_specs in KEY_ARTICLES:
        add_article(art_id, organism, sentence_specs)
    for art_id, organism, built in FILLERS:
        text, tree, pairs = built
        add_article(art_id, organism, [(text, tree, pairs, [])])
    for art_id, organism, built in NON_FUNCTIONAL:
        add_article(art_id, organism, [built])
    for art_id, organism, text in UNPARSED:
        articles.append(Article(
            article_id=art_id, title=organism, organism=organism,
            source_url=f"https://en.wikipedia.org/wiki/{organism.replace(' ', '_')}",
            text=text,
        ))

    FIX.mkdir(exist_ok=True)
    with (FIX / "articles.jsonl").open("w", encoding="utf-8") as fh:
        for art in articles:
            fh.write(json.dumps({
                "article_id": art.article_id, "title": art.title,
                "organism": art.organism, "source_url": art.source_url,
                "text": art.text,
            }, ensure_ascii=False, sort_keys=True) + "\n")
    print(f"articles: {len(articles)}")

    # Sanity: the showcase extractions must come out as documented.
    patterns = load_patterns(ROOT / "patterns" / "dep_patterns.json")
    expectations = {
        "yucca#0": [("trap moisture", "QASRL")],
        "ctenophora#0": [("avoid sinking", "QASRL")],
        "pelican#0": [("keep buoyant", "DEP")],
        "cephalopod#0": [("increase buoyancy", "DEP")],
        "stenocara#0": [("catch fog droplets", "BOTH")],
        "shark#1": [("detect electricity", "DEP"), ("emit electricity", "QASRL"),
                    ("aid in navigation", "BOTH")],
    }
    article_map = {a.article_id: a for a in articles}
    for sent_id, wanted in expectations.items():
        art_id = sent_id.split("#")[0]
        record = segment(article_map[art_id])[int(sent_id.split("#")[1])]
        phrases, _ = extract_sentence(record, parse_provider, srl_provider, patterns)
        table = {p.text: p.method for p in phrases}
        for text, method in wanted:
            assert table.get(text) == method, (sent_id, text, method, table)
    print("showcase extraction expectations hold")


def write_patent_fixtures():
    claims_path = FIX / "patents" / "claims.txt"
    claims_path.parent.mkdir(parents=True, exist_ok=True)
    claims_path.write_text(PATENT_CLAIMS, encoding="utf-8")
    pairs = []
    for line in PATENT_CLAIMS.splitlines():
        pairs.extend(extract_problem_pairs(line))
    lexicon = build_lexicon(pairs, top_n=2000)
    save_lexicon(lexicon, ROOT / "lexicon" / "problems.tsv")
    required = [("reduce", "pressure"), ("reduce", "loss"), ("give", "protection"),
                ("sense", "light"), ("tilt", "movement"), ("extract", "signal"),
                ("encode", "information"), ("collect", "liquid"),
                ("detect", "electricity"), ("trap", "moisture")]
    for pair in required:
        assert pair in lexicon.pairs, f"missing lexicon pair {pair}"
    print(f"problem lexicon: {lexicon.size} pairs")


def write_random_trees(n_trees=100, seed=20240815):
    rng = random.Random(seed)
    deps = (["dobj"] * 6 + ["prep"] * 4 + ["pobj"] * 4 + ["amod"] * 3 + ["compound"] * 3
            + ["aux"] * 2 + ["xcomp"] * 2 + ["nsubjpass"] * 2 + ["oprd", "acomp", "prt",
               "npadvmod", "nsubj", "advmod", "det", "conj", "cc", "punct"])
    poses = (["VERB"] * 5 + ["NOUN"] * 6 + ["ADJ"] * 2 + ["ADP"] * 2
             + ["ADV", "DET", "PRON", "PART", "AUX", "PROPN"])
    out = FIX / "random_trees.jsonl"
    with out.open("w", encoding="utf-8") as fh:
        for t in range(n_trees):
            n = rng.randint(5, 25)
            order = list(range(n))
            rng.shuffle(order)
            heads = [0] * n
            placed = [order[0]]
            heads[order[0]] = order[0]
            for idx in order[1:]:
                heads[idx] = rng.choice(placed)
                placed.append(idx)
            tokens = []
            for i in range(n):
                dep = "ROOT" if heads[i] == i else rng.choice(deps)
                tokens.append({
                    "text": f"t{i}", "lemma": f"t{i}",
                    "pos": rng.choice(poses), "dep": dep, "head": heads[i],
                })
            fh.write(json.dumps({"tokens": tokens}, sort_keys=True) + "\n")
    print(f"random trees: {n_trees}")


def write_table3_fixture():
    """Run/qrels pair whose per-aspect mean P@k reproduces the reference
    report used by the formatter tests (strategy 0.718@7 / 0.694@15,
    challenge 0.565@7 / 0.541@15 over 42 queries)."""
    n_queries = 42

    def distribute(total, slots, cap):
        base = total // slots
        extra = total - base * slots
        values = [base + 1 if i < extra else base for i in range(slots)]
        assert all(v <= cap for v in values) and sum(values) == total
        return values

    strategy_top7 = distribute(211, n_queries, 7)
    strategy_extra = distribute(437 - 211, n_queries, 8)
    challenge_top7 = distribute(166, n_queries, 7)
    challenge_extra = distribute(341 - 166, n_queries, 8)

    out_dir = FIX / "table3"
    out_dir.mkdir(parents=True, exist_ok=True)
    run_lines = []
    qrel_lines = []
    for qi in range(n_queries):
        query_id = f"q{qi + 1:02d}"
        s_rel = set(range(1, strategy_top7[qi] + 1)) | set(
            range(8, 8 + strategy_extra[qi]))
        c_rel = set(range(1, challenge_top7[qi] + 1)) | set(
            range(8, 8 + challenge_extra[qi]))
        for rank in range(1, 16):
            sid = f"{query_id}_s{rank:02d}"
            run_lines.append(f"{query_id}\t{rank}\t{sid}\t{(16 - rank) / 15:.4f}")
            qrel_lines.append(
                f"{query_id}\t{sid}\t{1 if rank in c_rel else 0}\t{1 if rank in s_rel else 0}"
            )
    (out_dir / "run.tsv").write_text("\n".join(run_lines) + "\n", encoding="utf-8")
    (out_dir / "qrels.tsv").write_text("\n".join(qrel_lines) + "\n", encoding="utf-8")

    from barcode.evaluation import evaluate_run, load_qrels, load_run
    report = evaluate_run(load_run(out_dir / "run.tsv"), load_qrels(out_dir / "qrels.tsv"),
                          [7, 15])
    s = report["aspects"]["strategy"]
    c = report["aspects"]["challenge"]
    assert abs(s["7"]["precision"] - 0.718) <= 0.001, s
    assert abs(s["15"]["precision"] - 0.694) <= 0.001, s
    assert abs(c["7"]["precision"] - 0.565) <= 0.001, c
    assert abs(c["15"]["precision"] - 0.541) <= 0.001, c
    print("table3 fixture reproduces the reference precision rows")


VERB_SYNONYMS = {
    "absorb": ["capture", "soak up", "take in"],
    "repel": ["deflect", "shed", "resist"],
    "renew": ["regenerate", "restore", "regrow"],
    "produce": ["generate", "create", "emit"],
    "change": ["modify", "alter", "shift"],
    "blend": ["merge", "camouflage", "disappear"],
    "allow": ["enable", "permit", "support"],
    "control": ["regulate", "steer", "manage"],
    "provide": ["supply", "give", "deliver"],
    "move": ["travel", "glide", "swim"],
    "reduce": ["minimize", "decrease", "lower"],
    "sense": ["detect", "perceive", "feel"],
    "enhance": ["improve", "sharpen", "boost"],
    "improve": ["enhance", "strengthen", "refine"],
    "enable": ["allow", "permit", "support"],
    "store": ["hold", "retain", "keep"],
    "prevent": ["avoid", "stop", "block"],
    "stay": ["remain", "keep", "linger"],
    "collect": ["gather", "harvest", "accumulate"],
    "maintain": ["preserve", "sustain", "keep"],
}

ANTONYM_FLIPS = {
    "reduce": "increase", "increase": "reduce", "prevent": "cause",
    "absorb": "release", "repel": "attract", "enhance": "reduce",
    "store": "release", "collect": "scatter",
}


def write_relevance_fixture(seed=4242):
    from barcode.evaluation import load_asknature_queries, load_paraphrase_pairs

    rng = random.Random(seed)
    embed = HashedEmbeddingProvider(256)
    nli = OverlapNliProvider()
    queries = load_asknature_queries() + [p for _, p in load_paraphrase_pairs()]

    def phrase_variants(query):
        words = query.split()
        verb, rest = words[0], " ".join(words[1:])
        variants = [query, f"{verb} {rest} efficiently", f"{verb} the {rest}"]
        for alt in VERB_SYNONYMS.get(verb, [])[:2]:
            variants.append(f"{alt} {rest}")
        if rest:
            variants.append(f"{verb} {rest.split()[-1]}")
        return variants

    pairs = []
    for query in queries:
        for variant in phrase_variants(query):
            pairs.append((query, variant, 1))
        flip = ANTONYM_FLIPS.get(query.split()[0])
        if flip:
            pairs.append((query, f"{flip} {' '.join(query.split()[1:])}", 0))

    # Cross-query mismatches pad the irrelevant class.
    while sum(1 for _, _, l in pairs if l == 0) < 372:
        q1, q2 = rng.sample(queries, 2)
        variant = rng.choice(phrase_variants(q2))
        if set(q1.split()) & set(variant.split()):
            continue
        pairs.append((q1, variant, 0))
    positives = [p for p in pairs if p[2] == 1]
    negatives = [p for p in pairs if p[2] == 0]
    rng.shuffle(positives)
    rng.shuffle(negatives)
    while len(positives) < 633:
        query = rng.choice(queries)
        words = query.split()
        positives.append((query, f"{words[0]} {' '.join(words[1:])} in nature", 1))
    pairs = positives[:633] + negatives[:372]
    rng.shuffle(pairs)

    # Direction-balanced annotation noise: flip 25 labels each way so the
    # relevant fraction stays at 63%.
    pos_idx = [i for i, p in enumerate(pairs) if p[2] == 1]
    neg_idx = [i for i, p in enumerate(pairs) if p[2] == 0]
    flips = set(rng.sample(pos_idx, 25)) | set(rng.sample(neg_idx, 25))

    records = []
    for i, (query, phrase, label) in enumerate(pairs):
        cosine = float(embed.embed([phrase])[0] @ embed.embed([query])[0])
        scores = nli.score(phrase, query)
        if i in flips:
            label = 1 - label
        records.append({
            "query": query, "phrase": phrase, "label": label,
            "features": [round(cosine, 6), round(scores.entail, 6),
                         round(scores.neutral, 6), round(scores.contradict, 6)],
        })

    out = FIX / "relevance_pairs.jsonl"
    with out.open("w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    frac = sum(r["label"] for r in records) / len(records)
    print(f"relevance pairs: {len(records)} ({frac:.0%} relevant)")

    clf, metrics = train_relevance_classifier(
        [(r["features"], r["label"]) for r in records], seed=13
    )
    assert metrics["holdout_precision"] >= 0.8, metrics
    clf.metadata["trained_on"] = "fixtures/relevance_pairs.jsonl"
    clf.save(ROOT / "models" / "relevance.json")
    print(f"classifier holdout precision: {metrics['holdout_precision']:.3f}")


if __name__ == "__main__":
    write_corpus_fixtures()
    write_patent_fixtures()
    write_random_trees()
    write_table3_fixture()
    write_relevance_fixture()
    print("fixtures regenerated")
