"""Concept extraction: sentence splitting, noun tagging, and batch building.

The whole pipeline is deterministic and dependency-free. Nouns are found with
a rule-based tagger (capitalization, suffix heuristics, and two bundled
lexicons) rather than a statistical model; swap in a different ``Tagger`` if
you need broader coverage.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .stemmer import stem

__all__ = [
    "Sentence",
    "ConceptBatch",
    "ConceptEntry",
    "split_sentences",
    "tag_nouns",
    "extract_concepts",
    "stem",
    "RuleTagger",
    "default_tagger",
]


@dataclass(frozen=True)
class Sentence:
    text: str
    index: int


# Sentence terminators: run of .!? followed by whitespace or end of text.
_BOUNDARY = re.compile(r"[.!?]+(?=\s|$)")

# Tokens that take a trailing period without ending a sentence.
_ABBREVIATIONS = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc",
    "inc", "ltd", "co", "corp", "approx", "dept", "est", "fig",
}


def split_sentences(text: str) -> list[Sentence]:
    """Split text into sentences on .!? + whitespace, guarding abbreviations."""
    sentences: list[str] = []
    start = 0
    for match in _BOUNDARY.finditer(text):
        end = match.end()
        if end < len(text):
            preceding = text[start:match.start()].rstrip()
            last_word = preceding.rsplit(None, 1)[-1] if preceding else ""
            if last_word.lower().strip("'\"()[]") in _ABBREVIATIONS:
                continue
        sentences.append(text[start:end].strip())
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return [Sentence(s, i) for i, s in enumerate(s for s in sentences if s)]


_EDGE_PUNCT = "\"'`.,;:!?()[]{}<>«»“”‘’"


def _clean_token(raw: str) -> str:
    token = raw.strip(_EDGE_PUNCT)
    # possessives unify with their base noun
    if token.endswith("'s") or token.endswith("’s"):
        token = token[:-2]
    elif token.endswith("'") or token.endswith("’"):
        token = token[:-1]
    return token


_NOUN_SUFFIXES = (
    "tion", "ment", "ness", "ity", "er", "or", "ism", "ist", "ance", "ence",
)


def _load_lexicon(path: Path | None, default_name: str) -> frozenset[str]:
    if path is not None:
        raw = Path(path).read_text(encoding="utf-8")
    else:
        raw = (
            resources.files("chronomem").joinpath(f"data/{default_name}")
            .read_text(encoding="utf-8")
        )
    words = set()
    for line in raw.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return frozenset(words)


def _singular_candidates(token: str) -> Iterable[str]:
    yield token
    if token.endswith("ies") and len(token) > 3:
        yield token[:-3] + "y"
    if token.endswith("es") and len(token) > 2:
        yield token[:-2]
    if token.endswith("s") and len(token) > 1:
        yield token[:-1]


class RuleTagger:
    """Deterministic noun tagger.

    A token is a noun when it is (a) capitalized mid-sentence, (b) capitalized
    sentence-initially and not on the exclusion list, or (c) lowercase, not
    excluded, and either carrying a recognizable noun suffix or found in the
    common-noun lexicon (directly or after de-pluralizing).
    """

    def __init__(self, excluded_path: Path | None = None,
                 common_nouns_path: Path | None = None):
        self.excluded = _load_lexicon(excluded_path, "excluded_words.txt")
        self.common_nouns = _load_lexicon(common_nouns_path, "common_nouns.txt")

    def is_noun(self, token: str, sentence_initial: bool) -> bool:
        if not token or not any(ch.isalpha() for ch in token):
            return False
        lower = token.lower()
        if token[0].isupper():
            if not sentence_initial:
                return True
            return lower not in self.excluded
        if lower in self.excluded:
            return False
        for suffix in _NOUN_SUFFIXES:
            if lower.endswith(suffix) and len(lower) >= len(suffix) + 3:
                return True
        return any(c in self.common_nouns for c in _singular_candidates(lower))


_default_tagger: RuleTagger | None = None


def default_tagger() -> RuleTagger:
    global _default_tagger
    if _default_tagger is None:
        _default_tagger = RuleTagger()
    return _default_tagger


def tag_nouns(sentence: Sentence, tagger: RuleTagger | None = None) -> list[tuple[str, int]]:
    """Return (token, position) pairs for every noun in the sentence, in order.

    Tokens come back with edge punctuation and possessive markers stripped.
    """
    tagger = tagger or default_tagger()
    out: list[tuple[str, int]] = []
    first_seen = False
    for position, raw in enumerate(sentence.text.split()):
        token = _clean_token(raw)
        if not token:
            continue
        sentence_initial = not first_seen
        first_seen = True
        if tagger.is_noun(token, sentence_initial):
            out.append((token, position))
    return out


@dataclass
class ConceptEntry:
    """One extracted concept: its accumulated context and where it occurred."""
    context: str
    positions: list[tuple[int, int]] = field(default_factory=list)  # (sentence, token)


@dataclass
class ConceptBatch:
    """Concepts extracted from one text, merged by stemmed label."""
    concepts: dict[str, ConceptEntry] = field(default_factory=dict)
    relations: set[tuple[str, str]] = field(default_factory=set)
    sequence: list[str] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not self.concepts


def _canonical_pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def extract_concepts(text: str, tagger: RuleTagger | None = None) -> ConceptBatch:
    """Run the full extraction pipeline on one text.

    Sentences are split, nouns tagged and stemmed, the occurrence sequence is
    built across the whole text, relations are the adjacent pairs of that
    sequence (self-pairs dropped), and concepts merge by label with their
    containing sentences concatenated in source order.
    """
    tagger = tagger or default_tagger()
    batch = ConceptBatch()
    sentence_for_label: dict[str, list[int]] = {}
    sentences = split_sentences(text)
    for sentence in sentences:
        for token, position in tag_nouns(sentence, tagger):
            label = stem(token)
            if not label:
                continue
            batch.sequence.append(label)
            entry = batch.concepts.get(label)
            if entry is None:
                entry = ConceptEntry(context="")
                batch.concepts[label] = entry
                sentence_for_label[label] = []
            entry.positions.append((sentence.index, position))
            seen = sentence_for_label[label]
            if not seen or seen[-1] != sentence.index:
                seen.append(sentence.index)
                entry.context = (
                    sentence.text if not entry.context
                    else entry.context + " " + sentence.text
                )
    for left, right in zip(batch.sequence, batch.sequence[1:]):
        if left != right:
            batch.relations.add(_canonical_pair(left, right))
    return batch
