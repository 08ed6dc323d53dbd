"""CV pattern strings, the observed pattern inventory and its linguistic classes.

Characters partition into vowels (the 8 vowel signs plus UN, I, ATIYA) and
consonants (the other major letters plus all final letters).  Apun and lum
contribute nothing to a pattern, which is how a four-letter cluster
syllable can still read CCVC.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from .script import CharCategory, classify, is_vowel_character
from .segmenter import SegmentedWord, Syllable


class ComputationalPattern(Enum):
    """The 11 CV patterns a segmented corpus exhibits, plus a catch-all.

    Declaration order is the conventional listing order and fixes the order
    of rendered tables.
    """

    V = "V"
    CV = "CV"
    C = "C"
    VVV = "VVV"
    CVC = "CVC"
    CC = "CC"
    CVV = "CVV"
    VV = "VV"
    VVC = "VVC"
    VC = "VC"
    CCVC = "CCVC"
    OUT_OF_INVENTORY = "out-of-inventory"


class LinguisticClass(Enum):
    """The six syllable forms of the linguistic classification."""

    V = "V"
    VC = "VC"
    CV = "CV"
    CCV = "CCV"
    CVC = "CVC"
    CCVC = "CCVC"


_NAMED_PATTERNS = {
    p.value: p for p in ComputationalPattern if p is not ComputationalPattern.OUT_OF_INVENTORY
}

# Named pattern -> linguistic class.  CCV never appears on the left:
# character-wise it only arises from cluster syllables outside the named
# inventory, so OUT_OF_INVENTORY has no mapping either.
_TO_LINGUISTIC = {
    ComputationalPattern.V: LinguisticClass.V,
    ComputationalPattern.VV: LinguisticClass.V,
    ComputationalPattern.VC: LinguisticClass.VC,
    ComputationalPattern.VVC: LinguisticClass.VC,
    ComputationalPattern.VVV: LinguisticClass.VC,
    ComputationalPattern.CV: LinguisticClass.CV,
    ComputationalPattern.C: LinguisticClass.CV,
    ComputationalPattern.CVC: LinguisticClass.CVC,
    ComputationalPattern.CVV: LinguisticClass.CVC,
    ComputationalPattern.CC: LinguisticClass.CVC,
    ComputationalPattern.CCVC: LinguisticClass.CCVC,
}


def cv_pattern(syllable: Union[Syllable, str]) -> str:
    """Map each character of a syllable to C or V; apun and lum are skipped."""
    chars = syllable.chars if isinstance(syllable, Syllable) else syllable
    out = []
    for ch in chars:
        category = classify(ch).category
        if category in (CharCategory.LIGATURE, CharCategory.INTONATION):
            continue
        if category in (CharCategory.FOREIGN, CharCategory.DIGIT, CharCategory.PUNCTUATION):
            raise ValueError(f"{ch!r} has no place in a syllable pattern")
        out.append("V" if is_vowel_character(ch) else "C")
    if not out:
        raise ValueError("syllable has no pattern-bearing characters")
    return "".join(out)


def classify_pattern(pattern: str) -> ComputationalPattern:
    """Name a CV string, or OUT_OF_INVENTORY if it is not one of the 11."""
    if not pattern:
        raise ValueError("empty pattern string")
    if set(pattern) - {"C", "V"}:
        raise ValueError(f"pattern may only contain C and V: {pattern!r}")
    return _NAMED_PATTERNS.get(pattern, ComputationalPattern.OUT_OF_INVENTORY)


def to_linguistic_class(pattern: ComputationalPattern) -> LinguisticClass:
    """Linguistic class corresponding to an observed pattern."""
    cls = _TO_LINGUISTIC.get(pattern)
    if cls is None:
        raise ValueError(f"no class correspondence for {pattern.value}")
    return cls


def _zero_counts() -> dict[ComputationalPattern, int]:
    return {p: 0 for p in ComputationalPattern}


@dataclass
class PatternHistogram:
    counts: dict[ComputationalPattern, int] = field(default_factory=_zero_counts)
    unsegmented: int = 0

    def add(self, word: SegmentedWord) -> None:
        if not word.is_segmented:
            self.unsegmented += 1
            return
        for syl in word.syllables:
            self.counts[classify_pattern(cv_pattern(syl))] += 1

    def total_syllables(self) -> int:
        return sum(self.counts.values())


def pattern_histogram(words: Iterable[SegmentedWord]) -> PatternHistogram:
    """Count every syllable of every segmented word by pattern.

    Words that fell back whole (or are non-Meetei) land in the separate
    ``unsegmented`` bucket.
    """
    hist = PatternHistogram()
    for word in words:
        hist.add(word)
    return hist
