"""Right-to-left extraction of syllabic units from a single word.

A well-formed syllable is

    major (apun major)? vowel-sign? (final-letter | semivowel-major)?

where the semivowel coda (one of the vowel-sounding letters UN, I, ATIYA)
is only permitted directly after a vowel sign, and the intonation mark lum
may trail any syllable.  Scanning runs from the right end of the word,
taking the longest well-formed suffix each time; syllables therefore come
off a stack in left-to-right order.  Any orthographic violation aborts the
whole word into a single fallback unit, and any character from outside the
script makes the word non-Meetei.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .script import CharCategory, classify

_MAJOR = CharCategory.MAJOR_LETTER
_SIGN = CharCategory.VOWEL_SIGN
_FINAL = CharCategory.FINAL_LETTER
_APUN = CharCategory.LIGATURE
_LUM = CharCategory.INTONATION
_FOREIGN = CharCategory.FOREIGN


class ViolationReason(Enum):
    CONSECUTIVE_VOWEL_SIGNS = "consecutive-vowel-signs"
    CONSECUTIVE_FINAL_LETTERS = "consecutive-final-letters"
    LEADING_DEPENDENT_SIGN = "leading-dependent-sign"
    MISPLACED_LIGATURE = "misplaced-ligature"
    FOREIGN_CHARACTER = "foreign-character"
    FINAL_AFTER_NOTHING = "final-after-nothing"

    @property
    def message(self) -> str:
        return _VIOLATION_MESSAGES[self]


_VIOLATION_MESSAGES = {
    ViolationReason.CONSECUTIVE_VOWEL_SIGNS: "two adjacent vowel signs",
    ViolationReason.CONSECUTIVE_FINAL_LETTERS: "two adjacent final letters",
    ViolationReason.LEADING_DEPENDENT_SIGN: "dependent sign with nothing to attach to",
    ViolationReason.MISPLACED_LIGATURE: "ligature not joining two major letters",
    ViolationReason.FOREIGN_CHARACTER: "character from outside the script",
    ViolationReason.FINAL_AFTER_NOTHING: "final letter where a syllable must start",
}


class SegmentationStatus(Enum):
    SEGMENTED = "segmented"
    WHOLE_WORD_FALLBACK = "whole-word-fallback"
    NON_MEETEI = "non-meetei"


@dataclass(frozen=True)
class Syllable:
    start: int
    end: int    # exclusive
    chars: str
    semivowel_coda: bool = False

    def __len__(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class SegmentedWord:
    original: str
    syllables: tuple[Syllable, ...]
    status: SegmentationStatus
    violation: ViolationReason | None = None

    @property
    def is_segmented(self) -> bool:
        return self.status is SegmentationStatus.SEGMENTED

    def spans(self) -> tuple[tuple[int, int], ...]:
        return tuple((s.start, s.end) for s in self.syllables)

    def surface(self) -> tuple[str, ...]:
        return tuple(s.chars for s in self.syllables)


@dataclass(frozen=True)
class SyllableMatch:
    """Span of the rightmost syllable in the unconsumed region."""

    start: int
    end: int
    semivowel_coda: bool = False


MatchResult = Union[SyllableMatch, ViolationReason]


def _skip_lum_left(chars: Sequence[str], i: int) -> int:
    while i >= 0 and classify(chars[i]).category is _LUM:
        i -= 1
    return i


def _cluster_tail(chars: Sequence[str], lo: int, e: int) -> tuple[bool, bool]:
    """Validate what may follow the second letter of an apun cluster.

    Returns (valid, semivowel_coda).  Allowed, with lum marks ignored:
    nothing, a vowel sign, a final letter, vowel sign + final letter, or
    vowel sign + semivowel letter.
    """
    cats = []
    for k in range(lo, e + 1):
        cls = classify(chars[k])
        if cls.category is _LUM:
            continue
        cats.append(cls)
    if not cats:
        return True, False
    if len(cats) == 1:
        return cats[0].category in (_SIGN, _FINAL), False
    if len(cats) == 2 and cats[0].category is _SIGN:
        if cats[1].category is _FINAL:
            return True, False
        if cats[1].category is _MAJOR and cats[1].is_vowel_letter:
            return True, True
    return False, False


def match_syllable_at_end(region: Sequence[str], e: int) -> MatchResult:
    """Match the rightmost syllable of ``region[0..e]``.

    Returns the matched span (its end is always ``e + 1``) or the
    ViolationReason that aborts segmentation.  Characters beyond ``e`` are
    ignored.  Digits and cheikhei are the tokenizer's problem and raise
    ValueError here.
    """
    if len(region) == 0:
        raise ValueError("cannot match in an empty region")
    if not 0 <= e < len(region):
        raise ValueError(f"end index {e} out of range")

    # Ligature window: an apun belonging to the rightmost syllable can sit
    # at most 3 positions left of its end (second letter + vowel sign +
    # coda).  It forms the syllable only when the whole span is
    # well-formed; otherwise the plain steps below decide, emitting a
    # shorter syllable or the violation.
    j = None
    for k in range(e, max(e - 3, 0) - 1, -1):
        if classify(region[k]).category is _APUN:
            j = k
            break
    if j is not None and 0 < j < e:
        if classify(region[j - 1]).category is _MAJOR and classify(region[j + 1]).category is _MAJOR:
            valid, semi = _cluster_tail(region, j + 2, e)
            if valid:
                return SyllableMatch(j - 1, e + 1, semi)

    # Trailing intonation marks belong to the syllable on their left,
    # which is exactly the one being matched now.
    i = _skip_lum_left(region, e)
    if i < 0:
        return ViolationReason.LEADING_DEPENDENT_SIGN

    semivowel = False
    cls = classify(region[i])

    # Coda: a final letter, or a vowel-sounding letter right after a vowel
    # sign (the semivowel reading behind the CVV/VVV patterns).
    if cls.category is _FINAL:
        left = _skip_lum_left(region, i - 1)
        if left < 0:
            return ViolationReason.FINAL_AFTER_NOTHING
        if classify(region[left]).category is _FINAL:
            return ViolationReason.CONSECUTIVE_FINAL_LETTERS
        i = left
    elif cls.category is _MAJOR and cls.is_vowel_letter:
        left = _skip_lum_left(region, i - 1)
        if left >= 0 and classify(region[left]).category is _SIGN:
            semivowel = True
            i = left

    # Vowel sign.
    if classify(region[i]).category is _SIGN:
        left = _skip_lum_left(region, i - 1)
        if left < 0:
            return ViolationReason.LEADING_DEPENDENT_SIGN
        if classify(region[left]).category is _SIGN:
            return ViolationReason.CONSECUTIVE_VOWEL_SIGNS
        i = left

    # Base: must be a major letter, optionally extended leftwards by a
    # (major, apun) pair into a cluster onset.
    cls = classify(region[i])
    if cls.category is not _MAJOR:
        if cls.category is _FOREIGN:
            return ViolationReason.FOREIGN_CHARACTER
        if cls.category is _APUN:
            return ViolationReason.MISPLACED_LIGATURE
        if cls.category is _FINAL:
            return ViolationReason.FINAL_AFTER_NOTHING
        if cls.category is _SIGN:
            return ViolationReason.CONSECUTIVE_VOWEL_SIGNS
        raise ValueError(
            f"{region[i]!r} cannot occur inside a word; tokenize the text first"
        )
    start = i
    if i >= 2 and classify(region[i - 1]).category is _APUN and classify(region[i - 2]).category is _MAJOR:
        start = i - 2
    return SyllableMatch(start, e + 1, semivowel)


def extract_syllables(word: str) -> SegmentedWord:
    """Segment one word into syllabic units.

    The word must already be free of whitespace, cheikhei and digits
    (tokenizer's job; those raise ValueError).  A word containing any
    foreign character is returned whole with NON_MEETEI status; a word
    violating the orthography is returned whole with a fallback reason.
    """
    if not word:
        raise ValueError("cannot segment an empty word")

    whole = (Syllable(0, len(word), word),)
    for ch in word:
        category = classify(ch).category
        if category is _FOREIGN:
            return SegmentedWord(word, whole, SegmentationStatus.NON_MEETEI)
        if category in (CharCategory.DIGIT, CharCategory.PUNCTUATION):
            raise ValueError(
                f"{ch!r} cannot occur inside a word; tokenize the text first"
            )

    stack: list[SyllableMatch] = []
    e = len(word) - 1
    while e >= 0:
        match = match_syllable_at_end(word, e)
        if isinstance(match, ViolationReason):
            return SegmentedWord(word, whole, SegmentationStatus.WHOLE_WORD_FALLBACK, match)
        stack.append(match)
        e = match.start - 1

    syllables = tuple(
        Syllable(m.start, m.end, word[m.start:m.end], m.semivowel_coda)
        for m in reversed(stack)
    )
    return SegmentedWord(word, syllables, SegmentationStatus.SEGMENTED)


def conforms_to_grammar(syllable: str) -> bool:
    """True iff the character sequence forms one well-formed syllable.

    Six states: start, base, cluster pending, cluster base, vowel sign,
    coda.  Lum marks are transparent except that a syllable cannot begin
    with one and an apun must literally touch major letters on both sides.
    """
    START, BASE, PENDING, CLUSTER, MATRA, CODA = range(6)
    state = START
    prev_major = False
    for ch in syllable:
        cls = classify(ch)
        cat = cls.category
        if cat is _LUM:
            if state in (START, PENDING):
                return False
            prev_major = False
            continue
        if state == START:
            if cat is not _MAJOR:
                return False
            state = BASE
        elif state == BASE:
            if cat is _APUN and prev_major:
                state = PENDING
            elif cat is _SIGN:
                state = MATRA
            elif cat is _FINAL:
                state = CODA
            else:
                return False
        elif state == PENDING:
            if cat is not _MAJOR:
                return False
            state = CLUSTER
        elif state == CLUSTER:
            if cat is _SIGN:
                state = MATRA
            elif cat is _FINAL:
                state = CODA
            else:
                return False
        elif state == MATRA:
            if cat is _FINAL or (cat is _MAJOR and cls.is_vowel_letter):
                state = CODA
            else:
                return False
        else:
            return False
        prev_major = cat is _MAJOR
    return state in (BASE, CLUSTER, MATRA, CODA)
