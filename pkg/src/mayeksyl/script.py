"""Meetei Mayek character inventory and classification.

The script is an abugida in the Unicode block U+ABC0..U+ABFF.  Every other
module consults the tables here: 27 major letters (three of which sound as
vowels), 8 dependent vowel signs, 8 final consonants, 10 digits, the ligature
joiner (apun), the intonation mark (lum) and the full stop (cheikhei).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class CharCategory(Enum):
    MAJOR_LETTER = "major-letter"
    VOWEL_SIGN = "vowel-sign"
    FINAL_LETTER = "final-letter"
    DIGIT = "digit"
    LIGATURE = "ligature"
    INTONATION = "intonation"
    PUNCTUATION = "punctuation"
    FOREIGN = "foreign"


@dataclass(frozen=True)
class CharClass:
    """Category of a code point, plus the vowel flag for major letters."""

    category: CharCategory
    is_vowel_letter: bool = False


@dataclass(frozen=True)
class ScriptChar:
    """One inventory entry: code point, names and classification."""

    codepoint: int
    name: str           # Unicode-style short name, e.g. "ANAP"
    traditional_name: str   # e.g. "aatap", "kok lonsum"
    romanization: str
    char_class: CharClass

    @property
    def char(self) -> str:
        return chr(self.codepoint)


# Major letters, U+ABC0..U+ABDA.  UN, I and ATIYA sound as vowels; the rest
# are consonants.  Each tuple: Unicode name, traditional name, romanization.
_MAJOR_LETTERS = (
    ("KOK", "kok", "k"),
    ("SAM", "sam", "s"),
    ("LAI", "lai", "l"),
    ("MIT", "mit", "m"),
    ("PA", "pa", "p"),
    ("NA", "na", "n"),
    ("CHIL", "chil", "ch"),
    ("TIL", "til", "t"),
    ("KHOU", "khou", "kh"),
    ("NGOU", "ngou", "ng"),
    ("THOU", "thou", "th"),
    ("WAI", "wai", "w"),
    ("YANG", "yang", "y"),
    ("HUK", "huk", "h"),
    ("UN", "un", "u"),
    ("I", "ee", "i"),
    ("PHAM", "pham", "ph"),
    ("ATIYA", "atia", "a"),
    ("GOK", "gok", "g"),
    ("JHAM", "jham", "jh"),
    ("RAI", "rai", "r"),
    ("BA", "ba", "b"),
    ("JIL", "jil", "j"),
    ("DIL", "dil", "d"),
    ("GHOU", "ghou", "gh"),
    ("DHOU", "dhou", "dh"),
    ("BHAM", "bham", "bh"),
)

_VOWEL_LETTER_NAMES = frozenset({"UN", "I", "ATIYA"})

# Final consonants (lonsum), U+ABDB..U+ABE2, each derived from one major
# letter.
_FINAL_LETTERS = (
    ("KOK LONSUM", "kok lonsum", "k", "KOK"),
    ("LAI LONSUM", "lai lonsum", "l", "LAI"),
    ("MIT LONSUM", "mit lonsum", "m", "MIT"),
    ("PA LONSUM", "pa lonsum", "p", "PA"),
    ("NA LONSUM", "na lonsum", "n", "NA"),
    ("TIL LONSUM", "til lonsum", "t", "TIL"),
    ("NGOU LONSUM", "ngou lonsum", "ng", "NGOU"),
    ("I LONSUM", "ee lonsum", "i", "I"),
)

# Dependent vowel signs (cheitap), U+ABE3..U+ABEA.
_VOWEL_SIGNS = (
    ("ONAP", "ot nap", "o"),
    ("INAP", "inap", "i"),
    ("ANAP", "aatap", "a"),
    ("YENAP", "yetnap", "e"),
    ("SOUNAP", "sounap", "ou"),
    ("UNAP", "unap", "u"),
    ("CHEINAP", "cheinap", "ei"),
    ("NUNG", "nung", "ng"),
)

# Digits (cheising), U+ABF0..U+ABF9.  Traditional names are kept in their
# conventional listed order; we make no claim about whether that list starts at zero
# or at one, and the romanization is the decimal value of the code point.
_DIGITS = (
    ("DIGIT ZERO", "ama"),
    ("DIGIT ONE", "ani"),
    ("DIGIT TWO", "ahum"),
    ("DIGIT THREE", "mari"),
    ("DIGIT FOUR", "manga"),
    ("DIGIT FIVE", "taruk"),
    ("DIGIT SIX", "taret"),
    ("DIGIT SEVEN", "nipal"),
    ("DIGIT EIGHT", "mapal"),
    ("DIGIT NINE", "so(tara)"),
)

_FOREIGN = CharClass(CharCategory.FOREIGN)


def _build_inventory() -> tuple[ScriptChar, ...]:
    chars: list[ScriptChar] = []
    cp = 0xABC0
    for name, trad, roman in _MAJOR_LETTERS:
        cls = CharClass(CharCategory.MAJOR_LETTER, name in _VOWEL_LETTER_NAMES)
        chars.append(ScriptChar(cp, name, trad, roman, cls))
        cp += 1
    for name, trad, roman, _base in _FINAL_LETTERS:
        chars.append(ScriptChar(cp, name, trad, roman, CharClass(CharCategory.FINAL_LETTER)))
        cp += 1
    for name, trad, roman in _VOWEL_SIGNS:
        chars.append(ScriptChar(cp, name, trad, roman, CharClass(CharCategory.VOWEL_SIGN)))
        cp += 1
    chars.append(ScriptChar(0xABEB, "CHEIKHEI", "cheikhei", "||", CharClass(CharCategory.PUNCTUATION)))
    chars.append(ScriptChar(0xABEC, "LUM IYEK", "lum", ".", CharClass(CharCategory.INTONATION)))
    chars.append(ScriptChar(0xABED, "APUN IYEK", "apun", "_", CharClass(CharCategory.LIGATURE)))
    for offset, (name, trad) in enumerate(_DIGITS):
        chars.append(ScriptChar(0xABF0 + offset, name, trad, str(offset), CharClass(CharCategory.DIGIT)))
    return tuple(sorted(chars, key=lambda c: c.codepoint))


_INVENTORY = _build_inventory()
_BY_CODEPOINT = {c.codepoint: c for c in _INVENTORY}

_BY_NAME: dict[str, ScriptChar] = {}
for _c in _INVENTORY:
    for _key in (_c.name, _c.traditional_name):
        _BY_NAME[" ".join(_key.lower().split())] = _c

_LONSUM_BASE = {}
for _i, (_name, _trad, _roman, _base) in enumerate(_FINAL_LETTERS):
    _LONSUM_BASE[0xABDB + _i] = _BY_NAME[_base.lower()].codepoint


def _scalar(cp: int | str) -> int:
    if isinstance(cp, str):
        if len(cp) != 1:
            raise ValueError(f"expected a single code point, got {cp!r}")
        return ord(cp)
    return cp


def classify(cp: int | str) -> CharClass:
    """Classify a code point; anything outside the inventory is Foreign."""
    entry = _BY_CODEPOINT.get(_scalar(cp))
    return entry.char_class if entry is not None else _FOREIGN


def is_vowel_character(cp: int | str) -> bool:
    """True for the 8 vowel signs and the 3 vowel-sounding major letters.

    Final letters and the remaining major letters count as consonant
    characters.  Raises ValueError for code points outside the script.
    """
    cls = classify(cp)
    if cls.category is CharCategory.FOREIGN:
        raise ValueError(f"not a Meetei Mayek character: {chr(_scalar(cp))!r}")
    return cls.category is CharCategory.VOWEL_SIGN or cls.is_vowel_letter


def lonsum_base(cp: int | str) -> int:
    """Major letter whose final (lonsum) form the given code point is."""
    value = _scalar(cp)
    base = _LONSUM_BASE.get(value)
    if base is None:
        raise ValueError(f"U+{value:04X} is not a final letter")
    return base


def inventory() -> tuple[ScriptChar, ...]:
    """The full fixed character table, ordered by code point."""
    return _INVENTORY


def lookup(name: str) -> ScriptChar:
    """Find an inventory entry by Unicode-style or traditional name."""
    entry = _BY_NAME.get(" ".join(name.lower().split()))
    if entry is None:
        raise KeyError(f"no Meetei Mayek character named {name!r}")
    return entry


def chars_in_category(category: CharCategory) -> tuple[ScriptChar, ...]:
    return tuple(c for c in _INVENTORY if c.char_class.category is category)


def _chr_of(name: str) -> str:
    return _BY_NAME[name.lower()].char


# Single-character constants, handy for building words in code and tests.
KOK = _chr_of("kok")
SAM = _chr_of("sam")
LAI = _chr_of("lai")
MIT = _chr_of("mit")
PA = _chr_of("pa")
NA = _chr_of("na")
CHIL = _chr_of("chil")
TIL = _chr_of("til")
KHOU = _chr_of("khou")
NGOU = _chr_of("ngou")
THOU = _chr_of("thou")
WAI = _chr_of("wai")
YANG = _chr_of("yang")
HUK = _chr_of("huk")
UN = _chr_of("un")
I = _chr_of("i")
PHAM = _chr_of("pham")
ATIYA = _chr_of("atiya")
GOK = _chr_of("gok")
JHAM = _chr_of("jham")
RAI = _chr_of("rai")
BA = _chr_of("ba")
JIL = _chr_of("jil")
DIL = _chr_of("dil")
GHOU = _chr_of("ghou")
DHOU = _chr_of("dhou")
BHAM = _chr_of("bham")

KOK_LONSUM = _chr_of("kok lonsum")
LAI_LONSUM = _chr_of("lai lonsum")
MIT_LONSUM = _chr_of("mit lonsum")
PA_LONSUM = _chr_of("pa lonsum")
NA_LONSUM = _chr_of("na lonsum")
TIL_LONSUM = _chr_of("til lonsum")
NGOU_LONSUM = _chr_of("ngou lonsum")
I_LONSUM = _chr_of("i lonsum")

ONAP = _chr_of("onap")
INAP = _chr_of("inap")
ANAP = _chr_of("anap")
YENAP = _chr_of("yenap")
SOUNAP = _chr_of("sounap")
UNAP = _chr_of("unap")
CHEINAP = _chr_of("cheinap")
NUNG = _chr_of("nung")

CHEIKHEI = _chr_of("cheikhei")
LUM = _chr_of("lum")
APUN = _chr_of("apun")

DIGITS = tuple(chr(0xABF0 + i) for i in range(10))


def is_word_character(cp: int | str) -> bool:
    """True for code points that may appear inside a word token."""
    return classify(cp).category in (
        CharCategory.MAJOR_LETTER,
        CharCategory.VOWEL_SIGN,
        CharCategory.FINAL_LETTER,
        CharCategory.LIGATURE,
        CharCategory.INTONATION,
    )


def dump_inventory(records: Iterable[ScriptChar] | None = None) -> str:
    """Tab-separated dump: code point, class, traditional name, romanization.

    Column order is stable so the output can be diffed bit-exactly.
    """
    lines = []
    for c in records if records is not None else _INVENTORY:
        lines.append(
            f"U+{c.codepoint:04X}\t{c.char_class.category.value}\t{c.traditional_name}\t{c.romanization}"
        )
    return "\n".join(lines)
