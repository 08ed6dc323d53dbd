"""Syllable segmentation and evaluation for Meetei Mayek (Manipuri) text."""

__version__ = "0.1.0"

from .script import (
    CharCategory,
    CharClass,
    ScriptChar,
    classify,
    inventory,
    is_vowel_character,
    lonsum_base,
    lookup,
)
from .segmenter import (
    SegmentationStatus,
    SegmentedWord,
    Syllable,
    ViolationReason,
    conforms_to_grammar,
    extract_syllables,
    match_syllable_at_end,
)
from .patterns import (
    ComputationalPattern,
    LinguisticClass,
    PatternHistogram,
    classify_pattern,
    cv_pattern,
    pattern_histogram,
    to_linguistic_class,
)
from .corpus_io import (
    GoldEntry,
    GoldParseError,
    Token,
    TokenKind,
    TokenResult,
    parse_gold,
    segment_text,
    serialize_gold,
    tokenize,
)
from .evaluation import EvalReport, count_matches, evaluate, f_score

__all__ = [
    "CharCategory",
    "CharClass",
    "ComputationalPattern",
    "EvalReport",
    "GoldEntry",
    "GoldParseError",
    "LinguisticClass",
    "PatternHistogram",
    "ScriptChar",
    "SegmentationStatus",
    "SegmentedWord",
    "Syllable",
    "Token",
    "TokenKind",
    "TokenResult",
    "ViolationReason",
    "classify",
    "classify_pattern",
    "conforms_to_grammar",
    "count_matches",
    "cv_pattern",
    "evaluate",
    "extract_syllables",
    "f_score",
    "inventory",
    "is_vowel_character",
    "lonsum_base",
    "lookup",
    "match_syllable_at_end",
    "parse_gold",
    "pattern_histogram",
    "segment_text",
    "serialize_gold",
    "to_linguistic_class",
    "tokenize",
]
