"""Tokenization of running text, gold-corpus files and output serialization.

Gold corpus format, one entry per line::

    word<TAB>syl1/syl2/...

Blank lines are skipped and lines starting with '#' are comments.  The
syllables must rejoin to the word exactly; that is checked on load.
"""

from __future__ import annotations

import json
import string
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .script import CHEIKHEI, CharCategory, classify, is_word_character
from .segmenter import SegmentedWord, extract_syllables
from .patterns import cv_pattern


class TokenKind(Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"
    FOREIGN = "foreign"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    line: int = 1
    column: int = 1


@dataclass(frozen=True)
class GoldEntry:
    word: str
    syllables: tuple[str, ...]

    def __post_init__(self):
        if not self.word:
            raise ValueError("gold entry with empty word")
        if any(not s for s in self.syllables):
            raise ValueError(f"gold entry for {self.word!r} has an empty syllable")
        if "".join(self.syllables) != self.word:
            raise ValueError(
                f"gold syllables do not rejoin to the word {self.word!r}"
            )

    def spans(self) -> tuple[tuple[int, int], ...]:
        out = []
        pos = 0
        for s in self.syllables:
            out.append((pos, pos + len(s)))
            pos += len(s)
        return tuple(out)


class GoldParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


_PUNCT_CHARS = frozenset(string.punctuation) | {CHEIKHEI}


def _char_group(ch: str) -> TokenKind | None:
    if ch.isspace():
        return None
    if ch in _PUNCT_CHARS:
        return TokenKind.PUNCTUATION
    if classify(ch).category is CharCategory.DIGIT:
        return TokenKind.NUMBER
    if is_word_character(ch):
        return TokenKind.WORD
    return TokenKind.FOREIGN


def tokenize(line: str, line_no: int = 1) -> list[Token]:
    """Split one line into word, number, punctuation and foreign tokens.

    Whitespace separates tokens; each cheikhei or ASCII punctuation mark is
    a token of its own; digit runs, word-character runs and foreign runs
    are maximal.  Positions are 1-based code-point offsets.
    """
    if "\n" in line or "\r" in line:
        raise ValueError("tokenize expects a single line without line breaks")
    tokens: list[Token] = []
    i = 0
    n = len(line)
    while i < n:
        kind = _char_group(line[i])
        if kind is None:
            i += 1
            continue
        start = i
        if kind is TokenKind.PUNCTUATION:
            i += 1
        else:
            while i < n and _char_group(line[i]) is kind:
                i += 1
        tokens.append(Token(line[start:i], kind, line_no, start + 1))
    return tokens


def parse_gold(content: str) -> list[GoldEntry]:
    """Parse a gold corpus file already read into a string."""
    entries: list[GoldEntry] = []
    for line_no, raw in enumerate(unicodedata.normalize("NFC", content).splitlines(), 1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise GoldParseError("expected word<TAB>syllables", line_no)
        word, syls = parts
        try:
            entries.append(GoldEntry(word, tuple(syls.split("/"))))
        except ValueError as exc:
            raise GoldParseError(str(exc), line_no) from exc
    return entries


def serialize_gold(entries: Iterable[GoldEntry]) -> str:
    return "\n".join(f"{e.word}\t{'/'.join(e.syllables)}" for e in entries) + "\n"


@dataclass(frozen=True)
class TokenResult:
    """One token of the input stream, segmented when it is a word."""

    token: Token
    segmented: SegmentedWord | None = None

    @property
    def syllable_texts(self) -> tuple[str, ...]:
        if self.segmented is None:
            return ()
        return self.segmented.surface()

    @property
    def pattern_texts(self) -> tuple[str, ...]:
        if self.segmented is None or not self.segmented.is_segmented:
            return ()
        return tuple(cv_pattern(s) for s in self.segmented.syllables)


def segment_line(raw: str, line_no: int = 1) -> list[TokenResult]:
    """Tokenize one line (NFC-normalized) and segment its word tokens."""
    line = unicodedata.normalize("NFC", raw.rstrip("\r\n"))
    results = []
    for token in tokenize(line, line_no):
        if token.kind is TokenKind.WORD:
            results.append(TokenResult(token, extract_syllables(token.text)))
        else:
            results.append(TokenResult(token))
    return results


def segment_text(lines: Iterable[str]) -> Iterator[TokenResult]:
    """Tokenize lines and segment every word token, preserving order.

    Number, punctuation and foreign tokens pass through unsegmented.
    Input is normalized to NFC; trailing line-break characters are
    stripped.
    """
    for line_no, raw in enumerate(lines, 1):
        yield from segment_line(raw, line_no)


def format_plain(results: Sequence[TokenResult], delimiter: str = "/") -> str:
    """One output line for one input line's tokens, space-separated."""
    parts = []
    for r in results:
        if r.segmented is not None:
            parts.append(delimiter.join(r.syllable_texts))
        else:
            parts.append(r.token.text)
    return " ".join(parts)


def format_tsv(result: TokenResult, delimiter: str = "/") -> str:
    """Columns: token, status, delimited syllables, comma-joined patterns.

    Pass-through tokens carry their kind in the status column and
    themselves in the syllable column.
    """
    seg = result.segmented
    if seg is None:
        return f"{result.token.text}\t{result.token.kind.value}\t{result.token.text}\t"
    syllables = delimiter.join(result.syllable_texts)
    patterns = ",".join(result.pattern_texts)
    return f"{result.token.text}\t{seg.status.value}\t{syllables}\t{patterns}"


def result_to_dict(result: TokenResult) -> dict:
    token = result.token
    seg = result.segmented
    return {
        "text": token.text,
        "kind": token.kind.value,
        "status": seg.status.value if seg is not None else None,
        "syllables": list(result.syllable_texts),
        "patterns": list(result.pattern_texts),
        "violation": seg.violation.value if seg is not None and seg.violation else None,
    }


def format_json(result: TokenResult) -> str:
    return json.dumps(result_to_dict(result), ensure_ascii=False)
