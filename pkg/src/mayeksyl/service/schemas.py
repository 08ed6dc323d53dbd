"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class WordsRequest(BaseModel):
    words: list[str] = Field(min_length=1)


class WordResult(BaseModel):
    text: str
    status: str
    syllables: list[str]
    patterns: list[str]
    linguistic_classes: list[str]
    violation: str | None = None


class SegmentResponse(BaseModel):
    results: list[WordResult]


class TextRequest(BaseModel):
    text: str


class TokenOut(BaseModel):
    text: str
    kind: str
    line: int
    column: int
    status: str | None = None
    syllables: list[str] = []
    patterns: list[str] = []
    violation: str | None = None


class TokensResponse(BaseModel):
    tokens: list[TokenOut]


class PatternsResponse(BaseModel):
    counts: dict[str, int]
    unsegmented: int


class GoldEntryIn(BaseModel):
    word: str
    syllables: list[str] = Field(min_length=1)


class EvaluateRequest(BaseModel):
    gold: list[GoldEntryIn] = Field(min_length=1)
    beta: float = Field(default=1.0, gt=0)


class EvaluateResponse(BaseModel):
    correct: int
    system: int
    gold: int
    precision: float
    recall: float
    f_score: float
    beta: float


class CharacterOut(BaseModel):
    codepoint: str
    char: str
    char_class: str
    traditional_name: str
    romanization: str
    is_vowel_letter: bool


class InventoryResponse(BaseModel):
    characters: list[CharacterOut]
