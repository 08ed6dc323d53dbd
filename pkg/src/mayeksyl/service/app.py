"""HTTP service wrapping the segmenter, pattern and evaluation modules."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..corpus_io import GoldEntry, result_to_dict, segment_text
from ..evaluation import evaluate
from ..patterns import (
    classify_pattern,
    cv_pattern,
    pattern_histogram,
    to_linguistic_class,
    ComputationalPattern,
)
from ..script import inventory
from ..segmenter import SegmentedWord, extract_syllables
from .schemas import (
    CharacterOut,
    EvaluateRequest,
    EvaluateResponse,
    InventoryResponse,
    PatternsResponse,
    SegmentResponse,
    TextRequest,
    TokenOut,
    TokensResponse,
    WordResult,
    WordsRequest,
)

app = FastAPI(
    title="mayeksyl",
    version=__version__,
    description="Meetei Mayek syllable segmentation as a service.",
)


def _word_result(seg: SegmentedWord) -> WordResult:
    patterns = []
    classes = []
    if seg.is_segmented:
        for syl in seg.syllables:
            pattern = cv_pattern(syl)
            patterns.append(pattern)
            named = classify_pattern(pattern)
            if named is ComputationalPattern.OUT_OF_INVENTORY:
                classes.append(named.value)
            else:
                classes.append(to_linguistic_class(named).value)
    return WordResult(
        text=seg.original,
        status=seg.status.value,
        syllables=list(seg.surface()),
        patterns=patterns,
        linguistic_classes=classes,
        violation=seg.violation.value if seg.violation else None,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/segment", response_model=SegmentResponse)
def segment_words(request: WordsRequest) -> SegmentResponse:
    results = []
    for word in request.words:
        try:
            results.append(_word_result(extract_syllables(word)))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=f"{word!r}: {exc}") from exc
    return SegmentResponse(results=results)


@app.post("/segment/text", response_model=TokensResponse)
def segment_running_text(request: TextRequest) -> TokensResponse:
    tokens = []
    for result in segment_text(request.text.splitlines()):
        payload = result_to_dict(result)
        tokens.append(
            TokenOut(
                line=result.token.line,
                column=result.token.column,
                **payload,
            )
        )
    return TokensResponse(tokens=tokens)


@app.post("/patterns", response_model=PatternsResponse)
def patterns_histogram(request: WordsRequest) -> PatternsResponse:
    try:
        segmented = [extract_syllables(w) for w in request.words]
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    hist = pattern_histogram(segmented)
    return PatternsResponse(
        counts={p.value: n for p, n in hist.counts.items()},
        unsegmented=hist.unsegmented,
    )


@app.post("/evaluate", response_model=EvaluateResponse)
def evaluate_against_gold(request: EvaluateRequest) -> EvaluateResponse:
    try:
        golds = [GoldEntry(e.word, tuple(e.syllables)) for e in request.gold]
        systems = [extract_syllables(g.word) for g in golds]
        report = evaluate(systems, golds, beta=request.beta)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return EvaluateResponse(**report.to_dict())


@app.get("/inventory", response_model=InventoryResponse)
def character_inventory() -> InventoryResponse:
    return InventoryResponse(
        characters=[
            CharacterOut(
                codepoint=f"U+{c.codepoint:04X}",
                char=c.char,
                char_class=c.char_class.category.value,
                traditional_name=c.traditional_name,
                romanization=c.romanization,
                is_vowel_letter=c.char_class.is_vowel_letter,
            )
            for c in inventory()
        ]
    )
