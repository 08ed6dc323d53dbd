"""Recall, precision and F-score of system segmentation against a gold corpus.

A system syllable is correct iff its (start, end) span coincides with a
gold syllable span; recall divides correct syllables by gold syllables,
precision by system syllables, and

    F = (beta^2 + 1) * P * R / (beta^2 * P + R)

with beta = 1 weighting both equally.  Ratios stay at full precision
internally; rendering rounds to two decimal places.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus_io import GoldEntry
from .segmenter import SegmentedWord


@dataclass(frozen=True)
class EvalReport:
    correct_syllables: int
    system_syllables: int
    gold_syllables: int
    beta: float = 1.0

    @property
    def recall(self) -> float:
        if self.gold_syllables == 0:
            return 0.0
        return self.correct_syllables / self.gold_syllables

    @property
    def precision(self) -> float:
        if self.system_syllables == 0:
            return 0.0
        return self.correct_syllables / self.system_syllables

    @property
    def f_score(self) -> float:
        return f_score(self.precision, self.recall, self.beta)

    def to_dict(self) -> dict:
        return {
            "correct": self.correct_syllables,
            "system": self.system_syllables,
            "gold": self.gold_syllables,
            "precision": 100.0 * self.precision,
            "recall": 100.0 * self.recall,
            "f_score": 100.0 * self.f_score,
            "beta": self.beta,
        }

    def render_text(self) -> str:
        return (
            f"correct syllables: {self.correct_syllables}\n"
            f"system syllables:  {self.system_syllables}\n"
            f"gold syllables:    {self.gold_syllables}\n"
            f"precision: {100.0 * self.precision:.2f}%\n"
            f"recall:    {100.0 * self.recall:.2f}%\n"
            f"f-score:   {100.0 * self.f_score:.2f}% (beta={self.beta:g})"
        )


def f_score(precision: float, recall: float, beta: float = 1.0) -> float:
    """Weighted harmonic mean; 0 when precision and recall are both 0."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    denom = beta * beta * precision + recall
    if denom == 0:
        return 0.0
    return (beta * beta + 1) * precision * recall / denom


def count_matches(system: SegmentedWord, gold: GoldEntry) -> int:
    """Number of system syllables whose spans coincide with gold spans."""
    if system.original != gold.word:
        raise ValueError(
            f"system word {system.original!r} does not match gold word {gold.word!r}"
        )
    return len(set(system.spans()) & set(gold.spans()))


def evaluate(
    systems: Sequence[SegmentedWord],
    golds: Sequence[GoldEntry],
    beta: float = 1.0,
) -> EvalReport:
    """Aggregate match counts over aligned (system, gold) pairs."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    if len(systems) != len(golds):
        raise ValueError(
            f"{len(systems)} system words vs {len(golds)} gold entries"
        )
    correct = system_total = gold_total = 0
    for index, (sys_word, gold) in enumerate(zip(systems, golds)):
        if sys_word.original != gold.word:
            raise ValueError(
                f"pair {index}: system word {sys_word.original!r} "
                f"does not match gold word {gold.word!r}"
            )
        correct += count_matches(sys_word, gold)
        system_total += len(sys_word.syllables)
        gold_total += len(gold.syllables)
    return EvalReport(correct, system_total, gold_total, beta)
