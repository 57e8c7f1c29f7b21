"""Recall/precision scoring of predictions against gold annotations.

Recall is the fraction of targets with a gold antecedent that the system
got right; precision is the fraction of targets the system judged to have
an antecedent that were right.  Verbal nouns are counted once per case
slot, and a pseudo-candidate winner counts as a negative system judgement.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional

from .corpus import Discourse
from .resolver import ResolutionResult

NONE_FIELD = "NONE"
VERBAL_CLASS = "verbal"
NONVERBAL_CLASS = "non_verbal"


class Prediction(NamedTuple):
    doc_id: str
    anaphor_id: int
    slot: Optional[str]           # None for non-verbal targets
    winner: Optional[int]         # None when the system chose no antecedent
    total: int


def predictions_from_results(
    doc_id: str, results: Iterable[ResolutionResult]) -> list[Prediction]:
    predictions = []
    for r in results:
        winner = r.winner if isinstance(r.winner, int) else None
        predictions.append(Prediction(doc_id, r.anaphor_id, r.slot, winner, r.total))
    return predictions


def serialize_predictions(predictions: Iterable[Prediction]) -> str:
    lines = ["% doc\tanaphor\tslot\twinner\ttotal"]
    for p in predictions:
        lines.append("\t".join([
            p.doc_id,
            str(p.anaphor_id),
            p.slot or "-",
            NONE_FIELD if p.winner is None else str(p.winner),
            str(p.total),
        ]))
    return "\n".join(lines) + "\n"


def parse_predictions(text: str) -> list[Prediction]:
    predictions = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ValueError(f"predictions line {lineno}: expected 5 fields")
        doc_id, anaphor, slot, winner, total = parts
        try:
            predictions.append(Prediction(
                doc_id,
                int(anaphor),
                None if slot == "-" else slot,
                None if winner == NONE_FIELD else int(winner),
                int(total),
            ))
        except ValueError:
            raise ValueError(f"predictions line {lineno}: bad integer field") from None
    return predictions


class ClassCounts(NamedTuple):
    correct: int
    gold_positive: int
    system_positive: int

    def add(self, correct: bool, gold: bool, system: bool) -> "ClassCounts":
        return ClassCounts(
            self.correct + int(correct),
            self.gold_positive + int(gold),
            self.system_positive + int(system),
        )


def percent(numerator: int, denominator: int) -> int:
    """Integer percent, halves rounded up: 20/32 -> 63."""
    if denominator <= 0:
        raise ZeroDivisionError("percent of an empty denominator")
    return (200 * numerator + denominator) // (2 * denominator)


def format_rate(numerator: int, denominator: int) -> str:
    if denominator == 0:
        return "-"
    return f"{percent(numerator, denominator)}% ({numerator}/{denominator})"


@dataclass(frozen=True)
class EvalReport:
    correct: int
    gold_positive: int
    system_positive: int
    by_class: Mapping[str, ClassCounts]

    @property
    def recall(self) -> Optional[float]:
        if self.gold_positive == 0:
            return None
        return self.correct / self.gold_positive

    @property
    def precision(self) -> Optional[float]:
        if self.system_positive == 0:
            return None
        return self.correct / self.system_positive

    def render(self) -> str:
        rows = [("total", ClassCounts(self.correct, self.gold_positive,
                                      self.system_positive))]
        rows[:0] = [
            ("non-verbal", self.by_class[NONVERBAL_CLASS]),
            ("verbal", self.by_class[VERBAL_CLASS]),
        ]
        lines = [f"{'class':<12}{'recall':<16}precision"]
        for name, counts in rows:
            recall = format_rate(counts.correct, counts.gold_positive)
            precision = format_rate(counts.correct, counts.system_positive)
            lines.append(f"{name:<12}{recall:<16}{precision}")
        lines.append("note: verbal nouns are counted once per case slot")
        return "\n".join(lines) + "\n"


def _gold_ids(discourse: Discourse, prediction: Prediction) -> set[int]:
    """Gold antecedent ids applicable to one prediction unit.

    Case-slot units match gold entries labelled with the slot name; whole
    phrase units accept any relation label.
    """
    phrase = discourse.phrase(prediction.anaphor_id)
    ids = set()
    for gold in phrase.gold_antecedents:
        if prediction.slot is not None and gold.label != prediction.slot:
            continue
        if gold.antecedent_id is not None:
            ids.add(gold.antecedent_id)
    return ids


def evaluate(
    predictions: Iterable[Prediction],
    corpora: Mapping[str, Discourse],
) -> EvalReport:
    """Score predictions; every predicted anaphor must carry gold annotation."""
    counts = {
        VERBAL_CLASS: ClassCounts(0, 0, 0),
        NONVERBAL_CLASS: ClassCounts(0, 0, 0),
    }
    for prediction in predictions:
        discourse = corpora.get(prediction.doc_id)
        if discourse is None:
            raise ValueError(f"predictions name unknown document {prediction.doc_id!r}")
        if not discourse.has_phrase(prediction.anaphor_id):
            raise ValueError(
                f"document {prediction.doc_id!r} has no phrase {prediction.anaphor_id}")
        phrase = discourse.phrase(prediction.anaphor_id)
        if not phrase.gold_antecedents:
            raise ValueError(
                f"no gold record for anaphor {prediction.doc_id}:{prediction.anaphor_id}")
        gold_ids = _gold_ids(discourse, prediction)
        gold = bool(gold_ids)
        system = prediction.winner is not None
        correct = system and prediction.winner in gold_ids
        key = VERBAL_CLASS if prediction.slot is not None else NONVERBAL_CLASS
        counts[key] = counts[key].add(correct, gold, system)
    total = ClassCounts(
        counts[VERBAL_CLASS].correct + counts[NONVERBAL_CLASS].correct,
        counts[VERBAL_CLASS].gold_positive + counts[NONVERBAL_CLASS].gold_positive,
        counts[VERBAL_CLASS].system_positive + counts[NONVERBAL_CLASS].system_positive,
    )
    return EvalReport(
        correct=total.correct,
        gold_positive=total.gold_positive,
        system_positive=total.system_positive,
        by_class=counts,
    )
