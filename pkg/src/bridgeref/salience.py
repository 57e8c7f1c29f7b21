"""Topic/focus classification and the discourse salience list.

A noun phrase becomes a salience entry when its particles (or trailing
punctuation) match one of the weight rows below.  Topic rows are tried
first, then focus rows; the first matching row wins, and focus rows never
apply to a phrase marked with ``wa``.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .corpus import Discourse, Phrase

TOPIC = "topic"
FOCUS = "focus"

# Word classes used by the rows: pronouns and zero pronouns pattern together.
PRONOUN_LIKE = frozenset({"pronoun", "zero_pronoun"})


@dataclass(frozen=True)
class WeightRow:
    kind: str                      # "topic" | "focus"
    word_class: str                # "pronoun" | "noun"
    particles: frozenset[str]
    match_punct: bool              # row also matches bare noun + comma/period
    weight: int


def _word_class(phrase: Phrase) -> str:
    return "pronoun" if phrase.noun_subtype in PRONOUN_LIKE else "noun"


DEFAULT_TOPIC_ROWS: tuple[WeightRow, ...] = (
    # pronoun/zero-pronoun + ga/wa
    WeightRow(TOPIC, "pronoun", frozenset({"ga", "wa"}), False, 21),
    # noun + wa/niwa
    WeightRow(TOPIC, "noun", frozenset({"wa", "niwa"}), False, 20),
)

DEFAULT_FOCUS_ROWS: tuple[WeightRow, ...] = (
    # pronoun/zero-pronoun + wo/ni/kara
    WeightRow(FOCUS, "pronoun", frozenset({"wo", "ni", "kara"}), False, 16),
    # noun + ga/mo/da/nara/koso
    WeightRow(FOCUS, "noun", frozenset({"ga", "mo", "da", "nara", "koso"}), False, 15),
    # noun + wo/ni, or a bare noun directly before a comma/period
    WeightRow(FOCUS, "noun", frozenset({"wo", "ni"}), True, 14),
    # noun + he/de/kara/yori
    WeightRow(FOCUS, "noun", frozenset({"he", "de", "kara", "yori"}), False, 13),
)


def default_rows() -> tuple[WeightRow, ...]:
    return DEFAULT_TOPIC_ROWS + DEFAULT_FOCUS_ROWS


@dataclass(frozen=True)
class SalienceEntry:
    phrase_id: int
    kind: str            # "topic" | "focus"
    weight: int
    seq: int             # position among salience entries, document order


def _row_matches(row: WeightRow, phrase: Phrase, particles: set[str]) -> bool:
    if _word_class(phrase) != row.word_class:
        return False
    if particles & row.particles:
        return True
    if row.match_punct and not particles and phrase.punct_after in ("comma", "period"):
        return True
    return False


def classify_salience(
    phrase: Phrase,
    rows: Optional[Iterable[WeightRow]] = None,
) -> Optional[tuple[str, int]]:
    """Classify one phrase as (kind, weight), or None when no row matches."""
    if not phrase.is_noun():
        return None
    particles = set(phrase.particles)
    all_rows = tuple(rows) if rows is not None else default_rows()
    for row in all_rows:
        if row.kind == FOCUS and "wa" in particles:
            continue  # focus rows exclude wa-marked phrases
        if _row_matches(row, phrase, particles):
            return row.kind, row.weight
    return None


def salience_list(
    d: Discourse,
    anaphor: Phrase,
    rows: Optional[Iterable[WeightRow]] = None,
) -> list[SalienceEntry]:
    """All classified phrases strictly preceding the anaphor, in document order."""
    if not d.has_phrase(anaphor.id) or d.phrase(anaphor.id) != anaphor:
        raise ValueError(f"anaphor {anaphor.id} is not part of document {d.doc_id!r}")
    entries: list[SalienceEntry] = []
    all_rows = tuple(rows) if rows is not None else default_rows()
    for phrase in d.preceding(anaphor.id):
        classified = classify_salience(phrase, all_rows)
        if classified is not None:
            kind, weight = classified
            entries.append(SalienceEntry(phrase.id, kind, weight, seq=len(entries)))
    return entries


def distance(entry: SalienceEntry, anaphor: Phrase, entries: list[SalienceEntry]) -> int:
    """Backward rank of an entry among same-kind entries before the anaphor.

    The most recent same-kind entry has distance 1; every further same-kind
    entry between it and the anaphor adds 1.
    """
    if entry not in entries:
        raise ValueError(f"salience entry for phrase {entry.phrase_id} not in list")
    later_same_kind = sum(
        1 for e in entries
        if e.kind == entry.kind and e.seq > entry.seq and e.phrase_id < anaphor.id)
    return 1 + later_same_kind


def parse_weight_row(kind: str, pattern: str, weight: int) -> WeightRow:
    """Build a row from its compact pattern ``<class>:<particles,>[:punct]``."""
    if kind not in (TOPIC, FOCUS):
        raise ValueError(f"weight row kind must be topic or focus, got {kind!r}")
    parts = pattern.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"bad weight row pattern {pattern!r}")
    word_class = parts[0]
    if word_class not in ("noun", "pronoun"):
        raise ValueError(f"weight row class must be noun or pronoun, got {word_class!r}")
    particles = frozenset(p for p in parts[1].split(",") if p)
    match_punct = len(parts) == 3 and parts[2] == "punct"
    if len(parts) == 3 and parts[2] != "punct":
        raise ValueError(f"bad weight row suffix {parts[2]!r} (only 'punct' allowed)")
    if not particles and not match_punct:
        raise ValueError(f"weight row {pattern!r} matches nothing")
    return WeightRow(kind, word_class, particles, match_punct, weight)


def load_weight_rows(path: Path | str) -> tuple[WeightRow, ...]:
    """Read extra rows from a ``kind<TAB>pattern<TAB>weight`` file.

    Extra rows are appended after the default tables, so they only fire for
    phrases the default rows leave unclassified.
    """
    rows = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}: line {lineno}: expected 'kind<TAB>pattern<TAB>weight'")
        try:
            weight = int(parts[2])
        except ValueError:
            raise ValueError(f"{path}: line {lineno}: weight must be an integer") from None
        rows.append(parse_weight_row(parts[0], parts[1], weight))
    return tuple(rows)
