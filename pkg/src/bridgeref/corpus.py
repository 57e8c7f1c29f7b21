"""Reader, writer and validator for dependency-annotated discourse (ADC format).

An ADC file is UTF-8 and line oriented:

    #DOC <id>         starts a document
    #SENT <n>         starts sentence n (0-based, contiguous per document)
    % ...             comment, ignored
    <phrase record>   one phrase per line inside a sentence

A phrase record has 11 tab-separated fields:

    id  surface  lemma  pos  subtype  particles  head  clause_role  sem_codes  refprop  gold

``particles`` and ``sem_codes`` are comma-joined lists, ``-`` marks an absent
value.  Zero pronouns use surface ``*`` (stored as an empty surface).  A
trailing ``,`` or ``.`` on the surface is stripped into ``punct_after``.
``gold`` is ``-`` or a comma-joined list of ``rel=<label>:<id>``,
``rel=<label>:NONE`` and bare ``rel=NONE`` items.

Documents are immutable once parsed; any number of readers may share them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

PARTICLES = frozenset(
    "wa ga wo ni niwa mo da nara koso he de kara yori no".split())
NOUN_SUBTYPES = frozenset(
    "common verbal adjectival numeral temporal relational pronoun zero_pronoun".split())
CLAUSE_ROLES = frozenset({"subject_main", "subject_subordinate", "other"})
REF_PROPERTIES = frozenset({"definite", "indefinite", "generic", "auto"})
ZERO_PRONOUN_PARTICLES = frozenset({"ga", "wa", "wo", "ni", "kara"})

_PUNCT_MAP = {",": "comma", "、": "comma", ".": "period", "。": "period"}
_PUNCT_OUT = {"comma": ",", "period": "."}

NONE_MARKER = "NONE"


class CorpusFormatError(ValueError):
    """A line of the corpus file does not match the record format."""


class CorpusStructureError(ValueError):
    """Records are well formed but reference each other inconsistently."""


class GoldAntecedent(NamedTuple):
    """One annotated antecedent: ``antecedent_id`` is None for the NONE marker."""
    label: Optional[str]
    antecedent_id: Optional[int]


@dataclass(frozen=True)
class Phrase:
    id: int
    surface: str
    lemma: str
    pos: str
    noun_subtype: Optional[str]          # None for non-nominal phrases
    particles: tuple[str, ...]
    punct_after: Optional[str]           # "comma" | "period" | None
    head_id: Optional[int]               # None for the sentence root
    clause_role: str                     # "subject_main" | "subject_subordinate" | "other"
    sem_codes: tuple[str, ...]
    ref_property: str                    # "definite" | "indefinite" | "generic" | "auto"
    gold_antecedents: tuple[GoldAntecedent, ...]

    def is_zero_pronoun(self) -> bool:
        return self.noun_subtype == "zero_pronoun"

    def is_noun(self) -> bool:
        return self.pos == "noun"


@dataclass(frozen=True)
class Sentence:
    index: int
    phrases: tuple[Phrase, ...]

    def root(self) -> Optional[Phrase]:
        for p in self.phrases:
            if p.head_id is None:
                return p
        return None


@dataclass(frozen=True)
class Discourse:
    doc_id: str
    sentences: tuple[Sentence, ...]
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for sent in self.sentences:
            for p in sent.phrases:
                index[p.id] = (p, sent)
        object.__setattr__(self, "_by_id", index)

    def phrases(self) -> Iterator[Phrase]:
        for sent in self.sentences:
            yield from sent.phrases

    def phrase(self, phrase_id: int) -> Phrase:
        try:
            return self._by_id[phrase_id][0]
        except KeyError:
            raise KeyError(f"no phrase with id {phrase_id} in document {self.doc_id!r}")

    def sentence_of(self, phrase_id: int) -> Sentence:
        return self._by_id[phrase_id][1]

    def has_phrase(self, phrase_id: int) -> bool:
        return phrase_id in self._by_id

    def preceding(self, phrase_id: int) -> Iterator[Phrase]:
        """Phrases strictly before the given one, in document order."""
        for p in self.phrases():
            if p.id >= phrase_id:
                return
            yield p


def _split_list(value: str) -> tuple[str, ...]:
    if value in ("-", "", "none"):
        return ()
    return tuple(item for item in value.split(",") if item and item != "none")


def _parse_gold(value: str, lineno: int) -> tuple[GoldAntecedent, ...]:
    if value == "-":
        return ()
    gold = []
    for item in value.split(","):
        if not item.startswith("rel="):
            raise CorpusFormatError(
                f"line {lineno}: field 'gold': expected rel=... item, got {item!r}")
        body = item[4:]
        if body == NONE_MARKER:
            gold.append(GoldAntecedent(None, None))
            continue
        if ":" not in body:
            raise CorpusFormatError(
                f"line {lineno}: field 'gold': missing ':' in {item!r}")
        label, _, target = body.partition(":")
        if target == NONE_MARKER:
            gold.append(GoldAntecedent(label, None))
        else:
            try:
                gold.append(GoldAntecedent(label, int(target)))
            except ValueError:
                raise CorpusFormatError(
                    f"line {lineno}: field 'gold': bad antecedent id {target!r}") from None
    return tuple(gold)


def _parse_record(line: str, lineno: int) -> Phrase:
    fields = line.split("\t")
    if len(fields) != 11:
        raise CorpusFormatError(
            f"line {lineno}: expected 11 tab-separated fields, got {len(fields)}")
    (raw_id, surface, lemma, pos, subtype, particles, head,
     clause_role, sem_codes, refprop, gold) = fields

    try:
        phrase_id = int(raw_id)
    except ValueError:
        raise CorpusFormatError(f"line {lineno}: field 'id': not an integer: {raw_id!r}") from None

    punct_after = None
    if surface and surface[-1] in _PUNCT_MAP:
        punct_after = _PUNCT_MAP[surface[-1]]
        surface = surface[:-1]
    if surface == "*":
        surface = ""
    if lemma == "-":
        lemma = ""

    if pos == "-" or not pos:
        raise CorpusFormatError(f"line {lineno}: field 'pos': missing")

    noun_subtype: Optional[str] = None if subtype == "-" else subtype
    if noun_subtype is not None and noun_subtype not in NOUN_SUBTYPES:
        raise CorpusFormatError(
            f"line {lineno}: field 'subtype': unknown value {subtype!r}")
    if pos == "noun" and noun_subtype is None:
        raise CorpusFormatError(
            f"line {lineno}: field 'subtype': required for noun phrases")

    particle_list = _split_list(particles)
    for particle in particle_list:
        if particle not in PARTICLES:
            raise CorpusFormatError(
                f"line {lineno}: field 'particles': unknown particle {particle!r}")

    if noun_subtype == "zero_pronoun":
        if surface:
            raise CorpusFormatError(
                f"line {lineno}: field 'surface': zero pronoun must use surface '*'")
        if not particle_list or any(p not in ZERO_PRONOUN_PARTICLES for p in particle_list):
            raise CorpusFormatError(
                f"line {lineno}: field 'particles': zero pronoun needs a particle "
                f"from {sorted(ZERO_PRONOUN_PARTICLES)}")

    if head == "-":
        head_id = None
    else:
        try:
            head_id = int(head)
        except ValueError:
            raise CorpusFormatError(f"line {lineno}: field 'head': not an integer: {head!r}") from None

    role = "other" if clause_role == "-" else clause_role
    if role not in CLAUSE_ROLES:
        raise CorpusFormatError(
            f"line {lineno}: field 'clause_role': unknown value {clause_role!r}")

    ref = "auto" if refprop == "-" else refprop
    if ref not in REF_PROPERTIES:
        raise CorpusFormatError(
            f"line {lineno}: field 'refprop': unknown value {refprop!r}")

    return Phrase(
        id=phrase_id,
        surface=surface,
        lemma=lemma,
        pos=pos,
        noun_subtype=noun_subtype,
        particles=particle_list,
        punct_after=punct_after,
        head_id=head_id,
        clause_role=role,
        sem_codes=_split_list(sem_codes),
        ref_property=ref,
        gold_antecedents=_parse_gold(gold, lineno),
    )


def _finish_sentence(doc_id: str, index: int, phrases: list[Phrase]) -> Sentence:
    ids = {p.id for p in phrases}
    for p in phrases:
        if p.head_id is not None and p.head_id not in ids:
            raise CorpusStructureError(
                f"document {doc_id!r}: phrase {p.id} has dangling head {p.head_id} "
                f"(heads must stay within sentence {index})")
        if p.head_id == p.id:
            raise CorpusStructureError(
                f"document {doc_id!r}: phrase {p.id} is its own head")
    roots = [p for p in phrases if p.head_id is None]
    if phrases and len(roots) != 1:
        raise CorpusStructureError(
            f"document {doc_id!r}: sentence {index} has {len(roots)} head-less phrases, expected 1")
    return Sentence(index=index, phrases=tuple(phrases))


def _finish_document(doc_id: str, sentences: list[Sentence]) -> Discourse:
    seen: list[int] = []
    for sent in sentences:
        for p in sent.phrases:
            if seen and p.id <= seen[-1]:
                raise CorpusStructureError(
                    f"document {doc_id!r}: phrase ids must increase, "
                    f"{p.id} follows {seen[-1]}")
            seen.append(p.id)
    ids = set(seen)
    for sent in sentences:
        for p in sent.phrases:
            for gold in p.gold_antecedents:
                if gold.antecedent_id is None:
                    continue
                if gold.antecedent_id not in ids:
                    raise CorpusStructureError(
                        f"document {doc_id!r}: phrase {p.id} gold antecedent "
                        f"{gold.antecedent_id} does not exist")
                if gold.antecedent_id >= p.id:
                    raise CorpusStructureError(
                        f"document {doc_id!r}: phrase {p.id} gold antecedent "
                        f"{gold.antecedent_id} does not precede it")
    return Discourse(doc_id=doc_id, sentences=tuple(sentences))


def parse_corpus(text: str) -> list[Discourse]:
    """Parse ADC text into a list of documents."""
    documents: list[Discourse] = []
    doc_id: Optional[str] = None
    sentences: list[Sentence] = []
    current: Optional[list[Phrase]] = None
    current_index = -1

    def close_sentence():
        nonlocal current
        if current is not None:
            sentences.append(_finish_sentence(doc_id, current_index, current))
            current = None

    def close_document():
        nonlocal sentences
        if doc_id is not None:
            close_sentence()
            documents.append(_finish_document(doc_id, sentences))
            sentences = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("%"):
            continue
        if line.startswith("#DOC"):
            close_document()
            parts = line.split(None, 1)
            if len(parts) != 2 or not parts[1].strip():
                raise CorpusFormatError(f"line {lineno}: #DOC needs a document id")
            doc_id = parts[1].strip()
            continue
        if line.startswith("#SENT"):
            if doc_id is None:
                raise CorpusFormatError(f"line {lineno}: #SENT before any #DOC")
            close_sentence()
            parts = line.split()
            if len(parts) != 2:
                raise CorpusFormatError(f"line {lineno}: #SENT needs an index")
            try:
                current_index = int(parts[1])
            except ValueError:
                raise CorpusFormatError(
                    f"line {lineno}: #SENT index not an integer: {parts[1]!r}") from None
            if current_index != len(sentences):
                raise CorpusFormatError(
                    f"line {lineno}: #SENT {current_index} out of order, "
                    f"expected {len(sentences)}")
            current = []
            continue
        if doc_id is None or current is None:
            raise CorpusFormatError(
                f"line {lineno}: phrase record outside of a #DOC/#SENT block")
        current.append(_parse_record(line, lineno))

    close_document()
    return documents


def parse_discourse(text: str) -> Discourse:
    """Parse ADC text that contains exactly one document."""
    documents = parse_corpus(text)
    if len(documents) != 1:
        raise CorpusFormatError(
            f"expected exactly one document, found {len(documents)}")
    return documents[0]


def _format_gold(gold: tuple[GoldAntecedent, ...]) -> str:
    if not gold:
        return "-"
    items = []
    for label, antecedent in gold:
        if label is None and antecedent is None:
            items.append("rel=NONE")
        elif antecedent is None:
            items.append(f"rel={label}:{NONE_MARKER}")
        else:
            items.append(f"rel={label}:{antecedent}")
    return ",".join(items)


def _format_record(p: Phrase) -> str:
    surface = p.surface if p.surface else ("*" if p.is_zero_pronoun() else p.surface)
    if p.punct_after:
        surface += _PUNCT_OUT[p.punct_after]
    return "\t".join([
        str(p.id),
        surface,
        p.lemma or "-",
        p.pos,
        p.noun_subtype or "-",
        ",".join(p.particles) or "-",
        "-" if p.head_id is None else str(p.head_id),
        p.clause_role if p.clause_role != "other" else "-",
        ",".join(p.sem_codes) or "-",
        p.ref_property if p.ref_property != "auto" else "-",
        _format_gold(p.gold_antecedents),
    ])


def serialize_discourse(d: Discourse) -> str:
    lines = [f"#DOC {d.doc_id}"]
    for sent in d.sentences:
        lines.append(f"#SENT {sent.index}")
        lines.extend(_format_record(p) for p in sent.phrases)
    return "\n".join(lines) + "\n"


def serialize_corpus(documents: list[Discourse]) -> str:
    return "".join(serialize_discourse(d) for d in documents)


def validate_discourse(d: Discourse) -> list[str]:
    """Return a list of invariant violations; empty when the document is sound."""
    violations: list[str] = []
    for expected, sent in enumerate(d.sentences):
        if sent.index != expected:
            violations.append(
                f"sentence {sent.index}: indices must be contiguous from 0 "
                f"(expected {expected})")

    previous_id: Optional[int] = None
    all_ids = {p.id for p in d.phrases()}
    if len(all_ids) != sum(len(s.phrases) for s in d.sentences):
        violations.append("phrase ids are not unique")
    for p in d.phrases():
        if previous_id is not None and p.id <= previous_id:
            violations.append(
                f"phrase {p.id}: ids must strictly increase in document order")
        previous_id = p.id

    for sent in d.sentences:
        sent_ids = {p.id for p in sent.phrases}
        roots = [p for p in sent.phrases if p.head_id is None]
        if sent.phrases and len(roots) > 1:
            violations.append(
                f"sentence {sent.index}: more than one head-less phrase")
        for p in sent.phrases:
            if p.head_id is not None and p.head_id not in sent_ids:
                violations.append(
                    f"phrase {p.id}: head {p.head_id} not in sentence {sent.index}")
            if p.head_id == p.id:
                violations.append(f"phrase {p.id}: is its own head")
            if p.pos == "noun" and p.noun_subtype not in NOUN_SUBTYPES:
                violations.append(f"phrase {p.id}: noun without a valid subtype")
            if p.is_zero_pronoun():
                if p.surface:
                    violations.append(
                        f"phrase {p.id}: zero pronoun must have empty surface")
                if not p.particles or any(
                        x not in ZERO_PRONOUN_PARTICLES for x in p.particles):
                    violations.append(
                        f"phrase {p.id}: zero pronoun needs a particle from "
                        f"{sorted(ZERO_PRONOUN_PARTICLES)}")
            for particle in p.particles:
                if particle not in PARTICLES:
                    violations.append(f"phrase {p.id}: unknown particle {particle!r}")
            if p.clause_role not in CLAUSE_ROLES:
                violations.append(f"phrase {p.id}: unknown clause role {p.clause_role!r}")
            if p.ref_property not in REF_PROPERTIES:
                violations.append(
                    f"phrase {p.id}: unknown referential property {p.ref_property!r}")
            for gold in p.gold_antecedents:
                if gold.antecedent_id is None:
                    continue
                if gold.antecedent_id not in all_ids:
                    violations.append(
                        f"phrase {p.id}: gold antecedent {gold.antecedent_id} does not exist")
                elif gold.antecedent_id >= p.id:
                    violations.append(
                        f"phrase {p.id}: gold antecedent {gold.antecedent_id} "
                        f"does not precede the phrase")
    return violations
