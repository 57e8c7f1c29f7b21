"""Lexical resources: thesaurus, verb case frames, genitive examples, noun attributes.

All four resources are plain UTF-8 files with ``%`` comment lines:

* thesaurus:      ``lemma<TAB>code`` where the code is a digit string and a
                  shared prefix means a shared category (longer = closer).
* case frames:    blocks of ``verb <lemma>`` followed by
                  ``slot case=<c> constraints=<codes,> examples=<lemmas,>``
                  lines, plus ``vn <noun> -> <verb>`` mappings for verbal nouns.
* genitive pairs: ``x<TAB>y`` per line, one line per observed "X no Y" example.
* noun attributes: ``lemma<TAB>flag[,flag...]`` with flags from
                  adjectival / numeral / temporal / non_anaphoric / relational.

Loaded lexicons are immutable and safe to share between workers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional

from .corpus import Phrase
from .salience import load_weight_rows

SURFACE_CASES = frozenset({"ga", "wo", "ni", "de", "kara", "he"})
ATTRIBUTE_FLAGS = frozenset(
    {"adjectival", "numeral", "temporal", "non_anaphoric", "relational"})
# X lemmas carrying any of these flags never count as genitive evidence.
EXCLUDED_X_FLAGS = frozenset({"adjectival", "numeral", "temporal"})


class LexiconFormatError(ValueError):
    """A lexicon file line does not match its format."""


def _data_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        yield lineno, line


@dataclass(frozen=True)
class Thesaurus:
    codes: Mapping[str, tuple[str, ...]]   # lemma -> one or more category codes
    max_depth: int

    def lookup(self, lemma: str) -> tuple[str, ...]:
        return self.codes.get(lemma, ())

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[str, str]]) -> "Thesaurus":
        codes: dict[str, tuple[str, ...]] = {}
        max_depth = 0
        for lemma, code in entries:
            if not code or not code.isdigit():
                raise LexiconFormatError(
                    f"thesaurus code for {lemma!r} must be a nonempty digit string")
            codes[lemma] = codes.get(lemma, ()) + (code,)
            max_depth = max(max_depth, len(code))
        return cls(codes=codes, max_depth=max_depth)


def load_thesaurus(path: Path | str) -> Thesaurus:
    entries = []
    for lineno, line in _data_lines(Path(path).read_text(encoding="utf-8")):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(
                f"{path}: line {lineno}: expected 'lemma<TAB>code'")
        entries.append((parts[0], parts[1]))
    return Thesaurus.from_entries(entries)


def _shared_prefix_len(a: str, b: str) -> int:
    n = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        n += 1
    return n


def similarity_level(a: str, b: str, thesaurus: Thesaurus) -> int:
    """Deepest shared category level between two lemmas; 0 when unrelated or unknown."""
    best = 0
    for code_a in thesaurus.lookup(a):
        for code_b in thesaurus.lookup(b):
            best = max(best, _shared_prefix_len(code_a, code_b))
    return best


def similarity_score(level: int, table: Mapping[int, int]) -> int:
    """Map a similarity level onto its configured score."""
    if level not in table:
        raise ValueError(
            f"similarity level {level} outside the configured table "
            f"(0..{max(table) if table else '?'})")
    return table[level]


@dataclass(frozen=True)
class CaseSlot:
    surface_case: str
    constraints: tuple[str, ...]     # thesaurus code prefixes
    example_nouns: tuple[str, ...]


@dataclass(frozen=True)
class VerbCaseFrame:
    verb_lemma: str
    slots: tuple[CaseSlot, ...]

    def slot(self, surface_case: str) -> Optional[CaseSlot]:
        for s in self.slots:
            if s.surface_case == surface_case:
                return s
        return None

    def surface_cases(self) -> tuple[str, ...]:
        return tuple(s.surface_case for s in self.slots)


@dataclass(frozen=True)
class CaseFrameDict:
    frames: Mapping[str, VerbCaseFrame]
    verbal_nouns: Mapping[str, str]     # verbal noun -> verb lemma


def lookup_case_frame(lemma: str, frames: CaseFrameDict) -> Optional[VerbCaseFrame]:
    """Frame for a verb lemma, or for a verbal noun via its verb mapping."""
    frame = frames.frames.get(lemma)
    if frame is not None:
        return frame
    verb = frames.verbal_nouns.get(lemma)
    if verb is not None:
        return frames.frames.get(verb)
    return None


def _parse_kv(token: str, key: str, path, lineno: int) -> str:
    prefix = key + "="
    if not token.startswith(prefix):
        raise LexiconFormatError(f"{path}: line {lineno}: expected '{key}=...', got {token!r}")
    return token[len(prefix):]


def load_case_frames(path: Path | str) -> CaseFrameDict:
    frames: dict[str, VerbCaseFrame] = {}
    verbal_nouns: dict[str, str] = {}
    current_verb: Optional[str] = None
    current_slots: list[CaseSlot] = []

    def close():
        nonlocal current_verb, current_slots
        if current_verb is not None:
            cases = [s.surface_case for s in current_slots]
            if len(cases) != len(set(cases)):
                raise LexiconFormatError(
                    f"{path}: duplicate surface case in frame {current_verb!r}")
            frames[current_verb] = VerbCaseFrame(current_verb, tuple(current_slots))
        current_verb, current_slots = None, []

    for lineno, line in _data_lines(Path(path).read_text(encoding="utf-8")):
        tokens = line.split()
        if tokens[0] == "verb":
            close()
            if len(tokens) != 2:
                raise LexiconFormatError(f"{path}: line {lineno}: expected 'verb <lemma>'")
            current_verb = tokens[1]
        elif tokens[0] == "slot":
            if current_verb is None:
                raise LexiconFormatError(f"{path}: line {lineno}: slot outside a verb block")
            if len(tokens) != 4:
                raise LexiconFormatError(
                    f"{path}: line {lineno}: expected "
                    "'slot case=<c> constraints=<codes,> examples=<lemmas,>'")
            case = _parse_kv(tokens[1], "case", path, lineno)
            if case not in SURFACE_CASES:
                raise LexiconFormatError(
                    f"{path}: line {lineno}: unknown surface case {case!r}")
            constraints = tuple(
                c for c in _parse_kv(tokens[2], "constraints", path, lineno).split(",")
                if c and c != "-")
            examples = tuple(
                e for e in _parse_kv(tokens[3], "examples", path, lineno).split(",")
                if e and e != "-")
            if not constraints and not examples:
                raise LexiconFormatError(
                    f"{path}: line {lineno}: slot needs constraints or examples")
            current_slots.append(CaseSlot(case, constraints, examples))
        elif tokens[0] == "vn":
            if len(tokens) != 4 or tokens[2] != "->":
                raise LexiconFormatError(
                    f"{path}: line {lineno}: expected 'vn <noun> -> <verb>'")
            verbal_nouns[tokens[1]] = tokens[3]
        else:
            raise LexiconFormatError(f"{path}: line {lineno}: unknown directive {tokens[0]!r}")
    close()
    return CaseFrameDict(frames=frames, verbal_nouns=verbal_nouns)


@dataclass(frozen=True)
class XnoYStore:
    pairs: tuple[tuple[str, str], ...]
    _by_y: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        by_y: dict[str, list[str]] = {}
        for x, y in self.pairs:
            by_y.setdefault(y, []).append(x)
        object.__setattr__(self, "_by_y", by_y)

    def modifiers_of(self, y: str) -> tuple[str, ...]:
        return tuple(self._by_y.get(y, ()))


def load_xnoy(path: Path | str) -> XnoYStore:
    pairs = []
    for lineno, line in _data_lines(Path(path).read_text(encoding="utf-8")):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(f"{path}: line {lineno}: expected 'x<TAB>y'")
        pairs.append((parts[0], parts[1]))
    return XnoYStore(pairs=tuple(pairs))


@dataclass(frozen=True)
class NounAttributes:
    flags: Mapping[str, frozenset[str]]

    def has(self, lemma: str, flag: str) -> bool:
        return flag in self.flags.get(lemma, frozenset())

    def has_any(self, lemma: str, flags: frozenset[str]) -> bool:
        return bool(self.flags.get(lemma, frozenset()) & flags)


def load_noun_attributes(path: Path | str) -> NounAttributes:
    flags: dict[str, frozenset[str]] = {}
    for lineno, line in _data_lines(Path(path).read_text(encoding="utf-8")):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(
                f"{path}: line {lineno}: expected 'lemma<TAB>flag[,flag...]'")
        lemma, raw_flags = parts
        entry = frozenset(f for f in raw_flags.split(",") if f)
        if not entry:
            raise LexiconFormatError(f"{path}: line {lineno}: empty flag list")
        unknown = entry - ATTRIBUTE_FLAGS
        if unknown:
            raise LexiconFormatError(
                f"{path}: line {lineno}: unknown flags {sorted(unknown)}")
        flags[lemma] = flags.get(lemma, frozenset()) | entry
    return NounAttributes(flags=flags)


def xnoy_modifier_set(y: str, store: XnoYStore, attrs: NounAttributes) -> set[str]:
    """X lemmas observed as "X no y", minus excluded modifiers.

    Returns the empty set when y itself cannot head a bridging reference
    (non_anaphoric flag), and drops every x flagged adjectival, numeral
    or temporal.
    """
    if attrs.has(y, "non_anaphoric"):
        return set()
    return {
        x for x in store.modifiers_of(y)
        if not attrs.has_any(x, EXCLUDED_X_FLAGS)
    }


def satisfies_constraint(
    candidate: Phrase,
    slot: CaseSlot,
    thesaurus: Thesaurus,
    table: Mapping[int, int],
    example_match_min_level: int = 4,
) -> tuple[bool, int]:
    """Check a candidate against one case slot and score its similarity.

    A candidate passes when one of its category codes falls under a slot
    constraint, when its lemma is close enough to a slot example noun, or
    when the lemma is literally listed as an example.  The returned score
    reflects the deepest category level that supported the decision; a
    failing candidate gets the no-match score.
    """
    codes = set(candidate.sem_codes) | set(thesaurus.lookup(candidate.lemma))
    best_level = 0
    satisfied = False
    for constraint in slot.constraints:
        if any(code.startswith(constraint) for code in codes):
            satisfied = True
            best_level = max(best_level, len(constraint))
    for example in slot.example_nouns:
        level = similarity_level(candidate.lemma, example, thesaurus)
        if candidate.lemma == example:
            # Literal example mention always passes, thesaurus entry or not.
            level = max(level, thesaurus.max_depth)
        if level >= example_match_min_level:
            satisfied = True
        best_level = max(best_level, level)
    if not satisfied:
        return False, similarity_score(0, table)
    return True, similarity_score(best_level, table)


@dataclass(frozen=True)
class LexiconSet:
    thesaurus: Thesaurus
    case_frames: CaseFrameDict
    xnoy: XnoYStore
    attrs: NounAttributes
    weight_rows: tuple = ()     # optional extra salience rows (see salience module)


def load_lexicons(directory: Path | str) -> LexiconSet:
    """Load the four resource files (plus optional weights.tsv) from a directory."""
    directory = Path(directory)
    required = {
        "thesaurus.tsv": load_thesaurus,
        "caseframes.txt": load_case_frames,
        "xnoy.tsv": load_xnoy,
        "nounattrs.tsv": load_noun_attributes,
    }
    loaded = {}
    for name, loader in required.items():
        path = directory / name
        if not path.exists():
            raise LexiconFormatError(f"missing lexicon file: {path}")
        loaded[name] = loader(path)
    weight_rows: tuple = ()
    weights_path = directory / "weights.tsv"
    if weights_path.exists():
        weight_rows = load_weight_rows(weights_path)
    return LexiconSet(
        thesaurus=loaded["thesaurus.tsv"],
        case_frames=loaded["caseframes.txt"],
        xnoy=loaded["xnoy.tsv"],
        attrs=loaded["nounattrs.tsv"],
        weight_rows=weight_rows,
    )
