"""Indirect (bridging) anaphora resolution for annotated Japanese text.

The pipeline: parse a dependency-annotated corpus, load the lexical
resources (thesaurus, verb case frames, "X no Y" examples, noun
attributes), detect anaphora targets, score antecedent candidates from
discourse salience and lexical similarity, and pick the best per target.
A companion tool arranges "X no Y" examples into draft noun case frames.
"""
from .config import ConfigError, ResolverConfig, load_config
from .corpus import (
    CorpusFormatError,
    CorpusStructureError,
    Discourse,
    GoldAntecedent,
    Phrase,
    Sentence,
    parse_corpus,
    parse_discourse,
    serialize_corpus,
    serialize_discourse,
    validate_discourse,
)
from .dictbuild import ArrangedFrame, arrange, build_dictionary, merge_similar
from .evaluate import (
    EvalReport,
    Prediction,
    evaluate,
    parse_predictions,
    percent,
    predictions_from_results,
    serialize_predictions,
)
from .explain import parse_total_row, render_score_table
from .lexicons import (
    CaseFrameDict,
    CaseSlot,
    LexiconFormatError,
    LexiconSet,
    NounAttributes,
    Thesaurus,
    VerbCaseFrame,
    XnoYStore,
    load_lexicons,
    lookup_case_frame,
    satisfies_constraint,
    similarity_level,
    similarity_score,
    xnoy_modifier_set,
)
from .resolver import (
    NOMINAL,
    PSEUDO_GENERIC,
    PSEUDO_INDEFINITE,
    RELATIONAL,
    SKIP,
    VERBAL,
    Proposal,
    ResolutionResult,
    ScoreBreakdown,
    Target,
    detect_targets,
    referential_property,
    resolve,
    resolve_discourse,
)
from .salience import (
    SalienceEntry,
    WeightRow,
    classify_salience,
    default_rows,
    distance,
    salience_list,
)

__version__ = "0.1.0"
