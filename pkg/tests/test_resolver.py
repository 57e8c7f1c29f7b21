import pytest

from bridgeref.corpus import Discourse, Sentence
from bridgeref.lexicons import (
    CaseFrameDict,
    CaseSlot,
    LexiconSet,
    NounAttributes,
    Thesaurus,
    VerbCaseFrame,
    XnoYStore,
)
from bridgeref.resolver import (
    NOMINAL,
    RELATIONAL,
    SKIP,
    VERBAL,
    Target,
    detect_targets,
    propose_no_antecedent,
    propose_prior_mentions,
    referential_property,
    resolve,
    resolve_discourse,
)
from randgen import make_phrase


def _doc(*sentences, doc_id="t"):
    return Discourse(doc_id=doc_id, sentences=tuple(
        Sentence(index=i, phrases=tuple(ps)) for i, ps in enumerate(sentences)))


def _lex(thesaurus=None, pairs=(), flags=None, frames=None, verbal_nouns=None):
    return LexiconSet(
        thesaurus=thesaurus or Thesaurus(codes={}, max_depth=5),
        case_frames=CaseFrameDict(frames=frames or {},
                                  verbal_nouns=verbal_nouns or {}),
        xnoy=XnoYStore(pairs=tuple(pairs)),
        attrs=NounAttributes(flags=flags or {}),
    )


# --- referential property ---------------------------------------------------

def test_annotated_properties_map_to_scores(corpora, config):
    rate = corpora["rate"]
    assert referential_property(rate.phrase(8), rate, config) == ("indefinite", -5)


def test_default_definiteness_scores(config):
    doc = _doc([make_phrase(1, lemma="ie", ref="definite"),
                make_phrase(2, lemma="neru", pos="verb")])
    assert referential_property(doc.phrase(1), doc, config) == ("definite", 0)
    doc2 = _doc([make_phrase(1, lemma="ie", ref="generic"),
                 make_phrase(2, lemma="neru", pos="verb")])
    assert referential_property(doc2.phrase(1), doc2, config) == ("generic", -5)


def test_auto_property_demonstrative(corpora, config):
    rate = corpora["rate"]
    # "kono dorudaka" is annotated auto; the kono prefix makes it definite
    assert referential_property(rate.phrase(1), rate, config)[0] == "definite"


def test_auto_property_prior_mention(corpora, config):
    house = corpora["house"]
    assert referential_property(house.phrase(10), house, config)[0] == "definite"


def test_auto_property_fresh_is_indefinite(corpora, config):
    roof = corpora["roof"]
    assert referential_property(roof.phrase(4), roof, config) == ("indefinite", -5)


# --- target detection --------------------------------------------------------

def test_detect_targets_official_rate(corpora, lexicons):
    targets = detect_targets(corpora["rate"], lexicons)
    modes = {t.phrase_id: t.mode for t in targets}
    assert modes == {1: SKIP, 2: SKIP, 4: SKIP, 5: SKIP, 7: SKIP, 8: NOMINAL}


def test_detect_targets_verbal_noun_per_slot(corpora, lexicons):
    targets = [t for t in detect_targets(corpora["analysis"], lexicons)
               if t.mode == VERBAL]
    assert targets == [Target(9, VERBAL, "ga"), Target(9, VERBAL, "wo")]


def test_detect_targets_relational(corpora, lexicons):
    targets = {t.phrase_id: t.mode for t in detect_targets(corpora["cars"], lexicons)}
    assert targets[5] == RELATIONAL


def test_non_anaphoric_noun_is_skipped(lexicons):
    doc = _doc([make_phrase(1, lemma="tsuru", particles=("ga",)),
                make_phrase(2, lemma="tobu", pos="verb")])
    targets = detect_targets(doc, lexicons)
    assert targets == [Target(1, SKIP, None)]


# --- individual rules ---------------------------------------------------------

def test_prior_mentions_rule(config):
    doc = _doc(
        [make_phrase(1, lemma="ie", particles=("no",)),
         make_phrase(2, lemma="aru", pos="verb")],
        [make_phrase(3, lemma="ie", particles=("ga",), ref="definite"),
         make_phrase(4, lemma="neru", pos="verb")],
    )
    proposals = propose_prior_mentions(doc.phrase(3), doc, config)
    assert [(p.candidate, p.points, p.rule) for p in proposals] == [(1, 30, "R1")]


def test_prior_mentions_need_a_match(config):
    doc = _doc([make_phrase(1, lemma="ie", ref="definite"),
                make_phrase(2, lemma="neru", pos="verb")])
    assert propose_prior_mentions(doc.phrase(1), doc, config) == []


def test_pseudo_candidates(config):
    assert [(p.candidate, p.points, p.rule)
            for p in propose_no_antecedent("indefinite", config)] == [
        ("INDEFINITE", 10, "R3")]
    assert [(p.candidate, p.points, p.rule)
            for p in propose_no_antecedent("generic", config)] == [
        ("GENERIC", 10, "R2")]
    assert propose_no_antecedent("definite", config) == []


# --- full resolution ----------------------------------------------------------

def test_official_rate_resolution(corpora, lexicons):
    rate = corpora["rate"]
    result = resolve(rate.phrase(8), None, rate, lexicons)
    assert result.all_scores == {
        "INDEFINITE": 10, 7: 25, 4: -23, 2: -24, 1: -17}
    assert result.winner == 7
    assert result.total == 25
    assert not result.direct


def test_official_rate_breakdowns(corpora, lexicons):
    rate = corpora["rate"]
    result = resolve(rate.phrase(8), None, rate, lexicons)
    detail = {p.candidate: p.breakdown for p in result.proposals
              if p.breakdown is not None}
    assert detail[7].base == 23 and detail[7].similarity == 7
    assert (detail[1].weight, detail[1].dist) == (20, 2)
    assert (detail[2].weight, detail[2].dist) == (14, 3)
    assert (detail[4].weight, detail[4].dist) == (14, 2)
    for breakdown in detail.values():
        assert breakdown.definiteness == -5


def test_verbal_noun_slots(corpora, lexicons):
    analysis = corpora["analysis"]
    ga = resolve(analysis.phrase(9), "ga", analysis, lexicons)
    assert ga.winner == 3                   # butsurigakusha
    assert ga.all_scores == {"INDEFINITE": 10, 3: 21}
    wo = resolve(analysis.phrase(9), "wo", analysis, lexicons)
    assert wo.winner == 5                   # tairyou-no deeta
    assert wo.all_scores == {"INDEFINITE": 10, 5: 18, 1: 8}


def test_relational_noun_through_verb_frame(corpora, lexicons):
    cars = corpora["cars"]
    result = resolve(cars.phrase(5), None, cars, lexicons)
    assert result.winner == 2               # takusan-no kuruma
    assert result.total == 15               # 15 - 2 - 5 + 7
    assert result.all_scores == {"INDEFINITE": 10, 2: 15}


def test_relational_noun_modifying_a_noun(corpora, lexicons):
    house = corpora["house"]
    result = resolve(house.phrase(9), None, house, lexicons)
    assert result.winner == 3               # ie in the first sentence
    assert result.total == 30
    assert result.all_scores == {3: 30}
    assert {p.rule for p in result.proposals} == {"R6"}


def test_resolution_with_no_candidates(corpora, lexicons):
    rain = corpora["rain"]
    result = resolve(rain.phrase(1), None, rain, lexicons)
    assert result.winner == "INDEFINITE"
    assert result.total == 10
    assert result.all_scores == {"INDEFINITE": 10}


def test_repeated_mention_wins_and_marks_direct():
    lex = _lex(pairs=[("yama", "ie")])
    doc = _doc(
        [make_phrase(1, lemma="ie", particles=("no",)),
         make_phrase(2, lemma="aru", pos="verb")],
        [make_phrase(3, lemma="ie", particles=("no",)),
         make_phrase(4, lemma="aru", pos="verb")],
        [make_phrase(5, lemma="ie", particles=("ga",), ref="definite"),
         make_phrase(6, lemma="neru", pos="verb")],
    )
    result = resolve(doc.phrase(5), None, doc, lex)
    # two equal repeated-mention proposals: recency breaks the tie
    assert result.all_scores == {1: 30, 3: 30}
    assert result.winner == 3
    assert result.direct


def test_real_candidate_beats_pseudo_on_ties():
    thesaurus = Thesaurus(codes={"tatemono": ("1541",), "kare": ("1540",)},
                          max_depth=5)
    lex = _lex(thesaurus=thesaurus, pairs=[("tatemono", "yane")])
    doc = _doc(
        [make_phrase(1, lemma="kare", subtype="pronoun", particles=("wo",)),
         make_phrase(2, lemma="miru", pos="verb")],
        [make_phrase(3, lemma="yane", particles=("ga",), ref="indefinite"),
         make_phrase(4, lemma="aru", pos="verb")],
    )
    result = resolve(doc.phrase(3), None, doc, lex)
    # kare: 16 - 1 - 5 + 0 = 10, exactly the pseudo candidate's points
    assert result.all_scores == {"INDEFINITE": 10, 1: 10}
    assert result.winner == 1


def test_verbal_noun_with_empty_pool_keeps_pseudo_only():
    frames = {"suru": VerbCaseFrame("suru", (CaseSlot("ga", ("11",), ()),))}
    lex = _lex(frames=frames, verbal_nouns={"benkyou": "suru"})
    doc = _doc([make_phrase(1, lemma="benkyou", subtype="verbal",
                            particles=("ga",), ref="indefinite"),
                make_phrase(2, lemma="hajimaru", pos="verb")])
    result = resolve(doc.phrase(1), "ga", doc, lex)
    assert result.all_scores == {"INDEFINITE": 10}
    assert result.winner == "INDEFINITE"


def test_relational_noun_without_prior_match_has_no_winner():
    lex = _lex(flags={"tonari": frozenset({"relational"})})
    doc = _doc([
        make_phrase(1, lemma="tonari", subtype="relational",
                    particles=("no",), head=2, ref="definite"),
        make_phrase(2, lemma="yama", particles=("ni",), head=3),
        make_phrase(3, lemma="aru", pos="verb"),
    ])
    result = resolve(doc.phrase(1), None, doc, lex)
    assert result.all_scores == {}
    assert result.winner is None
    assert result.total == 0


def test_relational_noun_without_verb_frame_keeps_pseudo():
    lex = _lex(flags={"ichibu": frozenset({"relational"})})
    doc = _doc([
        make_phrase(1, lemma="kuruma", particles=("ga",)),
        make_phrase(2, lemma="tomaru", pos="verb"),
    ], [
        make_phrase(3, lemma="ichibu", subtype="relational",
                    particles=("wa",), head=4, role="subject_main",
                    ref="indefinite"),
        make_phrase(4, lemma="ugoku", pos="verb"),
    ])
    result = resolve(doc.phrase(3), None, doc, lex)
    assert result.all_scores == {"INDEFINITE": 10}


def test_slot_resolution_ignores_repeated_event_mentions():
    # a repeated definite verbal noun is not offered as its own slot filler
    frames = {"kaiseki-suru": VerbCaseFrame(
        "kaiseki-suru", (CaseSlot("ga", ("11",), ()),))}
    lex = _lex(frames=frames, verbal_nouns={"kaiseki": "kaiseki-suru"})
    doc = _doc(
        [make_phrase(1, lemma="kaiseki", subtype="verbal", particles=("ga",)),
         make_phrase(2, lemma="hajimaru", pos="verb")],
        [make_phrase(3, lemma="kaiseki", subtype="verbal", particles=("ga",),
                     ref="definite"),
         make_phrase(4, lemma="tsuzuku", pos="verb")],
    )
    result = resolve(doc.phrase(3), "ga", doc, lex)
    assert result.all_scores == {}          # no repeat bonus, no pseudo
    assert result.winner is None


def test_resolve_rejects_non_targets(corpora, lexicons):
    rate = corpora["rate"]
    with pytest.raises(ValueError, match="not an anaphora target"):
        resolve(rate.phrase(2), None, rate, lexicons)


def test_resolve_rejects_unknown_slot(corpora, lexicons):
    analysis = corpora["analysis"]
    with pytest.raises(ValueError, match="no 'ni' slot"):
        resolve(analysis.phrase(9), "ni", analysis, lexicons)
    with pytest.raises(ValueError, match="does not take a case slot"):
        resolve(corpora["rate"].phrase(8), "ga", corpora["rate"], lexicons)


def test_resolve_discourse_covers_all_targets(corpora, lexicons):
    results = resolve_discourse(corpora["analysis"], lexicons)
    assert [(r.anaphor_id, r.slot) for r in results] == [(9, "ga"), (9, "wo")]


def test_ablation_switch_zeroes_similarity(corpora, lexicons, config):
    rate = corpora["rate"]
    result = resolve(rate.phrase(8), None, rate, lexicons,
                     config.without_semantics())
    assert result.all_scores == {"INDEFINITE": 10, 7: 18, 4: 7, 2: 6, 1: 13}
    assert result.winner == 7


def test_ablation_keeps_slot_filters(corpora, lexicons, config):
    # with similarity zeroed the constraint filter still applies, and the
    # object slot loses its edge over the no-antecedent reading
    analysis = corpora["analysis"]
    bare = config.without_semantics()
    ga = resolve(analysis.phrase(9), "ga", analysis, lexicons, bare)
    assert ga.all_scores == {"INDEFINITE": 10, 3: 14}    # 20 - 1 - 5 + 0
    assert ga.winner == 3
    wo = resolve(analysis.phrase(9), "wo", analysis, lexicons, bare)
    assert wo.all_scores == {"INDEFINITE": 10, 5: 8, 1: 8}
    assert wo.winner == "INDEFINITE"


def test_resolution_is_deterministic(corpora, lexicons):
    rate = corpora["rate"]
    first = resolve(rate.phrase(8), None, rate, lexicons)
    second = resolve(rate.phrase(8), None, rate, lexicons)
    assert first == second


def test_score_arithmetic_of_every_weighted_proposal(corpora, lexicons):
    for doc in corpora.values():
        for result in resolve_discourse(doc, lexicons):
            for proposal in result.proposals:
                b = proposal.breakdown
                if b is None:
                    continue
                if b.base is not None:
                    assert proposal.points == b.base + b.definiteness + b.similarity
                else:
                    assert proposal.points == (
                        b.weight - b.dist + b.definiteness + b.similarity)
