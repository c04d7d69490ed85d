from __future__ import annotations

import pytest

from finestyle.morphology import (
    IRREGULAR_VERBS,
    NoHeadNounError,
    Number,
    UnknownPOSError,
    VerbForm,
    form_of_tag,
    inflect_verb,
    lemmatize,
    np_number,
    pluralize_noun,
)
from finestyle.treebank import parse_bracketed


def test_lemmatize_past_verb():
    assert lemmatize("urged", "VBD") == "urge"


def test_lemmatize_base_identity():
    assert lemmatize("go", "VB") == "go"


def test_lemmatize_irregular_be():
    assert lemmatize("was", "VBD") == "be"
    assert lemmatize("were", "VBD") == "be"
    assert lemmatize("is", "VBZ") == "be"


def test_lemmatize_unknown_pos():
    with pytest.raises(UnknownPOSError):
        lemmatize("the", "DT")


@pytest.mark.parametrize(
    "word,tag,lemma",
    [
        ("urges", "VBZ", "urge"),
        ("notes", "VBZ", "note"),
        ("noted", "VBD", "note"),
        ("wanted", "VBD", "want"),
        ("walked", "VBD", "walk"),
        ("planned", "VBD", "plan"),
        ("planning", "VBG", "plan"),
        ("urging", "VBG", "urge"),
        ("tried", "VBD", "try"),
        ("passed", "VBD", "pass"),
        ("used", "VBD", "use"),
        ("added", "VBD", "add"),
        ("watches", "VBZ", "watch"),
        ("expected", "VBN", "expect"),
        ("says", "VBZ", "say"),
        ("has", "VBZ", "have"),
    ],
)
def test_lemmatize_verbs(word, tag, lemma):
    assert lemmatize(word, tag) == lemma


@pytest.mark.parametrize(
    "word,tag,lemma",
    [
        ("estimates", "NNS", "estimate"),
        ("skins", "NNS", "skin"),
        ("bans", "NNS", "ban"),
        ("classes", "NNS", "class"),
        ("flies", "NNS", "fly"),
        ("men", "NNS", "man"),
        ("series", "NNS", "series"),
        ("dollar", "NN", "dollar"),
    ],
)
def test_lemmatize_nouns(word, tag, lemma):
    assert lemmatize(word, tag) == lemma


def test_lemmatize_idempotent():
    for word, tag in [("urged", "VBD"), ("estimates", "NNS"), ("similar", "JJ")]:
        lemma = lemmatize(word, tag)
        base_tag = {"VBD": "VB", "NNS": "NN", "JJ": "JJ"}[tag]
        assert lemmatize(lemma, base_tag) == lemma


def test_inflect_present_3sg():
    assert inflect_verb("urge", VerbForm.PRESENT_3SG) == "urges"


def test_inflect_irregular_past():
    assert inflect_verb("be", VerbForm.PAST) == "was"
    assert inflect_verb("be", VerbForm.PAST, number=Number.PLURAL) == "were"


def test_inflect_gerund_doubling():
    assert inflect_verb("plan", VerbForm.GERUND) == "planning"


@pytest.mark.parametrize(
    "lemma,form,expected",
    [
        ("go", VerbForm.PRESENT_3SG, "goes"),
        ("try", VerbForm.PAST, "tried"),
        ("urge", VerbForm.PAST, "urged"),
        ("be", VerbForm.GERUND, "being"),
        ("see", VerbForm.GERUND, "seeing"),
        ("die", VerbForm.GERUND, "dying"),
        ("anticipate", VerbForm.PAST_PARTICIPLE, "anticipated"),
        ("have", VerbForm.PRESENT_3SG, "has"),
        ("watch", VerbForm.PRESENT_3SG, "watches"),
        ("play", VerbForm.PAST, "played"),
    ],
)
def test_inflect_rules(lemma, form, expected):
    assert inflect_verb(lemma, form) == expected


def test_inflect_never_returns_empty_or_spaced():
    for lemma in ("go", "be", "plan", "x"):
        for form in VerbForm:
            word = inflect_verb(lemma, form)
            assert word and " " not in word


def test_table_round_trip():
    # Every shipped irregular verb survives lemmatize-then-inflect.
    for lemma, (past, pp, third) in IRREGULAR_VERBS.entries.items():
        assert inflect_verb(lemmatize(past, "VBD"), VerbForm.PAST) in {past, "was", "were"}
        assert inflect_verb(lemmatize(pp, "VBN"), VerbForm.PAST_PARTICIPLE) == pp
        assert inflect_verb(lemmatize(third, "VBZ"), VerbForm.PRESENT_3SG) == third


def test_table_has_at_least_150_verbs():
    assert len(IRREGULAR_VERBS.entries) >= 150


def test_pluralize_noun():
    assert pluralize_noun("estimate") == "estimates"
    assert pluralize_noun("class") == "classes"
    assert pluralize_noun("fly") == "flies"
    assert pluralize_noun("series") == "series"


def test_np_number_plural_head():
    np = parse_bracketed("(NP (JJS most) (NNS bills))")
    assert np_number(np) == Number.PLURAL


def test_np_number_singular_head():
    np = parse_bracketed("(NP (DT the) (NN dollar))")
    assert np_number(np) == Number.SINGULAR


def test_np_number_no_head():
    with pytest.raises(NoHeadNounError):
        np_number(parse_bracketed("(NP (DT the))"))


def test_np_number_conjoined_is_plural():
    np = parse_bracketed("(NP (NP (DT the) (NN cat)) (CC and) (NP (DT the) (NN dog)))")
    assert np_number(np) == Number.PLURAL


def test_np_number_nested_np():
    np = parse_bracketed("(NP (NP (DT the) (NN head)) (PP (IN of) (NP (DT the) (NNS firms))))")
    assert np_number(np) == Number.SINGULAR


def test_form_of_tag_rejects_non_verbs():
    with pytest.raises(UnknownPOSError):
        form_of_tag("NN")
