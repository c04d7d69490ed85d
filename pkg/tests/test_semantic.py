from __future__ import annotations

import pytest

from finestyle.errors import Inapplicable
from finestyle.semantic import remove_adj_adv, remove_pp, remove_substatement
from finestyle.treebank import extract_sentence, parse_bracketed

CONTROLS = (
    "(S (NP (NP (DT the) (NNS controls)) (PP (IN on) (NP (NNS cooperatives))))"
    " (VP (VBD appeared) (ADJP (RB relatively) (JJ liberal))"
    " (SBAR (WHADVP (WRB when)) (S (VP (ADVP (RB first)) (VBN introduced))))))"
)
HOT_MEAT = (
    "(S (NP (DT the) (JJ hot) (NN meat)) (VP (VBZ is)"
    " (PP (IN on) (NP (DT the) (NN table)))))"
)


class TestAdjAdvRemoval:
    def test_reference_row_keeps_predicative(self):
        sent, deletions = remove_adj_adv(parse_bracketed(CONTROLS))
        assert sent.text == "the controls on cooperatives appeared liberal when introduced"
        assert sorted(d.node_label for d in deletions) == ["RB", "RB"]

    def test_attributive_adjective_deleted(self):
        sent, _ = remove_adj_adv(parse_bracketed(HOT_MEAT))
        assert sent.text == "the meat is on the table"

    def test_inapplicable(self):
        with pytest.raises(Inapplicable):
            remove_adj_adv(parse_bracketed("(S (NP (PRP he)) (VP (VBZ sleeps)))"))

    def test_negation_is_protected(self):
        tree = parse_bracketed(
            "(S (NP (PRP it)) (VP (VBZ does) (RB n't) (VP (VB work) (ADVP (RB well)))))"
        )
        sent, _ = remove_adj_adv(tree)
        assert sent.text == "it does n't work"

    def test_wh_adverb_not_deleted(self):
        sent, _ = remove_adj_adv(parse_bracketed(CONTROLS))
        assert "when" in sent.tokens


class TestPPRemoval:
    def test_reference_row(self):
        sent, deletions = remove_pp(parse_bracketed(CONTROLS))
        assert sent.text == "the controls appeared relatively liberal when first introduced"
        assert deletions[0].node_label == "PP"
        assert (deletions[0].span_start, deletions[0].span_end) == (2, 4)

    def test_trailing_pp(self):
        tree = parse_bracketed(
            "(S (NP (NNP lilly)) (VP (VBD declined) (NP (NN comment))"
            " (PP (IN in) (NP (NNP indianapolis)))))"
        )
        sent, _ = remove_pp(tree)
        assert sent.text == "lilly declined comment"

    def test_copular_predicate_protected(self):
        with pytest.raises(Inapplicable):
            remove_pp(parse_bracketed(HOT_MEAT))

    def test_nested_pp_removed_with_parent(self):
        tree = parse_bracketed(
            "(S (NP (PRP he)) (VP (VBD worked) (PP (IN in) (NP (NP (DT the) (NN office))"
            " (PP (IN of) (NP (DT the) (NN firm)))))))"
        )
        sent, deletions = remove_pp(tree)
        assert sent.text == "he worked"
        assert len(deletions) == 1  # one outermost span covers both PPs

    def test_inapplicable_without_pp(self):
        with pytest.raises(Inapplicable):
            remove_pp(parse_bracketed("(S (NP (PRP he)) (VP (VBZ sleeps)))"))


class TestSubstatementRemoval:
    def test_reference_row(self):
        sent, deletions = remove_substatement(parse_bracketed(CONTROLS))
        assert sent.text == "the controls on cooperatives appeared relatively liberal"
        assert deletions[0].node_label == "SBAR"

    def test_two_sbars_two_records(self):
        tree = parse_bracketed(
            "(S (SBAR (IN although) (S (NP (NNS rates)) (VP (VBD fell))))"
            " (NP (NNS prices)) (VP (VBD rose)"
            " (SBAR (IN because) (S (NP (NN demand)) (VP (VBD grew))))))"
        )
        sent, deletions = remove_substatement(tree)
        assert sent.text == "prices rose"
        assert len(deletions) == 2
        spans = [(d.span_start, d.span_end) for d in deletions]
        assert spans == [(0, 3), (5, 8)]

    def test_inapplicable_without_sbar(self, svo_tree):
        with pytest.raises(Inapplicable):
            remove_substatement(svo_tree)


def test_output_is_subsequence_and_spans_account_for_length():
    tree = parse_bracketed(CONTROLS)
    source = extract_sentence(tree)
    for op in (remove_adj_adv, remove_pp, remove_substatement):
        sent, deletions = op(tree)
        removed = sum(d.span_end - d.span_start for d in deletions)
        assert removed == len(source) - len(sent)
        it = iter(source.tokens)
        assert all(tok in it for tok in sent.tokens)  # subsequence check


def test_second_application_finds_nothing_new():
    tree = parse_bracketed(CONTROLS)
    from finestyle.semantic import remove_substatement_tree

    once, _ = remove_substatement_tree(tree)
    with pytest.raises(Inapplicable):
        remove_substatement_tree(once)
