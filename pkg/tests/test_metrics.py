from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from finestyle.metrics import (
    EmptyCorpusError,
    LengthMismatchError,
    bleu,
    rouge_l,
    score_report,
)
from finestyle.treebank import Sentence


def s(text: str) -> Sentence:
    return Sentence(tokens=tuple(text.split()))


class TestBleu:
    def test_identity_corpus_is_one(self):
        cands = [s("the cat sat"), s("a dog ran far")]
        for n in range(1, 5):
            assert bleu(cands, list(cands), max_n=n) == pytest.approx(1.0)

    def test_clipped_counts_example(self):
        # candidate "the the the" vs reference "the cat sat":
        # clipped unigram count 1 of 3, no brevity penalty.
        assert bleu([s("the the the")], [s("the cat sat")], max_n=1) == pytest.approx(1 / 3)

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpusError):
            bleu([], [])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            bleu([s("a")], [s("a"), s("b")])

    def test_zero_matches_scores_zero(self):
        assert bleu([s("x y")], [s("a b")], max_n=1) == 0.0

    def test_brevity_penalty_applied(self):
        # candidate shorter than reference: 2 matched of 2, BP = exp(1 - 4/2)
        import math

        score = bleu([s("the cat")], [s("the cat sat down")], max_n=1)
        assert score == pytest.approx(math.exp(1 - 4 / 2))

    def test_report_flags_zero_orders(self):
        report = score_report([s("a b")], [s("a x")])
        assert report.bleu[0] > 0
        assert report.zero_ngram_orders == (2, 3, 4)
        assert report.bleu[1] == 0.0


class TestRougeL:
    def test_identity_is_one(self):
        assert rouge_l([s("a b c")], [s("a b c")]) == pytest.approx(1.0)

    def test_disjoint_is_zero(self):
        assert rouge_l([s("a b")], [s("x y")]) == 0.0

    def test_lcs_example(self):
        # candidate "a b c d" vs reference "a c d": LCS=3, P=3/4, R=1,
        # F = (1+b^2)*R*P / (R + b^2*P) with b=1.2 -> 2.44*0.75/2.08
        expected = (1 + 1.44) * 1.0 * 0.75 / (1.0 + 1.44 * 0.75)
        assert rouge_l([s("a b c d")], [s("a c d")]) == pytest.approx(expected)
        assert rouge_l([s("a b c d")], [s("a c d")]) == pytest.approx(0.8798076923076923)

    def test_scores_bounded(self):
        rng = random.Random(7)
        vocab = "abcdef"
        for _ in range(50):
            cands = [
                Sentence(tokens=tuple(rng.choices(vocab, k=rng.randint(1, 6))))
                for _ in range(3)
            ]
            refs = [
                Sentence(tokens=tuple(rng.choices(vocab, k=rng.randint(1, 6))))
                for _ in range(3)
            ]
            assert 0.0 <= rouge_l(cands, refs) <= 1.0
            assert 0.0 <= bleu(cands, refs) <= 1.0


_sentences = st.lists(
    st.builds(
        lambda toks: Sentence(tokens=tuple(toks)),
        st.lists(st.sampled_from("abcde"), min_size=1, max_size=5),
    ),
    min_size=1,
    max_size=5,
)


@settings(max_examples=200)
@given(_sentences, st.randoms())
def test_pair_permutation_invariance(cands, rnd):
    refs = [Sentence(tokens=tuple(reversed(c.tokens))) for c in cands]
    paired = list(zip(cands, refs))
    shuffled = paired[:]
    rnd.shuffle(shuffled)
    cands2, refs2 = zip(*shuffled)
    assert bleu(list(cands2), list(refs2)) == pytest.approx(bleu(cands, refs))
    assert rouge_l(list(cands2), list(refs2)) == pytest.approx(rouge_l(cands, refs))


@given(_sentences)
def test_token_renaming_invariance(cands):
    refs = [Sentence(tokens=tuple(reversed(c.tokens))) for c in cands]
    mapping = {ch: f"tok{i}" for i, ch in enumerate("abcde")}

    def rename(sent: Sentence) -> Sentence:
        return Sentence(tokens=tuple(mapping[t] for t in sent.tokens))

    renamed_c = [rename(c) for c in cands]
    renamed_r = [rename(r) for r in refs]
    assert bleu(renamed_c, renamed_r) == pytest.approx(bleu(cands, refs))
    assert rouge_l(renamed_c, renamed_r) == pytest.approx(rouge_l(cands, refs))
