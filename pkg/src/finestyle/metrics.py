"""Reference-based scoring: corpus BLEU (orders 1..4, unsmoothed) and
ROUGE-L (LCS F-measure, recall-weighted).

One reference per candidate.  No smoothing: a zero n-gram count at any
order makes the corpus BLEU 0, and the score report records which
orders were starved.
"""

from __future__ import annotations

import collections
import math
from dataclasses import dataclass
from typing import Sequence

from .treebank import Sentence

# Recall is weighted heavily in the LCS F-measure, per the usual
# summarization-evaluation convention.
ROUGE_BETA = 1.2


class MetricsError(Exception):
    pass


class LengthMismatchError(MetricsError):
    pass


class EmptyCorpusError(MetricsError):
    pass


def _check(candidates: Sequence[Sentence], references: Sequence[Sentence]) -> None:
    if len(candidates) != len(references):
        raise LengthMismatchError(
            f"{len(candidates)} candidates vs {len(references)} references"
        )
    if not candidates:
        raise EmptyCorpusError("no sentence pairs to score")


def _ngrams(tokens: tuple[str, ...], n: int) -> collections.Counter:
    return collections.Counter(
        tokens[i : i + n] for i in range(len(tokens) - n + 1)
    )


def _bleu_stats(
    candidates: Sequence[Sentence], references: Sequence[Sentence], max_n: int
) -> tuple[list[int], list[int], int, int]:
    matched = [0] * max_n
    total = [0] * max_n
    cand_len = ref_len = 0
    for cand, ref in zip(candidates, references):
        cand_len += len(cand)
        ref_len += len(ref)
        for order in range(1, max_n + 1):
            cand_counts = _ngrams(cand.tokens, order)
            ref_counts = _ngrams(ref.tokens, order)
            matched[order - 1] += sum(
                min(count, ref_counts[gram]) for gram, count in cand_counts.items()
            )
            total[order - 1] += sum(cand_counts.values())
    return matched, total, cand_len, ref_len


def bleu(
    candidates: Sequence[Sentence], references: Sequence[Sentence], max_n: int = 4
) -> float:
    """Corpus-level BLEU with clipped counts, uniform weights over
    orders 1..max_n, and the brevity penalty exp(1 - r/c) when c < r."""
    if not 1 <= max_n <= 4:
        raise ValueError("max_n must be in 1..4")
    _check(candidates, references)
    matched, total, cand_len, ref_len = _bleu_stats(candidates, references, max_n)
    log_sum = 0.0
    for order in range(max_n):
        if matched[order] == 0 or total[order] == 0:
            return 0.0
        log_sum += math.log(matched[order] / total[order]) / max_n
    brevity = 1.0 if cand_len >= ref_len else math.exp(1.0 - ref_len / cand_len)
    return brevity * math.exp(log_sum)


def _lcs_length(a: tuple[str, ...], b: tuple[str, ...]) -> int:
    if not a or not b:
        return 0
    previous = [0] * (len(b) + 1)
    for x in a:
        current = [0]
        for j, y in enumerate(b, 1):
            if x == y:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(previous[j], current[j - 1]))
        previous = current
    return previous[len(b)]


def rouge_l(candidates: Sequence[Sentence], references: Sequence[Sentence]) -> float:
    """Mean per-pair LCS F-measure with beta=ROUGE_BETA."""
    _check(candidates, references)
    total = 0.0
    beta_sq = ROUGE_BETA**2
    for cand, ref in zip(candidates, references):
        lcs = _lcs_length(cand.tokens, ref.tokens)
        if lcs == 0:
            continue
        precision = lcs / len(cand)
        recall = lcs / len(ref)
        total += ((1 + beta_sq) * recall * precision) / (recall + beta_sq * precision)
    return total / len(candidates)


@dataclass(frozen=True)
class ScoreReport:
    bleu: tuple[float, float, float, float]
    rouge_l: float
    n_candidates: int
    zero_ngram_orders: tuple[int, ...]  # orders with no matches at all

    def to_json(self) -> dict:
        return {
            "bleu-1": self.bleu[0],
            "bleu-2": self.bleu[1],
            "bleu-3": self.bleu[2],
            "bleu-4": self.bleu[3],
            "rouge-l": self.rouge_l,
            "n_candidates": self.n_candidates,
            "zero_ngram_orders": list(self.zero_ngram_orders),
        }


def score_report(
    candidates: Sequence[Sentence], references: Sequence[Sentence]
) -> ScoreReport:
    _check(candidates, references)
    matched, _, _, _ = _bleu_stats(candidates, references, 4)
    zero_orders = tuple(i + 1 for i, m in enumerate(matched) if m == 0)
    scores = tuple(bleu(candidates, references, max_n=n) for n in range(1, 5))
    return ScoreReport(
        bleu=scores,  # type: ignore[arg-type]
        rouge_l=rouge_l(candidates, references),
        n_candidates=len(candidates),
        zero_ngram_orders=zero_orders,
    )
