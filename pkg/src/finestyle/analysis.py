"""Difficulty measurement and corpus statistics.

Transfer difficulty is the mean token-level Hamming distance between
source and target, extended to unequal lengths by counting the length
difference as mismatches; means are tiered into easy/medium/hard.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass
from typing import Iterable, Sequence

from .treebank import ParseTree, Sentence

# Tier boundaries chosen between the observed easy/medium/hard clusters.
EASY_BELOW = 3.5
MEDIUM_UP_TO = 7.0


class EmptyGroupError(Exception):
    pass


def hamming(a: Sentence, b: Sentence) -> int:
    """Positional token mismatches plus the length difference."""
    mismatches = sum(1 for x, y in zip(a.tokens, b.tokens) if x != y)
    return mismatches + abs(len(a) - len(b))


def tier_of(mean_hamming: float) -> str:
    if mean_hamming < EASY_BELOW:
        return "easy"
    if mean_hamming <= MEDIUM_UP_TO:
        return "medium"
    return "hard"


@dataclass(frozen=True)
class DifficultyReport:
    transfer: str
    mean_hamming: float
    tier: str
    n_pairs: int

    def to_json(self) -> dict:
        return {
            "transfer": self.transfer,
            "mean_hamming": self.mean_hamming,
            "tier": self.tier,
            "n_pairs": self.n_pairs,
        }


def difficulty_report(
    transfer: str, pairs: Sequence[tuple[Sentence, Sentence]]
) -> DifficultyReport:
    if not pairs:
        raise EmptyGroupError(f"no pairs for transfer {transfer!r}")
    total = sum(hamming(src, tgt) for src, tgt in pairs)
    mean = total / len(pairs)
    return DifficultyReport(
        transfer=transfer, mean_hamming=mean, tier=tier_of(mean), n_pairs=len(pairs)
    )


@dataclass(frozen=True)
class CorpusStats:
    length_histogram: dict[int, int]
    pos_counts: dict[str, int]
    top_tokens: tuple[tuple[str, int], ...]
    n_sentences: int

    def to_json(self) -> dict:
        return {
            "n_sentences": self.n_sentences,
            "length_histogram": {str(k): v for k, v in sorted(self.length_histogram.items())},
            "pos_counts": dict(sorted(self.pos_counts.items())),
            "top_tokens": [list(item) for item in self.top_tokens],
        }


def corpus_stats(
    sentences: Iterable[Sentence],
    trees: Iterable[ParseTree] | None = None,
    top_k: int = 10,
) -> CorpusStats:
    """Sentence-length histogram, per-POS token counts (when trees are
    given), and the top-k most frequent tokens."""
    lengths: collections.Counter[int] = collections.Counter()
    tokens: collections.Counter[str] = collections.Counter()
    n = 0
    for sentence in sentences:
        n += 1
        lengths[len(sentence)] += 1
        tokens.update(sentence.tokens)
    pos: collections.Counter[str] = collections.Counter()
    if trees is not None:
        for tree in trees:
            pos.update(leaf.label for leaf in tree.leaves())
    return CorpusStats(
        length_histogram=dict(lengths),
        pos_counts=dict(pos),
        top_tokens=tuple(tokens.most_common(top_k)),
        n_sentences=n,
    )
