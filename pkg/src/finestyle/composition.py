"""Multi-transfer composition: grids of sequentially applied transfers
with per-dimension transfer-token labels, reverse-chaining around
externally annotated pairs, and deterministic dataset splitting.

A label is one small integer per style dimension; 0 always means "no
change on this dimension".  Every emitted pair is replay-verified: the
label's nonzero tokens, applied as single transfers to the source's
tree, must reproduce the target token sequence exactly.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import semantic, syntax
from .errors import Inapplicable
from .treebank import ParseTree, Sentence, extract_sentence, replace_numerals


class CompositionError(Exception):
    pass


class NoApplicableTransferError(CompositionError):
    """The sentence supports none of the requested dimensions."""


class EmptyInputError(CompositionError):
    pass


@dataclass(frozen=True)
class TransferLabel:
    """Per-dimension transfer tokens, e.g. (("tense", 2), ("voice", 1))."""

    dims: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.dims:
            raise ValueError("a label needs at least one dimension")
        for _, token in self.dims:
            if token < 0:
                raise ValueError("tokens are non-negative")

    @property
    def tokens(self) -> tuple[int, ...]:
        return tuple(token for _, token in self.dims)

    @property
    def is_identity(self) -> bool:
        return all(token == 0 for token in self.tokens)

    def __str__(self) -> str:
        return " ".join(str(token) for token in self.tokens)

    @classmethod
    def parse(cls, text: str, dim_names: Sequence[str]) -> "TransferLabel":
        tokens = [int(part) for part in text.split()]
        if len(tokens) != len(dim_names):
            raise ValueError(
                f"label {text!r} has {len(tokens)} tokens for {len(dim_names)} dimensions"
            )
        return cls(dims=tuple(zip(dim_names, tokens)))


@dataclass(frozen=True)
class ParallelPair:
    label: TransferLabel
    source: Sentence
    target: Sentence

    def __post_init__(self) -> None:
        if self.label.is_identity and self.source.tokens != self.target.tokens:
            raise ValueError("an all-zero label must link identical sentences")


TreeTransform = Callable[[ParseTree], ParseTree]


@dataclass(frozen=True)
class Choice:
    """One token value of a dimension: a tree transform plus, when the
    change can be undone by another token, that inverse token."""

    token: int
    name: str
    apply: TreeTransform | None  # None for token 0
    inverse_token: int | None


@dataclass(frozen=True)
class Dimension:
    name: str
    choices: tuple[Choice, ...]

    def __post_init__(self) -> None:
        tokens = [c.token for c in self.choices]
        if tokens != list(range(len(tokens))):
            raise ValueError("choice tokens must be 0..n-1 in order")

    def choice(self, token: int) -> Choice:
        return self.choices[token]

    @property
    def tokens(self) -> tuple[int, ...]:
        return tuple(c.token for c in self.choices)


def _drop_log(fn) -> TreeTransform:
    return lambda tree: fn(tree)[0]


def _identity_choice() -> Choice:
    return Choice(token=0, name="none", apply=None, inverse_token=0)


def tense_dimension() -> Dimension:
    return Dimension(
        name="tense",
        choices=(
            _identity_choice(),
            Choice(1, "to-future", lambda t: syntax.tense_tree(t, "future"), None),
            Choice(2, "to-past", lambda t: syntax.tense_tree(t, "past"), None),
            Choice(3, "to-present", lambda t: syntax.tense_tree(t, "present"), None),
        ),
    )


def voice_dimension() -> Dimension:
    return Dimension(
        name="voice",
        choices=(
            _identity_choice(),
            Choice(1, "active-to-passive", syntax.active_to_passive_tree, 2),
            Choice(2, "passive-to-active", syntax.passive_to_active_tree, 1),
        ),
    )


def pp_move_dimension() -> Dimension:
    return Dimension(
        name="pp-move",
        choices=(
            _identity_choice(),
            Choice(1, "front-to-back", lambda t: syntax.move_pp_tree(t, "front-to-back"), 2),
            Choice(2, "back-to-front", lambda t: syntax.move_pp_tree(t, "back-to-front"), 1),
        ),
    )


def pp_removal_dimension() -> Dimension:
    return Dimension(
        name="pp-removal",
        choices=(
            _identity_choice(),
            Choice(1, "pp-removal", _drop_log(semantic.remove_pp_tree), None),
        ),
    )


def adj_adv_removal_dimension() -> Dimension:
    return Dimension(
        name="adj-adv-removal",
        choices=(
            _identity_choice(),
            Choice(1, "adj-adv-removal", _drop_log(semantic.remove_adj_adv_tree), None),
        ),
    )


def substatement_removal_dimension() -> Dimension:
    return Dimension(
        name="substatement-removal",
        choices=(
            _identity_choice(),
            Choice(1, "substatement-removal", _drop_log(semantic.remove_substatement_tree), None),
        ),
    )


DIMENSIONS: dict[str, Callable[[], Dimension]] = {
    "tense": tense_dimension,
    "voice": voice_dimension,
    "pp-move": pp_move_dimension,
    "pp-removal": pp_removal_dimension,
    "adj-adv-removal": adj_adv_removal_dimension,
    "substatement-removal": substatement_removal_dimension,
}


def get_dimension(name: str) -> Dimension:
    try:
        return DIMENSIONS[name]()
    except KeyError:
        raise KeyError(f"unknown composition dimension {name!r}") from None


def _label_for(
    dims: Sequence[Dimension], a: tuple[int, ...], b: tuple[int, ...]
) -> TransferLabel | None:
    """Token vector describing the change from variant a to variant b,
    or None when some dimension's change has no single-transfer name."""
    entries: list[tuple[str, int]] = []
    for dim, ta, tb in zip(dims, a, b):
        if ta == tb:
            entries.append((dim.name, 0))
        elif tb != 0:
            entries.append((dim.name, tb))
        else:
            inverse = dim.choice(ta).inverse_token
            if inverse is None:
                return None
            entries.append((dim.name, inverse))
    return TransferLabel(dims=tuple(entries))


def _replay(dims: Sequence[Dimension], label: TransferLabel, tree: ParseTree) -> ParseTree:
    current = tree
    for dim, (_, token) in zip(dims, label.dims):
        if token == 0:
            continue
        transform = dim.choice(token).apply
        assert transform is not None
        current = transform(current)
    return current


def compose_grid(
    tree: ParseTree,
    dims: Sequence[Dimension],
    include_identity: bool = False,
    source_id: str = "",
) -> list[ParallelPair]:
    """All parallel pairs reachable by choosing one token per dimension.

    Variants are built by applying the chosen transfers in dimension
    order on the parse tree; a variant whose transfer is inapplicable
    is dropped.  A pair is emitted only when replaying its label on the
    source's tree reproduces the target, so the advertised labels are
    guaranteed to be playable.
    """
    if not dims:
        raise ValueError("at least one dimension is required")
    variants: dict[tuple[int, ...], ParseTree] = {}
    for tokens in itertools.product(*(d.tokens for d in dims)):
        current = tree
        try:
            for dim, token in zip(dims, tokens):
                if token != 0:
                    transform = dim.choice(token).apply
                    assert transform is not None
                    current = transform(current)
        except Inapplicable:
            continue
        variants[tokens] = current

    if all(not any(tokens) for tokens in variants):
        raise NoApplicableTransferError("no dimension applies to this sentence")

    rendered = {
        tokens: extract_sentence(vtree, source_id=source_id)
        for tokens, vtree in variants.items()
    }
    pairs: list[ParallelPair] = []
    if include_identity:
        zero = tuple(0 for _ in dims)
        if zero in variants:
            label = TransferLabel(dims=tuple((d.name, 0) for d in dims))
            pairs.append(ParallelPair(label, rendered[zero], rendered[zero]))

    seen: set[tuple] = set()
    for a, b in itertools.permutations(variants, 2):
        label = _label_for(dims, a, b)
        if label is None:
            continue
        if rendered[a].tokens == rendered[b].tokens:
            continue  # a nonzero label must witness a real change
        key = (label.tokens, rendered[a].tokens, rendered[b].tokens)
        if key in seen:  # distinct token tuples can render identically
            continue
        try:
            replayed = _replay(dims, label, variants[a])
        except Inapplicable:
            continue
        if extract_sentence(replayed).tokens != rendered[b].tokens:
            continue
        seen.add(key)
        pairs.append(ParallelPair(label, rendered[a], rendered[b]))
    return pairs


@dataclass(frozen=True)
class AtomicTransfer:
    """A named, invertible single transfer used for reverse-chaining."""

    dim_name: str
    token: int
    inverse_token: int
    apply: TreeTransform


def atomic_transfer(dim_name: str, token: int) -> AtomicTransfer:
    dim = get_dimension(dim_name)
    choice = dim.choice(token)
    if choice.apply is None or choice.inverse_token is None:
        raise ValueError(f"{dim_name}:{token} is not an invertible transfer")
    return AtomicTransfer(
        dim_name=dim_name,
        token=token,
        inverse_token=choice.inverse_token,
        apply=choice.apply,
    )


def reverse_chain(
    tree: ParseTree,
    annotated_target: Sentence,
    annotated_dim: str,
    auto: AtomicTransfer | None = None,
    annotated_token: int = 1,
) -> ParallelPair:
    """Chain an automated transfer backwards around a human-annotated pair.

    With annotated pair (sentence-of(tree) -> annotated_target) and an
    invertible automated transfer mapping the tree to a new source, the
    emitted pair runs from that new source to the annotated target and
    is labeled with the inverse of the automated token plus the
    annotated dimension's token.
    """
    if auto is None:
        label = TransferLabel(dims=((annotated_dim, annotated_token),))
        return ParallelPair(label, extract_sentence(tree), annotated_target)
    new_source_tree = auto.apply(tree)  # Inapplicable propagates to the caller
    label = TransferLabel(
        dims=((auto.dim_name, auto.inverse_token), (annotated_dim, annotated_token))
    )
    return ParallelPair(label, extract_sentence(new_source_tree), annotated_target)


# --- dataset emission -------------------------------------------------------


@dataclass(frozen=True)
class SplitResult:
    paths: tuple[Path, Path, Path]
    counts: tuple[int, int, int]
    seed: int


def format_pair(pair: ParallelPair) -> str:
    source = replace_numerals(pair.source)
    target = replace_numerals(pair.target)
    return f"{pair.label}\t{source.text}\t{target.text}"


def parse_pair_line(line: str, dim_names: Sequence[str]) -> ParallelPair:
    label_text, source_text, target_text = line.rstrip("\n").split("\t")
    return ParallelPair(
        label=TransferLabel.parse(label_text, dim_names),
        source=Sentence(tokens=tuple(source_text.split())),
        target=Sentence(tokens=tuple(target_text.split())),
    )


def emit_dataset(
    pairs: Sequence[ParallelPair],
    out_dir: str | Path,
    ratios: tuple[float, float, float] = (0.9, 0.05, 0.05),
    seed: int = 0,
) -> SplitResult:
    """Shuffle deterministically, split train/valid/test, mask numerals,
    and write one TSV per split plus a manifest recording the seed."""
    if not pairs:
        raise EmptyInputError("no pairs to split")
    if any(r <= 0 for r in ratios) or abs(sum(ratios) - 1.0) > 1e-9:
        raise ValueError("ratios must be positive and sum to 1")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    order = list(pairs)
    random.Random(seed).shuffle(order)
    n = len(order)
    n_valid = int(n * ratios[1])
    n_test = int(n * ratios[2])
    n_train = n - n_valid - n_test  # remainder goes to train

    splits = {
        "train": order[:n_train],
        "valid": order[n_train : n_train + n_valid],
        "test": order[n_train + n_valid :],
    }
    paths = []
    for name, chunk in splits.items():
        path = out_dir / f"{name}.tsv"
        body = "".join(format_pair(pair) + "\n" for pair in chunk)
        path.write_text(body, encoding="utf-8")
        paths.append(path)

    manifest = {
        "seed": seed,
        "ratios": list(ratios),
        "counts": {name: len(chunk) for name, chunk in splits.items()},
        "dimensions": [name for name, _ in pairs[0].label.dims],
        "content_sha256": hashlib.sha256(
            "".join(format_pair(p) for p in order).encode("utf-8")
        ).hexdigest(),
    }
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    return SplitResult(
        paths=tuple(paths),  # type: ignore[arg-type]
        counts=(n_train, n_valid, n_test),
        seed=seed,
    )
