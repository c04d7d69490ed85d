"""Information-deletion transfers: adjective/adverb removal,
prepositional-phrase removal, and substatement removal.

Deletions are whole-subtree removals with token-span bookkeeping; the
output token sequence is always a subsequence of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import Inapplicable
from .syntax import BE_WORDS
from .treebank import (
    ADJECTIVE_TAGS,
    ADVERB_TAGS,
    ParseTree,
    Sentence,
    VERB_TAGS,
    extract_sentence,
)

# Negation is not a modifier; stripping it would flip the meaning.
_PROTECTED_ADVERBS = frozenset({"n't", "not"})


@dataclass(frozen=True)
class Deletion:
    span_start: int
    span_end: int  # half-open
    node_label: str

    def __post_init__(self) -> None:
        if not (0 <= self.span_start < self.span_end):
            raise ValueError("bad deletion span")


Predicate = Callable[[ParseTree, tuple[ParseTree, ...]], bool]


def _delete_where(tree: ParseTree, predicate: Predicate) -> tuple[ParseTree, list[Deletion]]:
    """Remove every outermost subtree matching the predicate; emptied
    ancestors are pruned.  Returns the new tree and the deletion log."""
    deletions: list[Deletion] = []
    cursor = [0]

    def walk(node: ParseTree, ancestors: tuple[ParseTree, ...]) -> ParseTree | None:
        if predicate(node, ancestors):
            width = len(node.leaves())
            deletions.append(Deletion(cursor[0], cursor[0] + width, node.label))
            cursor[0] += width
            return None
        if node.is_leaf:
            cursor[0] += 1
            return node
        kept = []
        for child in node.children:
            result = walk(child, ancestors + (node,))
            if result is not None:
                kept.append(result)
        if not kept:
            return None
        return ParseTree.phrase(node.label, kept)

    new_tree = walk(tree, ())
    if not deletions:
        raise Inapplicable("nothing to delete")
    if new_tree is None:
        raise Inapplicable("deletion would empty the sentence")
    return new_tree, deletions


def _is_attributive_adjective(node: ParseTree, ancestors: tuple[ParseTree, ...]) -> bool:
    if not (node.is_leaf and node.label in ADJECTIVE_TAGS):
        return False
    parent = ancestors[-1] if ancestors else None
    if parent is None:
        return False
    if parent.base_label == "NP":
        return True
    if parent.base_label == "ADJP" and len(ancestors) >= 2:
        # An ADJP inside an NP modifies the noun; under a VP it is the
        # predicate of a copular clause and stays.
        return ancestors[-2].base_label == "NP"
    return False


def remove_adj_adv_tree(tree: ParseTree) -> tuple[ParseTree, list[Deletion]]:
    def predicate(node: ParseTree, ancestors: tuple[ParseTree, ...]) -> bool:
        if node.is_leaf and node.label in ADVERB_TAGS:
            return node.word not in _PROTECTED_ADVERBS
        return _is_attributive_adjective(node, ancestors)

    return _delete_where(tree, predicate)


def remove_adj_adv(tree: ParseTree) -> tuple[Sentence, list[Deletion]]:
    """Delete all adverbs and attributive adjectives; predicative
    adjectives survive."""
    new_tree, deletions = remove_adj_adv_tree(tree)
    return extract_sentence(new_tree), deletions


def _vp_head_word(vp: ParseTree) -> str | None:
    for child in vp.children:
        if child.is_leaf and (child.label in VERB_TAGS or child.label == "MD"):
            return child.word
    return None


def remove_pp_tree(tree: ParseTree) -> tuple[ParseTree, list[Deletion]]:
    def predicate(node: ParseTree, ancestors: tuple[ParseTree, ...]) -> bool:
        if node.is_leaf or node.base_label != "PP":
            return False
        parent = ancestors[-1] if ancestors else None
        # A PP that is the complement of a be-verb is the predicate of
        # the clause; deleting it would leave "the meat is".
        if parent is not None and parent.base_label == "VP":
            if _vp_head_word(parent) in BE_WORDS:
                return False
        return True

    return _delete_where(tree, predicate)


def remove_pp(tree: ParseTree) -> tuple[Sentence, list[Deletion]]:
    """Delete every prepositional phrase (outermost first, nested PPs go
    with their parent), sparing copular predicates."""
    new_tree, deletions = remove_pp_tree(tree)
    return extract_sentence(new_tree), deletions


def remove_substatement_tree(tree: ParseTree) -> tuple[ParseTree, list[Deletion]]:
    def predicate(node: ParseTree, ancestors: tuple[ParseTree, ...]) -> bool:
        return not node.is_leaf and node.base_label == "SBAR"

    return _delete_where(tree, predicate)


def remove_substatement(tree: ParseTree) -> tuple[Sentence, list[Deletion]]:
    """Delete every subordinate clause under the matrix clause."""
    new_tree, deletions = remove_substatement_tree(tree)
    return extract_sentence(new_tree), deletions
