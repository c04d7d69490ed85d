"""Word-substitution transfers: synonym/antonym and frequency-extreme
synonym replacement for nouns, verbs, and adjectives.

Every eligible word is replaced in one pass, and the substitute is
re-inflected to the surface form of the original (verb form, noun
number).  Token count is always preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import morphology
from .errors import Inapplicable
from .lexicon import Lexicon, NoSynonymsError, rank_synonyms
from .morphology import lemmatize
from .treebank import (
    NOUN_TAGS,
    PLURAL_NOUN_TAGS,
    VERB_TAGS,
    ParseTree,
    Sentence,
    extract_sentence,
)

_CLASS_TAGS = {
    "noun": NOUN_TAGS,
    "verb": VERB_TAGS,
    "adjective": frozenset({"JJ"}),  # no comparative/superlative synthesis
}


@dataclass(frozen=True)
class Replacement:
    token_index: int
    original: str
    substitute: str
    relation: str  # synonym | antonym | most-frequent | least-frequent

    def __post_init__(self) -> None:
        if self.original == self.substitute:
            raise ValueError("replacement must change the token")


def _reinflect(substitute_lemma: str, tag: str) -> str:
    if tag in VERB_TAGS:
        form = morphology.form_of_tag(tag)
        return morphology.inflect_verb(substitute_lemma, form)
    if tag in PLURAL_NOUN_TAGS:
        return morphology.pluralize_noun(substitute_lemma)
    return substitute_lemma


def _pos_class_of(tag: str) -> str | None:
    for pos_class, tags in _CLASS_TAGS.items():
        if tag in tags:
            return pos_class
    return None


def _rebuild(tree: ParseTree, substitutions: dict[int, str]) -> ParseTree:
    counter = [0]

    def walk(node: ParseTree) -> ParseTree:
        if node.is_leaf:
            idx = counter[0]
            counter[0] += 1
            if idx in substitutions:
                return ParseTree.leaf(node.label, substitutions[idx])
            return node
        return ParseTree.phrase(node.label, [walk(c) for c in node.children])

    return walk(tree)


def _run_replacement(
    tree: ParseTree,
    pos_classes: tuple[str, ...],
    pick,
    relation_name: str,
) -> tuple[ParseTree, list[Replacement]]:
    substitutions: dict[int, str] = {}
    replacements: list[Replacement] = []
    for index, word_leaf in enumerate(tree.leaves()):
        tag = word_leaf.label
        pos_class = _pos_class_of(tag)
        if pos_class is None or pos_class not in pos_classes:
            continue
        lemma = lemmatize(word_leaf.word, tag)  # type: ignore[arg-type]
        candidate = pick(lemma, pos_class)
        if candidate is None:
            continue
        surface = _reinflect(candidate, tag)
        if surface == word_leaf.word:
            continue
        substitutions[index] = surface
        replacements.append(
            Replacement(
                token_index=index,
                original=word_leaf.word,  # type: ignore[arg-type]
                substitute=surface,
                relation=relation_name,
            )
        )
    if not replacements:
        raise Inapplicable(f"no {relation_name} replacement applies")
    return _rebuild(tree, substitutions), replacements


def replace_lexical_tree(
    tree: ParseTree, pos_class: str, relation: str, lexicon: Lexicon
) -> tuple[ParseTree, list[Replacement]]:
    if pos_class not in _CLASS_TAGS:
        raise ValueError(f"unknown pos class {pos_class!r}")
    if relation not in {"synonym", "antonym"}:
        raise ValueError(f"unknown relation {relation!r}")

    def pick(lemma: str, pc: str) -> str | None:
        table = lexicon.synonyms_of if relation == "synonym" else lexicon.antonyms_of
        candidates = table(lemma, pc)
        return candidates[0] if candidates else None

    return _run_replacement(tree, (pos_class,), pick, relation)


def replace_lexical(
    tree: ParseTree, pos_class: str, relation: str, lexicon: Lexicon
) -> tuple[Sentence, list[Replacement]]:
    """Replace every noun/verb/adjective that has a synonym (or antonym)
    with its first candidate, re-inflected to the original surface form."""
    new_tree, replacements = replace_lexical_tree(tree, pos_class, relation, lexicon)
    return extract_sentence(new_tree), replacements


def replace_by_frequency_tree(
    tree: ParseTree, mode: str, lexicon: Lexicon
) -> tuple[ParseTree, list[Replacement]]:
    if mode not in {"most-frequent", "least-frequent"}:
        raise ValueError(f"unknown mode {mode!r}")

    def pick(lemma: str, pc: str) -> str | None:
        try:
            return rank_synonyms(lexicon, lemma, pc, mode)
        except NoSynonymsError:
            return None

    return _run_replacement(tree, ("noun", "verb", "adjective"), pick, mode)


def replace_by_frequency(
    tree: ParseTree, mode: str, lexicon: Lexicon
) -> tuple[Sentence, list[Replacement]]:
    """Replace every content word by its most- or least-frequent synonym."""
    new_tree, replacements = replace_by_frequency_tree(tree, mode, lexicon)
    return extract_sentence(new_tree), replacements
