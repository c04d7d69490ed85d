"""Bracketed constituency trees and the token-level sentence pipeline.

Trees come in as standard labeled bracketings, one tree per
blank-line-separated block.  Everything downstream (transfers,
composition, analysis) operates on the ``ParseTree`` / ``Sentence``
values defined here.  All operations are pure: trees and sentences are
immutable, and transforms build new values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class TreebankError(Exception):
    pass


class UnbalancedBracketsError(TreebankError):
    """Malformed bracketing (unbalanced or mixed leaf/phrase content)."""


class EmptyNodeError(TreebankError):
    """A ``()`` constituent, or a labeled node with no content."""


class EmptySentenceError(TreebankError):
    """Normalization removed every token."""


# Preterminal tags treated as punctuation when a tree is available.
PUNCTUATION_TAGS = frozenset({",", ".", ":", "``", "''", "-LRB-", "-RRB-"})

NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
PLURAL_NOUN_TAGS = frozenset({"NNS", "NNPS"})
VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
ADJECTIVE_TAGS = frozenset({"JJ", "JJR", "JJS"})
ADVERB_TAGS = frozenset({"RB", "RBR", "RBS"})
CLAUSE_LABELS = frozenset({"S", "SINV", "SQ", "SBARQ"})

# Reserved mask token for numerals; survives normalization verbatim.
NUMERAL_TOKEN = "NUM"
_NUMERAL_RE = re.compile(r"^[0-9]+(?:[,.⁄/:-][0-9]+)*$")
_NONALNUM_RE = re.compile(r"^[^0-9A-Za-z]+$")

MIN_SENTENCE_TOKENS = 5
MAX_SENTENCE_TOKENS = 12


@dataclass(frozen=True)
class ParseTree:
    """A node of a labeled ordered tree.

    Leaves carry the surface ``word`` and use the POS tag as ``label``;
    interior nodes carry a constituency label and children.  A node has
    a word exactly when it has no children.
    """

    label: str
    children: tuple["ParseTree", ...] = ()
    word: str | None = None

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("tree labels must be non-empty")
        if (self.word is None) == (len(self.children) == 0):
            raise ValueError("a node has a word iff it has zero children")

    @property
    def is_leaf(self) -> bool:
        return self.word is not None

    @property
    def base_label(self) -> str:
        """Label with functional annotations stripped (NP-SBJ -> NP)."""
        if self.label.startswith("-"):  # -NONE-, -LRB-, ...
            return self.label
        return re.split(r"[-=]", self.label, maxsplit=1)[0]

    def leaves(self) -> tuple["ParseTree", ...]:
        if self.is_leaf:
            return (self,)
        out: list[ParseTree] = []
        for child in self.children:
            out.extend(child.leaves())
        return tuple(out)

    def words(self) -> tuple[str, ...]:
        return tuple(leaf.word for leaf in self.leaves())  # type: ignore[misc]

    def __len__(self) -> int:
        return len(self.leaves())

    @classmethod
    def leaf(cls, tag: str, word: str) -> "ParseTree":
        return cls(label=tag, word=word)

    @classmethod
    def phrase(cls, label: str, children: Iterable["ParseTree"]) -> "ParseTree":
        return cls(label=label, children=tuple(children))


@dataclass(frozen=True)
class Sentence:
    """An ordered token sequence plus an opaque corpus identifier."""

    tokens: tuple[str, ...]
    source_id: str = ""

    def __post_init__(self) -> None:
        for tok in self.tokens:
            if not tok or any(ch.isspace() for ch in tok):
                raise ValueError(f"bad token {tok!r}: empty or contains whitespace")

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def replace_tokens(self, tokens: Iterable[str]) -> "Sentence":
        return Sentence(tokens=tuple(tokens), source_id=self.source_id)


_TOKEN_RE = re.compile(r"\(|\)|[^()\s]+")


def parse_bracketed(text: str) -> ParseTree:
    """Parse one labeled bracketing into a ParseTree.

    Raises UnbalancedBracketsError on malformed input and EmptyNodeError
    on contentless constituents such as ``()`` or ``(NP)``.
    """
    tokens = _TOKEN_RE.findall(text)
    if not tokens:
        raise UnbalancedBracketsError("empty input")
    pos = 0

    def parse_node() -> ParseTree:
        nonlocal pos
        if tokens[pos] != "(":
            raise UnbalancedBracketsError(f"expected '(' at token {pos}")
        pos += 1
        if pos >= len(tokens):
            raise UnbalancedBracketsError("input ends inside a node")
        if tokens[pos] == ")":
            raise EmptyNodeError("'()' constituent")
        # Anonymous top-level wrapper "( (S ...) )" used by some corpora.
        if tokens[pos] == "(":
            label = None
        else:
            label = tokens[pos]
            pos += 1
        children: list[ParseTree] = []
        word: str | None = None
        while pos < len(tokens) and tokens[pos] != ")":
            if tokens[pos] == "(":
                children.append(parse_node())
            else:
                if word is not None or children:
                    raise UnbalancedBracketsError(
                        "mixed leaf/phrase content under one node"
                    )
                word = tokens[pos]
                pos += 1
        if pos >= len(tokens):
            raise UnbalancedBracketsError("missing ')'")
        pos += 1  # consume ')'
        if word is not None and children:
            raise UnbalancedBracketsError("node has both a word and children")
        if label is None:
            if len(children) == 1:
                return children[0]
            if not children:
                raise EmptyNodeError("anonymous node with no children")
            return ParseTree.phrase("TOP", children)
        if word is not None:
            return ParseTree.leaf(label, word)
        if not children:
            raise EmptyNodeError(f"constituent ({label}) has no content")
        return ParseTree.phrase(label, children)

    tree = parse_node()
    if pos != len(tokens):
        raise UnbalancedBracketsError("trailing content after the root node")
    return tree


def serialize(tree: ParseTree) -> str:
    if tree.is_leaf:
        return f"({tree.label} {tree.word})"
    return "(" + tree.label + " " + " ".join(serialize(c) for c in tree.children) + ")"


def iter_corpus(text: str) -> Iterator[ParseTree]:
    """Yield one tree per blank-line-separated block."""
    for block in re.split(r"\n\s*\n", text):
        if block.strip():
            yield parse_bracketed(block)


def write_corpus(trees: Iterable[ParseTree]) -> str:
    return "\n\n".join(serialize(t) for t in trees) + "\n"


def extract_sentence(tree: ParseTree, source_id: str = "") -> Sentence:
    """The leaf words in left-to-right order."""
    return Sentence(tokens=tree.words(), source_id=source_id)


def _normalize_token(token: str) -> str | None:
    """Lowercased token, or None when the token is punctuation-only.

    The reserved numeral mask passes through unchanged so that masking
    and normalization commute.
    """
    if token == NUMERAL_TOKEN:
        return token
    if _NONALNUM_RE.match(token):
        return None
    return token.lower()


def normalize(sentence: Sentence) -> Sentence:
    """Drop punctuation-only tokens and lowercase the rest.

    Abbreviation-internal periods ("sen.") survive because those tokens
    contain letters.  Idempotent.  Raises EmptySentenceError when every
    token was punctuation.
    """
    kept = [t for t in (_normalize_token(tok) for tok in sentence.tokens) if t]
    if not kept:
        raise EmptySentenceError(f"nothing left of {sentence.tokens!r}")
    return sentence.replace_tokens(kept)


def normalize_tree(tree: ParseTree) -> ParseTree:
    """Tree-aware normalization: drop leaves with punctuation POS tags,
    lowercase the remaining words, prune emptied constituents."""

    def walk(node: ParseTree) -> ParseTree | None:
        if node.is_leaf:
            if node.label in PUNCTUATION_TAGS:
                return None
            word = _normalize_token(node.word)  # type: ignore[arg-type]
            if word is None:
                return None
            return ParseTree.leaf(node.label, word)
        kept = [c for c in (walk(child) for child in node.children) if c is not None]
        if not kept:
            return None
        return ParseTree.phrase(node.label, kept)

    result = walk(tree)
    if result is None:
        raise EmptySentenceError("tree contained only punctuation")
    return result


def replace_numerals(sentence: Sentence) -> Sentence:
    """Mask digit-shaped tokens ("20", "3.5", "1,200") with NUM. Idempotent."""
    return sentence.replace_tokens(
        NUMERAL_TOKEN if _NUMERAL_RE.match(tok) else tok for tok in sentence.tokens
    )


def is_complete(tree: ParseTree) -> bool:
    """Completeness heuristic: the root clause dominates an NP and a VP."""
    clause = find_root_clause(tree)
    if clause is None:
        return False
    seen: set[str] = set()

    def scan(node: ParseTree) -> None:
        for child in node.children:
            if not child.is_leaf:
                seen.add(child.base_label)
                scan(child)

    scan(clause)
    return "NP" in seen and "VP" in seen


def find_root_clause(tree: ParseTree) -> ParseTree | None:
    """The matrix clause: the outermost S-class node."""
    if tree.base_label in CLAUSE_LABELS:
        return tree
    if not tree.is_leaf:
        for child in tree.children:
            found = find_root_clause(child)
            if found is not None:
                return found
    return None


def filter_corpus(trees: Iterable[ParseTree]) -> list[ParseTree]:
    """Keep trees whose sentences have an acceptable length (5..12 tokens)
    and pass the completeness heuristic.  Order-preserving."""
    kept = []
    for tree in trees:
        n = len(tree.leaves())
        if MIN_SENTENCE_TOKENS <= n <= MAX_SENTENCE_TOKENS and is_complete(tree):
            kept.append(tree)
    return kept
