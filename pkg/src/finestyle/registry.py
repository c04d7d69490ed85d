"""Name -> transfer lookup for the batch pipeline.

Eighteen automated transfers: eight lexical, seven syntactic, three
semantic deletions.  Each entry applies tree-to-tree and reports any
replacement/deletion log entries alongside the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import lexical, semantic, syntax
from .lexical import Replacement
from .lexicon import Lexicon
from .semantic import Deletion
from .treebank import ParseTree, Sentence, extract_sentence


class UnknownTransferError(Exception):
    pass


@dataclass(frozen=True)
class TransferResult:
    tree: ParseTree
    replacements: tuple[Replacement, ...] = ()
    deletions: tuple[Deletion, ...] = ()

    def sentence(self, source_id: str = "") -> Sentence:
        return extract_sentence(self.tree, source_id=source_id)


@dataclass(frozen=True)
class Transfer:
    name: str
    kind: str  # lexical | syntax | semantic
    needs_lexicon: bool
    _run: Callable[[ParseTree, Lexicon | None], TransferResult]

    def apply(self, tree: ParseTree, lexicon: Lexicon | None = None) -> TransferResult:
        if self.needs_lexicon and lexicon is None:
            raise ValueError(f"transfer {self.name!r} requires a lexicon")
        return self._run(tree, lexicon)


def _lexical(pos_class: str, relation: str):
    def run(tree: ParseTree, lexicon: Lexicon | None) -> TransferResult:
        new_tree, replacements = lexical.replace_lexical_tree(
            tree, pos_class, relation, lexicon  # type: ignore[arg-type]
        )
        return TransferResult(tree=new_tree, replacements=tuple(replacements))

    return run


def _frequency(mode: str):
    def run(tree: ParseTree, lexicon: Lexicon | None) -> TransferResult:
        new_tree, replacements = lexical.replace_by_frequency_tree(
            tree, mode, lexicon  # type: ignore[arg-type]
        )
        return TransferResult(tree=new_tree, replacements=tuple(replacements))

    return run


def _tense(target: str):
    def run(tree: ParseTree, lexicon: Lexicon | None) -> TransferResult:
        return TransferResult(tree=syntax.tense_tree(tree, target))

    return run


def _tree_only(fn: Callable[[ParseTree], ParseTree]):
    def run(tree: ParseTree, lexicon: Lexicon | None) -> TransferResult:
        return TransferResult(tree=fn(tree))

    return run


def _deletion(fn: Callable[[ParseTree], tuple[ParseTree, list[Deletion]]]):
    def run(tree: ParseTree, lexicon: Lexicon | None) -> TransferResult:
        new_tree, deletions = fn(tree)
        return TransferResult(tree=new_tree, deletions=tuple(deletions))

    return run


def _make_registry() -> dict[str, Transfer]:
    entries = [
        Transfer("noun-synonym", "lexical", True, _lexical("noun", "synonym")),
        Transfer("noun-antonym", "lexical", True, _lexical("noun", "antonym")),
        Transfer("verb-synonym", "lexical", True, _lexical("verb", "synonym")),
        Transfer("verb-antonym", "lexical", True, _lexical("verb", "antonym")),
        Transfer("adj-synonym", "lexical", True, _lexical("adjective", "synonym")),
        Transfer("adj-antonym", "lexical", True, _lexical("adjective", "antonym")),
        Transfer("most-frequent-synonym", "lexical", True, _frequency("most-frequent")),
        Transfer("least-frequent-synonym", "lexical", True, _frequency("least-frequent")),
        Transfer("to-future", "syntax", False, _tense("future")),
        Transfer("to-past", "syntax", False, _tense("past")),
        Transfer("to-present", "syntax", False, _tense("present")),
        Transfer("active-to-passive", "syntax", False, _tree_only(syntax.active_to_passive_tree)),
        Transfer("passive-to-active", "syntax", False, _tree_only(syntax.passive_to_active_tree)),
        Transfer(
            "pp-front-to-back",
            "syntax",
            False,
            _tree_only(lambda t: syntax.move_pp_tree(t, "front-to-back")),
        ),
        Transfer(
            "pp-back-to-front",
            "syntax",
            False,
            _tree_only(lambda t: syntax.move_pp_tree(t, "back-to-front")),
        ),
        Transfer("adj-adv-removal", "semantic", False, _deletion(semantic.remove_adj_adv_tree)),
        Transfer("pp-removal", "semantic", False, _deletion(semantic.remove_pp_tree)),
        Transfer(
            "substatement-removal",
            "semantic",
            False,
            _deletion(semantic.remove_substatement_tree),
        ),
    ]
    return {t.name: t for t in entries}


TRANSFERS: dict[str, Transfer] = _make_registry()


def get_transfer(name: str) -> Transfer:
    try:
        return TRANSFERS[name]
    except KeyError:
        raise UnknownTransferError(
            f"unknown transfer {name!r}; known: {', '.join(sorted(TRANSFERS))}"
        ) from None
