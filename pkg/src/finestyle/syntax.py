"""Clause-level rewrites: tense conversion, voice conversion, and
prepositional-phrase movement.

All transforms work tree-to-tree on the matrix clause only; embedded
clauses are left alone.  Public wrappers render the transformed tree to
a Sentence.  Structural preconditions that fail raise Inapplicable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Inapplicable, MissingAgentError
from .morphology import (
    Number,
    VerbForm,
    form_of_tag,
    head_pronoun,
    inflect_verb,
    lemmatize,
    np_number,
    NoHeadNounError,
)
from .treebank import (
    ParseTree,
    Sentence,
    VERB_TAGS,
    extract_sentence,
    find_root_clause,
)

BE_WORDS = frozenset({"be", "am", "is", "are", "was", "were", "been", "being"})
HAVE_WORDS = frozenset({"have", "has", "had"})
DO_WORDS = frozenset({"do", "does", "did"})
FINITE_TAGS = frozenset({"VBD", "VBZ", "VBP"})
_NEGATIONS = frozenset({"n't", "not"})

# Subjective <-> objective personal pronoun pairs.
_TO_OBJECTIVE = {"he": "him", "she": "her", "they": "them", "we": "us", "i": "me"}
_TO_SUBJECTIVE = {v: k for k, v in _TO_OBJECTIVE.items()}


@dataclass(frozen=True)
class ClauseAnalysis:
    """Decomposition of a matrix clause around its finite verb."""

    subject_np: ParseTree
    finite_verb: ParseTree
    finite_form: VerbForm | None  # None for modals
    auxiliaries: tuple[ParseTree, ...]
    object_np: ParseTree | None
    negation: bool
    trailing_modifiers: tuple[ParseTree, ...]


def _has_trace(node: ParseTree) -> bool:
    return any(leaf.label == "-NONE-" for leaf in node.leaves())


def _clause_parts(clause: ParseTree) -> tuple[int, int]:
    """Indices of the subject NP and the VP among the clause children."""
    np_idx = vp_idx = -1
    for i, child in enumerate(clause.children):
        if child.is_leaf:
            continue
        if child.base_label == "NP" and np_idx < 0:
            np_idx = i
        if child.base_label == "VP" and vp_idx < 0:
            vp_idx = i
    if np_idx < 0 or vp_idx < 0 or np_idx > vp_idx:
        raise Inapplicable("clause lacks a subject NP before its VP")
    return np_idx, vp_idx


def _scan_vp(vp: ParseTree) -> tuple[list[ParseTree], int]:
    """Pre-verbal modifiers and the index of the first verb-like leaf."""
    advs: list[ParseTree] = []
    for i, child in enumerate(vp.children):
        if child.is_leaf and (child.label in VERB_TAGS or child.label == "MD"):
            return advs, i
        advs.append(child)
    raise Inapplicable("no verb inside the VP")


def _rebuild_clause(tree: ParseTree, new_clause: ParseTree) -> ParseTree:
    clause = find_root_clause(tree)

    def walk(node: ParseTree) -> ParseTree:
        if node is clause:
            return new_clause
        if node.is_leaf:
            return node
        return ParseTree.phrase(node.label, [walk(c) for c in node.children])

    return walk(tree)


def _shift_pronouns(np: ParseTree, table: dict[str, str]) -> ParseTree:
    children = []
    for child in np.children:
        if child.is_leaf and child.label == "PRP" and child.word in table:
            children.append(ParseTree.leaf("PRP", table[child.word]))
        else:
            children.append(child)
    return ParseTree.phrase(np.label, children)


def to_objective(np: ParseTree) -> ParseTree:
    return _shift_pronouns(np, _TO_OBJECTIVE)


def to_subjective(np: ParseTree) -> ParseTree:
    return _shift_pronouns(np, _TO_SUBJECTIVE)


def _np_number_or_sg(np: ParseTree) -> Number:
    try:
        return np_number(np)
    except NoHeadNounError:
        return Number.SINGULAR


def _be_leaf(past: bool, number: Number, subject: ParseTree | None = None) -> ParseTree:
    if past:
        word = "were" if number is Number.PLURAL else "was"
        return ParseTree.leaf("VBD", word)
    if subject is not None and head_pronoun(subject) == "i":
        return ParseTree.leaf("VBP", "am")
    if number is Number.PLURAL:
        return ParseTree.leaf("VBP", "are")
    return ParseTree.leaf("VBZ", "is")


def _have_leaf(past: bool, number: Number) -> ParseTree:
    if past:
        return ParseTree.leaf("VBD", "had")
    if number is Number.PLURAL:
        return ParseTree.leaf("VBP", "have")
    return ParseTree.leaf("VBZ", "has")


def _present_leaf(lemma: str, number: Number, subject: ParseTree) -> ParseTree:
    pronoun = head_pronoun(subject)
    if lemma == "be":
        return _be_leaf(past=False, number=number, subject=subject)
    non3sg = number is Number.PLURAL or pronoun in {"i", "you", "we", "they"}
    if non3sg:
        return ParseTree.leaf("VBP", inflect_verb(lemma, VerbForm.PRESENT_NON3SG))
    return ParseTree.leaf("VBZ", inflect_verb(lemma, VerbForm.PRESENT_3SG))


# --- tense ----------------------------------------------------------------


def analyze_clause(tree: ParseTree) -> ClauseAnalysis:
    clause = find_root_clause(tree)
    if clause is None:
        raise Inapplicable("no clause node at the root")
    np_idx, vp_idx = _clause_parts(clause)
    subject = clause.children[np_idx]
    vp = clause.children[vp_idx]
    _, verb_idx = _scan_vp(vp)
    finite = vp.children[verb_idx]
    rest = list(vp.children[verb_idx + 1 :])
    negation = bool(rest) and rest[0].is_leaf and rest[0].word in _NEGATIONS
    if negation:
        rest = rest[1:]
    # Follow the auxiliary chain down to the main verb.
    chain = [finite]
    while True:
        step = _next_verb(rest)
        if step is None:
            break
        chain.append(step[1])
        rest = step[2]
    form = None if finite.label == "MD" else form_of_tag(finite.label)
    object_np = next((c for c in rest if c.base_label == "NP"), None)
    return ClauseAnalysis(
        subject_np=subject,
        finite_verb=finite,
        finite_form=form,
        auxiliaries=tuple(chain[:-1]),
        object_np=object_np,
        negation=negation,
        trailing_modifiers=tuple(rest),
    )


def tense_tree(tree: ParseTree, target: str) -> ParseTree:
    """Re-render the matrix clause in the target tense (tree form)."""
    if target not in {"past", "present", "future"}:
        raise ValueError(f"unknown tense target {target!r}")
    clause = find_root_clause(tree)
    if clause is None:
        raise Inapplicable("no clause node at the root")
    np_idx, vp_idx = _clause_parts(clause)
    subject = clause.children[np_idx]
    vp = clause.children[vp_idx]
    _, verb_idx = _scan_vp(vp)
    finite = vp.children[verb_idx]
    rest = list(vp.children[verb_idx + 1 :])
    negated = bool(rest) and rest[0].is_leaf and rest[0].word in _NEGATIONS

    if finite.label == "MD":
        # A clause already in "will + base" form is a fixed point of the
        # future transfer; any other modality is off limits.
        if target == "future" and finite.word in {"will", "wo"}:
            return tree
        raise Inapplicable(f"modal finite verb {finite.word!r}")
    if finite.label not in FINITE_TAGS:
        raise Inapplicable(f"no finite verb (found {finite.label})")

    word = finite.word or ""
    lemma = lemmatize(word, finite.label)
    if target == "future":
        if negated:
            tail = rest[1:]
            if lemma == "do":  # do-support disappears under "wo n't"
                replacement = [ParseTree.leaf("MD", "wo"), rest[0], *tail]
            else:
                base = ParseTree.leaf("VB", inflect_verb(lemma, VerbForm.BASE))
                replacement = [ParseTree.leaf("MD", "wo"), rest[0], base, *tail]
        else:
            if lemma == "do":
                replacement = [ParseTree.leaf("MD", "will"), *rest]
            else:
                base = ParseTree.leaf("VB", inflect_verb(lemma, VerbForm.BASE))
                replacement = [ParseTree.leaf("MD", "will"), base, *rest]
    elif target == "past":
        number = _np_number_or_sg(subject)
        if lemma == "be":
            new_finite = _be_leaf(past=True, number=number)
        else:
            new_finite = ParseTree.leaf("VBD", inflect_verb(lemma, VerbForm.PAST))
        replacement = [new_finite, *rest]
    else:  # present
        number = _np_number_or_sg(subject)
        replacement = [_present_leaf(lemma, number, subject), *rest]

    new_vp = ParseTree.phrase(
        vp.label, [*vp.children[:verb_idx], *replacement]
    )
    new_clause = ParseTree.phrase(
        clause.label,
        [*clause.children[:vp_idx], new_vp, *clause.children[vp_idx + 1 :]],
    )
    return _rebuild_clause(tree, new_clause)


def to_tense(tree: ParseTree, target: str) -> Sentence:
    """Convert the matrix clause to past, present, or future tense."""
    return extract_sentence(tense_tree(tree, target))


# --- voice ----------------------------------------------------------------


@dataclass(frozen=True)
class _ActiveChain:
    kind: str  # simple | modal | perfect | modal-perfect | do
    advs: tuple[ParseTree, ...]
    mid_advs: tuple[ParseTree, ...]  # modifiers between auxiliary and main verb
    finite: ParseTree
    negation: ParseTree | None
    main: ParseTree
    complements: tuple[ParseTree, ...]


def _first_verb_split(vp: ParseTree) -> tuple[list[ParseTree], ParseTree, list[ParseTree]]:
    advs, idx = _scan_vp(vp)
    return advs, vp.children[idx], list(vp.children[idx + 1 :])


def _next_verb(
    items: list[ParseTree],
) -> tuple[list[ParseTree], ParseTree, list[ParseTree]] | None:
    """The next verb leaf, either directly in the list or as the head of
    the first nested VP; returns (modifiers-before, verb, complements)."""
    pre: list[ParseTree] = []
    for i, item in enumerate(items):
        if item.is_leaf and (item.label in VERB_TAGS or item.label == "MD"):
            return pre, item, list(items[i + 1 :])
        if not item.is_leaf and item.base_label == "VP":
            try:
                advs, idx = _scan_vp(item)
            except Inapplicable:
                return None
            inner_rest = list(item.children[idx + 1 :])
            return pre + advs, item.children[idx], inner_rest + list(items[i + 1 :])
        pre.append(item)
    return None


def _resolve_active_chain(vp: ParseTree) -> _ActiveChain:
    advs, finite, rest = _first_verb_split(vp)
    negation = None
    if rest and rest[0].is_leaf and rest[0].word in _NEGATIONS:
        negation = rest[0]
        rest = rest[1:]
    word = finite.word or ""

    if finite.label == "MD":
        step = _next_verb(rest)
        if step is None:
            raise Inapplicable("modal without a main verb")
        mid, v2, rest2 = step
        if (v2.word or "") in BE_WORDS:
            raise Inapplicable("copular or already-passive clause")
        if (v2.word or "") in HAVE_WORDS:
            step3 = _next_verb(rest2)
            if step3 is None:
                raise Inapplicable("perfect auxiliary without a participle")
            mid3, v3, rest3 = step3
            if v3.label != "VBN" or (v3.word or "") == "been":
                raise Inapplicable("no active participle under the perfect chain")
            return _ActiveChain(
                "modal-perfect",
                tuple(advs),
                tuple(mid + mid3),
                finite,
                negation,
                v3,
                tuple(rest3),
            )
        return _ActiveChain(
            "modal", tuple(advs), tuple(mid), finite, negation, v2, tuple(rest2)
        )
    if finite.label not in FINITE_TAGS:
        raise Inapplicable(f"no finite verb heads the VP (found {finite.label})")
    if word in BE_WORDS:
        raise Inapplicable("copular or already-passive clause")
    if word in HAVE_WORDS:
        step = _next_verb(rest)
        if step is not None:
            mid, v2, rest2 = step
            if v2.label == "VBN" and (v2.word or "") != "been":
                return _ActiveChain(
                    "perfect", tuple(advs), tuple(mid), finite, negation, v2, tuple(rest2)
                )
            raise Inapplicable("perfect chain without an active participle")
        # "has" as a main verb falls through to the simple case
    if word in DO_WORDS:
        step = _next_verb(rest)
        if step is None:
            raise Inapplicable("do-support without a main verb")
        mid, v2, rest2 = step
        if (v2.word or "") in BE_WORDS:
            raise Inapplicable("copular clause under do-support")
        return _ActiveChain(
            "do", tuple(advs), tuple(mid), finite, negation, v2, tuple(rest2)
        )
    return _ActiveChain(
        "simple", tuple(advs), (), finite, negation, finite, tuple(rest)
    )


def _split_object(complements: tuple[ParseTree, ...]) -> tuple[list[ParseTree], ParseTree, list[ParseTree]]:
    mid: list[ParseTree] = []
    for i, comp in enumerate(complements):
        if comp.base_label == "NP":
            return mid, comp, list(complements[i + 1 :])
        if comp.base_label in {"S", "SBAR"}:
            raise Inapplicable("clausal object")
        mid.append(comp)
    raise Inapplicable("no direct-object NP")


def active_to_passive_tree(tree: ParseTree) -> ParseTree:
    clause = find_root_clause(tree)
    if clause is None:
        raise Inapplicable("no clause node at the root")
    np_idx, vp_idx = _clause_parts(clause)
    subject = clause.children[np_idx]
    if _has_trace(subject):
        raise Inapplicable("empty subject")
    chain = _resolve_active_chain(clause.children[vp_idx])
    mid, obj, trailing = _split_object(chain.complements)
    if _has_trace(obj):
        raise Inapplicable("trace inside the object")

    number = _np_number_or_sg(obj)
    participle_word = (
        chain.main.word
        if chain.main.label == "VBN"
        else inflect_verb(lemmatize(chain.main.word or "", chain.main.label), VerbForm.PAST_PARTICIPLE)
    )
    by_pp = ParseTree.phrase(
        "PP", [ParseTree.leaf("IN", "by"), to_objective(subject)]
    )
    inner = ParseTree.phrase(
        "VP", [ParseTree.leaf("VBN", participle_word), *mid, by_pp, *trailing]
    )

    neg = [chain.negation] if chain.negation is not None else []
    mid_advs = list(chain.mid_advs)
    if chain.kind == "simple":
        past = chain.finite.label == "VBD"
        aux: list[ParseTree] = [_be_leaf(past, number), *neg, inner]
    elif chain.kind == "do":
        past = chain.finite.label == "VBD"
        aux = [_be_leaf(past, number), *neg, *mid_advs, inner]
    elif chain.kind == "perfect":
        past = chain.finite.label == "VBD"
        aux = [
            _have_leaf(past, number),
            *neg,
            *mid_advs,
            ParseTree.phrase("VP", [ParseTree.leaf("VBN", "been"), inner]),
        ]
    elif chain.kind == "modal":
        aux = [
            chain.finite,
            *neg,
            *mid_advs,
            ParseTree.phrase("VP", [ParseTree.leaf("VB", "be"), inner]),
        ]
    else:  # modal-perfect
        aux = [
            chain.finite,
            *neg,
            *mid_advs,
            ParseTree.phrase(
                "VP",
                [
                    ParseTree.leaf("VB", "have"),
                    ParseTree.phrase("VP", [ParseTree.leaf("VBN", "been"), inner]),
                ],
            ),
        ]

    new_vp = ParseTree.phrase("VP", [*chain.advs, *aux])
    children = list(clause.children)
    children[np_idx] = to_subjective(obj)
    children[vp_idx] = new_vp
    return _rebuild_clause(tree, ParseTree.phrase(clause.label, children))


def active_to_passive(tree: ParseTree) -> Sentence:
    """Transitive matrix clause rendered in the passive voice."""
    return extract_sentence(active_to_passive_tree(tree))


@dataclass(frozen=True)
class _PassiveChain:
    kind: str  # simple | modal | perfect | modal-perfect
    advs: tuple[ParseTree, ...]
    finite: ParseTree
    negation: ParseTree | None
    inner_advs: tuple[ParseTree, ...]
    participle: ParseTree
    after: tuple[ParseTree, ...]


def _participle_step(
    items: list[ParseTree],
) -> tuple[list[ParseTree], ParseTree, list[ParseTree]]:
    step = _next_verb(items)
    if step is None or step[1].label != "VBN":
        raise Inapplicable("no past participle after the be-auxiliary")
    return step


def _resolve_passive_chain(vp: ParseTree) -> _PassiveChain:
    advs, finite, rest = _first_verb_split(vp)
    negation = None
    if rest and rest[0].is_leaf and rest[0].word in _NEGATIONS:
        negation = rest[0]
        rest = rest[1:]
    word = finite.word or ""

    if finite.label in FINITE_TAGS and word in {"was", "were", "is", "are", "am"}:
        advs2, part, after = _participle_step(rest)
        return _PassiveChain(
            "simple", tuple(advs), finite, negation, tuple(advs2), part, tuple(after)
        )
    if finite.label == "MD":
        step = _next_verb(rest)
        if step is None:
            raise Inapplicable("modal without a verb phrase")
        mid, v2, rest2 = step
        if (v2.word or "") == "be":
            advs3, part, after = _participle_step(rest2)
            return _PassiveChain(
                "modal",
                tuple(advs),
                finite,
                negation,
                tuple(mid + advs3),
                part,
                tuple(after),
            )
        if (v2.word or "") == "have":
            step3 = _next_verb(rest2)
            if step3 is not None and (step3[1].word or "") == "been":
                advs4, part, after = _participle_step(step3[2])
                return _PassiveChain(
                    "modal-perfect",
                    tuple(advs),
                    finite,
                    negation,
                    tuple(mid + step3[0] + advs4),
                    part,
                    tuple(after),
                )
        raise Inapplicable("modal chain is not passive")
    if finite.label in FINITE_TAGS and word in HAVE_WORDS:
        step = _next_verb(rest)
        if step is None or (step[1].word or "") != "been":
            raise Inapplicable("perfect chain is not passive")
        mid, _, rest2 = step
        advs3, part, after = _participle_step(rest2)
        return _PassiveChain(
            "perfect",
            tuple(advs),
            finite,
            negation,
            tuple(mid + advs3),
            part,
            tuple(after),
        )
    raise Inapplicable("clause does not match the passive pattern")


def _find_by_phrase(after: tuple[ParseTree, ...]) -> tuple[ParseTree, list[ParseTree]]:
    for i, comp in enumerate(after):
        if comp.base_label == "PP" and comp.children:
            head = comp.children[0]
            if head.is_leaf and head.word == "by":
                agent = next((c for c in comp.children if c.base_label == "NP"), None)
                if agent is not None:
                    return agent, [*after[:i], *after[i + 1 :]]
    raise MissingAgentError("passive clause has no by-phrase")


def passive_to_active_tree(tree: ParseTree) -> ParseTree:
    clause = find_root_clause(tree)
    if clause is None:
        raise Inapplicable("no clause node at the root")
    np_idx, vp_idx = _clause_parts(clause)
    subject = clause.children[np_idx]
    if _has_trace(subject):
        raise Inapplicable("empty subject")
    chain = _resolve_passive_chain(clause.children[vp_idx])
    agent_raw, trailing = _find_by_phrase(chain.after)
    agent = to_subjective(agent_raw)
    number = _np_number_or_sg(agent)
    lemma = lemmatize(chain.participle.word or "", "VBN")
    neg = [chain.negation] if chain.negation is not None else []

    if chain.kind == "simple":
        past = chain.finite.label == "VBD" or (chain.finite.word or "") in {"was", "were"}
        if neg:  # negation needs do-support in the active clause
            do_word = "did" if past else ("does" if number is Number.SINGULAR else "do")
            do_tag = "VBD" if past else ("VBZ" if number is Number.SINGULAR else "VBP")
            verb: list[ParseTree] = [
                ParseTree.leaf(do_tag, do_word),
                *neg,
                ParseTree.leaf("VB", inflect_verb(lemma, VerbForm.BASE)),
            ]
        elif past:
            verb = [ParseTree.leaf("VBD", inflect_verb(lemma, VerbForm.PAST))]
        else:
            verb = [_present_leaf(lemma, number, agent)]
    elif chain.kind == "modal":
        verb = [
            chain.finite,
            *neg,
            ParseTree.leaf("VB", inflect_verb(lemma, VerbForm.BASE)),
        ]
    elif chain.kind == "perfect":
        past = (chain.finite.word or "") == "had"
        verb = [_have_leaf(past, number), *neg, chain.participle]
    else:  # modal-perfect
        verb = [
            chain.finite,
            *neg,
            ParseTree.leaf("VB", "have"),
            chain.participle,
        ]

    new_vp = ParseTree.phrase(
        "VP",
        [*chain.advs, *chain.inner_advs, *verb, to_objective(subject), *trailing],
    )
    children = list(clause.children)
    children[np_idx] = agent
    children[vp_idx] = new_vp
    return _rebuild_clause(tree, ParseTree.phrase(clause.label, children))


def passive_to_active(tree: ParseTree) -> Sentence:
    """Passive matrix clause rendered in the active voice."""
    return extract_sentence(passive_to_active_tree(tree))


# --- prepositional-phrase movement ----------------------------------------


def _strip_final_pp(node: ParseTree) -> tuple[ParseTree, ParseTree] | None:
    """Remove the sentence-final PP on the clause/VP spine, if any."""
    if node.is_leaf or not node.children:
        return None
    last = node.children[-1]
    if last.base_label == "PP":
        return ParseTree.phrase(node.label, node.children[:-1]), last
    if last.base_label == "VP":
        stripped = _strip_final_pp(last)
        if stripped is not None:
            new_last, pp = stripped
            return (
                ParseTree.phrase(node.label, [*node.children[:-1], new_last]),
                pp,
            )
    return None


def move_pp_tree(tree: ParseTree, direction: str) -> ParseTree:
    clause = find_root_clause(tree)
    if clause is None:
        raise Inapplicable("no clause node at the root")
    if direction == "front-to-back":
        first = clause.children[0]
        if first.base_label != "PP":
            raise Inapplicable("no clause-initial PP")
        new_clause = ParseTree.phrase(clause.label, [*clause.children[1:], first])
    elif direction == "back-to-front":
        stripped = _strip_final_pp(clause)
        if stripped is None:
            raise Inapplicable("no clause-final PP")
        remainder, pp = stripped
        head = pp.leaves()[0]
        # An agentive by-phrase is an argument of the passive verb, not a
        # movable adjunct; fronting it is off limits.
        if head.word == "by" and any(l.label == "VBN" for l in clause.leaves()):
            raise Inapplicable("clause-final PP is a passive by-phrase")
        new_clause = ParseTree.phrase(clause.label, [pp, *remainder.children])
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return _rebuild_clause(tree, new_clause)


def move_pp(tree: ParseTree, direction: str) -> Sentence:
    """Relocate a clause-edge PP to the opposite end of the clause."""
    return extract_sentence(move_pp_tree(tree, direction))
