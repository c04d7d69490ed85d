"""English lemmatization and verb inflection for the tree transforms.

A shipped irregular-verb table is consulted first; everything else goes
through orthographic suffix rules.  Lemmatization of regular forms is
implemented as rule inversion: candidate stems are validated by
re-inflecting and comparing with the surface form, which keeps
``lemmatize`` and ``inflect_verb`` mutually consistent by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources

from .treebank import NOUN_TAGS, PLURAL_NOUN_TAGS, ParseTree


class MorphologyError(Exception):
    pass


class UnknownPOSError(MorphologyError):
    """POS tag outside the noun/verb/adjective/adverb classes."""


class NoHeadNounError(MorphologyError):
    """An NP with no noun or pronoun to take number from."""


class VerbForm(enum.Enum):
    BASE = "base"
    PAST = "past"
    PAST_PARTICIPLE = "past-participle"
    PRESENT_3SG = "present-3sg"
    PRESENT_NON3SG = "present-non3sg"
    GERUND = "gerund"


class Number(enum.Enum):
    SINGULAR = "singular"
    PLURAL = "plural"


_TAG_TO_FORM = {
    "VB": VerbForm.BASE,
    "VBP": VerbForm.PRESENT_NON3SG,
    "VBD": VerbForm.PAST,
    "VBN": VerbForm.PAST_PARTICIPLE,
    "VBZ": VerbForm.PRESENT_3SG,
    "VBG": VerbForm.GERUND,
}

_FORM_TO_TAG = {
    VerbForm.BASE: "VB",
    VerbForm.PRESENT_NON3SG: "VBP",
    VerbForm.PAST: "VBD",
    VerbForm.PAST_PARTICIPLE: "VBN",
    VerbForm.PRESENT_3SG: "VBZ",
    VerbForm.GERUND: "VBG",
}


def form_of_tag(tag: str) -> VerbForm:
    try:
        return _TAG_TO_FORM[tag]
    except KeyError:
        raise UnknownPOSError(f"not a verb tag: {tag!r}") from None


def tag_of_form(form: VerbForm) -> str:
    return _FORM_TO_TAG[form]


@dataclass(frozen=True)
class IrregularTable:
    """lemma -> (past, past-participle, present-3sg), plus reverse maps."""

    entries: dict[str, tuple[str, str, str]]

    @classmethod
    def from_tsv(cls, text: str) -> "IrregularTable":
        entries: dict[str, tuple[str, str, str]] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise ValueError(f"irregular table row needs 4 columns: {line!r}")
            lemma, past, pp, third = (c.strip().lower() for c in cols)
            entries[lemma] = (past, pp, third)
        return cls(entries=entries)

    def lookup(self, lemma: str, form: VerbForm) -> str | None:
        row = self.entries.get(lemma)
        if row is None:
            return None
        if form is VerbForm.PAST:
            return row[0]
        if form is VerbForm.PAST_PARTICIPLE:
            return row[1]
        if form is VerbForm.PRESENT_3SG:
            return row[2]
        return None

    def reverse(self, word: str, form: VerbForm) -> str | None:
        col = {VerbForm.PAST: 0, VerbForm.PAST_PARTICIPLE: 1, VerbForm.PRESENT_3SG: 2}
        idx = col.get(form)
        if idx is None:
            return None
        for lemma, row in self.entries.items():
            if row[idx] == word:
                return lemma
        return None


def _load_default_table() -> IrregularTable:
    text = resources.files("finestyle.data").joinpath("irregular_verbs.tsv").read_text()
    return IrregularTable.from_tsv(text)


IRREGULAR_VERBS = _load_default_table()

_VOWELS = set("aeiou")
# Final consonants that double before -ed/-ing ("plan" -> "planning").
_DOUBLING = set("bdgkmnpt")
_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh", "o")
# Stem-final letters that normally demand a silent e ("urge", "use").
_E_RESTORING = set("cgsvzu")

# Finite forms of "be" are irregular beyond the shared table shape.
_BE_FORMS = {
    "am": VerbForm.PRESENT_NON3SG,
    "is": VerbForm.PRESENT_3SG,
    "are": VerbForm.PRESENT_NON3SG,
    "was": VerbForm.PAST,
    "were": VerbForm.PAST,
    "been": VerbForm.PAST_PARTICIPLE,
    "being": VerbForm.GERUND,
    "be": VerbForm.BASE,
}

_IRREGULAR_PLURALS = {
    "men": "man",
    "women": "woman",
    "children": "child",
    "feet": "foot",
    "teeth": "tooth",
    "mice": "mouse",
    "geese": "goose",
    "lives": "life",
    "wives": "wife",
    "knives": "knife",
    "halves": "half",
    "shelves": "shelf",
    "people": "person",
}
_INVARIANT_NOUNS = frozenset({"series", "species", "news", "means", "headquarters"})


def _doubles_final(lemma: str) -> bool:
    if len(lemma) < 3:
        return False
    a, b, c = lemma[-3], lemma[-2], lemma[-1]
    return c in _DOUBLING and b in _VOWELS and a not in _VOWELS


def _regular_past(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "d"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in _VOWELS:
        return lemma[:-1] + "ied"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def _regular_third(lemma: str) -> str:
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in _VOWELS:
        return lemma[:-1] + "ies"
    if lemma.endswith(_SIBILANT_ENDINGS):
        return lemma + "es"
    return lemma + "s"


def _regular_gerund(lemma: str) -> str:
    if lemma.endswith("ie"):
        return lemma[:-2] + "ying"
    if lemma.endswith("e") and len(lemma) > 2 and lemma[-2] not in "eoy":
        return lemma[:-1] + "ing"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "ing"
    return lemma + "ing"


def inflect_verb(lemma: str, form: VerbForm, number: Number | None = None) -> str:
    """Render a verb citation form in the requested form.

    The irregular table wins over the suffix rules.  ``number`` only
    matters for "be", whose past and present split by subject number.
    """
    lemma = lemma.lower()
    if lemma == "be":
        if form is VerbForm.PAST:
            return "were" if number is Number.PLURAL else "was"
        if form is VerbForm.PRESENT_NON3SG:
            return "are"
    irregular = IRREGULAR_VERBS.lookup(lemma, form)
    if irregular is not None:
        return irregular
    if form is VerbForm.BASE:
        return lemma
    if form is VerbForm.PRESENT_NON3SG:
        return lemma
    if form is VerbForm.PAST or form is VerbForm.PAST_PARTICIPLE:
        return _regular_past(lemma)
    if form is VerbForm.PRESENT_3SG:
        return _regular_third(lemma)
    return _regular_gerund(lemma)


def _strip_past(word: str) -> str:
    if word.endswith("ied"):
        cand = word[:-3] + "y"
        if _regular_past(cand) == word:
            return cand
    if not word.endswith("ed"):
        return word
    stem = word[:-2]
    candidates: list[str] = []
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] in _DOUBLING:
        candidates.append(stem[:-1])
    if len(stem) >= 2 and stem[-1] == stem[-2]:
        candidates.append(stem)
    elif stem and stem[-1] in _E_RESTORING:
        candidates.extend([stem + "e", stem])
    else:
        candidates.extend([stem, stem + "e"])
    for cand in candidates:
        if cand and _regular_past(cand) == word:
            return cand
    return stem or word


def _strip_third(word: str) -> str:
    if word.endswith("ies"):
        cand = word[:-3] + "y"
        if _regular_third(cand) == word:
            return cand
    if word.endswith("es"):
        for cand in (word[:-2], word[:-1]):
            if cand and _regular_third(cand) == word:
                return cand
    if word.endswith("s"):
        cand = word[:-1]
        if cand and _regular_third(cand) == word:
            return cand
    return word


def _strip_gerund(word: str) -> str:
    if not word.endswith("ing"):
        return word
    stem = word[:-3]
    candidates: list[str] = []
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] in _DOUBLING:
        candidates.append(stem[:-1])
    if stem and stem[-1] in _E_RESTORING:
        candidates.extend([stem + "e", stem])
    else:
        candidates.extend([stem, stem + "e"])
    for cand in candidates:
        if cand and _regular_gerund(cand) == word:
            return cand
    return stem or word


def _lemmatize_verb(word: str, form: VerbForm) -> str:
    if word in _BE_FORMS:
        return "be"
    # Reverse lookup first: "lay" as a past form belongs to "lie" even
    # though "lay" is also a lemma in its own right.
    table_hit = IRREGULAR_VERBS.reverse(word, form)
    if table_hit is not None:
        return table_hit
    if word in IRREGULAR_VERBS.entries:
        return word
    if form is VerbForm.PAST or form is VerbForm.PAST_PARTICIPLE:
        return _strip_past(word)
    if form is VerbForm.PRESENT_3SG:
        return _strip_third(word)
    if form is VerbForm.GERUND:
        return _strip_gerund(word)
    return word


def pluralize_noun(lemma: str) -> str:
    if lemma in _INVARIANT_NOUNS:
        return lemma
    reverse = {v: k for k, v in _IRREGULAR_PLURALS.items()}
    if lemma in reverse:
        return reverse[lemma]
    return _regular_third(lemma)


def _lemmatize_noun(word: str, tag: str) -> str:
    if tag not in PLURAL_NOUN_TAGS:
        return word
    if word in _INVARIANT_NOUNS:
        return word
    if word in _IRREGULAR_PLURALS:
        return _IRREGULAR_PLURALS[word]
    if word.endswith("ies"):
        cand = word[:-3] + "y"
        if _regular_third(cand) == word:
            return cand
    if word.endswith("es"):
        for cand in (word[:-2], word[:-1]):
            if cand and _regular_third(cand) == word:
                return cand
    if word.endswith("s") and len(word) > 1:
        return word[:-1]
    return word


def lemmatize(word: str, tag: str) -> str:
    """Dictionary citation form of a token, guided by its POS tag."""
    word = word.lower()
    if tag in NOUN_TAGS:
        return _lemmatize_noun(word, tag)
    if tag in _TAG_TO_FORM:
        return _lemmatize_verb(word, _TAG_TO_FORM[tag])
    if tag in {"JJ", "JJR", "JJS", "RB", "RBR", "RBS"}:
        return word
    raise UnknownPOSError(f"cannot lemmatize tag {tag!r}")


_PLURAL_PRONOUNS = frozenset({"we", "they", "us", "them", "these", "those", "both"})
_SINGULAR_PRONOUNS = frozenset({"i", "he", "she", "it", "him", "her", "me", "this"})
_PRONOUN_TAGS = frozenset({"PRP", "DT", "WP"})


def np_number(np: ParseTree) -> Number:
    """Grammatical number of a noun phrase.

    Head = the rightmost noun/pronoun child, recursing into a rightmost
    nested NP; conjoined NPs count as plural.
    """
    if np.base_label != "NP":
        raise NoHeadNounError(f"not a noun phrase: {np.label}")
    has_cc = any(
        c.is_leaf and c.label == "CC" and c.word in {"and", "or"} for c in np.children
    )
    if has_cc and sum(1 for c in np.children if c.base_label == "NP") >= 2:
        return Number.PLURAL

    for child in reversed(np.children):
        if child.is_leaf:
            if child.label in PLURAL_NOUN_TAGS:
                return Number.PLURAL
            if child.label in NOUN_TAGS:
                return Number.SINGULAR
            if child.label in _PRONOUN_TAGS and child.word in _PLURAL_PRONOUNS:
                return Number.PLURAL
            if child.label == "PRP" and child.word in _SINGULAR_PRONOUNS:
                return Number.SINGULAR
            if child.label == "PRP" and child.word in {"you"}:
                return Number.PLURAL  # agreement-wise "you" patterns with plural
        elif child.base_label == "NP":
            try:
                return np_number(child)
            except NoHeadNounError:
                continue
    raise NoHeadNounError(f"no head noun in {np.label} over {np.words()!r}")


def head_pronoun(np: ParseTree) -> str | None:
    """Surface form of the NP's head personal pronoun, if it has one."""
    for child in reversed(np.children):
        if child.is_leaf and child.label == "PRP":
            return child.word
        if not child.is_leaf and child.base_label == "NP":
            found = head_pronoun(child)
            if found is not None:
                return found
    return None
