"""Synonym/antonym lookup and lemma frequency ranking.

Two load paths produce the same in-memory ``Lexicon``: the native TSV
format (lemma, pos-class, SYN|ANT, target) and a reader for WordNet 3.0
database directories (index.* / data.* files).  Synonym list order is
deterministic: sense order when imported from WordNet, file order when
native, so replacements are reproducible.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .treebank import Sentence

POS_CLASSES = ("noun", "verb", "adjective")


class LexiconError(Exception):
    pass


class MalformedLineError(LexiconError):
    """A native lexicon/frequency line with the wrong shape."""


class DuplicateKeyError(LexiconError):
    """The same relation record appears twice in a native file."""


class MissingFileError(LexiconError, FileNotFoundError):
    """A required WordNet database file is absent."""


class WordNetParseError(LexiconError):
    """Unparseable WordNet data; carries the byte offset of the bad line."""

    def __init__(self, message: str, path: Path, byte_offset: int):
        super().__init__(f"{path}: byte {byte_offset}: {message}")
        self.path = path
        self.byte_offset = byte_offset


class NoSynonymsError(LexiconError):
    """rank_synonyms asked about a lemma with an empty synonym list."""


Key = tuple[str, str]  # (lemma, pos-class)


@dataclass
class Lexicon:
    synonyms: dict[Key, list[str]] = field(default_factory=dict)
    antonyms: dict[Key, list[str]] = field(default_factory=dict)
    frequency: dict[str, int] = field(default_factory=dict)

    def synonyms_of(self, lemma: str, pos: str) -> list[str]:
        return self.synonyms.get((lemma, pos), [])

    def antonyms_of(self, lemma: str, pos: str) -> list[str]:
        return self.antonyms.get((lemma, pos), [])

    def _add(self, table: dict[Key, list[str]], key: Key, value: str) -> None:
        values = table.setdefault(key, [])
        if value not in values:
            values.append(value)

    def add_synonym(self, lemma: str, pos: str, other: str) -> None:
        if other != lemma:
            self._add(self.synonyms, (lemma, pos), other)

    def add_antonym(self, lemma: str, pos: str, other: str) -> None:
        if other != lemma:
            self._add(self.antonyms, (lemma, pos), other)

    def close_antonyms(self) -> None:
        """Symmetric closure: b in ant(a) implies a in ant(b)."""
        for (lemma, pos), others in list(self.antonyms.items()):
            for other in list(others):
                self._add(self.antonyms, (other, pos), lemma)

    def to_tsv(self) -> str:
        lines = ["# lemma\tpos\trelation\ttarget"]
        for (lemma, pos), others in self.synonyms.items():
            for other in others:
                lines.append(f"{lemma}\t{pos}\tSYN\t{other}")
        for (lemma, pos), others in self.antonyms.items():
            for other in others:
                lines.append(f"{lemma}\t{pos}\tANT\t{other}")
        return "\n".join(lines) + "\n"


def load_lexicon(path: str | Path, frequency_path: str | Path | None = None) -> Lexicon:
    """Load the native TSV lexicon (and optionally a frequency table)."""
    lex = Lexicon()
    seen: set[tuple[str, str, str, str]] = set()
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise MalformedLineError(f"{path}:{lineno}: expected 4 columns, got {len(cols)}")
        lemma, pos, relation, target = (c.strip() for c in cols)
        if pos not in POS_CLASSES:
            raise MalformedLineError(f"{path}:{lineno}: unknown pos class {pos!r}")
        if relation not in {"SYN", "ANT"}:
            raise MalformedLineError(f"{path}:{lineno}: unknown relation {relation!r}")
        record = (lemma, pos, relation, target)
        if record in seen:
            raise DuplicateKeyError(f"{path}:{lineno}: duplicate record {record!r}")
        seen.add(record)
        if relation == "SYN":
            lex.add_synonym(lemma.lower(), pos, target.lower())
        else:
            lex.add_antonym(lemma.lower(), pos, target.lower())
    lex.close_antonyms()
    if frequency_path is not None:
        lex.frequency = load_frequency(frequency_path)
    return lex


def load_frequency(path: str | Path) -> dict[str, int]:
    freq: dict[str, int] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise MalformedLineError(f"{path}:{lineno}: expected 2 columns")
        try:
            count = int(cols[1])
        except ValueError:
            raise MalformedLineError(f"{path}:{lineno}: count is not an integer") from None
        if count < 0:
            raise MalformedLineError(f"{path}:{lineno}: negative count")
        freq[cols[0].strip().lower()] = count
    return freq


def dump_frequency(freq: dict[str, int]) -> str:
    lines = ["# lemma\tcount"]
    for lemma in sorted(freq):
        lines.append(f"{lemma}\t{freq[lemma]}")
    return "\n".join(lines) + "\n"


# --- WordNet 3.0 database-file import ------------------------------------

_WN_FILES = {
    "noun": ("index.noun", "data.noun"),
    "verb": ("index.verb", "data.verb"),
    "adjective": ("index.adj", "data.adj"),
}
_SS_TYPE_TO_CLASS = {"n": "noun", "v": "verb", "a": "adjective", "s": "adjective"}
_ADJ_MARKERS = ("(a)", "(p)", "(ip)")


def _clean_wn_lemma(raw: str) -> str:
    for marker in _ADJ_MARKERS:
        if raw.endswith(marker):
            raw = raw[: -len(marker)]
    # Multiword lemmas become single hyphenated tokens.
    return raw.replace("_", "-").lower()


@dataclass(frozen=True)
class _Synset:
    offset: int
    members: tuple[str, ...]
    # (source_word_index_1based_or_0, target_offset, target_pos, target_word_index)
    antonym_pointers: tuple[tuple[int, int, str, int], ...]


def _parse_data_file(path: Path) -> dict[int, _Synset]:
    if not path.exists():
        raise MissingFileError(f"missing WordNet file: {path}")
    synsets: dict[int, _Synset] = {}
    offset = 0
    data = path.read_bytes()
    for raw_line in data.splitlines(keepends=True):
        line_start = offset
        offset += len(raw_line)
        line = raw_line.decode("utf-8", errors="strict").rstrip("\n")
        if not line or line.startswith(" "):  # license header block
            continue
        fields = line.split(" ")
        try:
            ss_offset = int(fields[0])
            w_cnt = int(fields[3], 16)
            words: list[str] = []
            idx = 4
            for _ in range(w_cnt):
                words.append(_clean_wn_lemma(fields[idx]))
                idx += 2  # skip lex_id
            p_cnt = int(fields[idx])
            idx += 1
            antonyms: list[tuple[int, int, str, int]] = []
            for _ in range(p_cnt):
                symbol = fields[idx]
                tgt_offset = int(fields[idx + 1])
                tgt_pos = fields[idx + 2]
                st = fields[idx + 3]
                idx += 4
                if symbol == "!":
                    antonyms.append((int(st[:2], 16), tgt_offset, tgt_pos, int(st[2:], 16)))
        except (IndexError, ValueError) as exc:
            raise WordNetParseError(str(exc), path, line_start) from exc
        synsets[ss_offset] = _Synset(
            offset=ss_offset, members=tuple(words), antonym_pointers=tuple(antonyms)
        )
    return synsets


def _parse_index_file(path: Path) -> list[tuple[str, list[int]]]:
    """(lemma, synset offsets in sense order) per index line."""
    if not path.exists():
        raise MissingFileError(f"missing WordNet file: {path}")
    entries: list[tuple[str, list[int]]] = []
    offset = 0
    data = path.read_bytes()
    for raw_line in data.splitlines(keepends=True):
        line_start = offset
        offset += len(raw_line)
        line = raw_line.decode("utf-8", errors="strict").rstrip("\n")
        if not line or line.startswith(" "):
            continue
        fields = line.split(" ")
        try:
            lemma = _clean_wn_lemma(fields[0])
            synset_cnt = int(fields[2])
            p_cnt = int(fields[3])
            # lemma pos synset_cnt p_cnt ptrs... sense_cnt tagsense_cnt offsets...
            offsets = [int(f) for f in fields[4 + p_cnt + 2 :]]
            if len(offsets) != synset_cnt:
                raise ValueError(
                    f"expected {synset_cnt} synset offsets, found {len(offsets)}"
                )
        except (IndexError, ValueError) as exc:
            raise WordNetParseError(str(exc), path, line_start) from exc
        entries.append((lemma, offsets))
    return entries


def import_wordnet(directory: str | Path, output_path: str | Path | None = None) -> Lexicon:
    """Build a Lexicon from a WordNet 3.0 database directory.

    Synonyms are co-members of any synset of the lemma, in sense order;
    antonyms follow the ``!`` pointers (lemma-level when word indices
    are given, otherwise between all member pairs).  When
    ``output_path`` is given the native TSV is written there too.
    """
    directory = Path(directory)
    lex = Lexicon()
    for pos_class, (index_name, data_name) in _WN_FILES.items():
        synsets = _parse_data_file(directory / data_name)
        index = _parse_index_file(directory / index_name)
        for lemma, offsets in index:
            for ss_offset in offsets:
                synset = synsets.get(ss_offset)
                if synset is None:
                    continue
                for member in synset.members:
                    lex.add_synonym(lemma, pos_class, member)
        for synset in synsets.values():
            for src_idx, tgt_offset, tgt_pos, tgt_idx in synset.antonym_pointers:
                target_class = _SS_TYPE_TO_CLASS.get(tgt_pos)
                if target_class != pos_class:
                    continue  # cross-class pointers are out of scope
                target = synsets.get(tgt_offset)
                if target is None:
                    continue
                sources = (
                    synset.members
                    if src_idx == 0
                    else synset.members[src_idx - 1 : src_idx]
                )
                targets = (
                    target.members if tgt_idx == 0 else target.members[tgt_idx - 1 : tgt_idx]
                )
                for a in sources:
                    for b in targets:
                        lex.add_antonym(a, pos_class, b)
    lex.close_antonyms()
    if output_path is not None:
        Path(output_path).write_text(lex.to_tsv(), encoding="utf-8")
    return lex


# --- frequency ranking ----------------------------------------------------


def build_frequency(corpus: Iterable[Sentence]) -> dict[str, int]:
    """Token counts over a normalized corpus.

    Tokens in a normalized corpus are already lowercase; each token is
    taken as its own citation form, so the count of a lemma is the
    count of tokens equal to it.
    """
    counts: collections.Counter[str] = collections.Counter()
    for sentence in corpus:
        counts.update(sentence.tokens)
    return dict(counts)


def rank_synonyms(lexicon: Lexicon, lemma: str, pos: str, mode: str) -> str:
    """The synonym with extreme corpus frequency.

    mode is "most-frequent" or "least-frequent"; ties break
    lexicographically ascending.  Never returns the query lemma.
    """
    if mode not in {"most-frequent", "least-frequent"}:
        raise ValueError(f"unknown mode {mode!r}")
    candidates = lexicon.synonyms_of(lemma, pos)
    if not candidates:
        raise NoSynonymsError(f"no synonyms for ({lemma!r}, {pos})")
    freq = lexicon.frequency
    if mode == "most-frequent":
        return min(candidates, key=lambda c: (-freq.get(c, 0), c))
    return min(candidates, key=lambda c: (freq.get(c, 0), c))
