from __future__ import annotations

import pytest

from finestyle.lexicon import Lexicon
from finestyle.treebank import ParseTree, parse_bracketed


def tree(text: str) -> ParseTree:
    return parse_bracketed(text)


@pytest.fixture
def svo_tree() -> ParseTree:
    return tree("(S (NP (DT the) (NN cat)) (VP (VBD chased) (NP (DT the) (NN dog))))")


DATA_NOUN = """\
  1 fixture header line that parsers must skip
00001740 03 n 02 shift 0 displacement 0 000 | a change of position
00002000 09 n 01 confidence 0 001 ! 00002100 n 0101 | belief
00002100 09 n 01 diffidence 0 001 ! 00002000 n 0101 | self-doubt
00003000 04 n 02 underwriter 0 investment_banker 0 000 | one who underwrites
"""

INDEX_NOUN = """\
  1 fixture header line that parsers must skip
shift n 1 0 1 0 00001740
displacement n 1 0 1 0 00001740
confidence n 1 1 ! 1 0 00002000
diffidence n 1 1 ! 1 0 00002100
underwriter n 1 0 1 0 00003000
investment_banker n 1 0 1 0 00003000
"""

DATA_VERB = """\
00721658 31 v 02 expect 0 anticipate 0 000 01 + 08 00 | regard as likely
"""

INDEX_VERB = """\
expect v 1 0 1 0 00721658
anticipate v 1 0 1 0 00721658
"""

DATA_ADJ = """\
00100000 00 a 01 original(a) 0 001 ! 00100100 a 0101 | first
00100100 00 s 01 unoriginal 0 001 ! 00100000 a 0101 | copied
00100200 00 a 02 similar 0 alike 0 000 | resembling
"""

INDEX_ADJ = """\
original a 1 1 ! 1 0 00100000
unoriginal a 1 1 ! 1 0 00100100
similar a 1 0 1 0 00100200
alike a 1 0 1 0 00100200
"""


@pytest.fixture
def wordnet_dir(tmp_path):
    wn = tmp_path / "wn"
    wn.mkdir()
    (wn / "data.noun").write_text(DATA_NOUN)
    (wn / "index.noun").write_text(INDEX_NOUN)
    (wn / "data.verb").write_text(DATA_VERB)
    (wn / "index.verb").write_text(INDEX_VERB)
    (wn / "data.adj").write_text(DATA_ADJ)
    (wn / "index.adj").write_text(INDEX_ADJ)
    return wn


@pytest.fixture
def tiny_lexicon() -> Lexicon:
    lex = Lexicon()
    lex.add_synonym("shift", "noun", "displacement")
    lex.add_synonym("cat", "noun", "feline")
    lex.add_synonym("expect", "verb", "anticipate")
    lex.add_synonym("similar", "adjective", "alike")
    lex.add_antonym("confidence", "noun", "diffidence")
    lex.add_antonym("note", "verb", "ignore")
    lex.add_antonym("original", "adjective", "unoriginal")
    lex.close_antonyms()
    lex.frequency = {"displacement": 3, "feline": 1, "anticipate": 2}
    return lex
