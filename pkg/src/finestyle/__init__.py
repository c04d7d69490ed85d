"""Rule-based fine-grained text style transfer over constituency trees."""

__version__ = "0.1.0"

from .analysis import DifficultyReport, corpus_stats, difficulty_report, hamming, tier_of
from .composition import (
    Dimension,
    ParallelPair,
    TransferLabel,
    atomic_transfer,
    compose_grid,
    emit_dataset,
    get_dimension,
    reverse_chain,
)
from .errors import Inapplicable, MissingAgentError
from .lexical import Replacement, replace_by_frequency, replace_lexical
from .lexicon import Lexicon, build_frequency, import_wordnet, load_lexicon, rank_synonyms
from .metrics import ScoreReport, bleu, rouge_l, score_report
from .morphology import Number, VerbForm, inflect_verb, lemmatize, np_number
from .registry import TRANSFERS, Transfer, get_transfer
from .semantic import Deletion, remove_adj_adv, remove_pp, remove_substatement
from .syntax import (
    ClauseAnalysis,
    active_to_passive,
    move_pp,
    passive_to_active,
    to_tense,
)
from .treebank import (
    ParseTree,
    Sentence,
    extract_sentence,
    filter_corpus,
    iter_corpus,
    normalize,
    normalize_tree,
    parse_bracketed,
    replace_numerals,
    serialize,
)
