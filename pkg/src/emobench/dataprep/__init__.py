from .cleaning import TextRecord, clean_text, split_sentences, length_filter
from .lexicon import LexiconEntry, load_lexicon, lexicon_score
from .sampling import weighted_sample
from .splits import SplitAssignment, zscore_test_split, kfold_split

__all__ = [
    "TextRecord",
    "clean_text",
    "split_sentences",
    "length_filter",
    "LexiconEntry",
    "load_lexicon",
    "lexicon_score",
    "weighted_sample",
    "SplitAssignment",
    "zscore_test_split",
    "kfold_split",
]
