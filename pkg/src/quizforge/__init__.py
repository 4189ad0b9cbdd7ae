"""quizforge: cloze MCQ generation from plain-text lesson materials.

Pipeline: preprocess text into a sentence-document corpus, weight terms by
TF-IDF, blank top keywords into fill-in-the-blank questions, have a teacher
accept or reject them, and keep the accepted ones in a persistent bank.
"""

from .bank import BankEntry, ExamMeta, QuestionBank, content_id, derive_seed, make_material
from .errors import (
    AlreadyReviewed,
    EmptyCorpus,
    EmptyMaterial,
    EmptyTruthset,
    InsufficientKeywords,
    InvalidGramSize,
    MaterialMismatch,
    NoExtractionWarning,
    NotFound,
    NothingAccepted,
    QuizforgeError,
    StaleKeyword,
    UnknownTerm,
    UnsupportedUpload,
    ZeroDenominator,
)
from .mcq import BLANK, Mcq, apply_review, generate_mcqs, locate_keyword, questions_to_json
from .metrics import (
    EvalReport,
    ExtractedSet,
    GoldSet,
    confusion_sets,
    evaluate,
    extracted_set,
    f_measure,
    load_gold_file,
    precision,
    recall,
)
from .pipeline import (
    Corpus,
    CorpusStats,
    RawMaterial,
    Sentence,
    Token,
    build_corpus,
    corpus_stats,
    filter_short_sentences,
    remove_noise,
    split_sentences,
    tokenize,
)
from .stemming import porter_stem, stable_stem
from .stopwords import default_stopwords, load_stopwords
from .termweight import (
    KeywordSet,
    Term,
    WeightedTerm,
    extract_keywords,
    inverse_document_frequency,
    keywords_to_json,
    ngrams,
    term_frequency,
    tfidf,
)

__version__ = "0.1.0"
