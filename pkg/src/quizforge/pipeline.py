"""Text preprocessing: raw lesson material to a cleaned, tokenized corpus.

A lesson material is split into sentences, each sentence is tokenized and
flagged for stop words, short sentences are dropped, and the result is an
immutable corpus where every sentence acts as one document, together with
descriptive word-count statistics.
"""

import re
from dataclasses import dataclass, replace

from .errors import EmptyCorpus, EmptyMaterial
from .stemming import stable_stem
from .stopwords import default_stopwords

# Tokens are maximal runs of alphanumeric characters; underscore excluded.
TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

# Sentence boundary: terminal punctuation followed by whitespace. No
# abbreviation handling; occasional over-splitting is harmless downstream.
_BOUNDARY_RE = re.compile(r"(?<=[.!?])\s+")

DEFAULT_MIN_SENTENCE_LEN = 5


@dataclass(frozen=True)
class RawMaterial:
    id: str
    title: str
    body: str


@dataclass(frozen=True)
class Token:
    surface: str
    normal: str
    stem: str
    position: int
    is_stopword: bool


@dataclass(frozen=True)
class Sentence:
    index: int
    surface: str
    tokens: tuple[Token, ...]
    # index the sentence had before short-sentence filtering
    source_index: int = -1

    def __post_init__(self):
        if self.source_index < 0:
            object.__setattr__(self, "source_index", self.index)


@dataclass(frozen=True)
class CorpusStats:
    n_sentences: int
    n_words: int
    min_len: int
    max_len: int
    mean_len: float


@dataclass(frozen=True)
class Corpus:
    material_id: str
    documents: tuple[Sentence, ...]
    stats: CorpusStats


def tokenize(sentence_text: str, stop_words: frozenset[str] | None = None) -> list[Token]:
    """Split text into tokens carrying surface, lowercased and stemmed forms.

    Punctuation is dropped; numerals survive as tokens. Text without any
    word character yields an empty list.
    """
    if stop_words is None:
        stop_words = default_stopwords()
    tokens = []
    for position, match in enumerate(TOKEN_RE.finditer(sentence_text)):
        surface = match.group()
        normal = surface.lower()
        tokens.append(
            Token(
                surface=surface,
                normal=normal,
                stem=stable_stem(normal),
                position=position,
                is_stopword=normal in stop_words,
            )
        )
    return tokens


def split_sentences(material: RawMaterial, stop_words: frozenset[str] | None = None) -> list[Sentence]:
    """Split a material body into tokenized sentences.

    A sentence ends at '.', '!' or '?' followed by whitespace; end of input
    closes the last sentence. Segments with no word characters are dropped.
    """
    if not material.body or not material.body.strip():
        raise EmptyMaterial(f"material {material.id!r} has an empty body")
    sentences = []
    for segment in _BOUNDARY_RE.split(material.body):
        surface = segment.strip()
        if not surface:
            continue
        tokens = tokenize(surface, stop_words)
        if not tokens:
            continue
        index = len(sentences)
        sentences.append(Sentence(index=index, surface=surface, tokens=tuple(tokens)))
    if not sentences:
        raise EmptyMaterial(f"material {material.id!r} has no tokenizable content")
    return sentences


def remove_noise(tokens: list[Token]) -> list[Token]:
    """Drop stop-word tokens; survivors keep their original positions."""
    return [t for t in tokens if not t.is_stopword]


def filter_short_sentences(sentences: list[Sentence], min_len: int = DEFAULT_MIN_SENTENCE_LEN) -> list[Sentence]:
    """Keep sentences with at least min_len raw words (boundary included).

    Word counts are taken before stop-word removal. Survivors are re-indexed
    contiguously; source_index preserves where each came from.
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    kept = []
    for sentence in sentences:
        if len(sentence.tokens) >= min_len:
            kept.append(
                replace(sentence, index=len(kept), source_index=sentence.source_index)
            )
    if not kept:
        raise EmptyCorpus(f"no sentence has {min_len} or more words")
    return kept


def corpus_stats(sentences: list[Sentence]) -> CorpusStats:
    """Min / max / mean of per-sentence word counts."""
    if not sentences:
        raise EmptyCorpus("cannot compute statistics of an empty sentence list")
    lengths = [len(s.tokens) for s in sentences]
    return CorpusStats(
        n_sentences=len(lengths),
        n_words=sum(lengths),
        min_len=min(lengths),
        max_len=max(lengths),
        mean_len=sum(lengths) / len(lengths),
    )


def build_corpus(
    material: RawMaterial,
    stop_words: frozenset[str] | None = None,
    min_sentence_len: int = DEFAULT_MIN_SENTENCE_LEN,
) -> Corpus:
    """Full preprocessing run: split, tokenize, stats, filter.

    Statistics are computed before filtering, so they describe the material
    as written, including the short sentences that get removed.
    """
    sentences = split_sentences(material, stop_words)
    stats = corpus_stats(sentences)
    documents = filter_short_sentences(sentences, min_sentence_len)
    return Corpus(material_id=material.id, documents=tuple(documents), stats=stats)
