"""TF-IDF term weighting over the sentence-document corpus.

Each sentence of a material is one document. Terms are n-grams over the
stop-word-free token sequence; counting happens on stems so inflected forms
share one document frequency, while the reported term text is the most
frequent lowercase form seen for that stem.

Ranking is deterministic: descending weight, then descending TF, then
earlier sentence, then earlier position, then term text.
"""

import json
import math
from collections import Counter
from dataclasses import dataclass

from .errors import EmptyCorpus, InvalidGramSize, UnknownTerm, ZeroDenominator
from .pipeline import Corpus, Sentence, Token, remove_noise
from .stemming import stable_stem

DEFAULT_TOP_K = 5


@dataclass(frozen=True)
class Term:
    text: str
    n: int


@dataclass(frozen=True)
class WeightedTerm:
    term: Term
    doc_index: int
    tf: float
    idf: float
    weight: float
    positions: tuple[int, ...]


@dataclass(frozen=True)
class KeywordSet:
    material_id: str
    keywords: tuple[WeightedTerm, ...]


@dataclass(frozen=True)
class _Window:
    """One n-gram occurrence inside a document."""
    stems: tuple[str, ...]
    normals: tuple[str, ...]
    first_position: int
    token_positions: tuple[int, ...]


def term_stems(term: Term) -> tuple[str, ...]:
    """Stem key under which a term is counted."""
    return tuple(stable_stem(part) for part in term.text.split())


def _windows(tokens: list[Token] | tuple[Token, ...], n: int) -> list[_Window]:
    if n < 1:
        raise InvalidGramSize(f"gram size must be >= 1, got {n}")
    content = remove_noise(list(tokens))
    windows = []
    for start in range(len(content) - n + 1):
        group = content[start : start + n]
        windows.append(
            _Window(
                stems=tuple(t.stem for t in group),
                normals=tuple(t.normal for t in group),
                first_position=group[0].position,
                token_positions=tuple(t.position for t in group),
            )
        )
    return windows


def ngrams(tokens: list[Token], n: int) -> list[Term]:
    """All contiguous n-grams over the stop-word-free token sequence."""
    return [Term(text=" ".join(w.normals), n=n) for w in _windows(tokens, n)]


def term_frequency(t: Term, d: Sentence) -> float:
    """Occurrences of t in d divided by d's term count at that gram size."""
    windows = _windows(d.tokens, t.n)
    if not windows:
        raise ZeroDenominator(
            f"document {d.index} has no terms of gram size {t.n}"
        )
    key = term_stems(t)
    count = sum(1 for w in windows if w.stems == key)
    return count / len(windows)


def document_frequency(t: Term, corpus: Corpus) -> int:
    key = term_stems(t)
    df = 0
    for doc in corpus.documents:
        if any(w.stems == key for w in _windows(doc.tokens, t.n)):
            df += 1
    return df


def inverse_document_frequency(t: Term, corpus: Corpus) -> float:
    """ln(N / df). Zero exactly when the term occurs in every document."""
    if not corpus.documents:
        raise EmptyCorpus("corpus has no documents")
    df = document_frequency(t, corpus)
    if df == 0:
        raise UnknownTerm(f"term {t.text!r} occurs in no document")
    return math.log(len(corpus.documents) / df)


def tfidf(t: Term, d: Sentence, corpus: Corpus) -> WeightedTerm:
    """Weight of term t in document d: TF x IDF."""
    tf = term_frequency(t, d)
    idf = inverse_document_frequency(t, corpus)
    key = term_stems(t)
    positions = tuple(
        w.first_position for w in _windows(d.tokens, t.n) if w.stems == key
    )
    return WeightedTerm(
        term=t,
        doc_index=d.index,
        tf=tf,
        idf=idf,
        weight=tf * idf,
        positions=positions,
    )


def _rendering_for_stems(normal_counts: dict[tuple[str, ...], Counter]) -> dict[tuple[str, ...], str]:
    """Pick the most frequent normal form per stem key; ties go alphabetical."""
    rendering = {}
    for key, counter in normal_counts.items():
        best = min(counter.items(), key=lambda item: (-item[1], item[0]))
        rendering[key] = " ".join(best[0])
    return rendering


def extract_keywords(corpus: Corpus, n: int = 1, top_k: int = DEFAULT_TOP_K) -> KeywordSet:
    """Top-k terms per sentence-document by TF-IDF weight.

    Documents with fewer distinct terms contribute fewer keywords; documents
    with no terms of the requested gram size contribute none. The resulting
    keyword list is globally ordered by the deterministic ranking rule.
    """
    if n < 1:
        raise InvalidGramSize(f"gram size must be >= 1, got {n}")
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    if not corpus.documents:
        raise EmptyCorpus("corpus has no documents")

    doc_windows = {doc.index: _windows(doc.tokens, n) for doc in corpus.documents}

    df: Counter = Counter()
    normal_counts: dict[tuple[str, ...], Counter] = {}
    for windows in doc_windows.values():
        for key in {w.stems for w in windows}:
            df[key] += 1
        for w in windows:
            normal_counts.setdefault(w.stems, Counter())[w.normals] += 1
    rendering = _rendering_for_stems(normal_counts)

    n_docs = len(corpus.documents)
    selected: list[WeightedTerm] = []
    for doc in corpus.documents:
        windows = doc_windows[doc.index]
        if not windows:
            continue
        occurrences: dict[tuple[str, ...], list[int]] = {}
        for w in windows:
            occurrences.setdefault(w.stems, []).append(w.first_position)
        candidates = []
        for key, positions in occurrences.items():
            tf = len(positions) / len(windows)
            idf = math.log(n_docs / df[key])
            candidates.append(
                WeightedTerm(
                    term=Term(text=rendering[key], n=n),
                    doc_index=doc.index,
                    tf=tf,
                    idf=idf,
                    weight=tf * idf,
                    positions=tuple(positions),
                )
            )
        candidates.sort(key=_rank_key)
        selected.extend(candidates[:top_k])

    selected.sort(key=_rank_key)
    return KeywordSet(material_id=corpus.material_id, keywords=tuple(selected))


def _rank_key(wt: WeightedTerm):
    return (-wt.weight, -wt.tf, wt.doc_index, wt.positions[0], wt.term.text)


def keywords_to_json(keyword_set: KeywordSet) -> str:
    """Canonical JSON dump consumed by the evaluation harness."""
    rows = [
        {
            "term": wt.term.text,
            "doc_index": wt.doc_index,
            "tf": wt.tf,
            "idf": wt.idf,
            "weight": wt.weight,
            "positions": list(wt.positions),
        }
        for wt in keyword_set.keywords
    ]
    return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
