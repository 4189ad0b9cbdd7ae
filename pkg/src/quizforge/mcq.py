"""Cloze question generation: blank a keyword occurrence, sample distractors.

Every occurrence of every extracted keyword becomes one question. The blank
replaces the keyword's exact character span in the source sentence, so
restoring the answer reproduces the sentence verbatim. Distractors are drawn
seeded and without replacement from the material's own keyword pool; option
order is a seeded shuffle, making output fully reproducible.
"""

import json
import random
from collections import Counter
from dataclasses import dataclass, replace
from hashlib import blake2b

from .errors import AlreadyReviewed, InsufficientKeywords, StaleKeyword
from .pipeline import TOKEN_RE, Corpus, Sentence
from .termweight import KeywordSet, WeightedTerm, _windows, term_stems

BLANK = "_____"

SUGGESTED = "suggested"
ACCEPTED = "accepted"
REJECTED = "rejected"


@dataclass(frozen=True)
class Mcq:
    id: str
    material_id: str
    doc_index: int
    stem: str
    options: tuple[str, str, str, str]
    answer: str
    keyword_position: int
    status: str
    seed: int


def question_id(material_id: str, seed: int, doc_index: int, position: int, stems: tuple[str, ...]) -> str:
    """Deterministic 128-bit id; identical inputs give identical questions."""
    raw = "|".join((material_id, str(seed), str(doc_index), str(position), " ".join(stems)))
    return blake2b(raw.encode("utf-8"), digest_size=16).hexdigest()


def _token_spans(sentence: Sentence) -> list[tuple[int, int]]:
    return [m.span() for m in TOKEN_RE.finditer(sentence.surface)]


def _occurrences(doc: Sentence, stems: tuple[str, ...]) -> dict[int, tuple[int, ...]]:
    """first token position -> all token positions, for matching windows."""
    return {
        w.first_position: w.token_positions
        for w in _windows(doc.tokens, len(stems))
        if w.stems == stems
    }


def locate_keyword(keyword: WeightedTerm, corpus: Corpus) -> list[tuple[int, int]]:
    """Every occurrence of the keyword's stem, as (doc_index, position) pairs."""
    stems = term_stems(keyword.term)
    found = []
    for doc in corpus.documents:
        for position in sorted(_occurrences(doc, stems)):
            found.append((doc.index, position))
    if not found:
        raise StaleKeyword(
            f"keyword {keyword.term.text!r} does not occur in material {corpus.material_id!r}"
        )
    return found


def _surface_majority(corpus: Corpus, stems: tuple[str, ...]) -> str:
    """Most frequent surface form of a keyword across the material."""
    counter: Counter = Counter()
    for doc in corpus.documents:
        for w in _windows(doc.tokens, len(stems)):
            if w.stems == stems:
                surfaces = tuple(doc.tokens[p].surface for p in w.token_positions)
                counter[" ".join(surfaces)] += 1
    if not counter:
        raise StaleKeyword(
            f"keyword stem {' '.join(stems)!r} does not occur in material {corpus.material_id!r}"
        )
    return min(counter.items(), key=lambda item: (-item[1], item[0]))[0]


def generate_mcqs(keywords: KeywordSet, corpus: Corpus, seed: int) -> list[Mcq]:
    """One question per keyword occurrence recorded in the keyword set.

    Needs at least 4 distinct keywords in the pool (answer + 3 distractors).
    The same (keywords, corpus, seed) triple always yields the same list,
    ids and option order included.
    """
    if keywords.material_id != corpus.material_id:
        raise StaleKeyword(
            f"keyword set for {keywords.material_id!r} does not match corpus {corpus.material_id!r}"
        )
    docs = {doc.index: doc for doc in corpus.documents}

    pool: dict[tuple[str, ...], str] = {}
    for wt in keywords.keywords:
        stems = term_stems(wt.term)
        if stems not in pool:
            pool[stems] = _surface_majority(corpus, stems)
    if len(pool) < 4:
        raise InsufficientKeywords(
            f"need at least 4 distinct keywords, material has {len(pool)}"
        )

    rng = random.Random(seed)
    questions = []
    for wt in keywords.keywords:
        stems = term_stems(wt.term)
        doc = docs.get(wt.doc_index)
        if doc is None:
            raise StaleKeyword(f"keyword set references unknown document {wt.doc_index}")
        spans = _token_spans(doc)
        occurrences = _occurrences(doc, stems)
        distractor_pool = [text for key, text in pool.items() if key != stems]
        for position in wt.positions:
            token_positions = occurrences.get(position)
            if token_positions is None:
                raise StaleKeyword(
                    f"keyword {wt.term.text!r} not found at document {doc.index} position {position}"
                )
            if list(token_positions) != list(range(token_positions[0], token_positions[-1] + 1)):
                # n-gram interrupted by stop words in the original sentence;
                # no clean span to blank
                continue
            start = spans[token_positions[0]][0]
            end = spans[token_positions[-1]][1]
            stem_text = doc.surface[:start] + BLANK + doc.surface[end:]
            assert stem_text.count(BLANK) == 1, "blank token collides with source text"
            answer = doc.surface[start:end]
            distractors = rng.sample(distractor_pool, 3)
            options = [answer, *distractors]
            rng.shuffle(options)
            questions.append(
                Mcq(
                    id=question_id(corpus.material_id, seed, doc.index, position, stems),
                    material_id=corpus.material_id,
                    doc_index=doc.index,
                    stem=stem_text,
                    options=tuple(options),
                    answer=answer,
                    keyword_position=position,
                    status=SUGGESTED,
                    seed=seed,
                )
            )
    return questions


def apply_review(mcq: Mcq, decision: str) -> Mcq:
    """suggested -> accepted | rejected; anything else is refused."""
    if decision not in ("accept", "reject"):
        raise ValueError(f"decision must be 'accept' or 'reject', got {decision!r}")
    if mcq.status != SUGGESTED:
        raise AlreadyReviewed(f"question {mcq.id} is already {mcq.status}")
    return replace(mcq, status=ACCEPTED if decision == "accept" else REJECTED)


def mcq_to_dict(mcq: Mcq) -> dict:
    return {
        "id": mcq.id,
        "material_id": mcq.material_id,
        "doc_index": mcq.doc_index,
        "stem": mcq.stem,
        "options": list(mcq.options),
        "answer": mcq.answer,
        "keyword_position": mcq.keyword_position,
        "status": mcq.status,
        "seed": mcq.seed,
    }


def mcq_from_dict(data: dict) -> Mcq:
    return Mcq(
        id=data["id"],
        material_id=data["material_id"],
        doc_index=data["doc_index"],
        stem=data["stem"],
        options=tuple(data["options"]),
        answer=data["answer"],
        keyword_position=data["keyword_position"],
        status=data["status"],
        seed=data["seed"],
    )


def questions_to_json(mcqs: list[Mcq]) -> str:
    return json.dumps([mcq_to_dict(m) for m in mcqs], indent=2, ensure_ascii=False) + "\n"
