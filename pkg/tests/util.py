"""Shared helpers for the test suite."""

from pathlib import Path

from quizforge.pipeline import Corpus, Sentence, build_corpus, corpus_stats, tokenize
from quizforge.bank import make_material

FIXTURES = Path(__file__).parent / "fixtures"

# Vocabulary for random corpora: every word is its own stem (verified in
# conftest), so oracle counting needs no stemmer of its own.
STEM_STABLE_VOCAB = (
    "blip", "crag", "drum", "fjord", "glyph",
    "knack", "plinth", "quartz", "sprig", "wharf",
)


def corpus_from_texts(texts, material_id="m", stop_words=None):
    """Corpus built directly from sentence strings, no length filtering."""
    sentences = []
    for i, text in enumerate(texts):
        tokens = tokenize(text, stop_words)
        sentences.append(Sentence(index=i, surface=text, tokens=tuple(tokens)))
    return Corpus(
        material_id=material_id,
        documents=tuple(sentences),
        stats=corpus_stats(sentences),
    )


def fixture_material(name):
    path = FIXTURES / name
    return make_material(title=name, body=path.read_text(encoding="utf-8"))


def fixture_corpus(name):
    return build_corpus(fixture_material(name))
