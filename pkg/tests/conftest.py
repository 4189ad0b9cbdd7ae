import pytest

from quizforge.stemming import stable_stem
from quizforge.stopwords import default_stopwords

from util import STEM_STABLE_VOCAB, fixture_corpus, fixture_material


def pytest_configure(config):
    # the random-corpus vocabulary must be stem-invariant and stopword-free,
    # otherwise the oracles would need a stemmer of their own
    for word in STEM_STABLE_VOCAB:
        assert stable_stem(word) == word, word
        assert word not in default_stopwords(), word


@pytest.fixture(scope="session")
def analytical_corpus():
    return fixture_corpus("analytical_engine.txt")


@pytest.fixture(scope="session")
def harvard_corpus():
    return fixture_corpus("harvard_mark.txt")


@pytest.fixture(scope="session")
def photosynthesis_corpus():
    return fixture_corpus("photosynthesis.txt")


@pytest.fixture(scope="session")
def analytical_material():
    return fixture_material("analytical_engine.txt")
