"""Stop-word list handling.

The bundled list (~175 common English function words) ships as package data
and can be replaced per run with any UTF-8 file in the same format: one word
per line, blank lines skipped, '#' starts a comment.
"""

from functools import lru_cache
from importlib import resources
from pathlib import Path


def parse_stopwords(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        entry = line.split("#", 1)[0].strip().lower()
        if entry:
            words.add(entry)
    return frozenset(words)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stop-word file. Matching is done on lowercased token forms."""
    return parse_stopwords(Path(path).read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    text = resources.files("quizforge.data").joinpath("stopwords.txt").read_text(encoding="utf-8")
    return parse_stopwords(text)
