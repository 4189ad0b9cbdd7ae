"""Error types shared by all quizforge modules.

Every failure mode the engine can signal has a named exception here, so the
CLI and the HTTP service can map them to exit codes / status codes 1:1.
"""


class QuizforgeError(Exception):
    """Base class for all quizforge errors."""


class EmptyMaterial(QuizforgeError):
    """Material body is empty (or whitespace only)."""


class EmptyCorpus(QuizforgeError):
    """No sentences survived preprocessing."""


class ZeroDenominator(QuizforgeError):
    """A document has no terms of the requested gram size."""


class UnknownTerm(QuizforgeError):
    """Term does not occur in any document of the corpus (df = 0)."""


class InvalidGramSize(QuizforgeError):
    """Gram size must be >= 1."""


class StaleKeyword(QuizforgeError):
    """Keyword has no occurrence in the given corpus (corpus/keyword-set mismatch)."""


class InsufficientKeywords(QuizforgeError):
    """Keyword pool too small to build 4 distinct options."""


class NotFound(QuizforgeError):
    """No entity with the given identifier."""


class AlreadyReviewed(QuizforgeError):
    """Question already left the 'suggested' state."""


class MaterialMismatch(QuizforgeError):
    """Gold set and extracted set belong to different materials."""


class EmptyTruthset(QuizforgeError):
    """A gold-standard keyword set must not be empty."""


class NothingAccepted(QuizforgeError):
    """Material has no accepted questions to bank."""


class UnsupportedUpload(QuizforgeError):
    """Upload is not plain UTF-8 text (e.g. a PDF)."""


class NoExtractionWarning(UserWarning):
    """Precision was requested for an empty extraction; defined as 0."""
