"""Exception types shared across the package.

The CLI maps these onto exit codes: input/schema/guard problems exit 2,
parse and evaluation problems exit 1.
"""


class QuantrelError(Exception):
    """Base class for all package errors."""


class ShapeMismatchError(QuantrelError):
    """Relations were combined with incompatible index sets or quantales."""


class EnumerationLimitError(QuantrelError):
    """A requested enumeration or materialization exceeds its size guard."""


class LexiconFormatError(QuantrelError):
    """A lexicon file violates the documented JSON schema."""


class UnknownWordError(QuantrelError):
    """A sentence contains a word the lexicon does not list."""

    def __init__(self, word: str):
        self.word = word
        super().__init__(f"unknown word: {word!r}")


class ParseFailureError(QuantrelError):
    """No derivation of the sentence exists."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at token {position})")


class AmbiguousParseError(QuantrelError):
    """More than one derivation of the sentence exists."""


class EmptyRestrictorError(QuantrelError):
    """A proportion was requested against a set with zero sigma-count."""


class EvaluationError(QuantrelError):
    """A sentence cannot be evaluated by the requested method."""
