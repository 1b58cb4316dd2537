"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed presentation text or word text.

    line and column are 1-based when known, None otherwise.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class NotC3Error(ValueError):
    """A relation word is a product of at most two pieces, so no X|Y|Z
    decomposition with non-empty middle word exists."""

    def __init__(self, message, relation_word=None, pieces=None):
        super().__init__(message)
        self.relation_word = relation_word
        self.pieces = pieces


class NotC4Error(ValueError):
    """The presentation fails C(4).

    certificate, when present, is a pair (relation_word, pieces) where
    pieces is a factorisation of relation_word into fewer than four pieces.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class PieceExpectedError(ValueError):
    """A word that must be a piece of the presentation is not one."""


class AmbiguityViolation(RuntimeError):
    """Two distinct prefix factorisations matched where C(4) guarantees
    uniqueness.  Treated as an internal assertion failure: hitting this
    means the index was built from a presentation that is not C(4)."""
