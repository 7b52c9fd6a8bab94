"""Exception types raised by cncodes.

Every domain error derives from :class:`CNCodeError`, so callers (and the CLI)
can catch one class and map it to exit code 1.
"""


class CNCodeError(ValueError):
    """Base class for all domain errors."""


class DimensionError(CNCodeError):
    """Word lengths disagree, or a length is out of the supported range."""


class ParameterError(CNCodeError):
    """A numeric parameter (r, p, q, m, t, ...) is outside its valid range."""


class DegenerateCodeError(CNCodeError):
    """A code has too few words for the requested query."""


class DuplicateWordError(CNCodeError):
    """A code was given the same word twice."""


class PairBudgetError(CNCodeError):
    """Ordered-pair enumeration would exceed the configured budget."""


class CollisionError(CNCodeError):
    """Two functions restrict to the same word on the evaluation set."""

    def __init__(self, i: int, j: int):
        super().__init__(f"functions {i} and {j} agree on every point of V (f - g lies in I(V))")
        self.pair = (i, j)


class ParseError(CNCodeError):
    """Malformed textual input (ANF, truth table, code file, rational)."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotBentError(CNCodeError):
    """A construction that needs a bent function was handed a non-bent one."""


class ReducibleModulusError(CNCodeError):
    """A field modulus factors over GF(2)."""
