"""Exception types raised across the package."""


class IdentityError(Exception):
    """Base class for every error raised by this package."""


class NotAUnit(IdentityError, ArithmeticError):
    """An inverse was requested for a ring element that is not invertible."""


class EvalAtZero(IdentityError, ZeroDivisionError):
    """A Laurent polynomial with negative t-powers was evaluated at t = 0."""


class OrderMismatch(IdentityError, ValueError):
    """Two truncated series of different order were combined."""


class InvalidParameter(IdentityError, ValueError):
    """A parameter lies outside the domain an identity is stated for."""


class SequenceTooShort(IdentityError, IndexError):
    """A sequence was indexed beyond the terms it holds."""


class FineSpecInvalid(IdentityError, ValueError):
    """A product specification violates the unit-tail rule."""


class ParseError(IdentityError, ValueError):
    """A sequence expression could not be parsed.

    ``offset`` is the 0-based byte offset where parsing stopped.
    """

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
        self.text = text


class DivisionByZero(IdentityError, ZeroDivisionError):
    """A sequence expression divided by zero at some index ``n``."""

    def __init__(self, n: int):
        super().__init__(f"division by zero while evaluating at n={n}")
        self.n = n
