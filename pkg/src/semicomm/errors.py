"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SemigroupError(Exception):
    """Base class for all errors raised by semicomm."""


class IndexOutOfRange(SemigroupError, ValueError):
    pass


class NotAssociative(SemigroupError, ValueError):
    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"associativity fails at (a, b, c) = ({a}, {b}, {c})")
        self.triple = triple


class NotInverseSemigroup(SemigroupError, ValueError):
    pass


class NotCompletelyRegular(SemigroupError, ValueError):
    pass


class CommutativeSemigroup(SemigroupError, ValueError):
    """The commuting graph of a commutative semigroup has no vertices."""


class TooLarge(SemigroupError, ValueError):
    pass


class BadN(SemigroupError, ValueError):
    pass


class InvalidSandwichEntry(SemigroupError, ValueError):
    pass


class UnknownFormat(SemigroupError, ValueError):
    pass


class OrderUnsupported(SemigroupError, ValueError):
    pass


class UnknownTheorem(SemigroupError, KeyError):
    pass


class BadParams(SemigroupError, ValueError):
    pass


class ParseError(SemigroupError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
