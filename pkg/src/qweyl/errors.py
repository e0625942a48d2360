"""Shared exception types."""


class QweylError(Exception):
    """Base class for all package errors."""


class PoleAtEvaluationPoint(QweylError, ArithmeticError):
    """A denominator vanishes (within tolerance) at the evaluation point."""


class IndexOutOfRange(QweylError, IndexError):
    """A generator index lies outside the configured rank."""


class DescriptorMismatch(QweylError, ValueError):
    """Elements built over different ranks were combined."""


class ShapeMismatch(QweylError, ValueError):
    """Leg counts of states or operators disagree."""


class ParseError(QweylError, ValueError):
    """Syntax or semantic error in an input expression.

    Carries the character offset of the offending token and, when known,
    the set of token kinds that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} (at position {position})"
        if self.expected:
            detail += " expected one of: " + ", ".join(self.expected)
        super().__init__(detail)
