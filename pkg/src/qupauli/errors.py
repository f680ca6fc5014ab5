"""Exception hierarchy shared by every module."""


class QupauliError(Exception):
    """Base class for all library errors."""


class NotAUnit(QupauliError, ValueError):
    pass


class ShapeMismatch(QupauliError, ValueError):
    pass


class RingMismatch(QupauliError, ValueError):
    pass


class NotSquare(QupauliError, ValueError):
    pass


class OutOfRange(QupauliError, ValueError):
    pass


class NotAlternating(QupauliError, ValueError):
    pass


class DimensionMismatch(QupauliError, ValueError):
    pass


class InvalidRelation(QupauliError, ValueError):
    pass


class InvalidScaling(QupauliError, ValueError):
    pass


class NotNonCommuting(QupauliError, ValueError):
    pass


class NotInvertible(QupauliError, ValueError):
    pass


class NotPairs(QupauliError, ValueError):
    pass


class NotInSpan(QupauliError, ValueError):
    pass


class CapExceeded(QupauliError, RuntimeError):
    pass


class TooLarge(QupauliError, ValueError):
    pass


class ParseError(QupauliError, ValueError):
    """Malformed text input; ``position`` is a (line, column) pair, 1-based."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (line {position[0]}, column {position[1]})"
        super().__init__(message)
