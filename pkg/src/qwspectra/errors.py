"""Exception hierarchy shared by every qwspectra module."""


class QWSpectraError(Exception):
    """Base class for all library errors."""


class ParseError(QWSpectraError, ValueError):
    pass


class MalformedLine(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class EdgeCountMismatch(ParseError):
    pass


class InvalidHeader(ParseError):
    pass


class Truncated(ParseError):
    pass


class DimensionMismatch(QWSpectraError, ValueError):
    pass


class NonSquare(DimensionMismatch):
    pass


class NonzeroRemainder(QWSpectraError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""

    def __init__(self, remainder):
        super().__init__(f"nonzero remainder: {remainder}")
        self.remainder = remainder


class NotSymmetric(QWSpectraError, ValueError):
    pass


class ComplexInput(QWSpectraError, ValueError):
    pass


class MissingWeight(QWSpectraError, ValueError):
    pass


class IrrationalWeight(QWSpectraError, ValueError):
    """A square root required in exact mode is not rational."""


class InvalidProbability(QWSpectraError, ValueError):
    pass


class PreconditionViolation(QWSpectraError, ValueError):
    """A hypothesis of the identity being checked is not met by the input."""


class IsolatedVertex(PreconditionViolation):
    pass


class NotRegular(PreconditionViolation):
    pass


class NotRegularEnough(NotRegular):
    pass


class PathLengthTooLarge(QWSpectraError, ValueError):
    pass
