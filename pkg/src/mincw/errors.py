"""Exception types raised across the package."""


class MincwError(Exception):
    """Base class for all package errors."""


class BadParameter(MincwError, ValueError):
    pass


class RankDeficient(MincwError, ValueError):
    pass


class NotACodeword(MincwError, ValueError):
    pass


class ZeroWord(MincwError, ValueError):
    pass


class TooLarge(MincwError, ValueError):
    pass


class LengthOverflow(MincwError, ValueError):
    pass


class BadPermutation(MincwError, ValueError):
    pass


class UnknownG(MincwError, KeyError):
    pass


class BudgetExceeded(MincwError, RuntimeError):
    """Raised when a search budget runs out; carries the best-so-far result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class SelfLoop(MincwError, ValueError):
    pass


class EdgeOverflow(MincwError, ValueError):
    pass


class AcyclicGraph(MincwError, ValueError):
    pass


class ParseError(MincwError, ValueError):
    """Malformed input file."""
