"""Exception types raised across the package."""

from __future__ import annotations


class BicliqueError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateEdge(BicliqueError, ValueError):
    def __init__(self, u: int, v: int, line: int | None = None):
        self.u = u
        self.v = v
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate edge ({u}, {v}){where}")


class ConflictingSign(DuplicateEdge):
    """A duplicate edge whose two occurrences carry different signs."""


class CrossSideComparison(BicliqueError, ValueError):
    pass


class MissingEdge(BicliqueError, KeyError):
    pass


class ParseError(BicliqueError, ValueError):
    def __init__(self, line: int, message: str = "malformed line"):
        self.line = line
        super().__init__(f"line {line}: {message}")


class HeaderMismatch(BicliqueError, ValueError):
    pass


class InfeasibleEdgeCount(BicliqueError, ValueError):
    pass


class SizeGuardExceeded(BicliqueError, RuntimeError):
    pass


class CountOverflow(BicliqueError, OverflowError):
    pass


class InvalidParameter(BicliqueError, ValueError):
    pass


class TimeLimitExceeded(BicliqueError, TimeoutError):
    pass
