"""Semantic exception hierarchy.

Public functions never raise bare ``ValueError``/``ZeroDivisionError``; every
failure mode gets a named class so callers can route diagnostics (a vanishing
function, a transition-function pole, a branch-tracking breakdown) without
string matching.
"""

from __future__ import annotations


class QcxError(Exception):
    """Base error for this package."""


class InvalidSpecError(QcxError, ValueError):
    """Parameters violate a documented invariant (Re s <= 0, k outside [0,1), ...)."""


class ParseError(QcxError, ValueError):
    """Function mini-language text could not be parsed.

    ``position`` is the character offset of the offending token.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(QcxError, ValueError):
    """Evaluation requested outside the function's valid domain."""

    def __init__(self, message: str, point: complex | None = None):
        if point is not None:
            message = f"{message} at point {point}"
        super().__init__(message)
        self.point = point


class FunctionZeroError(QcxError, ArithmeticError):
    """f (or g, or a derivative) is numerically zero where the formulas divide by it."""

    def __init__(self, message: str, point: complex | None = None):
        if point is not None:
            message = f"{message} at point {point}"
        super().__init__(message)
        self.point = point


class PoleError(QcxError, ArithmeticError):
    """Transition function pole: P = 1 at the evaluated point."""


class BraceVanishedError(QcxError, ArithmeticError):
    """The tracked power base came within the safety floor of 0 along the time path."""

    def __init__(self, message: str, point: complex | None = None, t: float | None = None):
        detail = message
        if point is not None:
            detail += f" at z={point}"
        if t is not None:
            detail += f", t={t}"
        super().__init__(detail)
        self.point = point
        self.t = t


class BranchTrackingError(QcxError, ArithmeticError):
    """Adaptive branch tracking failed to reach the argument-increment target."""


class BisectionError(QcxError, RuntimeError):
    """The bisection oracle found no admissible parameter in its bracket."""


class CriterionFailedError(QcxError, RuntimeError):
    """An extension map was requested for input that fails its criterion."""
