"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LiftMrdError(Exception):
    """Base class for all package errors."""


class InvalidParams(LiftMrdError, ValueError):
    pass


class NotPrime(InvalidParams):
    pass


class DegreeTooLarge(InvalidParams):
    pass


class InvalidBase(InvalidParams):
    pass


class SpecMismatch(LiftMrdError, ValueError):
    """Operands live in different fields."""


class DivisionByZero(LiftMrdError, ZeroDivisionError):
    pass


class ShapeMismatch(LiftMrdError, ValueError):
    pass


class AmbientMismatch(LiftMrdError, ValueError):
    pass


class DimensionMismatch(LiftMrdError, ValueError):
    pass


class LengthMismatch(LiftMrdError, ValueError):
    pass


class TooFewCodewords(LiftMrdError, ValueError):
    pass


class TrivialCode(LiftMrdError, ValueError):
    pass


class CapExceeded(LiftMrdError):
    """An enumeration or verification would exceed its configured cap."""

    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap
