"""Exception hierarchy.

Every precondition failure is an ``InputError`` and every numerical breakdown a
``NumericError``; the CLI maps the two branches to distinct exit codes.
"""

from typing import Any


class AsrgError(Exception):
    """Base class for all toolkit errors."""


class InputError(AsrgError, ValueError):
    """Invalid input or violated precondition."""


class NumericError(AsrgError, ArithmeticError):
    """A numerical procedure failed to deliver a trustworthy result."""


# finite-field
class NotPrimePower(InputError):
    pass


class TooLarge(InputError):
    pass


class ElementOutOfRange(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class CharTwo(InputError):
    pass


class EvenCharacteristic(InputError):
    pass


# projective-geometry
class SizeLimit(InputError):
    pass


class IdenticalPoints(InputError):
    pass


class KindDimMismatch(InputError):
    pass


class DimMismatch(InputError):
    pass


class DuplicatePoint(InputError):
    pass


class CollinearTriple(InputError):
    """Three cap points on one line."""

    def __init__(self, a: Any, b: Any, c: Any) -> None:
        super().__init__(f"collinear points {a}, {b}, {c}")
        self.triple = (a, b, c)


class TooSmall(InputError):
    pass


# graph-core
class LoopEdge(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class NotRegular(InputError):
    pass


class Degenerate(InputError):
    pass


class Disconnected(InputError):
    pass


class NotAClique(InputError):
    pass


class NoCliqueFound(InputError):
    pass


class LimitExceeded(InputError):
    pass


# spectral / bounds
class NotSymmetric(InputError):
    pass


class NegativeDiscriminant(InputError):
    pass


class ZeroSplit(InputError):
    pass


class DomainError(InputError):
    pass


class HypothesisViolated(InputError):
    """A case hypothesis does not hold; ``inequality`` names it."""

    def __init__(self, inequality: str) -> None:
        super().__init__(f"hypothesis violated: {inequality}")
        self.inequality = inequality


class InconsistentLaws(InputError):
    pass


class FileFormatError(InputError):
    pass


class NoConvergence(NumericError):
    pass


class OverflowDespiteLogSpace(NumericError):
    pass
