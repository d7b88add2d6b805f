"""Signed log-magnitude reals for parameter laws far outside double range."""

import math
from collections.abc import Iterable
from dataclasses import dataclass

from asrg_core.errors import OverflowDespiteLogSpace
from asrg_core.types import LogValue

_MAX_LOG10 = 1e300
_FLOAT_LOG10 = 307.0


@dataclass(frozen=True)
class LogReal:
    """sign * 10^log10, with sign in {-1, 0, 1}."""

    sign: int
    log10: float

    def __post_init__(self) -> None:
        if self.sign and (math.isnan(self.log10) or abs(self.log10) > _MAX_LOG10):
            raise OverflowDespiteLogSpace(f"log-magnitude {self.log10} out of range")

    @classmethod
    def zero(cls) -> "LogReal":
        return cls(0, -math.inf)

    @classmethod
    def of(cls, x: float) -> "LogReal":
        if x == 0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log10(abs(x)))

    @classmethod
    def monomial(cls, c: float, e: float, x: float) -> "LogReal":
        """c * x^e for x > 0."""
        if c == 0:
            return cls.zero()
        return cls(1 if c > 0 else -1, math.log10(abs(c)) + e * math.log10(x))

    def __neg__(self) -> "LogReal":
        return LogReal(-self.sign, self.log10)

    def __mul__(self, other: "LogReal") -> "LogReal":
        if not self.sign or not other.sign:
            return LogReal.zero()
        return LogReal(self.sign * other.sign, self.log10 + other.log10)

    def __truediv__(self, other: "LogReal") -> "LogReal":
        if not other.sign:
            raise ZeroDivisionError("division by zero in log space")
        if not self.sign:
            return LogReal.zero()
        return LogReal(self.sign * other.sign, self.log10 - other.log10)

    def __add__(self, other: "LogReal") -> "LogReal":
        return signed_sum([self, other])

    def __sub__(self, other: "LogReal") -> "LogReal":
        return signed_sum([self, -other])

    def scale(self, factor: float) -> "LogReal":
        return self * LogReal.of(factor)

    def power(self, exponent: float) -> "LogReal":
        """|x|^exponent carrying the sign for integer exponents."""
        if not self.sign:
            return LogReal.zero()
        if self.sign < 0 and float(exponent).is_integer():
            sign = -1 if int(exponent) % 2 else 1
        elif self.sign < 0:
            raise ValueError("fractional power of a negative number")
        else:
            sign = 1
        return LogReal(sign, self.log10 * exponent)

    def sqrt(self) -> "LogReal":
        return self.power(0.5)

    @property
    def magnitude(self) -> "LogReal":
        return LogReal(abs(self.sign), self.log10)

    def less_than(self, other: "LogReal") -> bool:
        return (self - other).sign < 0

    def to_float(self) -> float | None:
        if not self.sign:
            return 0.0
        if self.log10 > _FLOAT_LOG10:
            return None
        return self.sign * 10.0**self.log10

    def to_value(self) -> LogValue:
        return LogValue(
            sign=self.sign,
            log10=self.log10 if self.sign else 0.0,
            value=self.to_float(),
        )


def signed_sum(terms: Iterable[LogReal]) -> LogReal:
    """Sum of signed terms, accumulated from the smallest magnitude upward."""
    nonzero = sorted((t for t in terms if t.sign), key=lambda t: t.log10)
    if not nonzero:
        return LogReal.zero()
    top = nonzero[-1].log10
    total = math.fsum(t.sign * 10.0 ** (t.log10 - top) for t in nonzero)
    if total == 0:
        return LogReal.zero()
    return LogReal(1 if total > 0 else -1, top + math.log10(abs(total)))


def largest_magnitude(terms: Iterable[LogReal]) -> LogReal:
    """max(1, |t|) over the terms."""
    best = 0.0
    for t in terms:
        if t.sign:
            best = max(best, t.log10)
    return LogReal(1, best)
