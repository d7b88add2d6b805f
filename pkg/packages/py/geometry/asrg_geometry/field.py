"""Table-based arithmetic in GF(q).

Elements are integer indices: the element c_0 + c_1 x + ... + c_{e-1} x^{e-1}
of GF(p)[x]/(f) is stored as sum c_i p^i, so 0 is zero, 1 is one, and the
prime subfield occupies indices 0..p-1.
"""

import itertools
import logging
from enum import StrEnum
from functools import cached_property, lru_cache
from typing import Literal

import numpy as np
import numpy.typing as npt

from asrg_core.errors import (
    CharTwo,
    DivisionByZero,
    DomainError,
    ElementOutOfRange,
    NotPrimePower,
    TooLarge,
)
from asrg_core.types import FieldInfo

logger = logging.getLogger(__name__)

MAX_FIELD_ORDER = 2**16
MAX_TABLE_ORDER = 2048

Poly = tuple[int, ...]
ArithOp = Literal["add", "sub", "mul", "div", "inv", "neg"]
IntArray = npt.NDArray[np.int64]


class SquareClass(StrEnum):
    ZERO = "zero"
    SQUARE = "square"
    NONSQUARE = "nonsquare"


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^e.

    Raises:
        NotPrimePower: If q < 2 or q has two distinct prime factors
    """
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in itertools.chain([2], range(3, q + 1, 2)) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


def _poly_rem(a: Poly, f: Poly, p: int) -> Poly:
    """Remainder of a modulo the monic polynomial f (coefficients constant first)."""
    rem = list(a)
    deg_f = len(f) - 1
    for shift in range(len(rem) - 1 - deg_f, -1, -1):
        lead = rem[shift + deg_f] % p
        if lead:
            for i, c in enumerate(f):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
    return tuple(c % p for c in rem[:deg_f])


def _is_irreducible(f: Poly, p: int) -> bool:
    deg = len(f) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(f, (*low, 1), p)):
                return False
    return True


def least_irreducible(p: int, e: int) -> Poly:
    """Lexicographically least monic irreducible of degree e over GF(p).

    Coefficient tuples (c_0, ..., c_{e-1}) are compared from the constant term up.
    """
    for low in itertools.product(range(p), repeat=e):
        candidate = (*low, 1)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class Field:
    """GF(q) with exp/log tables over a fixed primitive element."""

    def __init__(self, q: int, *, max_order: int = MAX_FIELD_ORDER) -> None:
        """Initialize tables for GF(q).

        Args:
            q: Prime power order
            max_order: Largest accepted order

        Raises:
            NotPrimePower: q is not a prime power
            TooLarge: q exceeds max_order
        """
        p, e = prime_power(q)
        if q > max_order:
            raise TooLarge(f"field order {q} exceeds {max_order}")
        self.q = q
        self.p = p
        self.e = e
        self.modulus: Poly = least_irreducible(p, e)
        self.primitive, self._exp = self._find_primitive()
        self._log = [-1] * q
        for i in range(q - 1):
            self._log[self._exp[i]] = i
        self._exp = self._exp[: q - 1] * 2
        logger.debug(f"GF({q}): modulus={self.modulus}, primitive={self.primitive}")

    def __repr__(self) -> str:
        return f"Field({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("Field", self.q))

    # -- encoding -------------------------------------------------------------

    def digits(self, a: int) -> Poly:
        """Coefficient digits of an element, constant term first."""
        self._check(a)
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, digits: Poly) -> int:
        if len(digits) != self.e or any(not 0 <= d < self.p for d in digits):
            raise ElementOutOfRange(f"bad digit vector {digits} for GF({self.q})")
        return sum(d * self.p**i for i, d in enumerate(digits))

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ElementOutOfRange(f"{a} is not an element of GF({self.q})")

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_poly_rem(tuple(prod), self.modulus, self.p))

    def _find_primitive(self) -> tuple[int, list[int]]:
        order = self.q - 1
        for g in range(1, self.q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._poly_mul(x, g) if self.e > 1 else (x * g) % self.p
            if len(powers) == order:
                return g, powers
        raise AssertionError(f"GF({self.q}) has no primitive element")

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.e == 1:
            return (a + b) % self.p
        return self.from_digits(
            tuple((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b), strict=True))
        )

    def neg(self, a: int) -> int:
        self._check(a)
        if self.e == 1:
            return (-a) % self.p
        return self.from_digits(tuple((-x) % self.p for x in self.digits(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in GF({self.q})")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        self._check(a)
        if a == 0:
            if n < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def exp(self, i: int) -> int:
        """The primitive element to the power i."""
        return self._exp[i % (self.q - 1)]

    def log(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def arith(self, op: ArithOp, a: int, b: int | None = None) -> int:
        """Dispatch a named operation; binary operations need ``b``."""
        if op == "neg":
            return self.neg(a)
        if op == "inv":
            return self.inv(a)
        if b is None:
            raise DomainError(f"operation {op} needs two operands")
        match op:
            case "add":
                return self.add(a, b)
            case "sub":
                return self.sub(a, b)
            case "mul":
                return self.mul(a, b)
            case "div":
                return self.div(a, b)
        raise DomainError(f"unknown operation {op}")

    # -- squares --------------------------------------------------------------

    @property
    def gamma(self) -> int:
        """+1 if q = 1 (mod 4), -1 if q = 3 (mod 4)."""
        if self.p == 2:
            raise CharTwo(f"gamma is undefined for GF({self.q})")
        return 1 if self.q % 4 == 1 else -1

    def square_class(self, a: int) -> SquareClass:
        if self.p == 2:
            raise CharTwo("square classes need odd characteristic")
        self._check(a)
        if a == 0:
            return SquareClass.ZERO
        return SquareClass.SQUARE if self._log[a] % 2 == 0 else SquareClass.NONSQUARE

    def is_square(self, a: int) -> bool:
        return self.square_class(a) != SquareClass.NONSQUARE

    def sqrt(self, a: int) -> int:
        """A square root of a square (the one with even log)."""
        if self.square_class(a) == SquareClass.NONSQUARE:
            raise DomainError(f"{a} is not a square in GF({self.q})")
        return 0 if a == 0 else self._exp[self._log[a] // 2]

    def nonsquare(self) -> int:
        """Least-index nonsquare."""
        return next(a for a in range(1, self.q) if self.square_class(a) == SquareClass.NONSQUARE)

    def squares(self) -> list[int]:
        if self.p == 2:
            return list(range(1, self.q))
        return sorted(self._exp[i] for i in range(0, self.q - 1, 2))

    # -- vectorized -----------------------------------------------------------

    @cached_property
    def _add_table(self) -> IntArray:
        self._require_tables()
        idx = np.arange(self.q, dtype=np.int64)
        digits = np.stack([(idx // self.p**i) % self.p for i in range(self.e)], axis=1)
        weights = self.p ** np.arange(self.e, dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % self.p
        return np.asarray(summed @ weights, dtype=np.int64)

    @cached_property
    def _mul_table(self) -> IntArray:
        self._require_tables()
        log = np.array(self._log, dtype=np.int64)
        exp = np.array(self._exp, dtype=np.int64)
        table = exp[(log[:, None] + log[None, :]) % (self.q - 1)]
        table[0, :] = 0
        table[:, 0] = 0
        return np.asarray(table, dtype=np.int64)

    def _require_tables(self) -> None:
        if self.q > MAX_TABLE_ORDER:
            raise TooLarge(f"GF({self.q}) is too large for dense tables")

    def tables(self) -> dict[str, IntArray]:
        """Dense add/mul/neg/inv tables indexed by element index."""
        add = self._add_table
        zero_col = np.argmax(add == 0, axis=1).astype(np.int64)
        inv = np.array([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int64)
        return {"add": add, "mul": self._mul_table, "neg": zero_col, "inv": inv}

    def vadd(self, a: IntArray | int, b: IntArray | int) -> IntArray:
        """Elementwise sum of index arrays (broadcasting)."""
        if self.e == 1:
            return np.asarray((a + b) % self.p, dtype=np.int64)
        return self._add_table[a, b]

    def vmul(self, a: IntArray | int, b: IntArray | int) -> IntArray:
        """Elementwise product of index arrays (broadcasting)."""
        if self.e == 1:
            return np.asarray((a * b) % self.p, dtype=np.int64)
        return self._mul_table[a, b]

    def vsquare_class(self, a: IntArray) -> npt.NDArray[np.int8]:
        """0 for zero, 1 for squares, -1 for nonsquares."""
        if self.p == 2:
            raise CharTwo("square classes need odd characteristic")
        log = np.array(self._log, dtype=np.int64)[a]
        return np.where(a == 0, 0, np.where(log % 2 == 0, 1, -1)).astype(np.int8)

    def info(self) -> FieldInfo:
        return FieldInfo(
            q=self.q,
            p=self.p,
            e=self.e,
            modulus=list(self.modulus),
            gamma=None if self.p == 2 else self.gamma,
            primitive=self.primitive,
            squares=[] if self.p == 2 else self.squares(),
        )


@lru_cache(maxsize=64)
def field_make(q: int, max_order: int = MAX_FIELD_ORDER) -> Field:
    """Shared, cached ``Field`` for GF(q)."""
    return Field(q, max_order=max_order)


def square_classify(field: Field, a: int) -> SquareClass:
    return field.square_class(a)
