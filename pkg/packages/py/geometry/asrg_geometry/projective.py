"""Points and lines of PG(n, q)."""

import itertools
import logging
from collections.abc import Sequence
from functools import cached_property

import numpy as np
import numpy.typing as npt

from asrg_core.errors import DimMismatch, DomainError, IdenticalPoints, SizeLimit
from asrg_geometry.field import Field, field_make

logger = logging.getLogger(__name__)

MAX_PG_POINTS = 10_000_000

Point = tuple[int, ...]


def pg_point_count(n: int, q: int) -> int:
    """(q^{n+1} - 1) / (q - 1)."""
    return (q ** (n + 1) - 1) // (q - 1)


class ProjectiveSpace:
    """PG(n, q) with canonical point representatives.

    A point is stored as its coordinate tuple scaled so that the first nonzero
    coordinate is 1. Points enumerate in lexicographic order of those tuples.
    """

    def __init__(self, n: int, field: Field, *, max_points: int = MAX_PG_POINTS) -> None:
        """Initialize the space.

        Raises:
            DomainError: n < 1
            SizeLimit: more than max_points points
        """
        if n < 1:
            raise DomainError(f"projective dimension must be at least 1, got {n}")
        count = pg_point_count(n, field.q)
        if count > max_points:
            raise SizeLimit(f"PG({n},{field.q}) has {count} points, limit {max_points}")
        self.n = n
        self.field = field
        self.q = field.q

    def __repr__(self) -> str:
        return f"ProjectiveSpace(n={self.n}, q={self.q})"

    def point_count(self) -> int:
        return pg_point_count(self.n, self.q)

    @cached_property
    def _points(self) -> tuple[Point, ...]:
        pts: list[Point] = []
        for lead in range(self.n, -1, -1):
            head = (0,) * lead + (1,)
            tails = itertools.product(range(self.q), repeat=self.n - lead)
            pts.extend(head + tail for tail in tails)
        logger.debug(f"enumerated {len(pts)} points of PG({self.n},{self.q})")
        return tuple(pts)

    @cached_property
    def _index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self._points)}

    def points(self) -> list[Point]:
        return list(self._points)

    def point_array(self) -> npt.NDArray[np.int64]:
        """All points as rows of an integer array, in enumeration order."""
        return np.array(self._points, dtype=np.int64).reshape(-1, self.n + 1)

    def index_of(self, point: Point) -> int:
        return self._index[self.normalize(point)]

    def normalize(self, coords: Sequence[int]) -> Point:
        """Scale a nonzero vector so its first nonzero coordinate is 1."""
        if len(coords) != self.n + 1:
            raise DimMismatch(f"expected {self.n + 1} coordinates, got {len(coords)}")
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            for c in coords:
                self.field._check(c)
            raise DomainError("the zero vector is not a projective point")
        scale = self.field.inv(lead)
        return tuple(self.field.mul(scale, c) for c in coords)

    def is_canonical(self, coords: Sequence[int]) -> bool:
        return tuple(coords) == self.normalize(coords)

    def line_points(self, a: Point, b: Point) -> list[Point]:
        """The q + 1 points of the line through a and b, sorted.

        Raises:
            IdenticalPoints: a and b are the same projective point
        """
        a, b = self.normalize(a), self.normalize(b)
        if a == b:
            raise IdenticalPoints(f"{a} and {b} span no line")
        f = self.field
        line = {a}
        for alpha in f.elements():
            line.add(self.normalize([f.add(y, f.mul(alpha, x)) for x, y in zip(a, b, strict=True)]))
        return sorted(line)


def pg_points(n: int, q: int) -> list[Point]:
    return ProjectiveSpace(n, field_make(q)).points()


def line_points(a: Point, b: Point, q: int) -> list[Point]:
    return ProjectiveSpace(len(a) - 1, field_make(q)).line_points(a, b)
