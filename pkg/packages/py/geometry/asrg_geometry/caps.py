"""Caps in PG(n, q) and their secant profiles."""

import itertools
import logging
import random
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from asrg_core.errors import CollinearTriple, DomainError, DuplicatePoint, TooSmall
from asrg_core.types import CapProfileReport
from asrg_geometry.field import field_make
from asrg_geometry.projective import MAX_PG_POINTS, Point, ProjectiveSpace
from asrg_geometry.quadratic import FormKind, quadratic_form_standard

logger = logging.getLogger(__name__)

CapKind = Literal["conic", "elliptic_quadric", "greedy_random"]


class Cap:
    """A point set of PG(n, q) with no three points collinear.

    Construction verifies the cap property by walking the line of every pair.
    """

    def __init__(self, space: ProjectiveSpace, points: Iterable[Point]) -> None:
        """Initialize and verify.

        Raises:
            DuplicatePoint: a point occurs twice
            CollinearTriple: three points lie on one line
        """
        canonical: list[Point] = []
        seen: set[Point] = set()
        for point in points:
            p = space.normalize(point)
            if p in seen:
                raise DuplicatePoint(f"point {p} occurs twice")
            seen.add(p)
            canonical.append(p)
        self.space = space
        self.points: tuple[Point, ...] = tuple(sorted(canonical))
        self._members = frozenset(self.points)
        self._verify()

    def __repr__(self) -> str:
        return f"Cap(n={self.space_dim}, q={self.q}, t={self.size})"

    def __contains__(self, point: object) -> bool:
        return point in self._members

    @property
    def space_dim(self) -> int:
        return self.space.n

    @property
    def q(self) -> int:
        return self.space.q

    @property
    def size(self) -> int:
        return len(self.points)

    def secants(self) -> Iterable[tuple[Point, Point, list[Point]]]:
        """Each unordered pair of cap points with the other points of its line."""
        for a, b in itertools.combinations(self.points, 2):
            yield a, b, [p for p in self.space.line_points(a, b) if p != a and p != b]

    def _verify(self) -> None:
        for a, b, rest in self.secants():
            for c in rest:
                if c in self._members:
                    raise CollinearTriple(*sorted((a, b, c)))


@dataclass(frozen=True)
class CapProfile:
    """Secant counts h_p over the exterior points of a cap.

    Exterior points lying on no secant have h_p = 0 and are not stored in
    ``counts``; they still enter the mean and variance.
    """

    cap: Cap
    counts: dict[Point, int]
    exterior_count: int
    secant_count: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.exterior_count)

    @property
    def variance(self) -> Fraction:
        mean = self.mean
        zeros = self.exterior_count - len(self.counts)
        sq = sum((Fraction(h) - mean) ** 2 for h in self.counts.values()) + zeros * mean**2
        return sq / self.exterior_count

    def h(self, point: Point) -> int:
        return self.counts.get(point, 0)

    def histogram(self) -> list[tuple[int, int]]:
        hist = Counter(self.counts.values())
        zeros = self.exterior_count - len(self.counts)
        if zeros:
            hist[0] += zeros
        return sorted(hist.items())

    def to_report(self) -> CapProfileReport:
        return CapProfileReport(
            proj_dim=self.cap.space_dim,
            q=self.cap.q,
            t=self.cap.size,
            exterior_count=self.exterior_count,
            secant_count=self.secant_count,
            h_total=self.total,
            h_mean=self.mean,
            h_var=self.variance,
            h_histogram=self.histogram(),
        )


def cap_verify(points: Iterable[Point], n: int, q: int) -> Cap:
    return Cap(ProjectiveSpace(n, field_make(q)), points)


def cap_secant_profile(cap: Cap) -> CapProfile:
    """Count the secants through every exterior point.

    Raises:
        TooSmall: fewer than two cap points
    """
    if cap.size < 2:
        raise TooSmall(f"a cap of size {cap.size} has no secants")
    counts: Counter[Point] = Counter()
    secants = 0
    for _, _, rest in cap.secants():
        secants += 1
        counts.update(rest)
    exterior = cap.space.point_count() - cap.size
    return CapProfile(cap=cap, counts=dict(counts), exterior_count=exterior, secant_count=secants)


def conic(q: int) -> Cap:
    """{(1 : t : t^2)} together with (0 : 0 : 1) in PG(2, q)."""
    field = field_make(q)
    space = ProjectiveSpace(2, field)
    points = [(1, t, field.mul(t, t)) for t in field.elements()]
    points.append((0, 0, 1))
    return Cap(space, points)


def elliptic_quadric(q: int) -> Cap:
    """Singular points of the standard elliptic form on GF(q)^4: q^2 + 1 points of PG(3, q)."""
    field = field_make(q)
    form = quadratic_form_standard(4, field, FormKind.ELLIPTIC)
    return Cap(form.space(), form.singular_points())


def greedy_cap(n: int, q: int, seed: int, *, max_points: int = MAX_PG_POINTS) -> Cap:
    """Random maximal cap: shuffle the points and keep each one that is not yet blocked."""
    space = ProjectiveSpace(n, field_make(q), max_points=max_points)
    order = space.points()
    random.Random(seed).shuffle(order)
    chosen: list[Point] = []
    blocked: set[Point] = set()
    for p in order:
        if p in blocked:
            continue
        for c in chosen:
            blocked.update(space.line_points(p, c))
        blocked.add(p)
        chosen.append(p)
    logger.info(f"greedy cap in PG({n},{q}) with seed {seed}: t={len(chosen)}")
    return Cap(space, chosen)


def cap_construct(
    kind: CapKind, n: int, q: int, seed: int = 0, *, max_points: int = MAX_PG_POINTS
) -> Cap:
    """Build one of the fixture caps.

    Raises:
        DomainError: the kind does not live in PG(n, q)
    """
    match kind:
        case "conic":
            if n != 2:
                raise DomainError("a conic lives in PG(2, q)")
            return conic(q)
        case "elliptic_quadric":
            if n != 3:
                raise DomainError("an elliptic quadric lives in PG(3, q)")
            return elliptic_quadric(q)
        case "greedy_random":
            return greedy_cap(n, q, seed, max_points=max_points)
    raise DomainError(f"unknown cap kind {kind}")


def uniform_secant_mu(t: int, n: int, q: int) -> Fraction:
    """Printed mu for a cap whose exterior points all lie on equally many secants.

    The value t(t-1)(q-1)^2 / (q^{n+1} - 1) divides by every point of PG(n, q)
    instead of the exterior points only; audits compare it with the measured mean.
    """
    return Fraction(t * (t - 1) * (q - 1) ** 2, q ** (n + 1) - 1)
