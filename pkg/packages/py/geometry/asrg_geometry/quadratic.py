"""Nondegenerate quadratic forms over GF(q), q odd."""

import logging
from collections.abc import Sequence
from enum import StrEnum

import numpy as np
import numpy.typing as npt

from asrg_core.errors import CharTwo, DimMismatch, DomainError, KindDimMismatch
from asrg_geometry.field import Field, SquareClass
from asrg_geometry.projective import Point, ProjectiveSpace

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]


class FormKind(StrEnum):
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"


def _determinant(field: Field, rows: list[list[int]]) -> int:
    """Determinant by Gaussian elimination over the field."""
    a = [row[:] for row in rows]
    n = len(a)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = field.neg(det)
        det = field.mul(det, a[col][col])
        inv = field.inv(a[col][col])
        for r in range(col + 1, n):
            factor = field.mul(a[r][col], inv)
            if factor:
                pairs = zip(a[r], a[col], strict=True)
                a[r] = [field.sub(x, field.mul(factor, y)) for x, y in pairs]
    return det


class QuadraticForm:
    """Q(x) = x^T M x with M upper triangular.

    The polar form is B(x, y) = Q(x + y) - Q(x) - Q(y) = x^T (M + M^T) y.
    """

    def __init__(
        self, field: Field, gram: Sequence[Sequence[int]], kind: FormKind | None = None
    ) -> None:
        """Initialize from any square coefficient matrix; lower entries fold upward.

        Raises:
            CharTwo: even characteristic
            DimMismatch: gram is not square
            DomainError: the form is degenerate
            KindDimMismatch: kind contradicts the dimension parity or the discriminant
        """
        if field.p == 2:
            raise CharTwo("quadratic forms need odd characteristic here")
        n = len(gram)
        if n < 1 or any(len(row) != n for row in gram):
            raise DimMismatch("coefficient matrix must be square and nonempty")
        upper = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                c = gram[i][j]
                field._check(c)
                lo, hi = min(i, j), max(i, j)
                upper[lo][hi] = field.add(upper[lo][hi], c)
        self.field = field
        self.dim = n
        self.gram: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in upper)
        self.symmetric: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                field.add(upper[i][j], upper[j][i]) for j in range(n)
            )
            for i in range(n)
        )
        if self.determinant() == 0:
            raise DomainError("degenerate quadratic form")
        derived = self._kind_from_discriminant()
        if kind is not None and kind != derived:
            raise KindDimMismatch(f"a form of dimension {n} with this discriminant is {derived}")
        self.kind = derived

    def __repr__(self) -> str:
        return f"QuadraticForm(dim={self.dim}, q={self.field.q}, kind={self.kind})"

    @property
    def eps(self) -> int:
        """+1 hyperbolic, -1 elliptic, 0 parabolic."""
        return {FormKind.HYPERBOLIC: 1, FormKind.ELLIPTIC: -1, FormKind.PARABOLIC: 0}[self.kind]

    @property
    def m(self) -> int:
        return self.dim // 2

    def determinant(self) -> int:
        """det of the symmetric matrix (M + M^T)/2."""
        half = self.field.inv(2 % self.field.p)
        rows = [[self.field.mul(half, c) for c in row] for row in self.symmetric]
        return _determinant(self.field, rows)

    def discriminant_class(self) -> SquareClass:
        return self.field.square_class(self.determinant())

    def _kind_from_discriminant(self) -> FormKind:
        if self.dim % 2 == 1:
            return FormKind.PARABOLIC
        f = self.field
        signed = self.determinant() if self.m % 2 == 0 else f.neg(self.determinant())
        return FormKind.HYPERBOLIC if f.is_square(signed) else FormKind.ELLIPTIC

    def kind_from_singular_count(self) -> FormKind:
        """Classify an even-dimensional form by counting its singular points."""
        if self.dim % 2 == 1:
            return FormKind.PARABOLIC
        count = self.singular_count()
        if count == singular_count_formula(self.dim, self.field.q, 1):
            return FormKind.HYPERBOLIC
        return FormKind.ELLIPTIC

    def _check_vec(self, x: Sequence[int]) -> None:
        if len(x) != self.dim:
            raise DimMismatch(f"expected a vector of length {self.dim}, got {len(x)}")

    def evaluate(self, x: Sequence[int]) -> int:
        self._check_vec(x)
        f = self.field
        total = 0
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(i, self.dim):
                c = self.gram[i][j]
                if c and x[j]:
                    total = f.add(total, f.mul(c, f.mul(x[i], x[j])))
        return total

    def bilinear(self, x: Sequence[int], y: Sequence[int]) -> int:
        self._check_vec(x)
        self._check_vec(y)
        f = self.field
        total = 0
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                c = self.symmetric[i][j]
                if c and y[j]:
                    total = f.add(total, f.mul(c, f.mul(x[i], y[j])))
        return total

    def values(self, xs: IntArray) -> IntArray:
        """Q evaluated on every row of xs."""
        f = self.field
        acc: IntArray = np.zeros(xs.shape[0], dtype=np.int64)
        for i in range(self.dim):
            for j in range(i, self.dim):
                c = self.gram[i][j]
                if c:
                    acc = f.vadd(acc, f.vmul(f.vmul(c, xs[:, i]), xs[:, j]))
        return acc

    def gram_values(self, xs: IntArray, ys: IntArray) -> IntArray:
        """Matrix of B(x, y) for rows x of xs and rows y of ys."""
        f = self.field
        if f.e == 1:
            s = np.array(self.symmetric, dtype=np.int64)
            return np.asarray(((xs @ s) % f.p) @ ys.T % f.p, dtype=np.int64)
        acc: IntArray = np.zeros((xs.shape[0], ys.shape[0]), dtype=np.int64)
        for i in range(self.dim):
            for j in range(self.dim):
                c = self.symmetric[i][j]
                if c:
                    acc = f.vadd(acc, f.vmul(f.vmul(c, xs[:, i])[:, None], ys[None, :, j]))
        return acc

    def space(self) -> ProjectiveSpace:
        return ProjectiveSpace(self.dim - 1, self.field)

    def singular_points(self) -> list[Point]:
        space = self.space()
        pts = space.point_array()
        mask = self.values(pts) == 0
        return [tuple(int(c) for c in row) for row in pts[mask]]

    def singular_count(self) -> int:
        space = self.space()
        return int(np.count_nonzero(self.values(space.point_array()) == 0))


def quadratic_form_standard(n: int, field: Field, kind: FormKind | str) -> QuadraticForm:
    """Canonical form of the given kind in dimension n.

    parabolic: x0x1 + ... + x_{n-3}x_{n-2} + x_{n-1}^2
    hyperbolic: x0x1 + ... + x_{n-2}x_{n-1}
    elliptic: x0x1 + ... + x_{n-4}x_{n-3} + x_{n-2}^2 + d x_{n-1}^2, where d is the
    least nonsquare if -1 is a square and d = 1 otherwise.
    """
    kind = FormKind(kind)
    if field.p == 2:
        raise CharTwo("standard forms need odd characteristic")
    if n < 1:
        raise DimMismatch(f"dimension must be positive, got {n}")
    if (kind == FormKind.PARABOLIC) != (n % 2 == 1):
        raise KindDimMismatch(f"{kind} forms do not exist in dimension {n}")
    gram = [[0] * n for _ in range(n)]
    pairs = n // 2 if kind == FormKind.HYPERBOLIC else (n - 1) // 2 if n % 2 else n // 2 - 1
    for i in range(pairs):
        gram[2 * i][2 * i + 1] = 1
    if kind == FormKind.PARABOLIC:
        gram[n - 1][n - 1] = 1
    elif kind == FormKind.ELLIPTIC:
        minus_one = field.neg(1)
        gram[n - 2][n - 2] = 1
        gram[n - 1][n - 1] = field.nonsquare() if field.is_square(minus_one) else 1
    form = QuadraticForm(field, gram, kind)
    logger.debug(f"standard {kind} form in dimension {n} over GF({field.q})")
    return form


def singular_count_formula(n: int, q: int, eps: int) -> int:
    """Number of singular projective points of a nondegenerate form in dimension n."""
    m = n // 2
    if n % 2 == 1:
        return (q ** (2 * m) - 1) // (q - 1)
    return (q ** (m - 1) + eps) * (q**m - eps) // (q - 1)


def form_eval(form: QuadraticForm, x: Sequence[int]) -> int:
    return form.evaluate(x)


def bilinear(form: QuadraticForm, x: Sequence[int], y: Sequence[int]) -> int:
    return form.bilinear(x, y)
