"""Symmetric eigensolver, graph spectra, and the deviation matrix E.

For a k-regular graph with pair means lambda and mu,

    A^2 = kI + lambda A + mu (J - I - A) + E,

and E is a polynomial in A and J, so every restricted eigenvector of A is an
eigenvector of E with eigenvalue nu = u^2 - (lambda - mu) u - (k - mu).
"""

import logging
import math
from fractions import Fraction
from typing import Literal

import numpy as np
import numpy.typing as npt

from asrg_core.errors import (
    DomainError,
    HypothesisViolated,
    NegativeDiscriminant,
    NoConvergence,
    NotRegular,
    NotSymmetric,
    TooLarge,
    ZeroSplit,
)
from asrg_core.types import (
    ApproxEigenvalue,
    AsrgStats,
    EigenCluster,
    EigenRecord,
    EMatrixReport,
    FormLabel,
    LabeledValue,
    SpectrumReport,
    SrgSpectrum,
)
from asrg_graphs.graph import Graph
from asrg_graphs.stats import common_neighbor_blocks

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
ApproxCase = Literal["i", "ii", "iii", "iv", "v", "vi"]

DEFAULT_TOLERANCE = 1e-12
DEFAULT_MAX_SWEEPS = 100
DEFAULT_SYMMETRY_TOLERANCE = 1e-12
DEFAULT_CLUSTER_TOLERANCE = 1e-6
MAX_SPECTRAL_ORDER = 3000


def eigh(
    s: npt.ArrayLike,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    symmetry_tolerance: float = DEFAULT_SYMMETRY_TOLERANCE,
    max_order: int = MAX_SPECTRAL_ORDER,
) -> tuple[FloatArray, FloatArray]:
    """Cyclic-by-rows Jacobi eigensolver.

    Args:
        s: Real symmetric matrix
        tolerance: Stop once the off-diagonal Frobenius norm is below tolerance * ||S||_F
        max_sweeps: Sweep limit
        symmetry_tolerance: Largest accepted |S - S^T| entry, relative to max(1, max |S|)
        max_order: Largest accepted order

    Returns:
        Eigenvalues in descending order (stable for ties) and the matching
        orthonormal eigenvectors as columns

    Raises:
        NotSymmetric: s is not square or not symmetric
        TooLarge: order above max_order
        NoConvergence: max_sweeps exhausted
    """
    a = np.array(s, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > max_order:
        raise TooLarge(f"eigensolver limited to order {max_order}, got {n}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(a).max())) if n else 1.0
    if n and float(np.abs(a - a.T).max()) > symmetry_tolerance * scale:
        raise NotSymmetric("matrix is not symmetric")
    a = (a + a.T) / 2
    vecs = np.eye(n)
    norm = float(np.linalg.norm(a))
    target = tolerance * norm
    skip = 1e-15 * norm / max(n, 1)

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        logger.debug(f"jacobi sweep {sweep}: off-diagonal norm {off:.3e}")
        if off <= target:
            break
        if sweep == max_sweeps:
            raise NoConvergence(f"jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                sn = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p, vec_q = vecs[:, p].copy(), vecs[:, q].copy()
                vecs[:, p] = c * vec_p - sn * vec_q
                vecs[:, q] = sn * vec_p + c * vec_q

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], vecs[:, order]


def _clusters(values: FloatArray, tolerance: float) -> list[EigenCluster]:
    clusters: list[EigenCluster] = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > tolerance:
            group = values[start:i]
            clusters.append(EigenCluster(value=float(group.mean()), multiplicity=len(group)))
            start = i
    return clusters


def _regular_spectrum(
    g: Graph,
    *,
    max_order: int = MAX_SPECTRAL_ORDER,
    tolerance: float = DEFAULT_TOLERANCE,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    symmetry_tolerance: float = DEFAULT_SYMMETRY_TOLERANCE,
) -> tuple[int, FloatArray, FloatArray]:
    k = g.regular_degree()
    if k is None:
        raise NotRegular("spectrum reports need a regular graph")
    if g.v < 2:
        raise DomainError("spectrum reports need at least two vertices")
    values, vecs = eigh(
        g.matrix(np.float64),
        tolerance=tolerance,
        max_sweeps=max_sweeps,
        symmetry_tolerance=symmetry_tolerance,
        max_order=max_order,
    )
    return k, values, vecs


def _report_from_values(
    k: int, values: FloatArray, cluster_tolerance: float
) -> SpectrumReport:
    radius = float(np.abs(values).max())
    tol = cluster_tolerance * max(1.0, radius)
    clusters = _clusters(values, tol)
    v = len(values)
    return SpectrumReport(
        eigenvalues=[float(x) for x in values],
        k_mult=clusters[0].multiplicity,
        connected=clusters[0].multiplicity == 1,
        r=float(values[1]),
        s=float(values[-1]),
        clusters=clusters,
        cluster_tolerance=tol,
        trace_residual=float(values.sum()),
        square_trace_residual=float((values * values).sum() - v * k),
    )


def spectrum_report(
    g: Graph,
    *,
    cluster_tolerance: float = DEFAULT_CLUSTER_TOLERANCE,
    max_order: int = MAX_SPECTRAL_ORDER,
    tolerance: float = DEFAULT_TOLERANCE,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    symmetry_tolerance: float = DEFAULT_SYMMETRY_TOLERANCE,
) -> SpectrumReport:
    """Descending spectrum of a regular graph with r = u_2 and s = u_v.

    The solver keywords are passed to ``eigh``.

    Raises:
        NotRegular: degrees differ
    """
    k, values, _ = _regular_spectrum(
        g,
        max_order=max_order,
        tolerance=tolerance,
        max_sweeps=max_sweeps,
        symmetry_tolerance=symmetry_tolerance,
    )
    return _report_from_values(k, values, cluster_tolerance)


def srg_spectrum(v: int, k: int, lam: int, mu: int) -> SrgSpectrum:
    """Eigenvalues r > s and multiplicities f, g implied by SRG parameters.

    f and g are exact whenever the discriminant is a perfect square or
    2k + (v-1)(lambda-mu) vanishes.

    Raises:
        DomainError: parameters outside 0 <= mu <= k < v, 0 <= lambda < k
        NegativeDiscriminant: (lambda-mu)^2 + 4(k-mu) < 0
        ZeroSplit: r = s
    """
    if not (0 < k < v and 0 <= lam < k and 0 <= mu <= k):
        raise DomainError(f"inadmissible parameters ({v}, {k}, {lam}, {mu})")
    b = lam - mu
    disc = b * b + 4 * (k - mu)
    if disc < 0:
        raise NegativeDiscriminant(f"discriminant {disc} < 0")
    if disc == 0:
        raise ZeroSplit("r = s")
    root = math.sqrt(disc)
    r, s = (b + root) / 2, (b - root) / 2
    numerator = 2 * k + (v - 1) * b
    f_exact: Fraction | None = None
    exact_root = math.isqrt(disc)
    if exact_root * exact_root == disc:
        f_exact = Fraction((v - 1) * exact_root - numerator, 2 * exact_root)
    elif numerator == 0:
        f_exact = Fraction(v - 1, 2)
    f = float(f_exact) if f_exact is not None else ((v - 1) - numerator / root) / 2
    g = (v - 1) - f
    g_exact = None if f_exact is None else (v - 1) - f_exact
    integral = (
        f_exact is not None
        and g_exact is not None
        and f_exact.denominator == 1
        and g_exact.denominator == 1
    )
    return SrgSpectrum(
        v=v,
        k=k,
        lam=lam,
        mu=mu,
        r=r,
        s=s,
        f=f,
        g=g,
        f_exact=f_exact,
        g_exact=g_exact,
        integral=integral,
        trace_residual=k + f * r + g * s,
        count_residual=1 + f + g - v,
    )


def form_classify(u: float, lambda_mean: float | Fraction, mu_mean: float | Fraction) -> FormLabel:
    """Positive form iff u >= (lambda - mu)/2; the tie counts as positive."""
    return "positive" if u >= float(lambda_mean - mu_mean) / 2 else "negative"


def nu_value(u: float, k: int, lambda_mean: Fraction, mu_mean: Fraction) -> float:
    return u * u - float(lambda_mean - mu_mean) * u - float(k - mu_mean)


def _deviation_matrix(g: Graph, stats: AsrgStats) -> FloatArray:
    """E with E_ab = lambda_ab - lambda or mu_ab - mu, zero diagonal."""
    lam, mu = float(stats.lambda_mean), float(stats.mu_mean)
    e = np.zeros((g.v, g.v))
    for start, counts, adj in common_neighbor_blocks(g):
        block = np.where(adj, counts - lam, counts - mu)
        e[start : start + counts.shape[0]] = block
    np.fill_diagonal(e, 0.0)
    return e


def e_matrix_report(
    g: Graph,
    stats: AsrgStats,
    *,
    trace_tolerance: float = 1e-6,
    max_order: int = MAX_SPECTRAL_ORDER,
) -> EMatrixReport:
    """Restricted eigenvalues of A paired with the eigenvalues of E.

    The spectral side sums nu^2 over the restricted eigenvalues; the counting
    side is the exact sum of squared pair deviations from ``stats``.
    """
    k, values, vecs = _regular_spectrum(g, max_order=max_order)
    e = _deviation_matrix(g, stats)
    restricted = vecs[:, 1:]
    rayleigh = np.einsum("ij,ij->j", restricted, e @ restricted)
    records = []
    residual = 0.0
    for u, nu_r in zip(values[1:], rayleigh, strict=True):
        nu = nu_value(float(u), k, stats.lambda_mean, stats.mu_mean)
        residual = max(residual, abs(nu - float(nu_r)))
        records.append(
            EigenRecord(
                u=float(u),
                nu=nu,
                form=form_classify(float(u), stats.lambda_mean, stats.mu_mean),
                nu_rayleigh=float(nu_r),
            )
        )
    trace_lhs = math.fsum(rec.nu * rec.nu for rec in records)
    trace_rhs = stats.lambda_sq_dev + stats.mu_sq_dev
    bound_rhs = stats.v * (stats.v - 1) * stats.sigma_squared
    rel_error = abs(trace_lhs - float(trace_rhs)) / max(1.0, abs(float(trace_rhs)))
    return EMatrixReport(
        lambda_mean=stats.lambda_mean,
        mu_mean=stats.mu_mean,
        records=records,
        trace_lhs=trace_lhs,
        trace_rhs_exact=trace_rhs,
        bound_rhs=bound_rhs,
        trace_relative_error=rel_error,
        trace_identity_holds=rel_error <= trace_tolerance,
        bound_holds=trace_rhs <= bound_rhs,
        max_pairing_residual=residual,
    )


def _roots(k: float, lam: float, mu: float, nu: float) -> tuple[float, float]:
    b = lam - mu
    disc = b * b + 4 * (k - mu + nu)
    if disc < 0:
        raise NegativeDiscriminant(f"discriminant {disc} < 0")
    root = math.sqrt(disc)
    # stable pair: larger-magnitude root first, the other from the product
    c = -(k - mu + nu)
    if b >= 0:
        plus = (b + root) / 2
        minus = c / plus if plus else (b - root) / 2
    else:
        minus = (b - root) / 2
        plus = c / minus if minus else (b + root) / 2
    return plus, minus


def approx_eigenvalue(
    case: ApproxCase, k: float, lam: float, mu: float, nu: float
) -> ApproxEigenvalue:
    """Leading-order value of a restricted eigenvalue in one of six regimes.

    Cases i, ii need mu > lambda and iii, iv need lambda > mu. Cases v, vi only
    give the order of magnitude (sqrt k, sqrt |nu|).

    Raises:
        HypothesisViolated: the case's ordering hypothesis fails
    """
    if case in ("i", "ii") and not mu > lam:
        raise HypothesisViolated("mu > lambda")
    if case in ("iii", "iv") and not lam > mu:
        raise HypothesisViolated("lambda > mu")
    if case == "v" and not k > 0:
        raise HypothesisViolated("k > 0")
    plus, minus = _roots(k, lam, mu, nu)
    match case:
        case "i":
            value, exact = (k - mu + nu) / (mu - lam), plus
        case "ii":
            value, exact = -(mu - lam), minus
        case "iii":
            value, exact = lam - mu, plus
        case "iv":
            value, exact = -(k - mu + nu) / (lam - mu), minus
        case "v":
            value, exact = math.sqrt(k), plus
        case "vi":
            value, exact = math.sqrt(abs(nu)), plus
        case _:
            raise DomainError(f"unknown case {case}")
    split = (lam - mu) ** 2
    gap = abs(value - exact) / max(abs(exact), 1e-300)
    return ApproxEigenvalue(
        case=case,
        value=value,
        exact_root=exact,
        relative_gap=gap,
        order_of_magnitude_only=case in ("v", "vi"),
        diagnostics=[
            LabeledValue(label="k/(lambda-mu)^2", value=k / split if split else math.inf),
            LabeledValue(label="|nu|/(lambda-mu)^2", value=abs(nu) / split if split else math.inf),
        ],
    )
