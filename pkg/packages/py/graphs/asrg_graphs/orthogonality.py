"""Orthogonality graphs NO^{eps perp}_{n,q} and audits of their printed parameters.

n is the vector-space dimension and m = n // 2. Vertices are the nonsingular
projective points of one square class of Q; two vertices are adjacent when
B(x, y) = 0.
"""

import logging
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from asrg_core.errors import Degenerate, DomainError, EvenCharacteristic, TooLarge
from asrg_core.types import NoFormulaParams, OrthogonalityReport, TowerStepReport
from asrg_geometry.field import field_make
from asrg_geometry.projective import ProjectiveSpace
from asrg_geometry.quadratic import FormKind, IntArray, QuadraticForm, quadratic_form_standard
from asrg_graphs.clique import DEFAULT_NODE_BUDGET, max_clique
from asrg_graphs.graph import Graph, common_neighborhood
from asrg_graphs.spectral import eigh
from asrg_graphs.stats import asrg_stats, regularity_classify

logger = logging.getLogger(__name__)

MAX_NO_GRAPH_ORDER = 3000
COSPECTRAL_TOLERANCE = 1e-6


def _gamma(q: int) -> int:
    if q % 2 == 0:
        raise EvenCharacteristic(f"orthogonality graphs need odd q, got {q}")
    return 1 if q % 4 == 1 else -1


def _check_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise DomainError(f"eps must be +1 or -1, got {eps}")


def no_formula_params(n: int, q: int, eps: int) -> NoFormulaParams:
    """The printed (v, k, lambda, mu), mu_xy range and clique number; no construction."""
    gamma = _gamma(q)
    _check_eps(eps)
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    m = n // 2
    half = Fraction(1, 2)
    qq = Fraction(q)
    if n % 2 == 1:
        v = half * qq**m * (qq**m + eps)
        k = half * qq ** (m - 1) * (qq**m - eps)
        lam = half * qq ** (m - 1) * (qq ** (m - 1) + gamma * eps)
        mu = half * qq ** (m - 1) * (qq ** (m - 1) - eps)
        base = qq ** (m - 1)
        mu_range = (half * base * (base - 1), half * base * (base + 1))
        mu_stated = q in (3, 5)
    else:
        v = half * qq ** (m - 1) * (qq**m - eps)
        k = half * qq ** (m - 1) * (qq ** (m - 1) - gamma * eps)
        lam = half * qq ** (m - 2) * (qq ** (m - 1) + gamma * eps)
        mu = half * qq ** (m - 1) * (qq ** (m - 2) + eps)
        base = qq ** (m - 2)
        mu_range = (half * qq ** (m - 1) * (base - 1), half * qq ** (m - 1) * (base + 1))
        mu_stated = q == 3
    return NoFormulaParams(
        vector_dim=n,
        q=q,
        eps=eps,
        gamma=gamma,
        m=m,
        v=v,
        k=k,
        lam=lam,
        mu=mu,
        mu_stated=mu_stated,
        mu_range=mu_range,
        clique_number=no_clique_formula(n, q, eps),
    )


def no_clique_formula(n: int, q: int, eps: int) -> int:
    """n - 1 if gamma * eps = (-1)^m, else n."""
    gamma = _gamma(q)
    _check_eps(eps)
    m = n // 2
    return n - 1 if gamma * eps == (-1) ** m else n


def _vertex_points(
    n: int, q: int, eps: int, max_order: int
) -> tuple[IntArray, QuadraticForm]:
    field = field_make(q)
    if n % 2 == 1:
        form = quadratic_form_standard(n, field, FormKind.PARABOLIC)
    else:
        kind = FormKind.HYPERBOLIC if eps == 1 else FormKind.ELLIPTIC
        form = quadratic_form_standard(n, field, kind)
    m = n // 2
    expected = q**m * (q**m + eps) // 2 if n % 2 else q ** (m - 1) * (q**m - eps) // 2
    if expected > max_order:
        raise TooLarge(f"NO graph ({n}, {q}, {eps}) has {expected} vertices, limit {max_order}")
    pts = ProjectiveSpace(n - 1, field).point_array()
    classes = field.vsquare_class(form.values(pts))
    if n % 2 == 0:
        chosen = 1
    else:
        sizes = {c: int(np.count_nonzero(classes == c)) for c in (1, -1)}
        chosen = next(c for c in (1, -1) if sizes[c] == expected)
    return pts[classes == chosen], form


def no_graph_only(n: int, q: int, eps: int, *, max_order: int = MAX_NO_GRAPH_ORDER) -> Graph:
    """The graph NO^{eps perp}_{n,q} without the audit.

    Raises:
        EvenCharacteristic: q is even
        DomainError: n outside 2..8 or eps not +-1
        TooLarge: the vertex count exceeds max_order
    """
    _gamma(q)
    _check_eps(eps)
    if not 2 <= n <= 8:
        raise DomainError(f"NO graphs are built for 2 <= n <= 8, got {n}")
    pts, form = _vertex_points(n, q, eps, max_order)
    adjacency = form.gram_values(pts, pts) == 0
    np.fill_diagonal(adjacency, False)
    g = Graph.from_matrix(adjacency)
    logger.info(f"built NO^{'+' if eps == 1 else '-'}_{n},{q}: v={g.v}, edges={g.edge_count}")
    return g


def no_graph(
    n: int,
    q: int,
    eps: int,
    *,
    max_order: int = MAX_NO_GRAPH_ORDER,
    with_clique: bool = False,
    clique_limit: int = DEFAULT_NODE_BUDGET,
) -> tuple[Graph, OrthogonalityReport]:
    """Build NO^{eps perp}_{n,q} and compare it with the printed parameters.

    For odd n the vertex class is the one of size q^m (q^m + eps) / 2; for even n
    the form is hyperbolic (eps = +1) or elliptic (eps = -1) and the vertices are
    the points with Q(x) a nonzero square.

    Args:
        n: Vector-space dimension, 2..8
        q: Odd prime power
        eps: +1 or -1
        max_order: Largest accepted vertex count
        with_clique: Also compute the clique number exactly
        clique_limit: Node budget for the clique search

    Returns:
        The graph and its audit report
    """
    g = no_graph_only(n, q, eps, max_order=max_order)
    formula = no_formula_params(n, q, eps)
    degrees = g.degrees()
    regularity = regularity_classify(g)
    try:
        stats = asrg_stats(g)
    except Degenerate:
        stats = None
    flags: list[str] = []

    mu_observed = (stats.mu_min, stats.mu_max) if stats is not None else None
    mu_range_ok = None
    if mu_observed is not None:
        lo, hi = formula.mu_range
        mu_range_ok = lo <= mu_observed[0] and mu_observed[1] <= hi
        if not mu_range_ok:
            lo_obs, hi_obs = mu_observed
            flags.append(f"mu_xy in [{lo_obs}, {hi_obs}] outside printed [{lo}, {hi}]")

    v_match = g.v == formula.v
    k_match = min(degrees, default=0) == max(degrees, default=0) == formula.k
    lambda_match = regularity.lam == formula.lam if regularity.lam is not None else None
    mu_match = None
    if formula.mu_stated:
        mu_match = regularity.kind == "srg" and regularity.mu == formula.mu
    for name, ok in (("v", v_match), ("k", k_match), ("lambda", lambda_match), ("mu", mu_match)):
        if ok is False:
            flags.append(f"measured {name} differs from the printed formula")

    clique_value: int | None = None
    clique_match: bool | None = None
    if with_clique:
        clique_value = len(max_clique(g, node_budget=clique_limit))
        clique_match = clique_value == formula.clique_number
        if not clique_match:
            printed = formula.clique_number
            flags.append(f"clique number {clique_value} differs from printed {printed}")
    for flag in flags:
        logger.warning(f"NO({n},{q},{eps}): {flag}")

    report = OrthogonalityReport(
        vector_dim=n,
        q=q,
        eps=eps,
        gamma=formula.gamma,
        m=n // 2,
        v=g.v,
        degree_min=min(degrees, default=0),
        degree_max=max(degrees, default=0),
        regular=regularity.kind != "irregular",
        regularity=regularity,
        stats=stats,
        formula=formula,
        mu_observed=mu_observed,
        mu_range_ok=mu_range_ok,
        v_match=v_match,
        k_match=k_match,
        lambda_match=lambda_match,
        mu_match=mu_match,
        clique_number=clique_value,
        clique_match=clique_match,
        flags=flags,
    )
    return g, report


def _spectrum(g: Graph) -> npt.NDArray[np.float64]:
    if g.v == 0:
        return np.zeros(0)
    values, _ = eigh(g.matrix(np.float64))
    return values


def tower_step_check(
    n: int, q: int, eps: int, *, max_order: int = MAX_NO_GRAPH_ORDER
) -> TowerStepReport:
    """Compare the neighborhood of vertex 0 with the claimed smaller NO graph.

    NO^{eps}_{2m+1}(x) is claimed to be NO^{eps}_{2m} and NO^{eps}_{2m}(x) to be
    NO^{gamma eps}_{2m-1}. Order, degree sequence and spectrum are compared;
    mismatches are reported, not raised.
    """
    if n < 3:
        raise DomainError(f"the tower step needs n >= 3, got {n}")
    gamma = _gamma(q)
    g = no_graph_only(n, q, eps, max_order=max_order)
    if g.v == 0:
        raise DomainError(f"NO({n},{q},{eps}) has no vertices")
    target_dim = n - 1
    target_eps = eps if n % 2 == 1 else gamma * eps
    neighborhood, _ = common_neighborhood(g, [0])
    target = no_graph_only(target_dim, q, target_eps, max_order=max_order)
    printed = no_formula_params(target_dim, q, target_eps)

    nb_degrees = sorted(neighborhood.degrees())
    tg_degrees = sorted(target.degrees())
    order_match = neighborhood.v == target.v
    degree_match = nb_degrees == tg_degrees
    cospectral = None
    if order_match:
        diff = np.abs(_spectrum(neighborhood) - _spectrum(target))
        cospectral = bool(diff.size == 0 or diff.max() <= COSPECTRAL_TOLERANCE)
    printed_k_match = all(d == printed.k for d in nb_degrees)

    flags = []
    if not order_match:
        flags.append(f"neighborhood order {neighborhood.v} vs target order {target.v}")
    if not degree_match:
        flags.append("degree sequences differ")
    if cospectral is False:
        flags.append("spectra differ")
    if not printed_k_match:
        distinct = sorted(set(nb_degrees))
        flags.append(f"neighborhood degrees {distinct} vs printed target k {printed.k}")
    for flag in flags:
        logger.warning(f"tower step NO({n},{q},{eps}) -> NO({target_dim},{q},{target_eps}): {flag}")

    return TowerStepReport(
        source_dim=n,
        q=q,
        eps=eps,
        target_dim=target_dim,
        target_eps=target_eps,
        vertex=0,
        neighborhood_order=neighborhood.v,
        neighborhood_degrees=nb_degrees,
        target_order=target.v,
        target_degrees=tg_degrees,
        order_match=order_match,
        degree_match=degree_match,
        cospectral=cospectral,
        printed_target_v=printed.v,
        printed_target_k=printed.k,
        printed_k_match=printed_k_match,
        flags=flags,
    )
