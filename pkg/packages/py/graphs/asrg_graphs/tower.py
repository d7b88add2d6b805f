"""Common-neighborhood towers Gamma_0 = G, Gamma_i = common neighbours of an i-clique."""

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from asrg_core.errors import Degenerate, DomainError, NoCliqueFound, NotRegular
from asrg_core.types import AsrgStats, TowerLevelReport
from asrg_graphs.graph import Graph, common_neighborhood
from asrg_graphs.spectral import (
    DEFAULT_CLUSTER_TOLERANCE,
    MAX_SPECTRAL_ORDER,
    spectrum_report,
)
from asrg_graphs.stats import asrg_stats

logger = logging.getLogger(__name__)


def greedy_clique_chain(g: Graph, i: int) -> list[int]:
    """Pick i vertices, each of maximum degree in the current common neighbourhood.

    Ties go to the lowest vertex index.

    Raises:
        NoCliqueFound: the neighbourhood empties before i vertices are chosen
    """
    clique: list[int] = []
    current, mapping = g, list(range(g.v))
    for step in range(i):
        if current.v == 0:
            raise NoCliqueFound(f"common neighbourhood empty after {step} of {i} vertices")
        degrees = current.degrees()
        best = max(range(current.v), key=lambda x: (degrees[x], -x))
        clique.append(mapping[best])
        current, local = common_neighborhood(current, [best])
        mapping = [mapping[x] for x in local]
    return clique


def neighborhood_tower(
    g: Graph,
    m: int,
    i: int,
    clique: Sequence[int] | None = None,
    *,
    cluster_tolerance: float = DEFAULT_CLUSTER_TOLERANCE,
    max_order: int = MAX_SPECTRAL_ORDER,
) -> TowerLevelReport:
    """Diagnostics of Gamma_i for a K_m-free candidate G.

    Args:
        g: Regular graph
        m: Clique size the graph is meant to avoid
        i: Level, 0 <= i <= m - 3
        clique: An i-clique to descend along; greedy max-degree descent if omitted
        cluster_tolerance: Eigenvalue clustering tolerance
        max_order: Largest Gamma_i given to the eigensolver

    Returns:
        The level report; irregular levels carry only the degree summary

    Raises:
        NotRegular: g is not regular
        DomainError: i outside 0..m-3 or the clique has the wrong size
        NoCliqueFound: greedy descent found no i-clique
        NotAClique: the given vertices are not pairwise adjacent
    """
    k = g.regular_degree()
    if k is None:
        raise NotRegular("the neighborhood tower needs a regular graph")
    if not 0 <= i <= m - 3:
        raise DomainError(f"level i must satisfy 0 <= i <= m-3, got i={i}, m={m}")
    if clique is None:
        chosen = greedy_clique_chain(g, i)
    else:
        chosen = sorted(clique)
        if len(chosen) != i:
            raise DomainError(f"expected a clique of size {i}, got {len(chosen)}")
    level = common_neighborhood(g, chosen)[0] if chosen else g

    v_i = level.v
    degrees = level.degrees()
    edges = level.edge_count
    k_min, k_max = min(degrees, default=0), max(degrees, default=0)
    k_mean = Fraction(2 * edges, v_i) if v_i else Fraction(0)
    regular = k_min == k_max
    flags: list[str] = []

    stats: AsrgStats | None = None
    r_i: float | None = None
    s_i: float | None = None
    if not regular:
        flags.append("Gamma_i is irregular; only the degree summary is reported")
    elif v_i >= 2 and v_i <= max_order:
        try:
            stats = asrg_stats(level)
        except Degenerate as e:
            flags.append(str(e))
        spectrum = spectrum_report(level, cluster_tolerance=cluster_tolerance, max_order=max_order)
        r_i, s_i = spectrum.r, spectrum.s
    elif v_i > max_order:
        flags.append(f"Gamma_i has {v_i} vertices; spectrum skipped")

    density = k / g.v
    k_i = float(k_mean)
    p1_degree_ratio = k_i / (k * density**i) if k else None
    p1_density = k_i / v_i if v_i else None
    p2_ratio = None
    if stats is not None and s_i is not None and stats.mu_mean != stats.lambda_mean:
        p2_ratio = -s_i / float(stats.mu_mean - stats.lambda_mean)
    clique_free_ratio = None
    if s_i is not None and k_i > 0:
        clique_free_ratio = -s_i / (k_i * (k_i / v_i) ** (m - i - 2))
    sigma_floor = math.sqrt(k) * density ** (1.5 * m - 2 - i)
    sigma_ratio = stats.sigma / sigma_floor if stats is not None and sigma_floor > 0 else None

    triangles = level.triangle_count()
    lambda_last: Fraction | None = None
    if i == m - 3:
        lambda_last = Fraction(3 * triangles, edges) if edges else Fraction(0)
        if lambda_last:
            flags.append(f"lambda_{m - 3} = {lambda_last}; G contains K_{m} along this chain")
    logger.info(f"tower level i={i} (m={m}): clique={chosen}, v_i={v_i}, k_i in [{k_min}, {k_max}]")

    return TowerLevelReport(
        m=m,
        i=i,
        clique=chosen,
        v_i=v_i,
        edges=edges,
        k_mean=k_mean,
        k_min=k_min,
        k_max=k_max,
        regular=regular,
        stats=stats,
        r_i=r_i,
        s_i=s_i,
        p1_degree_ratio=p1_degree_ratio,
        p1_density=p1_density,
        p2_ratio=p2_ratio,
        clique_free_ratio=clique_free_ratio,
        sigma_floor=sigma_floor,
        sigma_ratio=sigma_ratio,
        triangle_free=triangles == 0,
        lambda_last=lambda_last,
        flags=flags,
    )
