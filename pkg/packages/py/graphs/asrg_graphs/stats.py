"""Exact pair statistics, regularity classes, and the mixing window.

For a pair (a, b), lambda_ab (a adjacent to b) or mu_ab (a, b distinct and
nonadjacent) is the number of common neighbours. Sums run over ordered pairs.
"""

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np
import numpy.typing as npt

from asrg_core.errors import Degenerate, IndexOutOfRange, NotRegular
from asrg_core.types import AsrgStats, MixingWindow, Regularity
from asrg_graphs.graph import Graph, bits_iter, mask_of

logger = logging.getLogger(__name__)

_BLOCK_ENTRIES = 1 << 22


def common_neighbor_blocks(
    g: Graph,
) -> Iterator[tuple[int, npt.NDArray[np.int64], npt.NDArray[np.bool_]]]:
    """Yield (start, C, adjacent) for consecutive row blocks of C = A^2.

    float32 products are exact here since every count is below 2^24.
    """
    a = g.matrix(np.float32)
    block = max(1, _BLOCK_ENTRIES // max(1, g.v))
    for start in range(0, g.v, block):
        rows = a[start : start + block]
        counts = np.rint(rows @ a).astype(np.int64)
        yield start, counts, rows != 0


@dataclass
class _PairSums:
    count: int = 0
    total: int = 0
    squares: int = 0
    low: int | None = None
    high: int | None = None

    def add(self, values: npt.NDArray[np.int64]) -> None:
        if values.size == 0:
            return
        self.count += int(values.size)
        self.total += int(values.sum())
        self.squares += int((values * values).sum())
        lo, hi = int(values.min()), int(values.max())
        self.low = lo if self.low is None else min(self.low, lo)
        self.high = hi if self.high is None else max(self.high, hi)

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.count)

    @property
    def sq_dev(self) -> Fraction:
        return self.squares - Fraction(self.total**2, self.count)


def _pair_sums(g: Graph) -> tuple[_PairSums, _PairSums]:
    adjacent, nonadjacent = _PairSums(), _PairSums()
    for start, counts, adj in common_neighbor_blocks(g):
        off_diag = np.ones_like(adj)
        for t in range(counts.shape[0]):
            off_diag[t, start + t] = False
        adjacent.add(counts[adj])
        nonadjacent.add(counts[~adj & off_diag])
    return adjacent, nonadjacent


def asrg_stats(g: Graph) -> AsrgStats:
    """Exact (v, k, lambda, mu; sigma) of a regular, non-complete, non-edgeless graph.

    Raises:
        NotRegular: degrees differ
        Degenerate: the graph is complete or edgeless
    """
    k = g.regular_degree()
    if k is None:
        raise NotRegular("asrg statistics need a regular graph")
    if k == 0 or k == g.v - 1:
        raise Degenerate(f"graph with v={g.v}, k={k} is complete or edgeless")
    lam, mu = _pair_sums(g)
    assert lam.count == g.v * k
    assert mu.count == g.v * (g.v - 1) - g.v * k
    assert lam.low is not None and lam.high is not None
    assert mu.low is not None and mu.high is not None
    lambda_var = lam.sq_dev / lam.count
    mu_var = mu.sq_dev / mu.count
    stats = AsrgStats(
        v=g.v,
        k=k,
        lambda_mean=lam.mean,
        lambda_var=lambda_var,
        mu_mean=mu.mean,
        mu_var=mu_var,
        lambda_pairs=lam.count,
        mu_pairs=mu.count,
        lambda_sq_dev=lam.sq_dev,
        mu_sq_dev=mu.sq_dev,
        lambda_min=lam.low,
        lambda_max=lam.high,
        mu_min=mu.low,
        mu_max=mu.high,
        sigma=math.sqrt(max(lambda_var, mu_var)),
    )
    logger.debug(f"asrg stats v={g.v} k={k} lambda={stats.lambda_mean} mu={stats.mu_mean}")
    return stats


def regularity_classify(g: Graph) -> Regularity:
    """Strongest of irregular, regular(k), edge_regular(v, k, lambda), srg(v, k, lambda, mu).

    Complete and edgeless graphs are never reported as strongly regular.
    """
    k = g.regular_degree()
    if k is None:
        return Regularity(kind="irregular", v=g.v)
    if k == 0:
        return Regularity(kind="regular", v=g.v, k=0)
    lam, mu = _pair_sums(g)
    if lam.low != lam.high:
        return Regularity(kind="regular", v=g.v, k=k)
    if k == g.v - 1 or mu.low != mu.high:
        return Regularity(kind="edge_regular", v=g.v, k=k, lam=lam.low)
    return Regularity(kind="srg", v=g.v, k=k, lam=lam.low, mu=mu.low)


def complement_parameters(
    stats: AsrgStats, mode: Literal["printed", "exact"] = "exact"
) -> tuple[int, int, Fraction, Fraction]:
    """(v, k, lambda, mu) of the complement.

    ``printed`` gives (v, v-k-1, v-2k+mu, v-2k+lambda); ``exact`` subtracts the
    2 that the printed lambda omits, so Petersen maps to (10, 6, 3, 4).
    """
    v, k = stats.v, stats.k
    lam = v - 2 * k + stats.mu_mean
    if mode == "exact":
        lam -= 2
    return v, v - k - 1, lam, v - 2 * k + stats.lambda_mean


def mixing_window(
    g: Graph, vertices: Sequence[int], r: float, s: float, *, tolerance: float = 1e-9
) -> MixingWindow:
    """Expander-mixing bounds on the edges induced on ``vertices``.

    lo = y(y(k-s)/v + s)/2 and hi = y(y(k-r)/v + r)/2 with y = |Y|.
    """
    k = g.regular_degree()
    if k is None:
        raise NotRegular("the mixing window needs a regular graph")
    for x in vertices:
        if not 0 <= x < g.v:
            raise IndexOutOfRange(f"vertex {x} outside 0..{g.v - 1}")
    selected = mask_of(vertices)
    y = selected.bit_count()
    e = sum((g.rows[x] & selected).bit_count() for x in bits_iter(selected)) // 2
    if y == 0:
        return MixingWindow(y=0, lo=0.0, hi=0.0, e=0, contained=True)
    lo = 0.5 * y * (y * (k - s) / g.v + s)
    hi = 0.5 * y * (y * (k - r) / g.v + r)
    slack = tolerance * max(1.0, abs(lo), abs(hi))
    return MixingWindow(y=y, lo=lo, hi=hi, e=e, contained=lo - slack <= e <= hi + slack)
