"""Exact maximum clique by branch and bound on bit-rows.

Candidates are ordered by a greedy sequential colouring; a branch is cut as
soon as the current clique plus the colour bound cannot beat the incumbent.
"""

import logging

from asrg_core.errors import LimitExceeded, TooLarge
from asrg_core.types import CliqueReport
from asrg_graphs.graph import Graph, bits_iter

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 100_000_000
MAX_CLIQUE_ORDER = 5000


def _greedy_clique(rows: tuple[int, ...], cand: int) -> list[int]:
    clique: list[int] = []
    while cand:
        v = max(bits_iter(cand), key=lambda x: ((rows[x] & cand).bit_count(), -x))
        clique.append(v)
        cand &= rows[v]
    return clique


def _colour_order(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            avail &= ~b & ~rows[v]
            uncoloured &= ~b
            order.append(v)
            bounds.append(colour)
    return order, bounds


def max_clique(
    g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET, max_order: int = MAX_CLIQUE_ORDER
) -> list[int]:
    """A maximum clique of g, sorted ascending.

    Raises:
        TooLarge: v exceeds max_order
        LimitExceeded: the search visited more than node_budget nodes
    """
    if g.v > max_order:
        raise TooLarge(f"clique search limited to v <= {max_order}")
    if g.v == 0:
        return []
    rows = g.rows
    full = (1 << g.v) - 1
    best = _greedy_clique(rows, full)
    nodes = 0

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise LimitExceeded(f"clique search exceeded {node_budget} nodes")
        order, bounds = _colour_order(rows, cand)
        for pos in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[pos] <= len(best):
                return
            v = order[pos]
            clique.append(v)
            sub = cand & rows[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = clique[:]
            clique.pop()
            cand &= ~(1 << v)

    expand([], full)
    logger.debug(f"clique search on v={g.v}: omega={len(best)} after {nodes} nodes")
    return sorted(best)


def clique_number(g: Graph, limit: int = DEFAULT_NODE_BUDGET) -> int:
    return len(max_clique(g, node_budget=limit))


def clique_report(
    g: Graph, limit: int = DEFAULT_NODE_BUDGET, *, max_order: int = MAX_CLIQUE_ORDER
) -> CliqueReport:
    witness = max_clique(g, node_budget=limit, max_order=max_order)
    return CliqueReport(clique_number=len(witness), witness=witness)
