"""Graphs associated with caps and the secant identities they satisfy.

The vertices are the vectors of GF(q)^{n+1}, vector (x_0, ..., x_n) having index
sum x_i q^{n-i}. Two vectors a != b are adjacent when the direction b - a is a
point of the cap, so the graph is a Cayley graph of degree t(q-1).
"""

import itertools
import logging

import numpy as np
import numpy.typing as npt

from asrg_core.errors import TooLarge
from asrg_core.types import CapGraphAudit
from asrg_geometry.caps import Cap, CapProfile, cap_secant_profile, uniform_secant_mu
from asrg_geometry.field import Field
from asrg_graphs.graph import Graph
from asrg_graphs.stats import asrg_stats, common_neighbor_blocks, regularity_classify

logger = logging.getLogger(__name__)

MAX_CONSTRUCTION_ORDER = 100_000

IntArray = npt.NDArray[np.int64]


def _vectors(field: Field, dim: int) -> IntArray:
    return np.array(list(itertools.product(range(field.q), repeat=dim)), dtype=np.int64)


def _encode(vectors: IntArray, q: int) -> IntArray:
    weights = q ** np.arange(vectors.shape[-1] - 1, -1, -1, dtype=np.int64)
    return np.asarray(vectors @ weights, dtype=np.int64)


def _directions(cap: Cap) -> IntArray:
    f = cap.space.field
    scaled = [
        [f.mul(alpha, c) for c in point] for point in cap.points for alpha in range(1, f.q)
    ]
    return np.array(scaled, dtype=np.int64).reshape(-1, cap.space_dim + 1)


def cap_graph(cap: Cap, *, max_order: int = MAX_CONSTRUCTION_ORDER) -> Graph:
    """The Cayley graph on GF(q)^{n+1} with connection set the cap directions.

    Raises:
        TooLarge: q^{n+1} exceeds max_order
    """
    q, dim = cap.q, cap.space_dim + 1
    v = q**dim
    if v > max_order:
        raise TooLarge(f"cap graph would have {v} vertices, limit {max_order}")
    f = cap.space.field
    vectors = _vectors(f, dim)
    rows = [0] * v
    for d in _directions(cap):
        targets = _encode(f.vadd(vectors, d[None, :]), q)
        for a, b in enumerate(targets.tolist()):
            rows[a] |= 1 << b
    g = Graph(v, rows)
    logger.info(f"cap graph of t={cap.size} in PG({cap.space_dim},{q}): v={v}")
    return g


def _direction_tables(
    cap: Cap, profile: CapProfile, vectors: IntArray
) -> tuple[IntArray, IntArray]:
    """Per vector w != 0: projective point index of <w> and h of that point (-1 on the cap)."""
    space = cap.space
    point_of = np.full(len(vectors), -1, dtype=np.int64)
    h_of = np.full(len(vectors), -1, dtype=np.int64)
    for w, row in enumerate(vectors.tolist()):
        if not any(row):
            continue
        point = space.normalize(row)
        point_of[w] = space.index_of(point)
        h_of[w] = -1 if point in cap else profile.h(point)
    return point_of, h_of


def cap_graph_audit(
    cap: Cap,
    g: Graph | None = None,
    *,
    max_order: int = MAX_CONSTRUCTION_ORDER,
    profile: CapProfile | None = None,
) -> CapGraphAudit:
    """Check (v, k, lambda) = (q^{n+1}, t(q-1), q-2) and mu_ab = 2 h_p on every pair.

    p is the direction of b - a. Every exterior point carries q^{n+1}(q-1)
    ordered nonadjacent pairs, so Var(mu_ab) = 4 Var(h_p) exactly; both sides
    are computed independently and compared as rationals. A precomputed
    ``cap_secant_profile(cap)`` may be passed as ``profile``.

    Raises:
        TooSmall: fewer than two cap points
        Degenerate: the graph is edgeless or complete
    """
    if profile is None:
        profile = cap_secant_profile(cap)
    if g is None:
        g = cap_graph(cap, max_order=max_order)
    q, n, t = cap.q, cap.space_dim, cap.size
    f = cap.space.field
    vectors = _vectors(f, n + 1)
    neg = f.tables()["neg"]
    point_of, h_of = _direction_tables(cap, profile, vectors)
    weights = q ** np.arange(n, -1, -1, dtype=np.int64)

    stats = asrg_stats(g)
    regularity = regularity_classify(g)
    per_direction = np.zeros(cap.space.point_count(), dtype=np.int64)
    violations = 0
    pairs = 0
    for start, counts, adj in common_neighbor_blocks(g):
        block = vectors[start : start + counts.shape[0]]
        diff = np.zeros(counts.shape, dtype=np.int64)
        for i in range(n + 1):
            diff += f.vadd(vectors[None, :, i], neg[block[:, i]][:, None]) * weights[i]
        mask = ~adj & (diff != 0)
        expected = 2 * h_of[diff[mask]]
        violations += int(np.count_nonzero(counts[mask] != expected))
        pairs += int(mask.sum())
        per_direction += np.bincount(point_of[diff[mask]], minlength=per_direction.size)

    exterior = [i for i, p in enumerate(cap.space.points()) if p not in cap]
    uniform_pairs = bool(np.all(per_direction[exterior] == q ** (n + 1) * (q - 1)))
    expected_v, expected_k, expected_lam = q ** (n + 1), t * (q - 1), q - 2
    lam = regularity.lam
    printed_mu = uniform_secant_mu(t, n, q)
    variance_ok = stats.mu_var == 4 * profile.variance

    flags = []
    if violations:
        flags.append(f"mu_ab = 2 h_p fails on {violations} ordered pairs")
    if not variance_ok:
        flags.append("Var(mu_ab) differs from 4 Var(h_p)")
    if profile.variance == 0 and printed_mu != stats.mu_mean:
        flags.append(f"printed uniform mu {printed_mu} vs measured mean {stats.mu_mean}")
    for flag in flags:
        logger.warning(f"cap audit t={t} PG({n},{q}): {flag}")

    return CapGraphAudit(
        proj_dim=n,
        q=q,
        t=t,
        v=g.v,
        k=stats.k,
        lam=lam,
        expected_v=expected_v,
        expected_k=expected_k,
        expected_lam=expected_lam,
        vk_match=g.v == expected_v and stats.k == expected_k,
        lambda_match=lam == expected_lam,
        pairs_checked=pairs,
        identity_violations=violations,
        direction_pairs_uniform=uniform_pairs,
        mu_mean=stats.mu_mean,
        h_mean=profile.mean,
        mu_var=stats.mu_var,
        h_var=profile.variance,
        variance_identity_holds=variance_ok,
        uniform=profile.variance == 0,
        printed_uniform_mu=printed_mu,
        stats=stats,
        flags=flags,
    )
