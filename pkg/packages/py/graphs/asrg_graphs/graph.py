"""Dense simple graphs stored as bit-rows."""

import logging
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property
from typing import Any

import networkx as nx
import numpy as np
import numpy.typing as npt

from asrg_core.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    NotAClique,
    NotSymmetric,
)

logger = logging.getLogger(__name__)


def bits_iter(x: int) -> Iterator[int]:
    """Indices of the set bits of x, ascending."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for i in vertices:
        m |= 1 << i
    return m


class Graph:
    """Undirected simple graph on vertices 0..v-1.

    Row i is a Python int whose bit j is set when i and j are adjacent.
    Instances are immutable.
    """

    def __init__(self, v: int, rows: Sequence[int]) -> None:
        """Initialize from bit-rows (validated for symmetry and loops)."""
        if v < 0 or len(rows) != v:
            raise IndexOutOfRange(f"expected {v} rows, got {len(rows)}")
        full = (1 << v) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise IndexOutOfRange(f"row {i} has neighbours outside 0..{v - 1}")
            if row >> i & 1:
                raise LoopEdge(f"loop at vertex {i}")
            for j in bits_iter(row):
                if not rows[j] >> i & 1:
                    raise NotSymmetric(f"edge {i}-{j} is not symmetric")
        self.v = v
        self.rows: tuple[int, ...] = tuple(rows)

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from an edge list.

        Raises:
            LoopEdge: an edge (i, i)
            IndexOutOfRange: an endpoint outside 0..v-1
            DuplicateEdge: the same edge twice, in either orientation
        """
        if v < 0:
            raise IndexOutOfRange(f"negative order {v}")
        rows = [0] * v
        for i, j in edges:
            if i == j:
                raise LoopEdge(f"loop at vertex {i}")
            if not (0 <= i < v and 0 <= j < v):
                raise IndexOutOfRange(f"edge ({i}, {j}) outside 0..{v - 1}")
            if rows[i] >> j & 1:
                raise DuplicateEdge(f"edge ({i}, {j}) listed twice")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(v, rows)

    @classmethod
    def from_matrix(cls, matrix: npt.ArrayLike) -> "Graph":
        """Build from a symmetric 0/1 matrix with zero diagonal."""
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NotSymmetric(f"adjacency matrix must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise NotSymmetric("adjacency matrix is not symmetric")
        bits = (a != 0).astype(np.uint8)
        if bits.diagonal().any():
            raise LoopEdge("adjacency matrix has a nonzero diagonal")
        packed = np.packbits(bits, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(a.shape[0])]
        return cls(a.shape[0], rows)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build from a networkx graph, numbering nodes in sorted order when possible."""
        try:
            nodes = sorted(g.nodes())
        except TypeError:
            nodes = list(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.v))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(v={self.v}, edges={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and other.rows == self.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    @cached_property
    def _matrix(self) -> npt.NDArray[np.uint8]:
        if self.v == 0:
            return np.zeros((0, 0), dtype=np.uint8)
        nbytes = (self.v + 7) // 8
        buf = b"".join(row.to_bytes(nbytes, "little") for row in self.rows)
        packed = np.frombuffer(buf, dtype=np.uint8).reshape(self.v, nbytes)
        bits = np.unpackbits(packed, axis=1, count=self.v, bitorder="little")
        bits.setflags(write=False)
        return bits

    def matrix(self, dtype: npt.DTypeLike = np.float64) -> npt.NDArray[Any]:
        """Adjacency matrix as a fresh array of the requested dtype."""
        return self._matrix.astype(dtype)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def regular_degree(self) -> int | None:
        """The common degree, or None for irregular graphs."""
        degs = set(self.degrees())
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(bits_iter(self.rows[i]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j in bits_iter(row >> (i + 1)):
                yield i, i + 1 + j

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex vertices[t] becomes t."""
        for x in vertices:
            if not 0 <= x < self.v:
                raise IndexOutOfRange(f"vertex {x} outside 0..{self.v - 1}")
        position = {y: t for t, y in enumerate(vertices)}
        selected = mask_of(vertices)
        rows = [mask_of(position[y] for y in bits_iter(self.rows[x] & selected)) for x in vertices]
        return Graph(len(vertices), rows)

    def is_clique(self, vertices: Sequence[int]) -> bool:
        for a_pos, a in enumerate(vertices):
            for b in vertices[a_pos + 1 :]:
                if a == b or not self.has_edge(a, b):
                    return False
        return True

    def triangle_count(self) -> int:
        total = 0
        for i, j in self.edges():
            total += (self.rows[i] & self.rows[j]).bit_count()
        return total // 3


def graph_build(v: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(v, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.v) - 1
    return Graph(g.v, [full & ~row & ~(1 << i) for i, row in enumerate(g.rows)])


def common_neighborhood(g: Graph, clique: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on the common neighbours of a clique.

    Returns:
        The subgraph and the list mapping its vertices to vertices of g

    Raises:
        NotAClique: the vertices are not pairwise adjacent
    """
    for x in clique:
        if not 0 <= x < g.v:
            raise IndexOutOfRange(f"vertex {x} outside 0..{g.v - 1}")
    if not g.is_clique(clique):
        raise NotAClique(f"{list(clique)} is not a clique")
    common = (1 << g.v) - 1
    for x in clique:
        common &= g.rows[x]
    mapping = list(bits_iter(common))
    return g.induced(mapping), mapping
