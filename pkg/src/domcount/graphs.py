"""Immutable bit-packed graphs and vertex sets.

A graph stores one Python integer per vertex; bit ``u`` of ``rows[v]`` means
``u`` and ``v`` are adjacent.  Integers double as arbitrary-width bit masks,
so the same representation serves both small graphs (where subset enumeration
is the hot path) and larger constructed graphs up to ``MAX_VERTICES``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InfeasibleOrderError, InvalidEdgeError, SizeLimitError

# Construction-time vertex cap; counting operations are further capped at 64.
MAX_VERTICES = 4096


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise SizeLimitError(f"vertex count {n} exceeds cap {MAX_VERTICES}")


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices 0..n-1, stored as a bit mask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} sets bits outside 0..{self.n - 1}")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is the neighbor bit mask of ``v``.  Instances are safe to
    share between threads.  Use :class:`GraphBuilder`, :func:`new_graph`,
    :func:`from_edges`, or the construction helpers to create one; rows must
    be symmetric and loop-free.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        for v, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {v} sets bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidEdgeError(f"loop at vertex {v}")

    @property
    def m(self) -> int:
        """Edge count (derived from the adjacency rows)."""
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return VertexSet(self.n, self.rows[v]).vertices()

    def open_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self.rows[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self.rows[v] | 1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.rows) if self.n else False

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.rows))

    def relabeled(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new_row = 0
            while row:
                u = (row & -row).bit_length() - 1
                new_row |= 1 << perm[u]
                row &= row - 1
            rows[perm[v]] = new_row
        return Graph(self.n, tuple(rows))

    def check_invariants(self) -> None:
        """Assert adjacency symmetry (loops and range are checked at init)."""
        for v in range(self.n):
            row = self.rows[v]
            while row:
                u = (row & -row).bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise AssertionError(f"asymmetric adjacency between {u} and {v}")
                row &= row - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidEdgeError(f"vertex {v} out of range for n={self.n}")


class GraphBuilder:
    """Mutable edge-insertion phase; ``build()`` freezes into a Graph.

    Builders are single-owner: not safe to share between threads.
    """

    def __init__(self, n: int):
        _check_order(n)
        self.n = n
        self._rows = [0] * n

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        """Insert edge {u, v}; re-inserting an existing edge is a no-op."""
        if u == v:
            raise InvalidEdgeError(f"loop at vertex {u}")
        if not 0 <= u < self.n or not 0 <= v < self.n:
            raise InvalidEdgeError(f"edge ({u}, {v}) out of range for n={self.n}")
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        return self

    def build(self) -> Graph:
        return Graph(self.n, tuple(self._rows))


def new_graph(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    _check_order(n)
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    builder = GraphBuilder(n)
    for u, v in edges:
        builder.add_edge(u, v)
    return builder.build()


def complete_graph(r: int) -> Graph:
    """K_r: every pair of the r vertices adjacent."""
    if r < 1:
        raise InfeasibleOrderError(f"complete graph needs r >= 1, got {r}")
    _check_order(r)
    full = (1 << r) - 1
    return Graph(r, tuple(full ^ (1 << v) for v in range(r)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of h are relabeled by offset g.n."""
    _check_order(g.n + h.n)
    rows = g.rows + tuple(row << g.n for row in h.rows)
    return Graph(g.n + h.n, rows)
