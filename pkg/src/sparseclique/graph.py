"""Compressed-adjacency graph representation and edge-list normalization.

Every solver in this package consumes the same `Graph`: an undirected simple
graph stored as contiguous offset/index arrays (CSR layout) with neighbor
lists sorted ascending by vertex id. Sorted lists make the dominant inner
operation of the solvers, intersecting a candidate set with a neighborhood,
a linear merge.

Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import FormatError


@dataclass
class EdgeList:
    """Raw ingestion staging: a declared vertex count plus an unnormalized pair multiset.

    The pairs may contain duplicates, self-loops, and both orientations of
    the same undirected edge; `normalize` turns this into a `Graph`.
    """

    n: int
    edges: np.ndarray = field(default_factory=lambda: np.empty((0, 2), dtype=np.int64))

    def __post_init__(self):
        self.edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "EdgeList":
        arr = np.array(list(pairs), dtype=np.int64).reshape(-1, 2)
        return cls(n=n, edges=arr)


class Graph:
    """Immutable undirected simple graph in offset/index (CSR) form.

    Invariants, established by `normalize` and relied on everywhere:

    - neighbor lists sorted ascending, no self-loops, no duplicates
    - symmetric: ``u in neighbors(v)`` iff ``v in neighbors(u)``
    - ``indices.size == 2 * m``

    Treat instances as read-only.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_max_degree")

    def __init__(self, n: int, m: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.m = int(m)
        self.indptr = indptr
        self.indices = indices
        self._max_degree: int | None = None

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a normalized graph directly from an iterable of pairs."""
        return normalize(EdgeList.from_pairs(n, pairs))

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of `v` (a read-only view, do not mutate)."""
        self._check_vertex(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr).astype(np.int32)

    @property
    def max_degree(self) -> int:
        if self._max_degree is None:
            self._max_degree = int(np.diff(self.indptr).max()) if self.n else 0
        return self._max_degree

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        row = self.indices[self.indptr[u] : self.indptr[u + 1]]
        i = np.searchsorted(row, v)
        return i < row.size and row[i] == v

    def edge_pairs(self) -> np.ndarray:
        """All undirected edges as an (m, 2) array with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return np.column_stack([src[keep], dst[keep]])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph with n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def normalize(raw: EdgeList) -> Graph:
    """Collapse a raw edge multiset into a canonical `Graph`.

    Self-loops are removed, duplicate pairs and reverse orientations are
    collapsed, and each surviving undirected edge appears exactly once in
    both endpoint neighbor lists. Idempotent: re-normalizing a graph's own
    edges reproduces it.

    Raises `FormatError` when a pair references a vertex id outside
    ``[0, raw.n)``.
    """
    n = int(raw.n)
    if n < 0:
        raise FormatError(f"negative vertex count {n}")
    edges = raw.edges
    if edges.size:
        bad = (edges < 0) | (edges >= n)
        if bad.any():
            i = int(np.nonzero(bad.any(axis=1))[0][0])
            u, v = int(edges[i, 0]), int(edges[i, 1])
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        keep = lo != hi
        lo, hi = lo[keep], hi[keep]
        key = np.unique(lo * np.int64(n) + hi)
        lo, hi = key // n, key % n
    else:
        lo = hi = np.empty(0, dtype=np.int64)
    m = lo.size
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int32)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n=n, m=int(m), indptr=indptr, indices=indices)


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of `v`; raises IndexError when `v` is out of range."""
    return g.degree(v)


def max_degree(g: Graph) -> int:
    """Largest vertex degree in the graph (0 for the empty graph)."""
    return g.max_degree
