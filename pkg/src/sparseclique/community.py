"""Overlapping community detection from co-occurrence records.

Pipeline: interaction records (wall, user) -> co-occurrence graph over
walls with Jaccard edge weights -> threshold filter -> one clique per
vertex via the heuristic descent -> deduplicated, subset-free community
list. Vertices may appear in several communities; that overlap is the
point.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .errors import FormatError
from .graph import Graph
from .heuristic import largest_clique_per_vertex


@dataclass
class InteractionRecords:
    """Multiset of (wall, user) interaction pairs with opaque string ids."""

    pairs: list[tuple[str, str]]

    @classmethod
    def from_stream(cls, stream: IO[str]) -> "InteractionRecords":
        pairs = []
        for lineno, line in enumerate(stream, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            fields = stripped.split()
            if len(fields) != 2:
                raise FormatError(f"expected 'wall_id user_id', got {stripped!r}", lineno)
            pairs.append((fields[0], fields[1]))
        return cls(pairs=pairs)

    @classmethod
    def from_file(cls, path: str | Path) -> "InteractionRecords":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_stream(handle)


@dataclass
class WeightedGraph:
    """A graph plus a Jaccard weight in (0, 1] per undirected edge.

    `weights` is keyed by (u, v) with u < v; `labels[v]` is the wall id
    behind vertex v.
    """

    graph: Graph
    weights: dict[tuple[int, int], float]
    labels: list[str]


def build_cooccurrence_graph(records: InteractionRecords) -> WeightedGraph:
    """Walls become vertices; walls sharing at least one user get an edge
    weighted by the Jaccard index of their user sets."""
    if not records.pairs:
        raise ValueError("no interaction records")
    labels = sorted({wall for wall, _ in records.pairs})
    index = {wall: i for i, wall in enumerate(labels)}
    users_per_wall: list[set[str]] = [set() for _ in labels]
    walls_per_user: dict[str, set[int]] = {}
    for wall, user in records.pairs:
        w = index[wall]
        users_per_wall[w].add(user)
        walls_per_user.setdefault(user, set()).add(w)

    shared: dict[tuple[int, int], int] = {}
    for walls in walls_per_user.values():
        ordered = sorted(walls)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1 :]:
                shared[(u, v)] = shared.get((u, v), 0) + 1

    weights = {
        (u, v): count / (len(users_per_wall[u]) + len(users_per_wall[v]) - count)
        for (u, v), count in shared.items()
    }
    graph = Graph.from_edges(len(labels), weights.keys())
    return WeightedGraph(graph=graph, weights=weights, labels=labels)


def threshold_filter(wg: WeightedGraph, threshold: float) -> Graph:
    """Keep only edges with weight strictly greater than `threshold`."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    kept = [edge for edge, weight in wg.weights.items() if weight > threshold]
    return Graph.from_edges(wg.graph.n, kept)


def detect_communities(g: Graph, threads: int = 1) -> set[frozenset[int]]:
    """Overlapping communities: one clique per vertex, deduplicated.

    Identical vertex sets collapse, singleton cliques are dropped, and any
    community that is a proper subset of another is dropped as noise.
    """
    cliques = {frozenset(c) for c in largest_clique_per_vertex(g, threads=threads).values()}
    cliques = {c for c in cliques if len(c) > 1}
    by_size = sorted(cliques, key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for candidate in by_size:
        if not any(candidate < other for other in kept):
            kept.append(candidate)
    return set(kept)
