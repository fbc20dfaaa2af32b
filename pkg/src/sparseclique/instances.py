"""Named benchmark instances: built-in generators plus optional local files.

The classic clique benchmark families that are pure combinatorial objects
are generated directly:

- ``hammingN-D``: vertices are N-bit strings, adjacent when their Hamming
  distance is at least D.
- ``johnsonN-W-D``: vertices are the weight-W strings of length N, same
  adjacency rule.
- ``keller4``: the subgraph of the dimension-4 Keller graph induced on the
  neighborhood of the zero tuple (tuples over {0,1,2,3} adjacent when some
  coordinate differs by exactly 2 mod 4 and at least two coordinates
  differ).
- ``c-fatN-C``: N vertices split over k = floor(N / (C ln N)) clusters
  arranged on a ring (cluster sizes differ by at most one, larger clusters
  first); vertices are adjacent iff their clusters are at ring distance
  <= 1.

Every generator is validated against the published vertex/edge/degree
counts in the test suite. Families built from unpublished random seeds
(brock, p_hat, san, MANN) cannot be regenerated; for those `load` falls
back to files named ``<name>.clq`` / ``.mtx`` / ``.txt`` / ``.edges`` in
the directory given by the SPARSECLIQUE_BENCH_DIR environment variable (or
an explicit search path), and raises `InstanceUnavailable` otherwise.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from .graph import EdgeList, Graph, normalize
from .io import load_graph

BENCH_DIR_ENV = "SPARSECLIQUE_BENCH_DIR"
_FILE_SUFFIXES = (".clq", ".mtx", ".txt", ".edges")


class InstanceUnavailable(KeyError):
    """Requested instance has no generator and no local file was found."""


def _edges_from_mask(adj: np.ndarray) -> np.ndarray:
    iu = np.triu_indices(adj.shape[0], k=1)
    keep = adj[iu]
    return np.column_stack([iu[0][keep], iu[1][keep]])


def hamming_graph(bits: int, min_distance: int) -> Graph:
    codes = np.arange(1 << bits, dtype=np.uint32)
    dist = np.bitwise_count(codes[:, None] ^ codes[None, :])
    return normalize(EdgeList(1 << bits, _edges_from_mask(dist >= min_distance)))


def johnson_graph(universe: int, weight: int, min_distance: int) -> Graph:
    from itertools import combinations

    masks = np.array(
        [sum(1 << b for b in combo) for combo in combinations(range(universe), weight)],
        dtype=np.uint32,
    )
    dist = np.bitwise_count(masks[:, None] ^ masks[None, :])
    return normalize(EdgeList(masks.size, _edges_from_mask(dist >= min_distance)))


def keller4_graph() -> Graph:
    dim = 4
    tuples = np.array(np.meshgrid(*([range(4)] * dim), indexing="ij")).reshape(dim, -1).T

    def adjacency(digits: np.ndarray) -> np.ndarray:
        a = digits[:, None, :]
        b = digits[None, :, :]
        differs = (a != b).sum(axis=2)
        two_apart = ((a - b) % 4 == 2).any(axis=2)
        return (differs >= 2) & two_apart

    zero_adj = adjacency(np.vstack([tuples, np.zeros((1, dim), dtype=tuples.dtype)]))
    keep = zero_adj[-1, :-1]
    verts = tuples[keep]
    return normalize(EdgeList(verts.shape[0], _edges_from_mask(adjacency(verts))))


def cfat_graph(n: int, c: int) -> Graph:
    k = int(n // (c * math.log(n)))
    q, r = divmod(n, k)
    sizes = [q + 1] * r + [q] * (k - r)
    cluster = np.repeat(np.arange(k, dtype=np.int64), sizes)
    gap = np.abs(cluster[:, None] - cluster[None, :])
    adj = (gap <= 1) | (gap == k - 1)
    return normalize(EdgeList(n, _edges_from_mask(adj)))


@dataclass(frozen=True)
class InstanceInfo:
    """Published structural facts plus an optional generator."""

    name: str
    n: int
    m: int
    max_degree: int | None
    omega: int | None
    generator: Callable[[], Graph] | None = None

    @property
    def generable(self) -> bool:
        return self.generator is not None


def _registry() -> dict[str, InstanceInfo]:
    rows: list[InstanceInfo] = [
        InstanceInfo("hamming6-2", 64, 1824, 57, 32, lambda: hamming_graph(6, 2)),
        InstanceInfo("hamming6-4", 64, 704, 22, 4, lambda: hamming_graph(6, 4)),
        InstanceInfo("hamming8-2", 256, 31616, 247, 128, lambda: hamming_graph(8, 2)),
        InstanceInfo("hamming8-4", 256, 20864, 163, 16, lambda: hamming_graph(8, 4)),
        InstanceInfo("hamming10-2", 1024, 518656, 1013, 512, lambda: hamming_graph(10, 2)),
        InstanceInfo("johnson8-2-4", 28, 210, 15, 4, lambda: johnson_graph(8, 2, 4)),
        InstanceInfo("johnson8-4-4", 70, 1855, 53, 14, lambda: johnson_graph(8, 4, 4)),
        InstanceInfo("johnson16-2-4", 120, 5460, 91, 8, lambda: johnson_graph(16, 2, 4)),
        InstanceInfo("keller4", 171, 9435, 124, 11, keller4_graph),
        InstanceInfo("c-fat200-1", 200, 1534, None, 12, lambda: cfat_graph(200, 1)),
        InstanceInfo("c-fat200-2", 200, 3235, None, 24, lambda: cfat_graph(200, 2)),
        InstanceInfo("c-fat200-5", 200, 8473, 86, 58, lambda: cfat_graph(200, 5)),
        InstanceInfo("c-fat500-1", 500, 4459, None, 14, lambda: cfat_graph(500, 1)),
        InstanceInfo("c-fat500-2", 500, 9139, None, 26, lambda: cfat_graph(500, 2)),
        InstanceInfo("c-fat500-5", 500, 23191, None, 64, lambda: cfat_graph(500, 5)),
        InstanceInfo("c-fat500-10", 500, 46627, None, 126, lambda: cfat_graph(500, 10)),
        # Seed-dependent or unpublished constructions: file-only.
        InstanceInfo("brock200_2", 200, 9876, 114, 12),
        InstanceInfo("p_hat300-1", 300, 10933, None, 8),
        InstanceInfo("MANN_a9", 45, 918, None, 16),
        InstanceInfo("MANN_a27", 378, 70551, None, 126),
        InstanceInfo("san200_0.7_1", 200, 13930, None, 30),
        # Real-world spot-check graphs: file-only.
        InstanceInfo("cond-mat-2003", 31163, 120029, 202, 25),
        InstanceInfo("dictionary28", 52652, 89038, 38, 26),
        InstanceInfo("as-Skitter", 1696415, 11095298, 35455, 67),
    ]
    return {row.name: row for row in rows}


REGISTRY: dict[str, InstanceInfo] = _registry()


def info(name: str) -> InstanceInfo:
    try:
        return REGISTRY[name]
    except KeyError:
        raise InstanceUnavailable(f"unknown instance {name!r}") from None


def search_dirs(extra: Iterable[str | Path] | None = None) -> list[Path]:
    dirs = [Path(p) for p in (extra or [])]
    env = os.environ.get(BENCH_DIR_ENV)
    if env:
        dirs.append(Path(env))
    dirs.append(Path.cwd() / "benchmarks")
    return dirs


def find_file(name: str, dirs: Iterable[str | Path] | None = None) -> Path | None:
    for directory in search_dirs(dirs):
        for suffix in _FILE_SUFFIXES:
            candidate = Path(directory) / f"{name}{suffix}"
            if candidate.is_file():
                return candidate
    return None


def generate(name: str) -> Graph:
    row = info(name)
    if row.generator is None:
        raise InstanceUnavailable(
            f"instance {name!r} comes from an unreproducible construction; "
            f"provide the file via ${BENCH_DIR_ENV}"
        )
    return row.generator()


def available(name: str, dirs: Iterable[str | Path] | None = None) -> bool:
    if name not in REGISTRY:
        return False
    return REGISTRY[name].generable or find_file(name, dirs) is not None


def load(name: str, dirs: Iterable[str | Path] | None = None) -> Graph:
    """Load a named instance, preferring a local file over generation.

    Files are cross-checked against the published vertex and edge counts so
    a mislabeled drop-in cannot silently skew results.
    """
    row = info(name)
    path = find_file(name, dirs)
    if path is not None:
        g = load_graph(path)
        if g.n != row.n or g.m != row.m:
            raise ValueError(
                f"{path} does not match published shape for {name}: "
                f"expected n={row.n} m={row.m}, got n={g.n} m={g.m}"
            )
        return g
    return generate(name)
