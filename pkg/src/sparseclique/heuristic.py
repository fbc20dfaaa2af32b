"""Fast clique heuristic: one selection path per root vertex.

Instead of recursing over every candidate, the heuristic repeatedly commits
to a single candidate per level (the one with maximum static degree, ties to
the lowest id) until the candidate set empties. The result is a verified
clique whose size lower-bounds the true clique number; cost is bounded by
O(n * max_degree^2). A uniform-random selection variant exists for
comparison, seeded for reproducibility.

`largest_clique_per_vertex` runs the same descent from every vertex with
all pruning disabled so each vertex receives a clique containing it; this
feeds the overlapping-community pipeline.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from math import ceil

import numpy as np

from . import _kernels
from ._kernels import B_SIZE, B_WLEN
from .exact import CliqueResult, PruneStats
from .graph import Graph

POLICIES = ("maxdeg", "random")


@dataclass(frozen=True)
class SelectionPolicy:
    """How the heuristic picks the next clique member from the candidate set."""

    kind: str = "maxdeg"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in POLICIES:
            raise ValueError(f"policy kind must be one of {POLICIES}, got {self.kind!r}")

    @classmethod
    def max_degree(cls) -> "SelectionPolicy":
        return cls(kind="maxdeg")

    @classmethod
    def uniform_random(cls, seed: int) -> "SelectionPolicy":
        return cls(kind="random", seed=seed)


def _heuristic_range(g: Graph, start: int, end: int, max0: int, policy: SelectionPolicy, prune: bool):
    counters = np.zeros(7, dtype=np.int64)
    best = np.array([max0, 0, 0], dtype=np.int64)
    cap = g.max_degree + 2
    witness = np.empty(cap, dtype=np.int32)
    path = np.empty(cap, dtype=np.int32)
    buf_a = np.empty(cap, dtype=np.int32)
    buf_b = np.empty(cap, dtype=np.int32)
    _kernels.heuristic_range(
        g.indptr,
        g.indices,
        g.degrees(),
        start,
        end,
        max0,
        prune,
        prune,
        prune,
        policy.kind == "random",
        np.uint64(policy.seed & 0xFFFFFFFFFFFFFFFF),
        counters,
        best,
        witness,
        path,
        buf_a,
        buf_b,
    )
    return counters, best, witness


def max_clique_heuristic(
    g: Graph, policy: SelectionPolicy | None = None, threads: int = 1
) -> CliqueResult:
    """A verified clique (lower bound on the clique number) from one pass over the roots.

    Output is deterministic for a fixed (graph, policy, seed) when
    threads == 1. With more threads the shared incumbent is refreshed
    between root batches, so the returned size may vary across thread
    counts (it is always a verified lower bound).
    """
    policy = policy if policy is not None else SelectionPolicy.max_degree()
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    t0 = time.perf_counter()

    if threads == 1 or g.n == 0:
        counters, best, witness = _heuristic_range(g, 0, g.n, 0, policy, True)
        total = counters
        best_size = int(best[B_SIZE])
        witness_ids = witness[: int(best[B_WLEN])]
    else:
        state = {"next": 0, "size": 0, "witness": np.empty(0, np.int32)}
        lock = threading.Lock()
        chunk = max(1, min(4096, ceil(g.n / (threads * 8))))
        worker_counters: list[np.ndarray] = []

        def worker():
            local = np.zeros(7, dtype=np.int64)
            while True:
                with lock:
                    if state["next"] >= g.n:
                        worker_counters.append(local)
                        return
                    s = state["next"]
                    e = min(g.n, s + chunk)
                    state["next"] = e
                    cur = state["size"]
                counters, best, witness = _heuristic_range(g, s, e, cur, policy, True)
                local += counters
                with lock:
                    if best[B_SIZE] > state["size"]:
                        state["size"] = int(best[B_SIZE])
                        state["witness"] = witness[: int(best[B_WLEN])].copy()

        pool = [threading.Thread(target=worker) for _ in range(threads)]
        for th in pool:
            th.start()
        for th in pool:
            th.join()
        total = np.sum(worker_counters, axis=0)
        best_size = state["size"]
        witness_ids = state["witness"]

    elapsed = time.perf_counter() - t0
    witness_out: tuple[int, ...] = tuple(sorted(int(x) for x in witness_ids))
    return CliqueResult(
        size=best_size,
        witness=witness_out,
        stats=PruneStats.from_array(total),
        elapsed=elapsed,
        exact=True,
        nodes=int(total[_kernels.C_NODES]),
        algorithm="heuristic",
        policy=policy.kind,
        seed=policy.seed if policy.kind == "random" else None,
    )


def largest_clique_per_vertex(g: Graph, threads: int = 1) -> dict[int, tuple[int, ...]]:
    """Map each vertex to a verified clique containing it.

    Every root runs the max-degree descent with a private incumbent of
    zero and no pruning, so no vertex is skipped and no path is truncated.
    Roots are independent; `threads` only splits the root range.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    result: dict[int, tuple[int, ...]] = {}
    if g.n == 0:
        return result
    degs = g.degrees()
    cap = g.max_degree + 2

    def run_range(start: int, end: int) -> None:
        path = np.empty(cap, dtype=np.int32)
        buf_a = np.empty(cap, dtype=np.int32)
        buf_b = np.empty(cap, dtype=np.int32)
        offsets = np.empty(end - start + 1, dtype=np.int64)
        flat = _kernels.per_vertex_paths(g.indptr, g.indices, degs, start, end, offsets, path, buf_a, buf_b)
        local = {
            v: tuple(sorted(int(x) for x in flat[offsets[v - start] : offsets[v - start + 1]]))
            for v in range(start, end)
        }
        with lock:
            result.update(local)

    lock = threading.Lock()
    if threads == 1:
        run_range(0, g.n)
    else:
        bounds = np.linspace(0, g.n, threads + 1, dtype=np.int64)
        pool = [
            threading.Thread(target=run_range, args=(int(bounds[i]), int(bounds[i + 1])))
            for i in range(threads)
            if bounds[i] < bounds[i + 1]
        ]
        for th in pool:
            th.start()
        for th in pool:
            th.join()
    return result


def per_vertex_lines(cliques: dict[int, tuple[int, ...]]):
    """Render a per-vertex clique map in its text wire format, one line per vertex."""
    for v in sorted(cliques):
        yield f"{v}: " + " ".join(str(c) for c in cliques[v])


@dataclass
class ProbeRow:
    """One growth-rate measurement: structure plus heuristic wall time."""

    n: int
    m: int
    max_degree: int
    elapsed: float

    CSV_HEADER = "n,m,max_degree,elapsed_s"

    def csv_row(self) -> str:
        return f"{self.n},{self.m},{self.max_degree},{self.elapsed:.6f}"


def heuristic_scaling_probe(g: Graph) -> ProbeRow:
    """Time one max-degree heuristic run and report it with the graph's shape."""
    result = max_clique_heuristic(g, SelectionPolicy.max_degree())
    return ProbeRow(n=g.n, m=g.m, max_degree=g.max_degree, elapsed=result.elapsed)
