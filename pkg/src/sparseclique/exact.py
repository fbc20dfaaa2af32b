"""Exact maximum-clique search with five hierarchical pruning rules.

The solver walks every vertex as the root of a depth-first search over its
not-yet-processed neighbors. Five filters cut the search down:

1. roots whose static degree is below the incumbent are skipped
2. neighbors already processed by the main loop are excluded (each
   undirected edge is excluded exactly once, so with no other filtering
   this counter equals m)
3. neighbors whose static degree is below the incumbent are excluded
4. subtrees that cannot beat the incumbent even if every remaining
   candidate joined are abandoned
5. neighborhoods are degree-filtered before each candidate intersection

Counters for the five rules are reported per run; rules 1/3/5 use static
degrees of the input graph, never residual degrees of the subproblem. Ties
in "pick any candidate" are resolved lowest-id-first so single-threaded
runs are fully reproducible, counters included.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from enum import Enum
from math import ceil
from typing import Iterable

import numpy as np

from . import _kernels
from ._kernels import B_SIZE, B_TIMEOUT, B_WLEN, NO_DEADLINE
from .graph import Graph


class Ordering(str, Enum):
    """Main-loop vertex orderings. The processed-vertex test (rule 2) always
    compares positions in the chosen ordering, not raw ids."""

    NATURAL = "natural"
    DEGREE_DESC = "degree"


@dataclass
class SolverConfig:
    """Knobs for one exact run.

    `lb` seeds the incumbent; passing lb > 0 asserts a clique of that size
    exists, otherwise the answer is only conditional (see `CliqueResult.lb_unverified`).
    """

    lb: int = 0
    ordering: Ordering = Ordering.NATURAL
    threads: int = 1
    time_limit: float | None = None

    def __post_init__(self):
        self.ordering = Ordering(self.ordering)
        if self.lb < 0:
            raise ValueError(f"lb must be >= 0, got {self.lb}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")


@dataclass
class PruneStats:
    """Counts of vertices/subtrees discarded by each pruning rule in one run."""

    p1: int = 0
    p2: int = 0
    p3: int = 0
    p4: int = 0
    p5: int = 0

    @classmethod
    def from_array(cls, counters: np.ndarray) -> "PruneStats":
        return cls(*(int(c) for c in counters[:5]))

    def as_dict(self) -> dict[str, int]:
        return {"p1": self.p1, "p2": self.p2, "p3": self.p3, "p4": self.p4, "p5": self.p5}


@dataclass
class CliqueResult:
    """Outcome of one solver run.

    `witness` is the vertex set realizing `size` (sorted tuple), or None
    when the run never improved on a caller-supplied lower bound; in that
    case `lb_unverified` is set and `size` merely echoes the bound. `exact`
    is False only when a time limit cut the search short. `nodes` counts
    search-tree entries and exists so pruning strength can be compared
    across solvers.
    """

    size: int
    witness: tuple[int, ...] | None
    stats: PruneStats = field(default_factory=PruneStats)
    elapsed: float = 0.0
    exact: bool = True
    nodes: int = 0
    lb_unverified: bool = False
    algorithm: str = "exact"
    policy: str | None = None
    seed: int | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "algorithm": self.algorithm,
            "size": self.size,
            "witness": list(self.witness) if self.witness is not None else None,
        }
        out.update(self.stats.as_dict())
        out["nodes"] = self.nodes
        out["elapsed"] = self.elapsed
        out["exact"] = self.exact
        out["lb_unverified"] = self.lb_unverified
        if self.policy is not None:
            out["policy"] = self.policy
            out["seed"] = self.seed
        return out


def ordering_arrays(g: Graph, ordering: Ordering) -> tuple[np.ndarray, np.ndarray]:
    """(order, pos): order[k] = vertex at main-loop position k; pos inverts it."""
    if ordering is Ordering.NATURAL:
        order = np.arange(g.n, dtype=np.int32)
        return order, order
    degs = g.degrees()
    # stable sort on ascending id, then stable sort on descending degree:
    # ties stay in ascending id order
    order = np.argsort(-degs.astype(np.int64), kind="stable").astype(np.int32)
    pos = np.empty(g.n, dtype=np.int32)
    pos[order] = np.arange(g.n, dtype=np.int32)
    return order, pos


def _run_range(g, order, pos, start, end, max0, flags, deadline):
    use_p1, use_p3, use_p5 = flags
    counters = np.zeros(7, dtype=np.int64)
    best = np.array([max0, 0, 0], dtype=np.int64)
    cap = g.max_degree + 2
    witness = np.empty(cap, dtype=np.int32)
    path = np.empty(cap, dtype=np.int32)
    _kernels.solve_range(
        g.indptr,
        g.indices,
        g.degrees(),
        order,
        pos,
        start,
        end,
        max0,
        use_p1,
        use_p3,
        use_p5,
        deadline,
        counters,
        best,
        witness,
        path,
    )
    return counters, best, witness


def _search(g: Graph, cfg: SolverConfig, flags: tuple[bool, bool, bool], algorithm: str) -> CliqueResult:
    t0 = time.perf_counter()
    deadline = t0 + cfg.time_limit if cfg.time_limit is not None else NO_DEADLINE
    order, pos = ordering_arrays(g, cfg.ordering)

    if cfg.threads == 1 or g.n == 0:
        counters, best, witness = _run_range(g, order, pos, 0, g.n, cfg.lb, flags, deadline)
        total = counters
        best_size = int(best[B_SIZE])
        wlen = int(best[B_WLEN])
        witness_ids = witness[:wlen]
        timed_out = bool(best[B_TIMEOUT])
    else:
        state = {"next": 0, "size": cfg.lb, "witness": np.empty(0, np.int32), "timeout": False}
        lock = threading.Lock()
        chunk = max(1, min(4096, ceil(g.n / (cfg.threads * 8))))
        worker_counters: list[np.ndarray] = []

        def worker():
            local = np.zeros(7, dtype=np.int64)
            while True:
                with lock:
                    if state["next"] >= g.n or state["timeout"]:
                        worker_counters.append(local)
                        return
                    s = state["next"]
                    e = min(g.n, s + chunk)
                    state["next"] = e
                    cur = state["size"]
                counters, best, witness = _run_range(g, order, pos, s, e, cur, flags, deadline)
                local += counters
                with lock:
                    if best[B_TIMEOUT]:
                        state["timeout"] = True
                    if best[B_SIZE] > state["size"]:
                        state["size"] = int(best[B_SIZE])
                        state["witness"] = witness[: int(best[B_WLEN])].copy()

        pool = [threading.Thread(target=worker) for _ in range(cfg.threads)]
        for th in pool:
            th.start()
        for th in pool:
            th.join()
        total = np.sum(worker_counters, axis=0)
        best_size = state["size"]
        witness_ids = state["witness"]
        wlen = witness_ids.size
        timed_out = state["timeout"]

    elapsed = time.perf_counter() - t0
    if wlen:
        witness_out: tuple[int, ...] | None = tuple(sorted(int(x) for x in witness_ids[:wlen]))
    elif best_size == 0:
        witness_out = ()
    else:
        witness_out = None
    return CliqueResult(
        size=best_size,
        witness=witness_out,
        stats=PruneStats.from_array(total),
        elapsed=elapsed,
        exact=not timed_out,
        nodes=int(total[_kernels.C_NODES]),
        lb_unverified=witness_out is None and not timed_out,
        algorithm=algorithm,
    )


def max_clique(g: Graph, cfg: SolverConfig | None = None) -> CliqueResult:
    """Exact maximum clique of `g` (all five pruning rules active).

    With a time limit the search may return early: `exact` is then False
    and size/witness hold the best clique found so far. The reported size
    never depends on `cfg.ordering` or `cfg.threads`; counters and the
    particular witness may.
    """
    cfg = cfg if cfg is not None else SolverConfig()
    return _search(g, cfg, (True, True, True), "exact")


def verify_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every pair in `vertices` is adjacent in `g` (vacuously true when empty)."""
    vs = sorted(set(int(v) for v in vertices))
    for v in vs:
        g._check_vertex(v)
    for i, u in enumerate(vs):
        row = g.neighbors(u)
        for v in vs[i + 1 :]:
            j = np.searchsorted(row, v)
            if j >= row.size or row[j] != v:
                return False
    return True
