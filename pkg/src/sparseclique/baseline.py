"""Reference solvers: the classic depth-first baseline and a brute-force oracle.

`max_clique_cp` reuses the exact solver's recursion skeleton with the
degree-based filters (rules 1, 3, 5) switched off, keeping only the
processed-vertex exclusion and the size bound. Sharing the skeleton makes
ablation comparisons exact: on any instance its explored-node count is an
upper bound on the full solver's.

`brute_force` is an independent oracle for tiny graphs: a bitmask
recursion that enumerates every clique with no pruning at all. It shares
no code with the compiled kernels on purpose.
"""

from __future__ import annotations

from .exact import CliqueResult, SolverConfig, _search
from .graph import Graph

BRUTE_FORCE_MAX_N = 30


def max_clique_cp(g: Graph, time_limit: float | None = None) -> CliqueResult:
    """Exact maximum clique via the plain depth-first baseline (natural order)."""
    cfg = SolverConfig(time_limit=time_limit)
    return _search(g, cfg, (False, False, False), "cp")


def brute_force(g: Graph) -> int:
    """Exact clique number by exhaustive clique enumeration; refuses n > 30."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute_force is capped at n <= {BRUTE_FORCE_MAX_N}, got n={g.n}")
    if g.n == 0:
        return 0
    masks = [0] * g.n
    for v in range(g.n):
        acc = 0
        for w in g.neighbors(v):
            acc |= 1 << int(w)
        masks[v] = acc

    best = 1

    def extend(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(cand & masks[v], size + 1)

    extend((1 << g.n) - 1, 0)
    return best
