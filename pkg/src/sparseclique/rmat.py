"""Recursive-matrix (R-MAT) synthetic graph generation.

Each directed pair is drawn by descending `scale` levels of a 2x2 quadrant
split with probabilities (a, b, c, d); the resulting multiset is then
normalized (self-loops dropped, duplicates and orientations collapsed), so
the undirected edge count lands slightly below edge_factor * 2^scale.

Three named families are provided:

- ``er``  (0.25, 0.25, 0.25, 0.25): uniform random, flat degrees
- ``sd1`` (0.45, 0.15, 0.15, 0.25): skewed degrees
- ``sd2`` (0.55, 0.15, 0.15, 0.15): heavily skewed degrees, dense pockets

Generation is vectorized and deterministic per seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import EdgeList, Graph, normalize

FAMILIES = ("er", "sd1", "sd2")

_FAMILY_QUADRANTS: dict[str, tuple[float, float, float, float]] = {
    "er": (0.25, 0.25, 0.25, 0.25),
    "sd1": (0.45, 0.15, 0.15, 0.25),
    "sd2": (0.55, 0.15, 0.15, 0.15),
}

DEFAULT_EDGE_FACTOR = 8


@dataclass(frozen=True)
class RmatParams:
    """Quadrant probabilities plus size/seed for one generation run."""

    a: float
    b: float
    c: float
    d: float
    scale: int
    edge_factor: int = DEFAULT_EDGE_FACTOR
    seed: int = 0

    def __post_init__(self):
        total = self.a + self.b + self.c + self.d
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"quadrant probabilities must sum to 1, got {total}")
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("quadrant probabilities must be non-negative")
        if self.scale < 1:
            raise ValueError(f"scale must be >= 1, got {self.scale}")
        if self.edge_factor < 1:
            raise ValueError(f"edge_factor must be >= 1, got {self.edge_factor}")

    @property
    def n(self) -> int:
        return 1 << self.scale


def generate_rmat(params: RmatParams) -> Graph:
    """Draw edge_factor * 2^scale directed pairs by quadrant descent, then normalize."""
    rng = np.random.default_rng(params.seed)
    draws = params.edge_factor << params.scale
    src = np.zeros(draws, dtype=np.int64)
    dst = np.zeros(draws, dtype=np.int64)
    t_a = params.a
    t_ab = params.a + params.b
    t_abc = params.a + params.b + params.c
    for _ in range(params.scale):
        r = rng.random(draws)
        quad = (r >= t_a).astype(np.int64) + (r >= t_ab) + (r >= t_abc)
        src = (src << 1) | (quad >> 1)
        dst = (dst << 1) | (quad & 1)
    return normalize(EdgeList(n=params.n, edges=np.column_stack([src, dst])))


def family_presets(scale: int, seed: int = 0) -> dict[str, RmatParams]:
    """The three named parameter presets at the given scale (edge factor 8)."""
    return {
        name: RmatParams(*quadrants, scale=scale, seed=seed)
        for name, quadrants in _FAMILY_QUADRANTS.items()
    }


def family_params(family: str, scale: int, seed: int = 0) -> RmatParams:
    if family not in _FAMILY_QUADRANTS:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    return family_presets(scale, seed)[family]
