"""Site percolation on a host graph and giant-component statistics.

Each vertex gets one uniform draw in ``[0, 1)`` from a counter-based
generator keyed by the seed, taken in vertex-index order; it is retained
iff its draw is below ``p``.  Equal seeds therefore couple different
retention probabilities monotonically.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph, as_vertex_array, connected_components, induced_subgraph, regular_degree
from .seeding import rng


class NonPositiveEpsilon(ValueError):
    pass


@dataclass(frozen=True)
class PercolationParams:
    epsilon: float
    p: float
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"retention probability {self.p} outside [0, 1]")

    @classmethod
    def supercritical(cls, epsilon: float, d: int, seed: int) -> "PercolationParams":
        """``p = (1 + epsilon) / d``."""
        return cls(epsilon, (1.0 + epsilon) / d, seed)


@dataclass(frozen=True)
class ComponentStats:
    kept: int
    L1_order: int
    L1_edges: int
    total_excess: int
    stray_edges: int
    predicted_L1_order: float
    predicted_L1_edges: float

    def to_dict(self) -> dict:
        return asdict(self)


class ExcessReport(NamedTuple):
    observed: int
    ratio: float


def uniforms(n: int, seed: int) -> np.ndarray:
    return rng(seed).random(n)


def retained_mask(n: int, params: PercolationParams) -> np.ndarray:
    return uniforms(n, params.seed) < params.p


def site_percolate(G: Graph, params: PercolationParams) -> np.ndarray:
    """The retained vertex set ``V_p`` as a sorted index array."""
    return np.flatnonzero(retained_mask(G.n, params))


def solve_x(epsilon: float, tol: float = 1e-12) -> float:
    """Positive root of ``x = (1 + epsilon)(1 - exp(-x))`` by bisection.

    Bisects ``g(x) = x - (1+epsilon)(1 - e^-x)`` on ``[tol, 1 + epsilon]``
    until the residual ``|g|`` and the bracket width are both below ``tol``.
    """
    if epsilon <= 0:
        raise NonPositiveEpsilon(f"epsilon must be positive, got {epsilon}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = 1.0 + epsilon

    def g(x):
        return x + a * math.expm1(-x)

    lo, hi = tol, a
    if g(lo) >= 0:
        return lo
    while True:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if abs(gm) <= tol and hi - lo <= tol:
            return mid
        if mid in (lo, hi):
            return mid
        if gm < 0:
            lo = mid
        else:
            hi = mid


def predictions(n: int, d: float, epsilon: float) -> tuple[float, float]:
    """Predicted giant-component order ``x n/d`` and edge count
    ``((1+e)^2 - (1+e-x)^2) n / 2d``; NaN unless ``epsilon > 0``."""
    if not epsilon > 0:
        return math.nan, math.nan
    x = solve_x(epsilon, 1e-12)
    a = 1.0 + epsilon
    return x * n / d, (a * a - (a - x) ** 2) * n / (2 * d)


def component_stats(G: Graph, kept, params: PercolationParams) -> ComponentStats:
    """Exact statistics of ``G[kept]`` together with the giant-component predictions."""
    k = as_vertex_array(G, kept)
    sub, _ = induced_subgraph(G, k)
    d = regular_degree(G)
    if d is None or d == 0:
        d = (1.0 + params.epsilon) / params.p if params.p > 0 else math.nan
    pred_order, pred_edges = predictions(G.n, d, params.epsilon)
    if sub.n == 0:
        return ComponentStats(0, 0, 0, 0, 0, pred_order, pred_edges)
    lab = connected_components(sub)
    e = sub.edge_array()
    edges_per = np.bincount(lab.label[e[:, 0]], minlength=lab.count)
    exc = edges_per - lab.sizes + 1
    stray = int(edges_per[1:][exc[1:] > 0].sum())
    return ComponentStats(
        kept=int(sub.n),
        L1_order=int(lab.sizes[0]),
        L1_edges=int(edges_per[0]),
        total_excess=int(exc.sum()),
        stray_edges=stray,
        predicted_L1_order=pred_order,
        predicted_L1_edges=pred_edges,
    )


def excess_bound_report(stats: ComponentStats, epsilon: float, n: int, d: int) -> ExcessReport:
    """Observed excess and its size in units of ``epsilon^3 n / d``."""
    return ExcessReport(stats.total_excess, stats.total_excess * d / (epsilon ** 3 * n))
