"""Extremal adjacency eigenvalues of regular graphs, and the checks built on them.

For a d-regular graph the all-ones vector is the top eigenvector, so the
second eigenvalue is the largest eigenvalue of ``A`` on the orthogonal
complement of that vector, and the smallest eigenvalue is ``d`` minus the
largest eigenvalue of the shifted operator ``d*I - A``.  Both are found
with the same restarted Lanczos iteration (full reorthogonalisation,
explicit projection against the all-ones direction on every step).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .graph import Graph, as_vertex_array, edges_between, external_neighbourhood, regular_degree
from .seeding import rng, seed_derive

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
DEFAULT_SEED = 0x5EED


class NotRegular(ValueError):
    pass


class NoConvergence(RuntimeError):
    """Iteration cap reached; ``report`` holds the best estimates."""

    def __init__(self, report):
        super().__init__(
            f"no convergence: residuals {report.residual} after {report.iterations} matvecs")
        self.report = report


@dataclass(frozen=True)
class SpectralReport:
    n: int
    d: int
    lambda1: float
    lambda2: float
    lambdaN: float
    lam: float
    ratio: float
    iterations: dict = field(default_factory=dict)
    residual: dict = field(default_factory=dict)
    converged: bool = True

    def to_dict(self) -> dict:
        out = asdict(self)
        out["lambda"] = out.pop("lam")
        return out


@dataclass(frozen=True)
class MixingReport:
    observed: int
    expected: float
    bound: float
    satisfied: bool


def _largest(op, n, project, tol_abs, max_iter, seed, krylov):
    """Largest eigenvalue of the symmetric operator ``op`` by restarted Lanczos.

    Returns ``(theta, residual_norm, matvecs, converged)``.
    """
    attempt = 0
    x = rng(seed).standard_normal(n)
    x = project(x)
    nx = np.linalg.norm(x)
    if nx == 0.0:
        return 0.0, 0.0, 0, True
    x /= nx
    total = 0
    best = (-math.inf, math.inf)
    prev_resid = math.inf
    while total < max_iter:
        m = max(1, min(krylov, max_iter - total))
        V = np.empty((m + 1, n))
        alpha = np.zeros(m)
        beta = np.zeros(m)
        V[0] = x
        steps = m
        for j in range(m):
            w = project(op(V[j]))
            total += 1
            alpha[j] = V[j] @ w
            for _ in range(2):
                w -= (V[:j + 1] @ w) @ V[:j + 1]
            b = np.linalg.norm(w)
            if b <= 1e-13 * max(1.0, abs(alpha[j])):
                steps = j + 1
                break
            beta[j] = b
            V[j + 1] = w / b
        if steps == 1:
            evals, evecs = alpha[:1], np.ones((1, 1))
        else:
            evals, evecs = eigh_tridiagonal(alpha[:steps], beta[:steps - 1])
        theta = float(evals[-1])
        x = evecs[:, -1] @ V[:steps]
        x = project(x)
        x /= np.linalg.norm(x)
        r = project(op(x)) - theta * x
        resid = float(np.linalg.norm(r))
        if resid < best[1]:
            best = (theta, resid)
        if resid <= tol_abs:
            return theta, resid, total, True
        if resid > 0.9 * prev_resid:
            # stagnating: mix in a fresh direction from a derived seed
            attempt += 1
            kick = project(rng(seed_derive(seed, "restart", attempt)).standard_normal(n))
            x = x + 1e-3 * kick / np.linalg.norm(kick)
            x /= np.linalg.norm(x)
        prev_resid = resid
    return best[0], best[1], total, False


def extremal_eigenvalues(G: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                         seed: int = DEFAULT_SEED, krylov: int = 120) -> SpectralReport:
    """Second-largest and smallest adjacency eigenvalues of a regular graph.

    ``tol`` is a residual tolerance relative to the degree:
    ``||A x - theta x|| <= tol * d``.

    Raises
    ------
    NotRegular
        ``G`` is not regular, or has degree 0.
    NoConvergence
        ``max_iter`` matrix-vector products were spent on one eigenvalue
        without meeting ``tol``; the exception carries the best report.
    """
    d = regular_degree(G)
    if d is None or d < 1:
        raise NotRegular(f"graph is not regular with positive degree (degree={d})")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = G.n
    A = G.to_csr()
    ones = np.full(n, 1.0 / math.sqrt(n))

    def project(v):
        return v - (ones @ v) * ones

    tol_abs = tol * d
    l2, r2, it2, ok2 = _largest(A.dot, n, project, tol_abs, max_iter, seed, krylov)
    shifted = lambda v: d * v - A.dot(v)  # noqa: E731
    s, rn, itn, okn = _largest(shifted, n, project, tol_abs, max_iter,
                               seed_derive(seed, "shifted", 0), krylov)
    if n == 1:
        l2 = s = 0.0
    lN = d - s
    lam = max(abs(l2), abs(lN))
    report = SpectralReport(
        n=n, d=d, lambda1=float(d), lambda2=l2, lambdaN=lN, lam=lam, ratio=lam / d,
        iterations={"lambda2": it2, "lambdaN": itn},
        residual={"lambda2": r2, "lambdaN": rn},
        converged=ok2 and okn,
    )
    if not report.converged:
        raise NoConvergence(report)
    return report


def mixing_check(G: Graph, report: SpectralReport, A, B) -> MixingReport:
    """Evaluate ``|e(A,B) - (d/n)|A||B|| <= lambda * sqrt(|A||B|)``."""
    a = as_vertex_array(G, A)
    b = as_vertex_array(G, B)
    observed = edges_between(G, a, b)
    expected = report.d / G.n * len(a) * len(b)
    bound = report.lam * math.sqrt(len(a) * len(b))
    # slack for float rounding only
    ok = abs(observed - expected) <= bound + 1e-9 * max(1.0, bound)
    return MixingReport(observed, expected, bound, bool(ok))


def expansion_bound(n: int, d: int, m: int, alpha: float) -> float:
    return (1 - alpha) * (d * m - d * d * m * m / (2 * n))


def expansion_check(G: Graph, S, alpha: float, enforce_range: bool = True) -> bool:
    """Whether ``|N(S)| >= (1 - alpha)(d m - d^2 m^2 / 2n)`` for ``m = |S|``.

    With ``enforce_range`` the size must lie in ``[alpha n/d, n/(3d)]``, the
    window in which the vertex-expansion property is asserted.
    """
    d = regular_degree(G)
    if d is None:
        raise NotRegular("expansion_check needs a regular graph")
    s = as_vertex_array(G, S)
    m = len(s)
    if enforce_range and d > 0 and not (alpha * G.n / d <= m <= G.n / (3 * d)):
        raise ValueError(f"|S|={m} outside [{alpha * G.n / d:g}, {G.n / (3 * d):g}]")
    return len(external_neighbourhood(G, s)) >= expansion_bound(G.n, d, m, alpha)


def verify_ndl(G: Graph, delta: float, tol: float = 1e-8, **kw) -> bool:
    """True iff ``G`` is regular and its spectral ratio is at most ``delta + tol``."""
    report = extremal_eigenvalues(G, tol=kw.pop("eig_tol", tol), **kw)
    return report.ratio <= delta + tol
