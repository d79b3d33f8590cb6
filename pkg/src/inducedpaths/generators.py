"""Graph families: random regular graphs, lexicographic products, and the
two blow-up constructions (short longest induced path; few induced
isomorphism classes).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .graph import Graph, _from_pairs, build_graph, complete_graph, empty_graph, regular_degree
from .seeding import rng, seed_derive
from .spectral import NoConvergence, extremal_eigenvalues

RESTART_CAP = 10_000


class ParityViolation(ValueError):
    pass


class DegreeTooLarge(ValueError):
    pass


class RejectionCapExceeded(RuntimeError):
    pass


class HNotRegular(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class Infeasible(ValueError):
    pass


# ---------------------------------------------------------------------------
# random regular graphs


def _repair(n, u, v, gen, budget):
    """Remove loops and repeated pairs from a pairing by double-edge switches.

    ``u``/``v`` are modified in place.  A switch replaces a defective pair
    ``(a, b)`` and a uniformly chosen pair ``(c, e)`` by ``(a, c), (b, e)``
    (or ``(a, e), (b, c)``) and is accepted only when neither new pair is a
    loop or already present.  Returns False if ``budget`` proposals run out.
    """
    def key(a, b):
        return a * n + b if a < b else b * n + a

    codes = np.minimum(u, v) * n + np.maximum(u, v)
    uniq, cnt = np.unique(codes, return_counts=True)
    present = set(uniq.tolist())
    extra = dict(zip(uniq[cnt > 1].tolist(), (cnt[cnt > 1] - 1).tolist()))
    bad = np.flatnonzero((u == v) | np.isin(codes, uniq[cnt > 1])).tolist()
    m = len(u)

    def drop(k):
        if extra.get(k):
            extra[k] -= 1
        else:
            present.discard(k)

    while bad:
        i = bad[-1]
        a, b = int(u[i]), int(v[i])
        if a != b and not extra.get(key(a, b)):
            bad.pop()
            continue
        if budget <= 0:
            return False
        budget -= 1
        j = int(gen.integers(m))
        c, e = int(u[j]), int(v[j])
        if gen.random() < 0.5:
            c, e = e, c
        if j == i or a == c or b == e:
            continue
        k1, k2 = key(a, c), key(b, e)
        if k1 == k2 or k1 in present or k2 in present:
            continue
        drop(key(a, b))
        drop(key(c, e))
        present.add(k1)
        present.add(k2)
        u[i], v[i], u[j], v[j] = a, c, b, e
        bad.pop()
    return True


def random_regular(n: int, d: int, seed: int) -> Graph:
    """A random simple ``d``-regular graph on ``n`` vertices.

    Stubs are paired uniformly (configuration model); the few loops and
    repeated pairs of the pairing are then removed by random double-edge
    switches.  If the switch budget for a pairing is exhausted the pairing
    is discarded and redrawn, at most ``RESTART_CAP`` times.  Deterministic
    in ``seed``.

    Raises
    ------
    ParityViolation
        ``n * d`` is odd.
    DegreeTooLarge
        ``d >= n`` (or ``d < 0``).
    RejectionCapExceeded
        No simple graph after ``RESTART_CAP`` pairings.
    """
    if d < 0 or (d >= n and not (n == 0 and d == 0)):
        raise DegreeTooLarge(f"need 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2:
        raise ParityViolation(f"n*d must be even, got n={n}, d={d}")
    if d == 0:
        return empty_graph(n)
    if d == n - 1:
        return complete_graph(n)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for attempt in range(RESTART_CAP):
        gen = rng(seed_derive(seed, "pairing", attempt))
        perm = gen.permutation(stubs)
        u = perm[0::2].copy()
        v = perm[1::2].copy()
        if _repair(n, u, v, gen, budget=1000 + 200 * d * d):
            return _from_pairs(n, np.minimum(u, v), np.maximum(u, v))
    raise RejectionCapExceeded(f"no simple {d}-regular graph on {n} vertices after {RESTART_CAP} pairings")


def circulant(m: int, r: int) -> Graph:
    """An ``r``-regular circulant on ``m`` vertices: offsets ``1..r//2`` plus ``m/2`` if ``r`` is odd."""
    if r < 0 or r >= max(m, 1) and not (m == 0 and r == 0):
        raise Infeasible(f"no {r}-regular graph on {m} vertices")
    if (m * r) % 2:
        raise Infeasible(f"no {r}-regular graph on {m} vertices (parity)")
    offsets = list(range(1, r // 2 + 1)) + ([m // 2] if r % 2 else [])
    v = np.arange(m)
    pairs = [np.column_stack([v, (v + o) % m]) for o in offsets]
    if r % 2:
        pairs[-1] = pairs[-1][: m // 2]
    e = np.concatenate(pairs) if pairs else np.zeros((0, 2), dtype=np.int64)
    return build_graph(m, e)


def complement(G: Graph) -> Graph:
    a = G.to_dense() == 0
    np.fill_diagonal(a, False)
    iu = np.triu_indices(G.n, 1)
    keep = a[iu]
    return build_graph(G.n, np.column_stack([iu[0][keep], iu[1][keep]]))


def disjoint_union(*graphs: Graph) -> Graph:
    parts = []
    off = 0
    for H in graphs:
        parts.append(H.edge_array() + off)
        off += H.n
    e = np.concatenate(parts) if parts else np.zeros((0, 2), dtype=np.int64)
    return build_graph(off, e)


# ---------------------------------------------------------------------------
# lexicographic product


@dataclass(frozen=True)
class LexSpectrumPrediction:
    values: tuple
    multiplicities: tuple

    def as_array(self) -> np.ndarray:
        """The predicted eigenvalues, expanded and sorted in descending order."""
        out = np.repeat(np.asarray(self.values, dtype=float), self.multiplicities)
        return np.sort(out)[::-1]


def lex_product(G: Graph, H: Graph) -> Graph:
    """``lex(G, H)``: vertex ``(u, x)`` is index ``u * |V(H)| + x``.

    ``(u, x) ~ (v, y)`` iff ``uv`` is an edge of G, or ``u == v`` and ``xy``
    is an edge of H.  H must be regular.
    """
    if regular_degree(H) is None:
        raise HNotRegular("second factor of the lexicographic product must be regular")
    m = H.n
    ge = G.edge_array()
    he = H.edge_array()
    x, y = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    x, y = x.ravel(), y.ravel()
    cross_u = (ge[:, 0:1] * m + x).ravel()
    cross_v = (ge[:, 1:2] * m + y).ravel()
    base = (np.arange(G.n) * m)[:, None]
    inner_u = (base + he[:, 0]).ravel()
    inner_v = (base + he[:, 1]).ravel()
    return build_graph(G.n * m, np.column_stack([np.concatenate([cross_u, inner_u]),
                                                 np.concatenate([cross_v, inner_v])]))


def predict_lex_spectrum(spectrum_g, m: int, r: int, nontrivial_h=None) -> LexSpectrumPrediction:
    """Eigenvalues of ``lex(G, H)`` from those of G and an ``r``-regular H on ``m`` vertices.

    Each eigenvalue ``l`` of G gives ``l * m + r`` once; each eigenvalue of H
    other than the trivial ``r`` appears ``|V(G)|`` times.  ``nontrivial_h``
    lists those ``m - 1`` eigenvalues; it may be omitted when H is empty
    (``r == 0``, all zeros) or complete (``r == m - 1``, all ``-1``).
    """
    lg = np.asarray(spectrum_g, dtype=float)
    if nontrivial_h is None:
        if r == 0:
            nontrivial_h = np.zeros(max(m - 1, 0))
        elif r == m - 1:
            nontrivial_h = -np.ones(m - 1)
        else:
            raise ValueError("spectrum of H required unless H is empty or complete")
    mu = np.asarray(nontrivial_h, dtype=float)
    if len(mu) != m - 1:
        raise SizeMismatch(f"expected {m - 1} nontrivial eigenvalues of H, got {len(mu)}")
    values = np.concatenate([lg * m + r, np.repeat(mu, len(lg))])
    values = np.sort(values)[::-1]
    distinct: list[float] = []
    mult: list[int] = []
    for x in values.tolist():
        if distinct and abs(distinct[-1] - x) <= 1e-9:
            mult[-1] += 1
        else:
            distinct.append(x)
            mult.append(1)
    return LexSpectrumPrediction(tuple(distinct), tuple(mult))


# ---------------------------------------------------------------------------
# constructions


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters of a blow-up construction ``lex(H, H2)``.

    ``k`` is the blow-up factor ``|V(H2)|`` and ``inner_degree`` the
    regularity of ``H2``; ``q`` and ``r`` are the quotient and remainder of
    ``d + 1`` by ``d0 + 1`` (short-path construction) or of ``d`` by ``d0``
    (low-mu construction).
    """

    kind: str
    d: int
    delta: float
    n: int
    d0: int
    n0: int
    k: int
    q: int
    r: int
    inner_degree: int
    base_seed: int
    base_attempts: int
    ratio: float

    def to_dict(self) -> dict:
        return asdict(self)


def base_degree(delta: float) -> int:
    """Smallest ``d0 >= 3`` with ``sqrt(d0) >= 4 / delta``."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    d0 = max(3, math.ceil(16.0 / (delta * delta)) - 1)
    while math.sqrt(d0) < 4.0 / delta:
        d0 += 1
    return max(d0, 3)


def _clique_union_plus_regular(size: int, deg: int) -> Graph:
    # floor(size/(deg+1)) - 1 disjoint cliques K_{deg+1}, then a deg-regular
    # circulant on what is left
    c = size // (deg + 1) - 1
    if c < 0:
        raise Infeasible(f"cannot build a {deg}-regular graph on {size} vertices")
    rest = size - (deg + 1) * c
    return disjoint_union(*([complete_graph(deg + 1)] * c), circulant(rest, deg))


def _feasible_n0(n_target: int, k: int, d0: int) -> int:
    n0 = n_target // k
    while n0 > d0 and (n0 * d0) % 2:
        n0 -= 1
    if n0 <= d0:
        raise Infeasible(f"n_target={n_target} too small for blow-up factor {k} and base degree {d0}")
    return n0


def _with_good_base(kind, d, delta, d0, n0, H2, seed, q, r, inner, max_base=100, tol=1e-8):
    for attempt in range(max_base):
        bseed = seed_derive(seed, "base", attempt)
        H = random_regular(n0, d0, bseed)
        G = lex_product(H, H2)
        try:
            ratio = extremal_eigenvalues(G, tol=tol).ratio
        except NoConvergence as exc:
            ratio = exc.report.ratio
        if ratio <= delta:
            params = ConstructionParams(kind, d, delta, G.n, d0, n0, H2.n, q, r, inner,
                                        bseed, attempt + 1, ratio)
            return G, params
    raise Infeasible(f"no base graph with spectral ratio <= {delta} in {max_base} samples")


def construct_short_path_graph(d: int, delta: float, n_target: int, seed: int,
                               d0: int | None = None) -> tuple[Graph, ConstructionParams]:
    """A d-regular graph ``lex(H, H2)`` with spectral ratio <= delta and short induced paths.

    ``H`` is a random ``d0``-regular graph and ``H2`` is ``K_k`` with a
    regular graph removed, ``k = |V(H2)|``.  When ``d0 + 1`` divides ``d + 1``
    nothing is removed and ``k = (d+1)/(d0+1)``.  Otherwise ``k`` is the
    smallest size for which ``d0 k + s = d`` has ``0 <= s <= k - 1`` and a
    ``(k-1-s)``-regular circulant exists on ``k`` vertices.  Independent
    sets of the result meet each blow-up part in an independent set of
    ``H2``, so with ``H2`` complete the longest induced path has at most
    ``2 n0`` vertices.
    """
    d0 = base_degree(delta) if d0 is None else d0
    if d < d0:
        raise Infeasible(f"d={d} below base degree d0={d0}")
    q, r = divmod(d + 1, d0 + 1)
    for k in range(-(-(d + 1) // (d0 + 1)), d // d0 + 1):
        s = d - d0 * k
        removed = k - 1 - s
        if 0 <= removed and (k * removed) % 2 == 0:
            break
    else:
        raise Infeasible(f"no blow-up factor realises degree {d} from d0={d0}")
    H2 = complement(circulant(k, removed)) if removed else complete_graph(k)
    n0 = _feasible_n0(n_target, k, d0)
    return _with_good_base("short_path", d, delta, d0, n0, H2, seed, q, r, s)


def construct_low_mu_graph(d: int, delta: float, n_target: int, seed: int,
                           d0: int | None = None) -> tuple[Graph, ConstructionParams]:
    """A d-regular graph ``lex(H1, H2)`` with spectral ratio <= delta and few
    isomorphism classes of induced subgraphs.

    If ``d0`` divides ``d``, ``H2`` is the empty graph on ``d/d0`` vertices.
    Otherwise, writing ``d = q d0 + r``: when ``q r`` is even ``H2`` is an
    ``r``-regular graph on ``q`` vertices (disjoint cliques ``K_{r+1}`` plus
    a circulant); when ``q r`` is odd it is a ``(d0 + r)``-regular graph on
    ``q - 1`` vertices built the same way.
    """
    d0 = base_degree(delta) if d0 is None else d0
    if d < d0:
        raise Infeasible(f"d={d} below base degree d0={d0}")
    q, r = divmod(d, d0)
    if r == 0:
        H2, inner = empty_graph(q), 0
    elif (q * r) % 2 == 0:
        H2, inner = _clique_union_plus_regular(q, r), r
    else:
        H2, inner = _clique_union_plus_regular(q - 1, d0 + r), d0 + r
    n0 = _feasible_n0(n_target, H2.n, d0)
    return _with_good_base("low_mu", d, delta, d0, n0, H2, seed, q, r, inner)
