"""Induced paths and cycles from a depth-first exploration of site percolation.

The exploration keeps five vertex classes: ``T`` (not yet processed),
``U`` (a stack of active retained vertices, always an induced path),
``S1`` (retired from the stack after running out of ``T``-neighbours),
``S2`` (retained, but adjacent to the stack below its top when reached) and
``W`` (not retained).  One step exposes the retention bit of exactly one
vertex of ``T``; retirements ``U -> S1`` are free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import (
    Graph,
    external_neighbourhood,
    induced_subgraph,
    excess,
    is_induced_cycle,
    is_induced_path,
    regular_degree,
)
from .percolation import PercolationParams, uniforms
from .seeding import seed_derive
from .spectral import NotRegular

T, U, S1, S2, W = 0, 1, 2, 3, 4
NAMES = ("T", "U", "S1", "S2", "W")


class PathTooShort(ValueError):
    pass


class NoClosure(RuntimeError):
    pass


class AllRetriesFailed(RuntimeError):
    pass


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class InducedPath:
    vertices: tuple
    host: Graph | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.vertices)

    def is_valid(self, G: Graph | None = None) -> bool:
        return is_induced_path(G if G is not None else self.host, self.vertices)


@dataclass(frozen=True)
class InducedCycle:
    vertices: tuple
    host: Graph | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.vertices)

    def is_valid(self, G: Graph | None = None) -> bool:
        return is_induced_cycle(G if G is not None else self.host, self.vertices)


class DfsState:
    """Mutable state of one exploration.

    ``status[v]`` is one of ``T, U, S1, S2, W``; ``stack`` lists ``U`` from
    bottom to top; ``sigma`` is the processing order of ``T``.
    """

    def __init__(self, n: int, sigma):
        self.sigma = list(sigma)
        self.status = [T] * n
        self.stack: list[int] = []
        self.exposures = 0
        self.counts = [n, 0, 0, 0, 0]
        self.retained: set[int] = set()

    def members(self, cls: int) -> set[int]:
        return {v for v, s in enumerate(self.status) if s == cls}

    @property
    def T(self) -> list[int]:
        """Unprocessed vertices in sigma order."""
        st = self.status
        return [v for v in self.sigma if st[v] == T]

    @property
    def U(self) -> list[int]:
        return list(self.stack)

    @property
    def S1(self) -> set[int]:
        return self.members(S1)

    @property
    def S2(self) -> set[int]:
        return self.members(S2)

    @property
    def W(self) -> set[int]:
        return self.members(W)

    def sizes(self) -> dict:
        return dict(zip(NAMES, self.counts))


def _sigma_or_identity(G, sigma):
    if sigma is None:
        return list(range(G.n))
    sigma = [int(v) for v in sigma]
    if sorted(sigma) != list(range(G.n)):
        raise ValueError("sigma must be a permutation of the vertices")
    return sigma


def dfs_induced_path(G: Graph, params: PercolationParams | None, sigma=None,
                     step_budget: int | None = None, *, retained=None,
                     observer=None) -> tuple[InducedPath, DfsState]:
    """Run the exploration for at most ``step_budget`` exposures.

    Retention bits come from ``retained`` (a boolean sequence over vertices)
    if given, else from the percolation draws of ``params``.  ``observer``,
    if given, is called as ``observer(state, event, v)`` with ``event`` in
    ``{"expose", "retire"}`` after every state change.

    Returns the longest stack seen (an induced path of ``G``) and the final
    state.  The run ends early once ``U`` and ``T`` are both empty.
    """
    n = G.n
    sigma = _sigma_or_identity(G, sigma)
    budget = n if step_budget is None else min(int(step_budget), n)
    if retained is None:
        keep = (uniforms(n, params.seed) < params.p).tolist()
    else:
        keep = [bool(x) for x in retained]
        if len(keep) != n:
            raise ValueError("retained mask has wrong length")

    rank = [0] * n
    for i, v in enumerate(sigma):
        rank[v] = i
    if sigma == list(range(n)):
        adj = G.adjacency
    else:
        adj = [sorted(nb, key=rank.__getitem__) for nb in G.adjacency]

    state = DfsState(n, sigma)
    status = state.status
    stack = state.stack
    counts = state.counts
    ptr = [0] * n
    head = 0
    best: list[int] = []

    while True:
        # retire stack tops that have no neighbour left in T; retirements are free
        while stack:
            u = stack[-1]
            nb = adj[u]
            i = ptr[u]
            while i < len(nb) and status[nb[i]] != T:
                i += 1
            ptr[u] = i
            if i < len(nb):
                break
            stack.pop()
            status[u] = S1
            counts[U] -= 1
            counts[S1] += 1
            if observer is not None:
                observer(state, "retire", u)
        if state.exposures >= budget:
            break
        if stack:
            u = stack[-1]
            v = adj[u][ptr[u]]
            if not keep[v]:
                dest = W
            else:
                dest = U
                for w in adj[v]:
                    if status[w] == U and w != u:
                        dest = S2
                        break
        else:
            while head < n and status[sigma[head]] != T:
                head += 1
            if head == n:
                break
            v = sigma[head]
            dest = U if keep[v] else W
        status[v] = dest
        counts[T] -= 1
        counts[dest] += 1
        if keep[v]:
            state.retained.add(v)
        if dest == U:
            stack.append(v)
            if len(stack) > len(best):
                best = list(stack)
        state.exposures += 1
        if observer is not None:
            observer(state, "expose", v)

    return InducedPath(tuple(best), G), state


def check_state(G: Graph, state: DfsState) -> None:
    """Verify every invariant of ``state`` from scratch; raise on violation."""
    st = state.status
    n = G.n
    if len(st) != n or any(s not in (T, U, S1, S2, W) for s in st):
        raise InvariantViolation("status is not a partition into T, U, S1, S2, W")
    if sorted(state.stack) != sorted(v for v in range(n) if st[v] == U):
        raise InvariantViolation("stack and U disagree")
    processed = sum(1 for s in st if s != T)
    if processed != state.exposures:
        raise InvariantViolation(f"|S1+S2+U+W| = {processed} but exposures = {state.exposures}")
    if not is_induced_path(G, state.stack):
        raise InvariantViolation(f"U = {state.stack} is not an induced path")
    for v in range(n):
        if st[v] == S1 and any(st[w] == T for w in G.adjacency[v]):
            raise InvariantViolation(f"S1 vertex {v} has a neighbour in T")
    for v in range(n):
        if (st[v] in (U, S1, S2)) != (v in state.retained):
            raise InvariantViolation(f"vertex {v} in {NAMES[st[v]]} has wrong retention")
    sub, _ = induced_subgraph(G, sorted(state.retained))
    n_s2 = sum(1 for s in st if s == S2)
    if n_s2 > excess(sub):
        raise InvariantViolation(f"|S2| = {n_s2} exceeds excess {excess(sub)} of explored part")


class InvariantChecker:
    """Observer for :func:`dfs_induced_path` that re-verifies every invariant
    after every event.

    Keeps its own mirror of the five classes, fed only by event vertices, and
    checks the changed vertex locally against the host graph: a push
    extends the stack as an induced path, a retirement leaves no
    ``T``-neighbour, processed count equals exposures, and ``|S2|`` never
    exceeds the excess of the retained explored vertices (tracked with
    union-find).  With ``full_every`` set, also runs :func:`check_state`
    every that many exposures.
    """

    def __init__(self, G: Graph, full_every: int | None = None):
        self.G = G
        self.adj = G.adjacency
        self.mirror = [T] * G.n
        self.stack: list[int] = []
        self.processed = 0
        self.n_s2 = 0
        self.parent = list(range(G.n))
        self.excess = 0
        self.full_every = full_every
        self.events = 0

    def _find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def _add_retained(self, v):
        roots = set()
        k = 0
        for w in self.adj[v]:
            if self.mirror[w] in (U, S1, S2):
                k += 1
                roots.add(self._find(w))
        for r in roots:
            self.parent[r] = v
        self.excess += k - len(roots)

    def __call__(self, state: DfsState, event: str, v: int):
        self.events += 1
        mirror = self.mirror
        if event == "retire":
            if not self.stack or self.stack[-1] != v or mirror[v] != U:
                raise InvariantViolation(f"retired {v} is not the top of U")
            if any(mirror[w] == T for w in self.adj[v]):
                raise InvariantViolation(f"retired {v} still has a neighbour in T")
            self.stack.pop()
            mirror[v] = S1
        else:
            if mirror[v] != T:
                raise InvariantViolation(f"exposed {v} was not in T")
            dest = state.status[v]
            if dest == T:
                raise InvariantViolation(f"exposed {v} stayed in T")
            self.processed += 1
            if dest == U:
                on_stack = [w for w in self.adj[v] if mirror[w] == U]
                expected = self.stack[-1:]
                if on_stack != expected:
                    raise InvariantViolation(
                        f"push of {v} breaks the induced path (U-neighbours {on_stack})")
                self.stack.append(v)
            elif dest == S2:
                self.n_s2 += 1
            if dest in (U, S2, S1):
                self._add_retained(v)
            mirror[v] = dest
            if self.processed != state.exposures:
                raise InvariantViolation(
                    f"processed {self.processed} != exposures {state.exposures}")
            if self.n_s2 > self.excess:
                raise InvariantViolation(f"|S2| = {self.n_s2} exceeds explored excess {self.excess}")
            if self.full_every and state.exposures % self.full_every == 0:
                check_state(self.G, state)
        if self.stack != state.stack or mirror[v] != state.status[v]:
            raise InvariantViolation(f"state diverged from mirror at {event} of {v}")
        if sum(state.counts) != self.G.n or state.counts[T] != self.G.n - self.processed:
            raise InvariantViolation("class sizes do not partition the vertex set")


def path_target(n: int, d: int, epsilon: float) -> float:
    """``epsilon^2 n / 3d`` vertices."""
    return epsilon * epsilon * n / (3 * d)


def cycle_target(n: int, d: int, epsilon: float) -> float:
    """``epsilon^2 n / 30d`` vertices."""
    return epsilon * epsilon * n / (30 * d)


def percolated_path_run(G: Graph, epsilon: float, seed: int, sigma=None,
                        observer=None) -> InducedPath:
    """Explore ``G`` percolated at ``p = (1 + epsilon)/d`` for ``floor(epsilon n)`` steps.

    Returns the longest stack seen, an induced path of ``G``.  The expected
    yield for small ``epsilon`` on good expanders is ``epsilon^2 n / 3d``
    vertices (see :func:`path_target`).
    """
    d = regular_degree(G)
    if d is None or d == 0:
        raise NotRegular("percolated_path_run needs a regular graph of positive degree")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    params = PercolationParams.supercritical(epsilon, d, seed)
    path, _ = dfs_induced_path(G, params, sigma, int(math.floor(epsilon * G.n)), observer=observer)
    return path


@dataclass(frozen=True)
class CycleSegments:
    P1: tuple
    P2: tuple
    Pmid: tuple
    N1: frozenset
    N2: frozenset
    mid_start: int
    mid_end: int


def cycle_segments(G: Graph, P) -> CycleSegments:
    """First and last thirds of ``P``, its middle ``2 floor(k/20)`` vertices, and
    the neighbourhoods ``N1``, ``N2`` of the thirds with ``P`` and ``N(Pmid)`` removed."""
    verts = tuple(int(v) for v in getattr(P, "vertices", P))
    k = len(verts)
    third, tw = k // 3, k // 20
    a, b = k // 2 - tw, k // 2 + tw
    P1, P2, Pmid = verts[:third], verts[k - third:], verts[a:b]
    blocked = set(verts) | set(external_neighbourhood(G, Pmid).tolist()) if Pmid else set(verts)
    N1 = frozenset(set(external_neighbourhood(G, P1).tolist()) - blocked)
    N2 = frozenset(set(external_neighbourhood(G, P2).tolist()) - blocked)
    return CycleSegments(P1, P2, Pmid, N1, N2, a, b)


def close_cycle(G: Graph, P) -> InducedCycle:
    """Close an induced path of at least 60 vertices into an induced cycle.

    Uses a vertex ``u`` adjacent to both ends (first third and last third)
    and to nothing in the middle, or failing that an edge ``u1 u2`` from the
    first-third side to the last-third side.  The path is entered at the
    neighbour closest to the middle on each side, so the result is chordless
    and contains the whole middle segment.

    Raises
    ------
    PathTooShort
        ``P`` has fewer than 60 vertices.
    NoClosure
        No vertex or edge joins the two sides.
    """
    verts = tuple(int(v) for v in getattr(P, "vertices", P))
    k = len(verts)
    if k < 60:
        raise PathTooShort(f"path has {k} vertices, need at least 60")
    if not is_induced_path(G, verts):
        raise ValueError("input is not an induced path of G")
    seg = cycle_segments(G, verts)
    pos = {v: i for i, v in enumerate(verts)}
    a, b = seg.mid_start, seg.mid_end
    adj = G.adjacency

    def sides(x):
        ps = [pos[w] for w in adj[x] if w in pos]
        below = [i for i in ps if i < a]
        above = [i for i in ps if i >= b]
        return ps, below, above

    cycle = None
    for u in sorted(seg.N1 & seg.N2):
        _, below, above = sides(u)
        w1, w2 = max(below), min(above)
        cycle = (u,) + verts[w1:w2 + 1]
        break
    if cycle is None:
        n2 = seg.N2
        for u1 in sorted(seg.N1):
            ps1, below1, _ = sides(u1)
            w1 = max(below1)
            for u2 in adj[u1]:
                if u2 not in n2:
                    continue
                ps2, _, above2 = sides(u2)
                w2 = min(above2)
                if any(w1 < i <= w2 for i in ps1) or any(w1 <= i < w2 for i in ps2):
                    continue
                cycle = (u1,) + verts[w1:w2 + 1] + (u2,)
                break
            if cycle is not None:
                break
    if cycle is None:
        raise NoClosure("no vertex or edge joins the two ends of the path")
    if not is_induced_cycle(G, cycle):
        raise InvariantViolation(f"closed cycle of length {len(cycle)} is not induced")
    return InducedCycle(cycle, G)


@dataclass(frozen=True)
class CycleSearchResult:
    cycle: InducedCycle
    target: float
    attempts: int
    shortfall: bool
    path_length: int


def find_long_induced_cycle(G: Graph, epsilon: float, seed: int, retries: int = 20,
                            sigma=None) -> CycleSearchResult:
    """Percolated path, then :func:`close_cycle`, retried with derived seeds.

    Returns the first cycle reaching ``epsilon^2 n / 30d`` vertices; if none
    does, the longest cycle found with ``shortfall=True``.

    Raises
    ------
    AllRetriesFailed
        No attempt produced any cycle.
    """
    d = regular_degree(G)
    if d is None or d == 0:
        raise NotRegular("find_long_induced_cycle needs a regular graph of positive degree")
    target = cycle_target(G.n, d, epsilon)
    best = None
    best_path = 0
    for attempt in range(retries):
        path = percolated_path_run(G, epsilon, seed_derive(seed, "cycle-attempt", attempt), sigma)
        try:
            cyc = close_cycle(G, path)
        except (PathTooShort, NoClosure):
            continue
        if best is None or len(cyc) > len(best):
            best, best_path = cyc, len(path)
        if len(cyc) >= target:
            return CycleSearchResult(cyc, target, attempt + 1, False, len(path))
    if best is None:
        raise AllRetriesFailed(f"no induced cycle closed in {retries} attempts")
    return CycleSearchResult(best, target, retries, True, best_path)


@dataclass(frozen=True)
class MuCertificate:
    path: InducedPath
    unique_nbrs: tuple
    heavy: tuple
    spaced: tuple
    log2_bound: float

    @property
    def bound(self) -> float:
        """``2 ** log2_bound`` (zero when the certificate is empty)."""
        return 0.0 if self.log2_bound == -math.inf else 2.0 ** self.log2_bound

    def to_dict(self) -> dict:
        return {
            "path": list(self.path.vertices),
            "unique_nbrs": list(self.unique_nbrs),
            "heavy": list(self.heavy),
            "spaced": list(self.spaced),
            "log2_bound": None if self.log2_bound == -math.inf else self.log2_bound,
            "bound": self.bound,
        }


def mu_lower_certificate(G: Graph, P) -> MuCertificate:
    """Lower bound on the number of induced isomorphism classes from an induced path.

    ``unique_nbrs`` are the vertices off ``P`` with exactly one neighbour on
    ``P``.  Path vertices carrying at least ``ceil(d/10)`` of them are
    ``heavy``; ``spaced`` greedily keeps heavy vertices (never the first or
    last two of ``P``) at pairwise path distance at least 4.  Each spaced
    vertex can keep any number of its private neighbours from ``0`` to
    ``ceil(d/10)``; as only the path's reversal can identify two such
    choices, ``G`` has at least ``(d/10)^|spaced| / 2`` induced classes.
    Needs ``d >= 10``; otherwise the certificate is empty.
    """
    d = regular_degree(G)
    if d is None:
        raise NotRegular("mu_lower_certificate needs a regular graph")
    verts = tuple(int(v) for v in getattr(P, "vertices", P))
    k = len(verts)
    if k < 5:
        raise PathTooShort(f"path has {k} vertices, need at least 5")
    if not is_induced_path(G, verts):
        raise ValueError("input is not an induced path of G")
    on_path = np.zeros(G.n, dtype=bool)
    on_path[list(verts)] = True
    hits = np.zeros(G.n, dtype=np.int64)
    for v in verts:
        hits[G.neighbors(v)] += 1
    unique = np.flatnonzero((hits == 1) & ~on_path)
    pos = {v: i for i, v in enumerate(verts)}
    carried = np.zeros(k, dtype=np.int64)
    for x in unique.tolist():
        for w in G.adjacency[x]:
            if w in pos:
                carried[pos[w]] += 1
    heavy: list[int] = []
    spaced: list[int] = []
    if d >= 10:
        need = -(-d // 10)
        heavy = [i for i in range(k) if carried[i] >= need]
        last = -10
        for i in heavy:
            if 2 <= i <= k - 3 and i - last >= 4:
                spaced.append(i)
                last = i
    log2_bound = len(spaced) * math.log2(d / 10) - 1 if spaced else -math.inf
    return MuCertificate(
        path=InducedPath(verts, G),
        unique_nbrs=tuple(unique.tolist()),
        heavy=tuple(verts[i] for i in heavy),
        spaced=tuple(verts[i] for i in spaced),
        log2_bound=log2_bound,
    )
