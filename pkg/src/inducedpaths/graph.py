"""Immutable simple graphs in compressed sparse row form.

Vertices are dense integers ``0 .. n-1``.  Every operation here is a pure
function of its inputs; a :class:`Graph` never changes after construction.
Vertex sets are passed as any iterable of indices (or a numpy integer
array) and returned as sorted ``int64`` arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class IndexOutOfRange(GraphError, IndexError):
    pass


class GraphFormatError(GraphError):
    def __init__(self, line, msg):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class Graph:
    """A finite simple undirected graph.

    Adjacency is held as ``indptr``/``indices`` arrays (CSR); the neighbours
    of ``v`` are ``indices[indptr[v]:indptr[v+1]]``, strictly increasing.
    Use :func:`build_graph` to construct one from an edge list.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_lists", "_degrees")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        indptr = np.asarray(indptr, dtype=np.int64)
        indices = np.asarray(indices, dtype=np.int64)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.m = len(indices) // 2
        self._lists = None
        self._degrees = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        return hash((self.n, self.m, self.indices[:64].tobytes()))

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            deg = np.diff(self.indptr)
            deg.flags.writeable = False
            self._degrees = deg
        return self._degrees

    @property
    def adjacency(self) -> list[list[int]]:
        """Per-vertex sorted neighbour lists (cached, for pure-Python loops)."""
        if self._lists is None:
            ind = self.indices.tolist()
            ptr = self.indptr.tolist()
            self._lists = [ind[ptr[v]:ptr[v + 1]] for v in range(self.n)]
        return self._lists

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def edge_array(self) -> np.ndarray:
        """All edges as an ``(m, 2)`` array with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def to_csr(self) -> csr_matrix:
        data = np.ones(len(self.indices), dtype=np.float64)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        e = self.edge_array()
        a[e[:, 0], e[:, 1]] = 1.0
        a[e[:, 1], e[:, 0]] = 1.0
        return a


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected components; component 0 is a largest one."""

    label: np.ndarray
    count: int
    sizes: np.ndarray


def _from_pairs(n: int, u: np.ndarray, v: np.ndarray) -> Graph:
    # u, v: unique undirected pairs with u != v; builds both directions
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, dst)


def build_graph(n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> Graph:
    """Build a simple graph on ``n`` vertices from undirected edge pairs.

    Raises
    ------
    IndexOutOfRange
        An endpoint lies outside ``[0, n)``.
    SelfLoop
        An edge ``(u, u)``.
    DuplicateEdge
        The same unordered pair occurs twice (in either orientation).
    """
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    e = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
    if e.size == 0:
        return Graph(n, np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64))
    if e.ndim != 2 or e.shape[1] != 2:
        raise GraphError("edges must be pairs")
    bad = np.flatnonzero((e < 0).any(axis=1) | (e >= n).any(axis=1))
    if len(bad):
        u, v = e[bad[0]]
        raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    loops = np.flatnonzero(e[:, 0] == e[:, 1])
    if len(loops):
        raise SelfLoop(int(e[loops[0], 0]))
    lo = np.minimum(e[:, 0], e[:, 1])
    hi = np.maximum(e[:, 0], e[:, 1])
    code = lo * n + hi
    _, first, counts = np.unique(code, return_index=True, return_counts=True)
    if (counts > 1).any():
        dup = code[first[np.argmax(counts > 1)]]
        raise DuplicateEdge(int(dup // n), int(dup % n))
    return _from_pairs(n, lo, hi)


def complete_graph(n: int) -> Graph:
    iu = np.triu_indices(n, 1)
    return build_graph(n, np.column_stack(iu))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def cycle_graph(n: int) -> Graph:
    v = np.arange(n)
    return build_graph(n, np.column_stack([v, (v + 1) % n]))


def path_graph(n: int) -> Graph:
    v = np.arange(max(n - 1, 0))
    return build_graph(n, np.column_stack([v, v + 1]))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def regular_degree(G: Graph) -> int | None:
    """The common degree if ``G`` is regular, else ``None``."""
    if G.n == 0:
        return 0
    deg = G.degrees
    d = int(deg[0])
    return d if bool((deg == d).all()) else None


def as_vertex_array(G: Graph, A) -> np.ndarray:
    """Normalise a vertex set to a sorted unique ``int64`` array, checking range."""
    if isinstance(A, np.ndarray) and A.dtype == bool:
        return np.flatnonzero(A)
    a = np.unique(np.fromiter(A, dtype=np.int64) if not isinstance(A, np.ndarray)
                  else A.astype(np.int64, copy=False))
    if len(a) and (a[0] < 0 or a[-1] >= G.n):
        raise IndexOutOfRange(f"vertex set not contained in [0, {G.n})")
    return a


def _mask(G: Graph, A) -> np.ndarray:
    m = np.zeros(G.n, dtype=bool)
    m[as_vertex_array(G, A)] = True
    return m


def _incident(G: Graph, a: np.ndarray) -> np.ndarray:
    # concatenated neighbour slices of the vertices in ``a``
    if len(a) == 0:
        return np.zeros(0, dtype=np.int64)
    starts = G.indptr[a]
    lens = G.indptr[a + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.zeros(0, dtype=np.int64)
    offs = np.repeat(starts - np.cumsum(lens) + lens, lens) + np.arange(total)
    return G.indices[offs]


def edges_between(G: Graph, A, B) -> int:
    """``e(A, B)``: ordered count of pairs ``(a, b)``, ``a`` in A, ``b`` in B, ``ab`` an edge.

    An edge with both ends in ``A & B`` is counted twice, so
    ``edges_between(G, A, A) == 2 * edges_within(G, A)``.
    """
    a = as_vertex_array(G, A)
    mb = _mask(G, B)
    return int(mb[_incident(G, a)].sum())


def edges_within(G: Graph, A) -> int:
    """``e(A)``: number of edges of ``G[A]``."""
    return edges_between(G, A, A) // 2


def external_neighbourhood(G: Graph, A) -> np.ndarray:
    """``N(A)``: vertices outside ``A`` with a neighbour in ``A``."""
    a = as_vertex_array(G, A)
    nb = np.unique(_incident(G, a))
    return nb[~_mask(G, a)[nb]]


def induced_subgraph(G: Graph, S) -> tuple[Graph, np.ndarray]:
    """``G[S]`` relabelled to ``0 .. |S|-1`` in increasing order of ``S``.

    Returns the subgraph and the index map (the sorted ``S``), so that
    subgraph vertex ``i`` is host vertex ``index_map[i]``.
    """
    s = as_vertex_array(G, S)
    pos = np.full(G.n, -1, dtype=np.int64)
    pos[s] = np.arange(len(s))
    nb = _incident(G, s)
    src = np.repeat(np.arange(len(s)), G.degrees[s])
    dst = pos[nb]
    keep = (dst >= 0) & (src < dst)
    sub = _from_pairs(len(s), src[keep], dst[keep])
    return sub, s


def connected_components(G: Graph) -> ComponentLabeling:
    """Label components, largest first; ties go to the smaller minimum vertex."""
    if G.n == 0:
        z = np.zeros(0, dtype=np.int64)
        return ComponentLabeling(z, 0, z)
    count, raw = _cc(G.to_csr(), directed=False)
    sizes = np.bincount(raw, minlength=count)
    first = np.full(count, G.n, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(G.n))
    order = np.lexsort((first, -sizes))
    relabel = np.empty(count, dtype=np.int64)
    relabel[order] = np.arange(count)
    return ComponentLabeling(relabel[raw], int(count), sizes[order])


def excess(G: Graph) -> int:
    """Sum over components of ``edges - vertices + 1``."""
    return G.m - G.n + connected_components(G).count


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    """Distinct vertices, consecutive ones adjacent, and no other adjacencies."""
    seq = [int(v) for v in seq]
    if any(v < 0 or v >= G.n for v in seq) or len(set(seq)) != len(seq):
        return False
    if not all(G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
        return False
    return edges_within(G, seq) == max(len(seq) - 1, 0)


def is_induced_cycle(G: Graph, seq: Sequence[int]) -> bool:
    """At least 3 distinct vertices, cyclically consecutive ones adjacent, no chords."""
    seq = [int(v) for v in seq]
    if len(seq) < 3 or any(v < 0 or v >= G.n for v in seq) or len(set(seq)) != len(seq):
        return False
    if not all(G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])):
        return False
    return edges_within(G, seq) == len(seq)


def read_graph(source) -> Graph:
    """Read the ``n m`` / ``u v`` text format from a path or open text file."""
    if hasattr(source, "read"):
        lines = source.read().split("\n")
    else:
        with open(source, encoding="ascii") as fh:
            lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphFormatError(1, "missing header")

    def ints(i):
        parts = lines[i].split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(i + 1, f"expected two non-negative integers, got {lines[i]!r}")
        return int(parts[0]), int(parts[1])

    n, m = ints(0)
    if len(lines) - 1 < m:
        raise GraphFormatError(len(lines) + 1, f"header declares {m} edges, found {len(lines) - 1}")
    if len(lines) - 1 > m:
        raise GraphFormatError(m + 2, f"unexpected line after {m} edges")
    seen = set()
    edges = []
    for i in range(1, m + 1):
        u, v = ints(i)
        if not u < v:
            raise GraphFormatError(i + 1, f"edge ({u}, {v}) must satisfy u < v")
        if v >= n:
            raise GraphFormatError(i + 1, f"vertex {v} out of range for n={n}")
        if (u, v) in seen:
            raise GraphFormatError(i + 1, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return build_graph(n, edges)


def format_graph(G: Graph) -> str:
    e = G.edge_array()
    body = "".join(f"{u} {v}\n" for u, v in e.tolist())
    return f"{G.n} {G.m}\n" + body


def write_graph(G: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(G))
