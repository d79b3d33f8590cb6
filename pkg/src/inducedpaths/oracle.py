"""Exact small-graph ground truth: longest induced path and cycle, the number
of induced isomorphism classes, and full adjacency spectra.

The searches work on integer bitmasks; vertex ``v`` is bit ``1 << v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .search import InducedCycle, InducedPath

MAX_SEARCH_N = 30
MAX_MU_N = 12
MAX_DENSE_N = 256


class TooLarge(ValueError):
    pass


def _masks(G: Graph) -> list[int]:
    out = []
    for nb in G.adjacency:
        m = 0
        for w in nb:
            m |= 1 << w
        out.append(m)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def longest_induced_path_exact(G: Graph) -> InducedPath:
    """A maximum-vertex induced path; the lexicographically least among them.

    Depth-first over paths grown at the tail from each start vertex.  A
    state carries the set of vertices that can no longer join (the path and
    the closed neighbourhoods of its non-tail vertices); a branch is cut
    when its length plus the number of still-eligible vertices cannot beat
    the incumbent.
    """
    n = G.n
    if n > MAX_SEARCH_N:
        raise TooLarge(f"n={n} exceeds {MAX_SEARCH_N}")
    if n == 0:
        return InducedPath((), G)
    nbr = _masks(G)
    full = (1 << n) - 1
    best: list[int] = [0]

    def rec(path, excl):
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        tail = path[-1]
        cand = nbr[tail] & ~excl
        new_excl = excl | nbr[tail]
        # at most one neighbour of the tail can join next
        room = bin(full & ~new_excl).count("1") + (1 if cand else 0)
        if len(path) + room <= len(best):
            return
        for w in _bits(cand):
            path.append(w)
            rec(path, new_excl | (1 << w))
            path.pop()

    for s in range(n):
        if len(best) == n:
            break
        rec([s], 1 << s)
    return InducedPath(tuple(best), G)


def longest_induced_cycle_exact(G: Graph) -> InducedCycle | None:
    """A longest induced cycle (length >= 3), lexicographically least, or None for forests.

    Each cycle is grown from its smallest vertex ``s`` as an induced path on
    vertices above ``s``, closing whenever a candidate is adjacent to ``s``
    and to none of the path's interior.
    """
    n = G.n
    if n > MAX_SEARCH_N:
        raise TooLarge(f"n={n} exceeds {MAX_SEARCH_N}")
    nbr = _masks(G)
    best: list[int] = []

    def rec(s, above, path, interior_excl):
        # interior_excl: path vertices plus closed neighbourhoods of v2..v_{t-1}
        nonlocal best
        tail = path[-1]
        t = len(path)
        ns = nbr[s]
        cand = nbr[tail] & above & ~interior_excl
        if t >= 2:
            closers = cand & ns
            if closers and t + 1 > len(best):
                w = (closers & -closers).bit_length() - 1
                best = path + [w]
            ext = cand & ~ns
            next_excl = interior_excl | nbr[tail] | (1 << tail)
        else:
            ext = cand
            next_excl = interior_excl
        # plus one more tail neighbour and the closing neighbour of s
        room = bin(above & ~next_excl & ~ns).count("1")
        if t + room + 2 <= len(best):
            return
        for w in _bits(ext):
            path.append(w)
            rec(s, above, path, next_excl | (1 << w))
            path.pop()

    for s in range(n):
        above = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        if bin(above).count("1") + 1 <= len(best):
            break
        rec(s, above, [s], 1 << s)
    if not best:
        return None
    return InducedCycle(_lex_least_rotation(best), G)


def _lex_least_rotation(cyc: list[int]) -> tuple:
    # s is first by construction; orient so the smaller neighbour follows it
    return tuple(cyc) if cyc[1] <= cyc[-1] else (cyc[0],) + tuple(reversed(cyc[1:]))


@dataclass(frozen=True)
class CanonicalForm:
    """Upper-triangle adjacency bits (column order) under the minimal relabelling."""

    n: int
    bits: str


def _canonical(nbr: list[int], verts: list[int]) -> CanonicalForm:
    """Lexicographically least column-order upper triangle over all relabellings.

    The string is the concatenation of fixed-length columns, so a relabelling
    is built position by position keeping only vertices whose column against
    the placed prefix is minimal.  Among those, mutual twins (same
    neighbourhood apart from each other) lead to identical subtrees and one
    representative suffices; a branch stops as soon as its columns exceed the
    incumbent's prefix.
    """
    k = len(verts)
    if k == 0:
        return CanonicalForm(0, "")
    vmask = 0
    for v in verts:
        vmask |= 1 << v
    nb = {v: nbr[v] & vmask for v in verts}
    best: list[int] | None = None

    def rec(placed, remaining, cols):
        nonlocal best
        i = len(placed)
        if i == k:
            if best is None or cols < best:
                best = list(cols)
            return
        low = None
        chosen = []
        for v in sorted(remaining):
            col = 0
            for u in placed:
                col = (col << 1) | ((nb[v] >> u) & 1)
            if low is None or col < low:
                low, chosen = col, [v]
            elif col == low:
                chosen.append(v)
        cols.append(low)
        if best is None or cols <= best[:i + 1]:
            reps: list[int] = []
            for v in chosen:
                if not any(nb[v] & ~(1 << r) == nb[r] & ~(1 << v) for r in reps):
                    reps.append(v)
            for v in reps:
                placed.append(v)
                remaining.remove(v)
                rec(placed, remaining, cols)
                remaining.add(v)
                placed.pop()
        cols.pop()

    rec([], set(verts), [])
    bits = "".join(format(c, f"0{i}b") for i, c in enumerate(best) if i > 0)
    return CanonicalForm(k, bits)


def canonical_form(G: Graph, subset=None) -> CanonicalForm:
    """Canonical form of ``G`` (or of ``G[subset]``)."""
    nbr = _masks(G)
    verts = list(range(G.n)) if subset is None else sorted(int(v) for v in subset)
    return _canonical(nbr, verts)


def canonical_form_bruteforce(G: Graph) -> CanonicalForm:
    """Minimum over all ``n!`` relabellings; for cross-checking at ``n <= 8``."""
    n = G.n
    if n > 8:
        raise TooLarge(f"n={n} exceeds 8 for exhaustive permutation search")
    a = G.to_dense().astype(int)
    best = None
    for perm in itertools.permutations(range(n)):
        bits = "".join(str(a[perm[j], perm[i]]) for i in range(1, n) for j in range(i))
        if best is None or bits < best:
            best = bits
    return CanonicalForm(n, best or "")


def mu_exact(G: Graph) -> int:
    """Number of isomorphism classes among all ``2^n`` induced subgraphs, the empty one included."""
    n = G.n
    if n > MAX_MU_N:
        raise TooLarge(f"n={n} exceeds {MAX_MU_N}")
    nbr = _masks(G)
    forms = set()
    for mask in range(1 << n):
        verts = list(_bits(mask))
        forms.add(_canonical(nbr, verts))
    return len(forms)


def dense_spectrum(G: Graph) -> np.ndarray:
    """All adjacency eigenvalues, descending (symmetric dense eigensolver)."""
    if G.n > MAX_DENSE_N:
        raise TooLarge(f"n={G.n} exceeds {MAX_DENSE_N}")
    if G.n == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(G.to_dense())[::-1].copy()
