import itertools

import networkx as nx
import numpy as np
import pytest

from inducedpaths import (
    TooLarge,
    build_graph,
    canonical_form,
    canonical_form_bruteforce,
    complete_graph,
    cycle_graph,
    dense_spectrum,
    empty_graph,
    is_induced_cycle,
    is_induced_path,
    longest_induced_cycle_exact,
    longest_induced_path_exact,
    mu_exact,
    path_graph,
    petersen_graph,
    random_regular,
)

from conftest import random_graph


def test_longest_path_examples():
    for n in (1, 2, 5, 9):
        assert len(longest_induced_path_exact(path_graph(n))) == n
    for n in (2, 5, 8):
        assert len(longest_induced_path_exact(complete_graph(n))) == 2
    assert len(longest_induced_path_exact(cycle_graph(6))) == 5
    assert len(longest_induced_path_exact(petersen_graph())) == 5


def test_longest_cycle_examples():
    for n in (3, 7, 12):
        assert len(longest_induced_cycle_exact(cycle_graph(n))) == n
    assert len(longest_induced_cycle_exact(complete_graph(4))) == 3
    assert len(longest_induced_cycle_exact(petersen_graph())) == 6
    assert longest_induced_cycle_exact(path_graph(6)) is None


def _brute(G, want_cycle):
    best = 0
    for k in range(G.n, 0, -1):
        for S in itertools.combinations(range(G.n), k):
            H = nx.Graph()
            H.add_nodes_from(S)
            H.add_edges_from((u, v) for u, v in itertools.combinations(S, 2) if G.has_edge(u, v))
            if not nx.is_connected(H):
                continue
            degs = sorted(d for _, d in H.degree())
            if want_cycle and k >= 3 and degs == [2] * k:
                return k
            if not want_cycle and (k == 1 or degs == [1, 1] + [2] * (k - 2)):
                return k
    return best


def test_exact_search_against_enumeration(rs):
    for _ in range(80):
        G = random_graph(rs, int(rs.integers(1, 10)), float(rs.uniform(0.1, 0.8)))
        p = longest_induced_path_exact(G)
        c = longest_induced_cycle_exact(G)
        assert is_induced_path(G, p.vertices) and len(p) == _brute(G, False)
        assert (0 if c is None else len(c)) == _brute(G, True)
        if c is not None:
            assert is_induced_cycle(G, c.vertices)


def test_canonical_form_matches_bruteforce(rs):
    for _ in range(150):
        G = random_graph(rs, int(rs.integers(0, 9)), float(rs.uniform(0.1, 0.9)))
        assert canonical_form(G) == canonical_form_bruteforce(G)
        perm = rs.permutation(G.n)
        H = build_graph(G.n, [(int(perm[u]), int(perm[v])) for u, v in G.edge_array()])
        assert canonical_form(H) == canonical_form(G)


def test_canonical_form_separates_classes(small_catalogue):
    forms = {canonical_form(G) for G in small_catalogue}
    assert len(forms) == len(small_catalogue)


def test_mu_examples():
    assert mu_exact(complete_graph(3)) == 4
    assert mu_exact(empty_graph(3)) == 4
    assert mu_exact(path_graph(3)) == 5
    with pytest.raises(TooLarge):
        mu_exact(empty_graph(13))


def test_mu_against_networkx(rs):
    for _ in range(5):
        G = random_graph(rs, 7, 0.5)
        classes = []
        for mask in range(1 << G.n):
            S = [v for v in range(G.n) if mask >> v & 1]
            H = nx.Graph()
            H.add_nodes_from(S)
            H.add_edges_from((u, v) for u, v in itertools.combinations(S, 2) if G.has_edge(u, v))
            if not any(nx.is_isomorphic(H, K) for K in classes):
                classes.append(H)
        assert mu_exact(G) == len(classes)


def test_dense_spectrum_examples():
    assert np.allclose(dense_spectrum(complete_graph(5)), [4, -1, -1, -1, -1], atol=1e-9)
    assert np.allclose(dense_spectrum(empty_graph(4)), 0, atol=1e-9)
    assert np.allclose(dense_spectrum(cycle_graph(4)), [2, 0, 0, -2], atol=1e-9)
    ev = dense_spectrum(random_regular(40, 5, 1))
    assert np.all(np.diff(ev) <= 1e-12) and ev[0] == pytest.approx(5)


def test_dense_spectrum_trace_identities(rs):
    for _ in range(40):
        G = random_graph(rs, int(rs.integers(1, 30)), float(rs.uniform(0.05, 0.9)))
        ev = dense_spectrum(G)
        assert abs(ev.sum()) <= 1e-6
        assert abs((ev ** 2).sum() - 2 * G.m) <= 1e-6


def test_mu_at_least_edge_count_profiles(rs):
    for _ in range(10):
        G = random_graph(rs, int(rs.integers(1, 9)), 0.5)
        profiles = set()
        for mask in range(1 << G.n):
            S = [v for v in range(G.n) if mask >> v & 1]
            profiles.add((len(S), sum(G.has_edge(u, v) for u, v in itertools.combinations(S, 2))))
        assert mu_exact(G) >= len(profiles)
