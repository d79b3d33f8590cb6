import io

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from inducedpaths import (
    DuplicateEdge,
    GraphFormatError,
    IndexOutOfRange,
    SelfLoop,
    build_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    edges_between,
    edges_within,
    empty_graph,
    excess,
    external_neighbourhood,
    format_graph,
    induced_subgraph,
    is_induced_cycle,
    is_induced_path,
    path_graph,
    petersen_graph,
    read_graph,
    regular_degree,
    write_graph,
)

from conftest import random_graph


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


def test_build_examples():
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.m == 3 and tri == complete_graph(3)
    assert build_graph(4, []).m == 0
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(SelfLoop):
        build_graph(3, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        build_graph(3, [(0, 3)])


@given(graphs())
def test_csr_symmetric_sorted(G):
    for v in range(G.n):
        nb = G.neighbors(v)
        assert np.all(np.diff(nb) > 0)
        for w in nb:
            assert v in G.neighbors(w)
    assert G.degrees.sum() == 2 * G.m


def test_regular_degree():
    assert regular_degree(complete_graph(3)) == 2
    assert regular_degree(path_graph(3)) is None
    P = petersen_graph()
    assert regular_degree(P) == 3
    assert nx.is_isomorphic(nx.Graph([tuple(e) for e in P.edge_array()]), nx.petersen_graph())


def test_edges_between_examples():
    K = complete_graph(10)
    assert edges_between(K, [0, 1, 2], [3, 4, 5]) == 9
    assert edges_between(empty_graph(6), [0, 1], [2, 3]) == 0
    assert edges_between(cycle_graph(4), [0, 1], [2, 3]) == 2


@given(graphs(), st.data())
def test_edges_between_matches_pair_count(G, data):
    A = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    B = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    direct = sum(G.has_edge(a, b) for a in A for b in B)
    assert edges_between(G, sorted(A), sorted(B)) == direct
    assert edges_within(G, sorted(A)) == sum(G.has_edge(a, b) for a in A for b in A if a < b)


def test_external_neighbourhood_examples():
    assert external_neighbourhood(cycle_graph(5), [0]).tolist() == [1, 4]
    P = petersen_graph()
    assert external_neighbourhood(P, range(10)).tolist() == []
    assert external_neighbourhood(P, range(5)).tolist() == list(range(5, 10))


def test_induced_subgraph_examples():
    sub, idx = induced_subgraph(complete_graph(4), [0, 2, 3])
    assert sub == complete_graph(3) and idx.tolist() == [0, 2, 3]
    assert induced_subgraph(petersen_graph(), [])[0].n == 0
    assert induced_subgraph(cycle_graph(6), [0, 2, 4])[0] == empty_graph(3)


def test_components_examples():
    lab = connected_components(cycle_graph(5))
    assert lab.count == 1 and lab.sizes.tolist() == [5]
    lab = connected_components(build_graph(4, [(0, 1), (2, 3)]))
    assert lab.count == 2 and lab.sizes.tolist() == [2, 2]
    assert connected_components(empty_graph(4)).count == 4


def test_components_largest_first(rs):
    for _ in range(50):
        G = random_graph(rs, int(rs.integers(1, 40)), 0.06)
        lab = connected_components(G)
        assert np.all(np.diff(lab.sizes) <= 0)
        H = nx.Graph()
        H.add_nodes_from(range(G.n))
        H.add_edges_from(map(tuple, G.edge_array()))
        assert sorted(lab.sizes.tolist()) == sorted(len(c) for c in nx.connected_components(H))


def test_excess_examples():
    assert excess(path_graph(7)) == 0
    assert excess(cycle_graph(5)) == 1
    assert excess(complete_graph(4)) == 3


def test_path_and_cycle_validators():
    C4 = cycle_graph(4)
    assert is_induced_path(C4, (0, 1, 2))
    assert not is_induced_path(C4, (0, 1, 2, 3))
    assert not is_induced_path(complete_graph(3), (0, 1, 2))
    assert is_induced_cycle(cycle_graph(5), (0, 1, 2, 3, 4))
    assert not is_induced_cycle(complete_graph(4), (0, 1, 2, 3))
    assert not is_induced_cycle(cycle_graph(5), (0, 1, 2, 3, 4, 0))
    assert not is_induced_path(path_graph(4), (0, 1, 0))
    assert not is_induced_cycle(complete_graph(3), (0, 1))


def test_text_roundtrip(rs, tmp_path):
    G = random_graph(rs, 30, 0.2)
    path = tmp_path / "g.txt"
    write_graph(G, path)
    assert read_graph(path) == G
    assert read_graph(io.StringIO(format_graph(G))) == G


@pytest.mark.parametrize("text, line", [
    ("3 1\n0 1\n1 2\n", 3),
    ("3 2\n0 1\n", None),
    ("3 1\n1 0\n", 2),
    ("3 2\n0 1\n0 1\n", 3),
    ("3 1\n0 x\n", 2),
    ("3 1\n0 5\n", 2),
    ("three\n", 1),
])
def test_text_format_errors(text, line):
    with pytest.raises(GraphFormatError) as info:
        read_graph(io.StringIO(text))
    if line is not None:
        assert info.value.line == line
