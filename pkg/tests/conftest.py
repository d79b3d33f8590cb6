import networkx as nx
import numpy as np
import pytest

from inducedpaths import build_graph


def from_nx(H):
    H = nx.convert_node_labels_to_integers(H)
    return build_graph(H.number_of_nodes(), list(H.edges()))


def catalogue(max_n=7):
    """All graphs on 1..max_n vertices up to isomorphism (networkx atlas, 1252 for max_n=7)."""
    return [from_nx(H) for H in nx.graph_atlas_g() if 1 <= H.number_of_nodes() <= max_n]


def random_graph(rs, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rs.random() < p]
    return build_graph(n, edges)


@pytest.fixture(scope="session")
def small_catalogue():
    return catalogue(7)


@pytest.fixture
def rs():
    return np.random.default_rng(20240917)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
