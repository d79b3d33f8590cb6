import math

import numpy as np
import pytest

from inducedpaths import (
    AllRetriesFailed,
    InvariantChecker,
    InvariantViolation,
    NoClosure,
    PathTooShort,
    PercolationParams,
    build_graph,
    check_state,
    close_cycle,
    complete_graph,
    cycle_graph,
    cycle_segments,
    cycle_target,
    dfs_induced_path,
    find_long_induced_cycle,
    is_induced_cycle,
    is_induced_path,
    mu_lower_certificate,
    path_graph,
    path_target,
    percolated_path_run,
    random_regular,
)
from inducedpaths.search import S1, T, U

ALL = PercolationParams(0.0, 1.0, 0)
NONE = PercolationParams(0.0, 0.0, 0)


def full_check(G):
    def obs(state, event, v):
        check_state(G, state)
    return obs


def test_triangle_hand_simulation():
    G = complete_graph(3)
    seen = []
    path, st = dfs_induced_path(G, ALL, [0, 1, 2],
                                observer=lambda s, e, v: seen.append((e, v, s.status[v])))
    assert path.vertices == (0, 1)
    assert st.S1 == {0, 1} and st.S2 == {2} and st.W == set() and st.U == []
    assert st.exposures == 3
    assert [(e, v) for e, v, _ in seen] == [("expose", 0), ("expose", 1), ("expose", 2),
                                           ("retire", 1), ("retire", 0)]


def test_path_graph_run():
    path, st = dfs_induced_path(path_graph(4), ALL)
    assert path.vertices == (0, 1, 2, 3)


def test_nothing_retained():
    G = random_regular(30, 4, 1)
    path, st = dfs_induced_path(G, NONE, observer=full_check(G))
    assert path.vertices == () and st.W == set(range(30))


def test_budget_limits_exposures():
    G = random_regular(200, 4, 2)
    _, st = dfs_induced_path(G, ALL, step_budget=17)
    assert st.exposures == 17


def test_invariants_hold_on_random_runs():
    for seed in range(20):
        G = random_regular(300, 5, seed)
        params = PercolationParams.supercritical(0.5, 5, seed)
        sigma = np.random.default_rng(seed).permutation(300).tolist()
        path, st = dfs_induced_path(G, params, sigma, observer=InvariantChecker(G, full_every=25))
        check_state(G, st)
        assert is_induced_path(G, path.vertices)


def test_checker_detects_corruption():
    G = path_graph(4)
    _, st = dfs_induced_path(G, ALL, step_budget=1)
    check_state(G, st)
    st.status[3] = S1
    with pytest.raises(InvariantViolation):
        check_state(G, st)
    _, st = dfs_induced_path(G, ALL, step_budget=2)
    st.status[1], st.stack[:] = T, [0]
    st.status[2] = U
    st.stack.append(2)
    with pytest.raises(InvariantViolation):
        check_state(G, st)


def test_checker_detects_bad_push():
    G = complete_graph(3)
    checker = InvariantChecker(G)

    def evil(state, event, v):
        if event == "expose" and v == 2:
            # pretend 2 was pushed although 0 is on the stack below its parent
            state.status[2] = U
            state.stack.append(2)
        checker(state, event, v)

    with pytest.raises(InvariantViolation):
        dfs_induced_path(G, ALL, observer=evil)


def test_targets():
    assert path_target(100_000, 20, 0.25) == pytest.approx(100_000 / (48 * 20))
    assert cycle_target(100_000, 20, 0.25) == pytest.approx(100_000 / (480 * 20))


def test_percolated_run_is_induced_in_host():
    G = random_regular(5000, 10, 3)
    for s in range(5):
        P = percolated_path_run(G, 0.3, s)
        assert is_induced_path(G, P.vertices) and P.is_valid()


def test_close_cycle_on_cycle():
    G = cycle_graph(100)
    C = close_cycle(G, list(range(99)))
    assert len(C) == 100 and is_induced_cycle(G, C.vertices)
    seg = cycle_segments(G, list(range(99)))
    assert len(seg.P1) == len(seg.P2) == 33 and len(seg.Pmid) == 2 * (99 // 20)
    assert 99 in seg.N1 & seg.N2


def test_close_cycle_errors():
    star = build_graph(6, [(0, i) for i in range(1, 6)])
    with pytest.raises(PathTooShort):
        close_cycle(star, [1, 0, 2])
    with pytest.raises(NoClosure):
        close_cycle(path_graph(100), list(range(100)))
    with pytest.raises(ValueError):
        close_cycle(cycle_graph(100), list(range(100)))


def test_find_cycle_on_cycle_graph():
    G = cycle_graph(90)
    res = find_long_induced_cycle(G, 1.0, 0, retries=1)
    assert len(res.cycle) == 90 and res.attempts == 1 and not res.shortfall


def test_find_cycle_failure():
    with pytest.raises(AllRetriesFailed):
        find_long_induced_cycle(random_regular(200, 4, 1), 0.2, 0, retries=3)


def test_find_cycle_random_regular():
    G = random_regular(20_000, 10, 5)
    res = find_long_induced_cycle(G, 0.3, 1)
    assert is_induced_cycle(G, res.cycle.vertices)
    assert len(res.cycle) >= res.target


def test_certificate_small_degree_is_empty():
    G = cycle_graph(12)
    cert = mu_lower_certificate(G, list(range(8)))
    assert cert.heavy == () and cert.bound == 0
    # the one vertex off the path sees both of its ends
    assert mu_lower_certificate(cycle_graph(6), [0, 1, 2, 3, 4]).unique_nbrs == ()


def test_certificate_structure():
    G = random_regular(5000, 20, 8)
    P = percolated_path_run(G, 0.5, 3)
    cert = mu_lower_certificate(G, P)
    pos = {v: i for i, v in enumerate(P.vertices)}
    for x in cert.unique_nbrs:
        assert x not in pos and sum(w in pos for w in G.neighbors(x).tolist()) == 1
    idx = sorted(pos[v] for v in cert.spaced)
    assert all(b - a >= 4 for a, b in zip(idx, idx[1:]))
    assert all(2 <= i <= len(P) - 3 for i in idx)
    assert set(cert.spaced) <= set(cert.heavy)
    assert cert.log2_bound == pytest.approx(len(idx) * math.log2(2) - 1)
    with pytest.raises(PathTooShort):
        mu_lower_certificate(G, P.vertices[:3])
