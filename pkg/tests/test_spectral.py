import numpy as np
import pytest

from inducedpaths import (
    NotRegular,
    complete_graph,
    cycle_graph,
    dense_spectrum,
    expansion_bound,
    expansion_check,
    extremal_eigenvalues,
    mixing_check,
    path_graph,
    petersen_graph,
    random_regular,
    verify_ndl,
)


@pytest.mark.parametrize("G, l1, l2, ln, lam", [
    (complete_graph(6), 5, -1, -1, 1),
    (cycle_graph(4), 2, 0, -2, 2),
    (petersen_graph(), 3, 1, -2, 2),
])
def test_named_spectra(G, l1, l2, ln, lam):
    rep = extremal_eigenvalues(G)
    assert rep.converged
    assert rep.lambda1 == pytest.approx(l1, abs=1e-8)
    assert rep.lambda2 == pytest.approx(l2, abs=1e-8)
    assert rep.lambdaN == pytest.approx(ln, abs=1e-8)
    assert rep.lam == pytest.approx(lam, abs=1e-8)
    assert set(rep.to_dict()) >= {"n", "d", "lambda1", "lambda2", "lambdaN", "lambda", "ratio"}


@pytest.mark.parametrize("n, d, seed", [(40, 3, 1), (64, 6, 2), (200, 10, 3), (150, 7, 4)])
def test_matches_dense_solver(n, d, seed):
    G = random_regular(n, d, seed)
    ev = dense_spectrum(G)
    rep = extremal_eigenvalues(G)
    assert rep.lambda2 == pytest.approx(ev[1], abs=1e-8)
    assert rep.lambdaN == pytest.approx(ev[-1], abs=1e-8)


def test_not_regular():
    with pytest.raises(NotRegular):
        extremal_eigenvalues(path_graph(4))


def test_mixing_examples():
    K = complete_graph(10)
    rep = mixing_check(K, extremal_eigenvalues(K), [0, 1, 2], [3, 4, 5])
    assert rep.observed == 9 and rep.expected == pytest.approx(8.1) and rep.satisfied
    assert mixing_check(K, extremal_eigenvalues(K), [], [1, 2]).satisfied
    C = cycle_graph(4)
    rep = mixing_check(C, extremal_eigenvalues(C), [0], [2])
    assert rep.observed == 0 and rep.expected == pytest.approx(0.5) and rep.bound == pytest.approx(2)
    assert rep.satisfied


def test_expansion_examples():
    n = 30
    C = cycle_graph(n)
    for m in range(1, 10):
        expect = 2 >= expansion_bound(n, 2, m, 0.5)
        assert expansion_check(C, range(m), 0.5, enforce_range=False) == expect
    K = complete_graph(8)
    assert expansion_check(K, [0], 0.1, enforce_range=False)
    # bound <= 0 makes the check vacuous
    assert expansion_bound(10, 9, 5, 0.2) <= 0
    assert expansion_check(K, range(5), 0.2, enforce_range=False)
    with pytest.raises(ValueError):
        expansion_check(C, range(20), 0.5)


def test_verify_ndl():
    assert verify_ndl(complete_graph(6), 0.5)
    assert not verify_ndl(cycle_graph(4), 0.5)
    hits = sum(verify_ndl(random_regular(10_000, 20, s), 0.5) for s in range(3))
    assert hits == 3
