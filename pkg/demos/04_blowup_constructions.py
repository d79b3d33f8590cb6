"""Blow-ups of a small-degree expander keep the spectral ratio but kill long
induced paths (clique blow-up) or induced-subgraph variety (empty blow-up).
"""
import numpy as np

from inducedpaths import (
    complete_graph,
    construct_low_mu_graph,
    construct_short_path_graph,
    dense_spectrum,
    empty_graph,
    lex_product,
    longest_induced_path_exact,
    mu_exact,
    percolated_path_run,
    predict_lex_spectrum,
)

# %% the spectrum of lex(G, H) follows from those of G and H
G, H = complete_graph(4), complete_graph(2)
print("predicted", predict_lex_spectrum(dense_spectrum(G), 2, 1).as_array())
print("measured ", np.round(dense_spectrum(lex_product(G, H)), 10))

# %% clique blow-up: 9-regular on 16 vertices, then 24-regular on 1000
S, p = construct_short_path_graph(9, 2.0, 16, seed=1)
print(f"d0={p.d0} k={p.k} n0={p.n0}: longest induced path {len(longest_induced_path_exact(S))}")
L, q = construct_short_path_graph(24, 2.0, 1000, seed=1)
best = max(len(percolated_path_run(L, 1.0, s)) for s in range(10))
print(f"n={L.n} ratio={q.ratio:.3f}: best heuristic path {best} (cap 2 n0 = {2 * q.n0})")

# %% empty blow-up: induced subgraphs are determined by how many vertices each part keeps
B, r = construct_low_mu_graph(6, 2.0, 8, seed=2, d0=3)
print(f"lex(K4, empty_2): mu = {mu_exact(B)} <= 3^4 = 81")
for t in (2, 3):
    print(f"lex(K4, empty_{t}): mu = {mu_exact(lex_product(complete_graph(4), empty_graph(t)))}")
