"""Random regular graphs are good spectral expanders.

Builds a random 20-regular graph, measures its second eigenvalue, and
checks the edge-distribution and vertex-expansion consequences on random
vertex sets.
"""
import numpy as np

from inducedpaths import (
    expansion_bound,
    extremal_eigenvalues,
    external_neighbourhood,
    mixing_check,
    random_regular,
)

# %% a random 20-regular graph on 20000 vertices
n, d = 20_000, 20
G = random_regular(n, d, seed=1)
print(f"n={G.n} m={G.m}")

# %% extremal eigenvalues; 2*sqrt(d-1)/d is the Ramanujan benchmark
rep = extremal_eigenvalues(G, tol=1e-8)
print(f"lambda2={rep.lambda2:.4f} lambdaN={rep.lambdaN:.4f} ratio={rep.ratio:.4f}")
print(f"2 sqrt(d-1) / d = {2 * np.sqrt(d - 1) / d:.4f}")

# %% edges between random sets stay within lambda sqrt(|A||B|) of (d/n)|A||B|
rs = np.random.default_rng(0)
for size in (50, 500, 5000):
    A = rs.choice(n, size, replace=False)
    B = rs.choice(n, size, replace=False)
    r = mixing_check(G, rep, A, B)
    print(f"|A|=|B|={size:5d}  e(A,B)={r.observed:6d}  expected={r.expected:9.1f}  "
          f"slack={r.bound - abs(r.observed - r.expected):9.1f}")

# %% small sets expand almost fully: |N(S)| close to d|S|
for size in (20, 100, 300):
    S = rs.choice(n, size, replace=False)
    N = len(external_neighbourhood(G, S))
    print(f"|S|={size:4d}  |N(S)|={N:5d}  d|S|={d * size:5d}  "
          f"bound(alpha=0.1)={expansion_bound(n, d, size, 0.1):8.1f}")
