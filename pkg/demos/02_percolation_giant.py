"""Site percolation just above the threshold p = 1/d.

Keeps each vertex with probability (1+eps)/d and compares the largest
component with the prediction x n/d, where x solves x = (1+eps)(1-e^-x).
"""
from inducedpaths import (
    PercolationParams,
    component_stats,
    excess_bound_report,
    random_regular,
    seed_derive,
    site_percolate,
    solve_x,
)

n, d = 100_000, 50
G = random_regular(n, d, seed=3)

# %% x(eps) against its small-eps expansion 2 eps - 2 eps^2 / 3
for eps in (0.05, 0.1, 0.2, 0.4):
    print(f"eps={eps:4}  x={solve_x(eps):.6f}  2e-2e^2/3={2 * eps - 2 * eps ** 2 / 3:.6f}")

# %% giant component order and size, averaged over a few draws
for eps in (0.1, 0.2, 0.4):
    rows = []
    for t in range(5):
        params = PercolationParams.supercritical(eps, d, seed_derive(11, f"eps={eps}", t))
        rows.append(component_stats(G, site_percolate(G, params), params))
    s = rows[0]
    mean_order = sum(r.L1_order for r in rows) / len(rows)
    mean_edges = sum(r.L1_edges for r in rows) / len(rows)
    ratio = sum(excess_bound_report(r, eps, n, d).ratio for r in rows) / len(rows)
    print(f"eps={eps}: L1 order {mean_order:7.1f} (pred {s.predicted_L1_order:7.1f}), "
          f"edges {mean_edges:7.1f} (pred {s.predicted_L1_edges:7.1f}), "
          f"excess/(eps^3 n/d) = {ratio:.2f}")
