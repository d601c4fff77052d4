"""
Exact dimensions and the vertex-cover cross-check
=================================================

Solve beta, psi and sdim exactly, then recompute sdim through the strong
resolving graph.
"""

from metricdim import (
    all_pairs_distances,
    cayley_graph,
    min_doubly_resolving_set,
    min_resolving_set,
    min_strong_resolving_set_enum,
    min_strong_resolving_set_vc,
    strong_resolving_graph,
)

for n, k in [(8, 1), (9, 2), (10, 3), (12, 5)]:
    d = all_pairs_distances(cayley_graph(n, k))
    beta = min_resolving_set(d)
    psi = min_doubly_resolving_set(d, known_beta=beta.optimum)
    sdim = min_strong_resolving_set_enum(d)
    print(f"Cay(Z_{n}, S_{k}): beta={beta.optimum} {beta.witness.vertices}  "
          f"psi={psi.optimum} {psi.witness.vertices}  sdim={sdim.optimum} {sdim.witness.vertices}")

# The strong resolving graph of the antipodal family is a perfect matching,
# so its vertex cover number, and with it sdim, is n/2.
d = all_pairs_distances(cayley_graph(12, 5))
print(strong_resolving_graph(d).edges())
report = min_strong_resolving_set_vc(d)
print(report.to_json(timing=False))
