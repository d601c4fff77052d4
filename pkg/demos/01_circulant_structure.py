"""
The circulant graphs Cay(Z_n, S_k)
==================================

Build a few circulants, look at their distances, and see what happens in
the antipodal case ``k = n/2 - 1``.
"""

from metricdim import all_pairs_distances, cayley_graph, chromatic_number, clique_number
from metricdim.graph_core import distance_two_partners

# S_1 = {1, n-1} gives a cycle; every extra step adds two chords per vertex.
for k in (1, 2, 3):
    g = cayley_graph(8, k)
    d = all_pairs_distances(g)
    print(f"Cay(Z_8, S_{k}): degree {g.degree(0)}, {g.num_edges} edges, diameter {d.diameter}")

# With k = n/2 - 1 each vertex misses exactly one other vertex, its antipode.
d = all_pairs_distances(cayley_graph(10, 4))
print(d.dist)
print("distance-2 partners:", distance_two_partners(d))

# Clique and chromatic numbers: both equal k+1 exactly when k+1 divides n.
for n, k in [(8, 3), (8, 2), (9, 2), (6, 2)]:
    g = cayley_graph(n, k)
    print(f"n={n} k={k}: omega={clique_number(g)} chi={chromatic_number(g)} (k+1 | n: {n % (k + 1) == 0})")

# The DOT export pipes straight into graphviz.
print(cayley_graph(8, 1).to_dot())
