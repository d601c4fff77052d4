"""
Resolving, doubly resolving and strong resolving sets
=====================================================

The three predicates on one small example, with their failing pairs.
"""

from metricdim import all_pairs_distances, cayley_graph, cycle_graph, metric_representation
from metricdim.resolving import (
    doubly_resolving_failure,
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    resolving_failure,
)

d = all_pairs_distances(cayley_graph(8, 3))

# The 3-clique {0, 1, 2} gives vertices 3 and 7 the same representation ...
for v in range(8):
    print(v, metric_representation(v, [0, 1, 2], d))
print("first unresolved pair:", resolving_failure([0, 1, 2], d))

# ... while the 4-clique {0, 1, 2, 3} passes all three tests.
w = [0, 1, 2, 3]
print(is_resolving(w, d), is_doubly_resolving(w, d), is_strong_resolving(w, d))

# On the 8-cycle, {0, 1} resolves but is too small to doubly resolve;
# three vertices are needed, and not every triple works.
c8 = all_pairs_distances(cycle_graph(8))
print("C_8 {0,1} resolving:", is_resolving([0, 1], c8))
print("C_8 {0,1,2} doubly resolving fails at", doubly_resolving_failure([0, 1, 2], c8))
print("C_8 {0,1,4} doubly resolving:", is_doubly_resolving([0, 1, 4], c8))
