"""
beta = psi = sdim = n/2 on the antipodal family
===============================================

Sweep even n, compare against the closed form, and list every minimum
resolving set for n = 10 to see that each is also doubly resolving.
"""

from metricdim.closed_forms import antipodal_family, reports_to_csv, verify_theorems
from metricdim.resolving import is_doubly_resolving
from metricdim.solvers import all_minimum_sets

reports = [verify_theorems(n) for n in range(8, 21, 2)]
print(reports_to_csv(reports))

_, d = antipodal_family(10)
sets = all_minimum_sets(d, "beta", 5)
print(len(sets), "minimum resolving sets, all doubly resolving:", all(is_doubly_resolving(w, d) for w in sets))
print("they pick one vertex from each antipodal pair, e.g.", sets[:4])
