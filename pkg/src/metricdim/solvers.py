"""Exact minimum resolving, doubly resolving and strong resolving sets.

Every problem is recast as covering the ``n(n-1)/2`` unordered vertex pairs.
Pair ``{u, v}`` (``u < v``) owns one bit of a Python integer; each vertex
(or, for doubly resolving sets, each vertex pair) owns the bitmap of pairs
it separates. A witness is valid iff the union of its bitmaps is full.

Subsets are enumerated by ascending cardinality and lexicographically within
a cardinality, so the first hit is the lexicographically smallest minimum
witness. A branch is cut as soon as the bitmaps still reachable from it
cannot complete the cover.

The strong metric dimension has a second, independent route: it equals the
vertex cover number of the strong resolving graph, whose edges join
mutually maximally distant vertices.
"""

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .budget import DEFAULT_BUDGET, SearchBudget
from .errors import BudgetExceededError, DomainError, NotApplicableError
from .graph_core import Graph, _bits, popcount
from .resolving import WitnessKind, WitnessSet, strong_pair_matrix


class Problem(str, Enum):
    BETA = "beta"
    PSI = "psi"
    SDIM = "sdim"


class Method(str, Enum):
    ENUMERATION = "enumeration"
    VERTEX_COVER = "vertex_cover_reduction"


KIND_OF = {
    Problem.BETA: WitnessKind.RESOLVING,
    Problem.PSI: WitnessKind.DOUBLY_RESOLVING,
    Problem.SDIM: WitnessKind.STRONG_RESOLVING,
}


@dataclass(frozen=True)
class SolverReport:
    problem: Problem
    n: int
    optimum: int
    witness: WitnessSet
    nodes_explored: int
    elapsed: float
    method: Method = Method.ENUMERATION

    def to_dict(self, timing=True, offset=0):
        out = {
            "problem": Problem(self.problem).value,
            "n": self.n,
            "optimum": self.optimum,
            "witness": [v + offset for v in self.witness.vertices],
            "method": Method(self.method).value,
            "nodes": self.nodes_explored,
        }
        if timing:
            out["millis"] = int(round(self.elapsed * 1000))
        return out

    def to_json(self, timing=True, offset=0):
        return json.dumps(self.to_dict(timing, offset))

    @classmethod
    def from_dict(cls, data, offset=0):
        problem = Problem(data["problem"])
        return cls(
            problem=problem,
            n=data["n"],
            optimum=data["optimum"],
            witness=WitnessSet(tuple(v - offset for v in data["witness"]), KIND_OF[problem]),
            nodes_explored=data["nodes"],
            elapsed=data.get("millis", 0) / 1000,
            method=Method(data["method"]),
        )


# ----------------------------------------------------------------------------
# Pair bitmaps
# ----------------------------------------------------------------------------


def _pair_index(n):
    iu, iv = np.triu_indices(n, 1)
    return iu, iv


def _to_mask(flags):
    """Pack a boolean vector into a Python int, bit ``i`` = ``flags[i]``."""
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def distinguishing_masks(d):
    """Per vertex ``x``: pairs ``{u, v}`` with ``d(u, x) != d(v, x)``."""
    iu, iv = _pair_index(d.n)
    dist = d.dist
    return [_to_mask(dist[iu, x] != dist[iv, x]) for x in range(d.n)]


def strong_masks(d):
    """Per vertex ``w``: pairs ``{u, v}`` that ``w`` strongly resolves."""
    iu, iv = _pair_index(d.n)
    return [_to_mask(strong_pair_matrix(w, d)[iu, iv]) for w in range(d.n)]


def doubly_masks(d):
    """``masks[x][y]``: pairs doubly resolved by the two vertices ``x, y``."""
    iu, iv = _pair_index(d.n)
    dist = d.dist.astype(np.int32)
    masks = [[0] * d.n for _ in range(d.n)]
    for x in range(d.n):
        for y in range(x + 1, d.n):
            diff = dist[:, x] - dist[:, y]
            masks[x][y] = masks[y][x] = _to_mask(diff[iu] != diff[iv])
    return masks


# ----------------------------------------------------------------------------
# Enumeration core
# ----------------------------------------------------------------------------


class _Cover:
    """Cover structure for one problem: ``gain`` and a suffix bound."""

    def __init__(self, d, problem):
        n = d.n
        self.n = n
        self.full = (1 << (n * (n - 1) // 2)) - 1
        self.problem = Problem(problem)
        if self.problem is Problem.PSI:
            self.pair_masks = doubly_masks(d)
            # pairs coverable once some vertex >= i is added, partner arbitrary
            per_vertex = [0] * n
            for x in range(n):
                for y in range(n):
                    per_vertex[x] |= self.pair_masks[x][y]
        else:
            per_vertex = distinguishing_masks(d) if self.problem is Problem.BETA else strong_masks(d)
            self.masks = per_vertex
        self.suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] | per_vertex[i]

    def gain(self, x, chosen):
        if self.problem is Problem.PSI:
            row = self.pair_masks[x]
            out = 0
            for y in chosen:
                out |= row[y]
            return out
        return self.masks[x]

    def cover_of(self, vertices):
        out = 0
        for i, x in enumerate(vertices):
            out |= self.gain(x, vertices[:i])
        return out

    def greedy(self):
        """Greedy cover: an upper bound, not necessarily optimal."""
        chosen, cover = [], 0
        if self.problem is Problem.PSI:
            chosen, cover = [0], 0
        while cover != self.full:
            best = max(
                (x for x in range(self.n) if x not in chosen),
                key=lambda x: (popcount(cover | self.gain(x, chosen)), -x),
            )
            cover |= self.gain(best, chosen)
            chosen.append(best)
        return sorted(chosen)

    def search(self, size, meter, find_all=False):
        """Yield valid subsets of exactly ``size`` vertices in lexicographic order."""
        n, full, suffix = self.n, self.full, self.suffix
        chosen = []

        def dfs(start, cover):
            meter.tick()
            need = size - len(chosen)
            if need == 0:
                if cover == full:
                    yield tuple(chosen)
                return
            for x in range(start, n - need + 1):
                if cover | suffix[x] != full:
                    break  # suffix unions only shrink as x grows
                new = cover | self.gain(x, chosen)
                chosen.append(x)
                yield from dfs(x + 1, new)
                chosen.pop()

        yield from dfs(0, 0)


def _solve(d, problem, budget, lower):
    problem = Problem(problem)
    if d.n < 2:
        raise DomainError("solvers need at least two vertices")
    cover = _Cover(d, problem)
    meter = budget.meter(f"{problem.value} enumeration")
    upper = len(cover.greedy())
    meter.upper = upper
    for size in range(lower, upper + 1):
        meter.lower = size
        for witness in cover.search(size, meter):
            return SolverReport(
                problem=problem,
                n=d.n,
                optimum=size,
                witness=WitnessSet(witness, KIND_OF[problem]),
                nodes_explored=meter.nodes,
                elapsed=meter.elapsed(),
                method=Method.ENUMERATION,
            )
    raise AssertionError("greedy cover size is always attainable")


def min_resolving_set(d, budget=DEFAULT_BUDGET):
    """Metric dimension with the lexicographically smallest metric basis."""
    # only paths have metric dimension 1; a connected graph is a path iff diam = n-1
    lower = 1 if d.diameter == d.n - 1 else 2
    return _solve(d, Problem.BETA, budget, lower)


def min_doubly_resolving_set(d, budget=DEFAULT_BUDGET, known_beta=None):
    """Minimum doubly resolving set; ``known_beta`` raises the starting size."""
    return _solve(d, Problem.PSI, budget, max(2, known_beta or 0))


def min_strong_resolving_set_enum(d, budget=DEFAULT_BUDGET):
    """Strong metric dimension by direct enumeration."""
    return _solve(d, Problem.SDIM, budget, 1)


def all_minimum_sets(d, problem, size, budget=DEFAULT_BUDGET):
    """Every valid witness of exactly ``size`` vertices, lexicographically."""
    cover = _Cover(d, problem)
    meter = budget.meter(f"{Problem(problem).value} enumeration")
    return list(cover.search(size, meter))


def certify_no_smaller(d, problem, optimum, budget=DEFAULT_BUDGET):
    """True iff no subset of ``optimum - 1`` vertices is valid (plain exhaustion)."""
    if optimum <= 1:
        return True
    cover = _Cover(d, problem)
    meter = budget.meter("certification")
    for subset in combinations(range(d.n), optimum - 1):
        meter.tick()
        if cover.cover_of(list(subset)) == cover.full:
            return False
    return True


# ----------------------------------------------------------------------------
# Strong resolving graph and vertex cover
# ----------------------------------------------------------------------------


def strong_resolving_graph(d):
    """Graph joining mutually maximally distant vertex pairs.

    ``u`` is maximally distant from ``v`` when no neighbour of ``u`` is
    farther from ``v`` than ``u`` is. The result may be disconnected.
    """
    n = d.n
    dist = d.dist
    adjacent = dist == 1
    # maxd[u, v]: u is maximally distant from v
    maxd = np.ones((n, n), dtype=bool)
    for u in range(n):
        nbrs = np.flatnonzero(adjacent[u])
        if len(nbrs):
            maxd[u] = (dist[nbrs] <= dist[u]).all(axis=0)
    mmd = maxd & maxd.T
    np.fill_diagonal(mmd, False)
    rows = tuple(_to_mask(mmd[u]) for u in range(n))
    return Graph(n, rows)


def min_vertex_cover(graph, budget=DEFAULT_BUDGET):
    """Exact minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex ``v``: either ``v`` joins the cover
    or all of its remaining neighbours do. A greedy maximal matching of the
    residual graph gives the lower bound. Returns ``(cover, nodes)``.
    """
    adj = graph.adjacency
    meter = budget.meter("vertex cover search")
    best = [v for v in range(graph.n) if adj[v]]
    meter.upper = len(best)

    def matching_bound(alive):
        free, size = alive, 0
        for u in _bits(alive):
            if free >> u & 1:
                partners = adj[u] & free
                if partners:
                    w = (partners & -partners).bit_length() - 1
                    free &= ~((1 << u) | (1 << w))
                    size += 1
        return size

    def branch(alive, taken):
        nonlocal best
        meter.tick()
        v, deg = -1, 0
        for u in _bits(alive):
            du = popcount(adj[u] & alive)
            if du > deg:
                v, deg = u, du
        if deg == 0:
            if len(taken) < len(best):
                best = sorted(taken)
                meter.upper = len(best)
            return
        if len(taken) + matching_bound(alive) >= len(best):
            return
        branch(alive & ~(1 << v), taken + [v])
        nbrs = adj[v] & alive
        branch(alive & ~nbrs & ~(1 << v), taken + list(_bits(nbrs)))

    branch((1 << graph.n) - 1, [])
    return best, meter.nodes


def min_strong_resolving_set_vc(d, budget=DEFAULT_BUDGET):
    """Strong metric dimension as the vertex cover number of the strong resolving graph."""
    if d.n < 2:
        raise DomainError("solvers need at least two vertices")
    meter = budget.meter("sdim via vertex cover")
    cover, nodes = min_vertex_cover(strong_resolving_graph(d), budget)
    return SolverReport(
        problem=Problem.SDIM,
        n=d.n,
        optimum=len(cover),
        witness=WitnessSet(tuple(cover), WitnessKind.STRONG_RESOLVING),
        nodes_explored=nodes,
        elapsed=meter.elapsed(),
        method=Method.VERTEX_COVER,
    )


def verify_lemma_bounds(report, d):
    """Check ``2 <= beta <= n - diam`` for a non-path graph."""
    if Problem(report.problem) is not Problem.BETA:
        raise DomainError("the bound concerns the metric dimension only")
    if d.diameter == d.n - 1:
        raise NotApplicableError("the bound excludes paths")
    return 2 <= report.optimum <= d.n - d.diameter


__all__ = [
    "BudgetExceededError",
    "Method",
    "Problem",
    "SearchBudget",
    "SolverReport",
    "all_minimum_sets",
    "certify_no_smaller",
    "distinguishing_masks",
    "doubly_masks",
    "min_doubly_resolving_set",
    "min_resolving_set",
    "min_strong_resolving_set_enum",
    "min_strong_resolving_set_vc",
    "min_vertex_cover",
    "strong_masks",
    "strong_resolving_graph",
    "verify_lemma_bounds",
]
