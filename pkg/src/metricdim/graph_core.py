"""Circulant Cayley graphs, general graphs, distances and small exact invariants.

Vertices are labelled ``0..n-1``. Adjacency is stored as one Python integer
per vertex used as a bitset: bit ``v`` of ``adjacency[u]`` is set iff ``u~v``.
For a circulant on Z_n the residue ``x`` is vertex ``x``; a 1-based label
``i`` in ``1..n`` corresponds to vertex ``i - 1``.
"""

import csv
import io
import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .budget import DEFAULT_BUDGET
from .errors import BudgetExceededError, DisconnectedGraphError, DomainError


def _bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


# ----------------------------------------------------------------------------
# Connection sets and graphs
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ConnectionSet:
    """An inverse-closed subset of Z_n - {0}."""

    n: int
    members: frozenset

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"group order must be at least 3, got n={self.n}")
        members = frozenset(int(d) for d in self.members)
        for d in members:
            if not 0 < d < self.n:
                raise DomainError(f"residue {d} is not in 1..{self.n - 1}")
            if (self.n - d) % self.n not in members:
                raise DomainError(f"connection set is not closed under negation: {d} present, {self.n - d} missing")
        object.__setattr__(self, "members", members)

    def __contains__(self, d):
        return d % self.n in self.members

    def __len__(self):
        return len(self.members)


def build_connection_set(n, k):
    """Return S_k = {1, n-1, 2, n-2, ..., k, n-k} in Z_n.

    Requires ``n >= 4`` and ``1 <= k <= n // 2 - 1``.
    """
    if n < 4:
        raise DomainError(f"n must be at least 4, got n={n}")
    if not 1 <= k <= n // 2 - 1:
        raise DomainError(f"k must satisfy 1 <= k <= floor(n/2)-1 = {n // 2 - 1}, got k={k}")
    members = set()
    for j in range(1, k + 1):
        members.update((j, n - j))
    return ConnectionSet(n, frozenset(members))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with bitset adjacency rows.

    Construction validates symmetry and irreflexivity. Connectivity is
    enforced by the public builders, not here, so that derived graphs
    (e.g. strong resolving graphs) may be disconnected.
    """

    n: int
    adjacency: tuple

    def __post_init__(self):
        rows = tuple(int(r) for r in self.adjacency)
        if len(rows) != self.n:
            raise DomainError(f"expected {self.n} adjacency rows, got {len(rows)}")
        limit = 1 << self.n
        for u, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise DomainError(f"row {u} references vertices outside 0..{self.n - 1}")
            if row >> u & 1:
                raise DomainError(f"self-loop at vertex {u}")
            for v in _bits(row):
                if not rows[v] >> u & 1:
                    raise DomainError(f"adjacency is not symmetric at ({u}, {v})")
        object.__setattr__(self, "adjacency", rows)

    def has_edge(self, u, v):
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, u):
        return list(_bits(self.adjacency[u]))

    def degree(self, u):
        return popcount(self.adjacency[u])

    def edges(self):
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self):
        return sum(popcount(r) for r in self.adjacency) // 2

    def is_connected(self):
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adjacency[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def relabel(self, perm):
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    # --- export ---------------------------------------------------------

    def to_dict(self, offset=0):
        return {"n": self.n, "edges": [[u + offset, v + offset] for u, v in self.edges()]}

    def to_json(self, offset=0):
        return json.dumps(self.to_dict(offset))

    def to_dot(self, offset=0, name="G"):
        lines = [f"graph {name} {{"]
        lines += [f"  {v + offset};" for v in range(self.n)]
        lines += [f"  {u + offset} -- {v + offset};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data):
        return build_graph_from_edges(data["n"], [tuple(e) for e in data["edges"]])


def _rows_from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise DomainError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


def build_graph_from_edges(n, edges, allow_disconnected=False):
    """Build a graph from an edge list; duplicate edges collapse.

    Raises :class:`DisconnectedGraphError` on disconnected input unless
    ``allow_disconnected`` is set.
    """
    if n < 1:
        raise DomainError(f"graph needs at least one vertex, got n={n}")
    graph = Graph(n, _rows_from_edges(n, edges))
    if not allow_disconnected and not graph.is_connected():
        raise DisconnectedGraphError(f"graph on {n} vertices is disconnected")
    return graph


def build_circulant(connection_set):
    """Cay(Z_n, S): ``u ~ v`` iff ``(v - u) mod n`` lies in S."""
    n = connection_set.n
    base = 0
    for d in connection_set.members:
        base |= 1 << d
    full = (1 << n) - 1
    # row u is the base row rotated left by u positions
    rows = tuple(((base << u) | (base >> (n - u))) & full for u in range(n))
    graph = Graph(n, rows)
    if not graph.is_connected():
        raise DisconnectedGraphError(f"Cay(Z_{n}, {sorted(connection_set.members)}) is disconnected")
    return graph


def cayley_graph(n, k):
    """Shorthand for ``build_circulant(build_connection_set(n, k))``."""
    return build_circulant(build_connection_set(n, k))


def complete_graph(m):
    return build_graph_from_edges(m, list(combinations(range(m), 2)))


def cycle_graph(m):
    if m < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {m}")
    return build_graph_from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m):
    return build_graph_from_edges(m, [(i, i + 1) for i in range(m - 1)])


# ----------------------------------------------------------------------------
# Distances
# ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; ``dist`` is a read-only ``(n, n)`` int16 array."""

    n: int
    dist: np.ndarray
    diameter: int

    def __getitem__(self, uv):
        return int(self.dist[uv])

    def to_csv(self):
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.dist.tolist())
        return buf.getvalue()


def all_pairs_distances(graph):
    """Breadth-first search from every vertex over the bitset rows."""
    n = graph.n
    adj = graph.adjacency
    dist = np.zeros((n, n), dtype=np.int16)
    full = (1 << n) - 1
    for s in range(n):
        seen = frontier = 1 << s
        depth = 0
        while frontier:
            depth += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                dist[s, v] = depth
        if seen != full:
            raise DisconnectedGraphError(f"vertex {s} does not reach every vertex")
    dist.setflags(write=False)
    return DistanceMatrix(n, dist, int(dist.max()) if n else 0)


def distance_two_partners(d):
    """Map each vertex to the list of vertices at distance exactly 2."""
    return {u: [int(v) for v in np.flatnonzero(d.dist[u] == 2)] for u in range(d.n)}


# ----------------------------------------------------------------------------
# Clique number and chromatic number
# ----------------------------------------------------------------------------


def clique_number(graph, budget=DEFAULT_BUDGET):
    """Exact maximum clique size by bitset branch and bound."""
    adj = graph.adjacency
    meter = budget.meter("clique search")
    best = 1 if graph.n else 0
    meter.lower = best

    def expand(size, cand):
        nonlocal best
        meter.tick()
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            sub = cand & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = meter.lower = size + 1

    expand(0, (1 << graph.n) - 1)
    return best


def _colorable(graph, colors, meter):
    """DSATUR-ordered backtracking test for a proper ``colors``-colouring."""
    n = graph.n
    adj = graph.adjacency
    color = [-1] * n
    # forbidden[v]: bitset of colours already used by neighbours of v
    forbidden = [0] * n

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                k = (popcount(forbidden[v]), popcount(adj[v]), -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def assign(done, used):
        meter.tick()
        if done == n:
            return True
        v = pick()
        # a fresh colour beyond ``used`` is interchangeable with any other fresh one
        for c in range(min(colors, used + 1)):
            if forbidden[v] >> c & 1:
                continue
            color[v] = c
            touched = [w for w in _bits(adj[v]) if color[w] < 0 and not forbidden[w] >> c & 1]
            for w in touched:
                forbidden[w] |= 1 << c
            if assign(done + 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            color[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(graph, budget=DEFAULT_BUDGET):
    """Exact chromatic number, deepening upward from the clique number."""
    meter = budget.meter("colouring search")
    if graph.n == 0:
        return 0
    lower = clique_number(graph, budget)
    for colors in range(lower, graph.n + 1):
        meter.lower = colors
        if _colorable(graph, colors, meter):
            return colors
    raise AssertionError("n colours always suffice")


# ----------------------------------------------------------------------------
# Automorphisms and distance transitivity
# ----------------------------------------------------------------------------


def automorphisms(graph, budget=DEFAULT_BUDGET, d=None):
    """Enumerate every automorphism as a tuple ``perm`` with ``v -> perm[v]``.

    Vertices are assigned in order of (degree, sorted distance profile)
    class size, rarest first. A candidate image must share that invariant
    and match the distances to every vertex already placed.
    """
    if d is None:
        d = all_pairs_distances(graph)
    n = graph.n
    dist = d.dist
    invariant = [(graph.degree(v), tuple(sorted(dist[v].tolist()))) for v in range(n)]
    classes = {}
    for v in range(n):
        classes.setdefault(invariant[v], []).append(v)
    order = sorted(range(n), key=lambda v: (len(classes[invariant[v]]), invariant[v], v))
    meter = budget.meter("automorphism search")
    image = [-1] * n
    used = [False] * n
    found = []

    def extend(i):
        meter.tick()
        if i == n:
            found.append(tuple(image))
            return
        v = order[i]
        placed = order[:i]
        for w in classes[invariant[v]]:
            if used[w]:
                continue
            if any(dist[v, a] != dist[w, image[a]] for a in placed):
                continue
            image[v] = w
            used[w] = True
            extend(i + 1)
            used[w] = False
            image[v] = -1

    extend(0)
    return found


def is_distance_transitive_desk(graph, budget=DEFAULT_BUDGET):
    """True iff Aut(G) is transitive on ordered pairs at each fixed distance.

    Intended for desk-scale graphs (n up to about 12); the full group is
    enumerated explicitly.
    """
    d = all_pairs_distances(graph)
    auts = automorphisms(graph, budget, d)
    for t in range(0, d.diameter + 1):
        us, vs = np.nonzero(d.dist == t)
        u0, v0 = int(us[0]), int(vs[0])
        orbit = {(g[u0], g[v0]) for g in auts}
        if len(orbit) != len(us):
            return False
    return True


__all__ = [
    "BudgetExceededError",
    "ConnectionSet",
    "DistanceMatrix",
    "Graph",
    "all_pairs_distances",
    "automorphisms",
    "build_circulant",
    "build_connection_set",
    "build_graph_from_edges",
    "cayley_graph",
    "chromatic_number",
    "clique_number",
    "complete_graph",
    "cycle_graph",
    "distance_two_partners",
    "is_distance_transitive_desk",
    "path_graph",
    "popcount",
]
