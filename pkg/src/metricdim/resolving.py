"""Resolving, doubly resolving and strong resolving sets.

All predicates are pure functions of a :class:`DistanceMatrix`. A witness
may be passed as a :class:`WitnessSet` or as any sequence of vertices.

Each ``*_failure`` function returns the lexicographically smallest pair
``(u, v)``, ``u < v``, that the witness fails to separate, or ``None``.
The matching ``is_*`` function is the boolean view of the same check.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError


class WitnessKind(str, Enum):
    RESOLVING = "resolving"
    DOUBLY_RESOLVING = "doubly_resolving"
    STRONG_RESOLVING = "strong_resolving"


@dataclass(frozen=True)
class WitnessSet:
    """An ordered set of distinct vertices tagged with the property it serves."""

    vertices: tuple
    kind: WitnessKind = WitnessKind.RESOLVING

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError(f"witness vertices must be distinct: {vertices}")
        if any(v < 0 for v in vertices):
            raise DomainError(f"negative vertex label in {vertices}")
        kind = WitnessKind(self.kind)
        if kind is WitnessKind.DOUBLY_RESOLVING and len(vertices) < 2:
            raise DomainError("a doubly resolving witness needs at least two vertices")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "kind", kind)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def rotated(self, offset, n):
        """Image under ``v -> v + offset mod n`` (a circulant automorphism)."""
        return WitnessSet(tuple((v + offset) % n for v in self.vertices), self.kind)


def _columns(w, d):
    verts = list(w)
    if not verts:
        raise DomainError("witness must be nonempty")
    for v in verts:
        if not 0 <= v < d.n:
            raise DomainError(f"witness vertex {v} outside 0..{d.n - 1}")
    return verts


def metric_representation(v, w, d):
    """Distances from ``v`` to each witness vertex, in witness order."""
    return tuple(int(x) for x in d.dist[v, _columns(w, d)])


def _first_collision(rows):
    """Smallest pair of row indices whose rows coincide, or ``None``.

    The smallest pair is (first, second) member of the class whose first
    member is smallest.
    """
    first = {}
    best = None
    for v, row in enumerate(map(bytes, rows)):
        u = first.setdefault(row, v)
        if u != v and (best is None or u < best[0]):
            best = (u, v)
            # later collisions in this class have the same u and larger v
    return best


def resolving_failure(w, d):
    cols = _columns(w, d)
    return _first_collision(np.ascontiguousarray(d.dist[:, cols]))


def is_resolving(w, d):
    """True iff every vertex has a distinct metric representation."""
    return resolving_failure(w, d) is None


def doubly_resolves(x, y, u, v, d):
    """``d(u,x) - d(u,y) != d(v,x) - d(v,y)``."""
    dist = d.dist
    return int(dist[u, x]) - int(dist[u, y]) != int(dist[v, x]) - int(dist[v, y])


def doubly_resolving_failure(z, d):
    """Smallest pair not doubly resolved by any two vertices of ``z``.

    ``u, v`` escape every ``x, y`` in ``z`` exactly when the profile
    ``d(u, z_i) - d(v, z_i)`` is constant over ``i``, i.e. when the rows
    ``d(u, z_i) - d(u, z_0)`` and ``d(v, z_i) - d(v, z_0)`` coincide.
    """
    cols = _columns(z, d)
    if len(cols) < 2:
        raise DomainError("a doubly resolving set needs at least two vertices")
    block = d.dist[:, cols]
    return _first_collision(np.ascontiguousarray(block - block[:, :1]))


def is_doubly_resolving(z, d):
    return doubly_resolving_failure(z, d) is None


def strongly_resolves(w, u, v, d):
    """True iff ``u`` lies on a shortest ``v-w`` path or ``v`` on a shortest ``u-w`` path."""
    dist = d.dist
    duv = int(dist[u, v])
    return int(dist[w, v]) == int(dist[w, u]) + duv or int(dist[w, u]) == int(dist[w, v]) + duv


def strong_pair_matrix(w, d):
    """Boolean ``(n, n)`` matrix: entry ``(u, v)`` is True iff ``w`` strongly resolves ``u, v``."""
    dist = d.dist.astype(np.int32)
    col = dist[:, w]
    through_u = col[None, :] == col[:, None] + dist  # d(w,v) == d(w,u) + d(u,v)
    return through_u | through_u.T


def strong_resolving_failure(s, d):
    verts = _columns(s, d)
    covered = np.zeros((d.n, d.n), dtype=bool)
    for w in verts:
        covered |= strong_pair_matrix(w, d)
    missing = np.argwhere(np.triu(~covered, 1))
    if len(missing) == 0:
        return None
    u, v = missing[0]  # argwhere is row-major, hence lexicographic
    return int(u), int(v)


def is_strong_resolving(s, d):
    return strong_resolving_failure(s, d) is None


CHECKS = {
    WitnessKind.RESOLVING: is_resolving,
    WitnessKind.DOUBLY_RESOLVING: is_doubly_resolving,
    WitnessKind.STRONG_RESOLVING: is_strong_resolving,
}

FAILURES = {
    WitnessKind.RESOLVING: resolving_failure,
    WitnessKind.DOUBLY_RESOLVING: doubly_resolving_failure,
    WitnessKind.STRONG_RESOLVING: strong_resolving_failure,
}


def validates(witness, d):
    """Check a :class:`WitnessSet` against the predicate named by its kind."""
    return CHECKS[witness.kind](witness, d)
