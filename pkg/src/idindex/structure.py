"""Structural analysis feeding the solvers: twin classes and distance regularity.

Two vertices are *twins* when they have equal open neighbourhoods (an
independent, non-adjacent group) or equal closed neighbourhoods (a mutually
adjacent group).  Twins sit at equal distance from every other vertex, so
two same-rank twins always receive identical strings; the size of the
largest twin class is therefore a lower bound on how many distinct rank
values any identifying assignment needs.

A graph is *distance regular in counts* here when every vertex sees the
same number of vertices at each distance; that profile is what makes
affine rank changes harmless and is recorded per graph when present.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, DistanceMatrix


class InvalidMultiplicitiesError(Exception):
    """Part-size multiplicities must be positive sizes, counts >= 0, >= 2 parts."""


@dataclass(frozen=True)
class TupletClass:
    """A maximal twin class; ``kind`` is 'independent', 'clique', or None
    for singletons."""

    members: tuple[int, ...]
    kind: str | None


@dataclass(frozen=True)
class TupletClasses:
    """Partition of the vertices into maximal twin classes."""

    classes: tuple[TupletClass, ...]
    max_size: int

    def class_index(self) -> list[int]:
        """Map each vertex to the index of its class."""
        idx = [0] * sum(len(c.members) for c in self.classes)
        for ci, cls in enumerate(self.classes):
            for v in cls.members:
                idx[v] = ci
        return idx


def tuplet_classes(g: Graph) -> TupletClasses:
    """Group vertices by equal open or closed neighbourhoods.

    A vertex cannot lie in a non-trivial group of both kinds (equal open
    neighbourhoods force non-adjacency, equal closed ones force adjacency),
    so the two groupings merge into one partition.  Classes are sorted by
    smallest member; singletons carry no kind tag.
    """
    open_groups: dict[tuple, list[int]] = {}
    closed_groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        nbrs = g.adj[v]
        open_groups.setdefault(nbrs, []).append(v)
        closed_groups.setdefault(tuple(sorted(nbrs + (v,))), []).append(v)

    classes = []
    grouped = set()
    for members in open_groups.values():
        if len(members) > 1:
            classes.append(TupletClass(tuple(members), "independent"))
            grouped.update(members)
    for members in closed_groups.values():
        if len(members) > 1:
            if any(v in grouped for v in members):
                raise AssertionError("vertex in two non-trivial twin classes")
            classes.append(TupletClass(tuple(members), "clique"))
            grouped.update(members)
    for v in range(g.n):
        if v not in grouped:
            classes.append(TupletClass((v,), None))
    classes.sort(key=lambda c: c.members[0])
    max_size = max(len(c.members) for c in classes)
    return TupletClasses(tuple(classes), max_size)


def idi_lower_bound(g: Graph) -> int:
    """Largest twin class size (at least 1)."""
    return max(tuplet_classes(g).max_size, 1)


@dataclass(frozen=True)
class DistanceProfile:
    """Per-distance vertex counts shared by all vertices, when they exist.

    ``counts[i-1]`` is the number of vertices every vertex sees at distance
    ``i``; ``counts`` is None when the counts differ between vertices.
    """

    counts: tuple[int, ...] | None

    @property
    def present(self) -> bool:
        return self.counts is not None


def distance_profile(dm: DistanceMatrix) -> DistanceProfile:
    n = len(dm.dist)
    d = dm.diameter
    shared = None
    for v in range(n):
        row = [0] * d
        for w in range(n):
            i = dm.dist[v][w]
            if i > 0:
                row[i - 1] += 1
        row = tuple(row)
        if shared is None:
            shared = row
        elif shared != row:
            return DistanceProfile(None)
    return DistanceProfile(shared)


def multipartite_binomial_bound(multiplicities: dict[int, int]) -> int:
    """Least k admitting enough distinct rank multisets per part size.

    ``multiplicities`` maps a part size ``i`` to how many parts of that size
    the complete multipartite graph has.  Parts of equal size are twins as
    blocks: each needs its own size-``i`` subset of the k rank values, so k
    must satisfy C(k, i) >= multiplicity for every size ``i``, and k can
    never be smaller than the largest part.
    """
    if not multiplicities:
        raise InvalidMultiplicitiesError("no parts given")
    total_parts = 0
    for size, count in multiplicities.items():
        if not isinstance(size, int) or isinstance(size, bool) or size < 1:
            raise InvalidMultiplicitiesError(f"part size {size!r} must be >= 1")
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise InvalidMultiplicitiesError(f"count for size {size} must be >= 0")
        total_parts += count
    if total_parts < 2:
        raise InvalidMultiplicitiesError("need at least two parts in total")
    active = {s: c for s, c in multiplicities.items() if c >= 1}
    k = max(active)
    while any(math.comb(k, size) < count for size, count in active.items()):
        k += 1
    return k
