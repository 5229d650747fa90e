"""Closed-form rank assignments for the families that admit one.

Four construction routes, chosen by the family spec:

* complete multipartite with strictly increasing part sizes: part ``i``
  (size ``m_i``) gets ranks ``1..m_i``, using ``m_k`` distinct values;
* balanced complete bipartite on ``n + n``: one side gets ``1..n``, the
  other ``2..n+1``, using ``n + 1`` values;
* symmetric caterpillars (mirror-equal leaf counts): the first spine
  vertex gets 2, every other spine vertex 1, and the leaves hanging off
  spine vertex ``i`` get ``1..L_i``, using ``max(L, 2)`` values where
  ``L`` is the largest leaf count;
* everything else: the universal assignment, vertex ``j`` gets
  ``2^(j+1)``, using ``n`` values.

Each route is verified in tests to identify its graph with exactly the
expected number of distinct values.  ``expected_id_index`` returns that
number when a known closed form pins it down, and None otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from .families import FamilySpec, generate
from .strings_codes import NoRedVertexError, RankAssignment, RedWhiteColoring


class SpecMismatchError(Exception):
    """The family spec does not fit any closed-form construction route."""


class ZeroScaleError(Exception):
    """Affine rescaling must have a nonzero scale."""


class NotZeroOneError(Exception):
    """Ranks are not a 0/1 indicator, so they name no coloring."""


def construct_assignment(spec: FamilySpec) -> RankAssignment:
    """Closed-form assignment for ``spec``, on the canonical numbering."""
    if spec.kind == "multipartite":
        return _multipartite_ranks(spec)
    if spec.kind == "caterpillar":
        return _caterpillar_ranks(spec)
    return _universal_ranks(spec)


def _multipartite_ranks(spec):
    sizes = spec.params
    if len(sizes) == 2 and sizes[0] == sizes[1]:
        n = sizes[0]
        ranks = tuple(range(1, n + 1)) + tuple(range(2, n + 2))
        return RankAssignment(ranks)
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise SpecMismatchError(
            f"no closed form for part sizes {sizes}: need strictly increasing "
            "sizes or exactly two equal parts"
        )
    ranks = []
    for m in sizes:
        ranks.extend(range(1, m + 1))
    return RankAssignment(tuple(ranks))


def _caterpillar_ranks(spec):
    counts = spec.params
    n = len(counts)
    if any(counts[i] != counts[n - 1 - i] for i in range(n // 2)):
        raise SpecMismatchError(f"leaf counts {counts} are not mirror-symmetric")
    _, layout = generate(spec)
    ranks = []
    for role in layout.roles:
        if role[0] == "spine":
            ranks.append(2 if role[1] == 0 else 1)
        else:
            ranks.append(role[2] + 1)  # leaves of one spine vertex get 1..L_i
    return RankAssignment(tuple(ranks))


def universal_assignment(n: int) -> RankAssignment:
    """Powers-of-two ranks: vertex ``j`` gets ``2^(j+1)``.

    Works on any graph, family member or not, at the cost of using ``n``
    distinct values: each distance coordinate is a sum of distinct powers
    of two, so equal strings would force equal distance sets, and no two
    vertices see the same vertices at every distance (they disagree about
    each other already).
    """
    return RankAssignment(tuple(2 ** (j + 1) for j in range(n)))


def _universal_ranks(spec):
    g, _ = generate(spec)
    return universal_assignment(g.n)


def affine_transform(f: RankAssignment, scale: int, offset: int) -> RankAssignment:
    """Replace each rank r by ``scale * r + offset``; scale must be nonzero.

    On graphs where every vertex sees the same number of vertices at each
    distance, this preserves whether the assignment identifies.
    """
    if scale == 0:
        raise ZeroScaleError("scale 0 collapses all ranks")
    return RankAssignment(tuple(scale * r + offset for r in f.ranks))


def normalize_two_valued(f: RankAssignment) -> RankAssignment:
    """Map a two-valued assignment onto 0/1, low value to 0.

    Solves ``scale * r + offset`` over the rationals for the unique affine
    map sending the two values to 0 and 1 (the map's scale is nonzero, so
    on distance-regular-count graphs identification is preserved).
    """
    values = sorted(set(f.ranks))
    if len(values) != 2:
        raise ValueError(f"expected exactly 2 distinct ranks, got {len(values)}")
    r1, r2 = values
    scale = Fraction(1, r2 - r1)
    offset = -scale * r1
    out = [scale * r + offset for r in f.ranks]
    assert all(x.denominator == 1 for x in out)
    return RankAssignment(tuple(int(x) for x in out))


def coloring_to_ranks(c: RedWhiteColoring) -> RankAssignment:
    """The 0/1 indicator assignment of a coloring's red set."""
    if not c.red:
        raise NoRedVertexError("coloring has no red vertex")
    return c.indicator()


def ranks_to_coloring(f: RankAssignment) -> RedWhiteColoring:
    """Read a 0/1 assignment back as a coloring (red = rank 1)."""
    if any(r not in (0, 1) for r in f.ranks):
        raise NotZeroOneError(f"ranks {sorted(set(f.ranks))} are not all 0/1")
    red = frozenset(v for v, r in enumerate(f.ranks) if r == 1)
    if not red:
        raise NoRedVertexError("all ranks are 0")
    return RedWhiteColoring(len(f.ranks), red)


def expected_id_index(spec: FamilySpec) -> int | None:
    """Known exact value for ``spec``, or None when no closed form covers it.

    Single-vertex cases (path:1, complete:1, grid:1x1) return None: the
    solvers handle them by convention, but no family formula claims them.
    """
    kind, p = spec.kind, spec.params
    if kind == "path":
        return 2 if p[0] >= 2 else None
    if kind == "cycle":
        return 3 if p[0] <= 5 else 2
    if kind == "complete":
        return p[0] if p[0] >= 2 else None
    if kind == "multipartite":
        sizes = p
        if len(sizes) == 2:
            m, n = sizes
            if m == n:
                return n + 1
            if m < n:
                return n
            return None
        if all(a < b for a, b in zip(sizes, sizes[1:])):
            return sizes[-1]
        return None
    if kind == "grid":
        m, n = p
        if m * n == 1:
            return None
        return 3 if (m, n) == (2, 2) else 2
    if kind == "prism":
        return 3 if p[0] <= 5 else 2
    if kind == "petersen":
        return 3
    if kind == "caterpillar":
        n = len(p)
        if any(p[i] != p[n - 1 - i] for i in range(n // 2)):
            return None
        return max(max(p), 2)
    return None
