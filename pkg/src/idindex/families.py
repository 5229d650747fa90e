"""Named graph families with stable vertex numbering.

Every generator fixes a canonical layout so that solver output, closed-form
rank constructions and tests all agree on which vertex is which:

* paths/cycles: vertices in walk order;
* complete multipartite: parts occupy consecutive id blocks, in given order;
* caterpillars: spine first (in path order), then leaves grouped by spine
  vertex, ascending;
* Cartesian products: pair ``(g, h)`` gets id ``h * |G| + g``; grids are
  ``path(m) x path(n)`` and prisms are ``cycle(n) x path(2)`` built through
  the same product routine.

Alongside the graph, ``generate`` returns a :class:`VertexLayout` tagging
each vertex with its structural role, so downstream code never has to
re-derive the numbering conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, build_graph


class InvalidSpecError(Exception):
    """Malformed or out-of-domain family description."""


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters.

    ``params`` holds integers, except for ``product`` where it holds the two
    factor specs.  Instances render back to the CLI grammar via ``label``.
    """

    kind: str
    params: tuple = ()

    def label(self) -> str:
        if self.kind == "petersen":
            return "petersen"
        if self.kind == "grid":
            return "grid:{}x{}".format(*self.params)
        if self.kind == "product":
            a, b = self.params
            return f"product:({a.label()})x({b.label()})"
        return self.kind + ":" + ",".join(str(p) for p in self.params)


@dataclass(frozen=True)
class VertexLayout:
    """Structural role tag for each vertex, indexed by vertex id."""

    roles: tuple[tuple, ...]

    def vertices_with(self, tag: str):
        """Ids of all vertices whose role starts with ``tag``, ascending."""
        return [v for v, role in enumerate(self.roles) if role[0] == tag]


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the ``kind:params`` grammar used on the command line.

    Examples: ``path:7``, ``grid:3x4``, ``multipartite:1,2,3``,
    ``caterpillar:2,4,2,2,4,2``, ``petersen``,
    ``product:(cycle:5)x(path:2)``.
    """
    text = text.strip()
    if not text:
        raise InvalidSpecError("empty family spec")
    kind, sep, rest = text.partition(":")
    kind = kind.strip()
    if kind == "petersen":
        if sep:
            raise InvalidSpecError("petersen takes no parameters")
        return _validated(FamilySpec("petersen"))
    if not sep or not rest:
        raise InvalidSpecError(f"missing parameters in {text!r}")
    if kind == "product":
        return _validated(FamilySpec("product", _parse_factors(rest)))
    if kind == "grid":
        dims = rest.split("x")
        if len(dims) != 2:
            raise InvalidSpecError(f"grid wants MxN, got {rest!r}")
        return _validated(FamilySpec("grid", _int_tuple(dims, text)))
    return _validated(FamilySpec(kind, _int_tuple(rest.split(","), text)))


def _int_tuple(parts, context):
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidSpecError(f"non-integer parameter in {context!r}") from None


def _parse_factors(rest: str):
    # grammar: (A)x(B) with A, B themselves family specs, possibly nested
    if not rest.startswith("("):
        raise InvalidSpecError(f"product wants (A)x(B), got {rest!r}")
    depth = 0
    split_at = None
    for i, ch in enumerate(rest):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidSpecError(f"unbalanced parentheses in {rest!r}")
            if depth == 0 and split_at is None:
                split_at = i
                break
    if split_at is None or split_at + 1 >= len(rest) or rest[split_at + 1] != "x":
        raise InvalidSpecError(f"product wants (A)x(B), got {rest!r}")
    left = rest[1:split_at]
    right = rest[split_at + 2 :]
    if not (right.startswith("(") and right.endswith(")")):
        raise InvalidSpecError(f"product wants (A)x(B), got {rest!r}")
    return (parse_family_spec(left), parse_family_spec(right[1:-1]))


_KINDS = {
    "path",
    "cycle",
    "complete",
    "multipartite",
    "grid",
    "prism",
    "petersen",
    "caterpillar",
    "product",
}


def _validated(spec: FamilySpec) -> FamilySpec:
    kind, p = spec.kind, spec.params
    if kind not in _KINDS:
        raise InvalidSpecError(f"unknown family kind {kind!r}")
    if kind in ("path", "cycle", "complete", "prism"):
        if len(p) != 1:
            raise InvalidSpecError(f"{kind} takes exactly one parameter")
        n = p[0]
        if kind in ("path", "complete") and n < 1:
            raise InvalidSpecError(f"{kind} needs n >= 1")
        if kind in ("cycle", "prism") and n < 3:
            raise InvalidSpecError(f"{kind} needs n >= 3")
    elif kind == "multipartite":
        if len(p) < 2:
            raise InvalidSpecError("multipartite needs at least two parts")
        if any(m < 1 for m in p):
            raise InvalidSpecError("multipartite part sizes must be >= 1")
    elif kind == "grid":
        if len(p) != 2 or p[0] < 1 or p[1] < 1:
            raise InvalidSpecError("grid needs two sides >= 1")
    elif kind == "caterpillar":
        if len(p) < 1:
            raise InvalidSpecError("caterpillar needs at least one spine vertex")
        if any(c < 0 for c in p):
            raise InvalidSpecError("leaf counts must be >= 0")
        if p[0] < 1 or p[-1] < 1:
            raise InvalidSpecError("first and last spine vertices need a leaf")
    elif kind == "product":
        if len(p) != 2 or not all(isinstance(f, FamilySpec) for f in p):
            raise InvalidSpecError("product needs two factor specs")
        _validated(p[0])
        _validated(p[1])
    return spec


def generate(spec: FamilySpec) -> tuple[Graph, VertexLayout]:
    """Build the graph and per-vertex role tags for a validated spec."""
    _validated(spec)
    return _GENERATORS[spec.kind](spec)


def _path(spec):
    (n,) = spec.params
    g = build_graph(n, [(i, i + 1) for i in range(n - 1)])
    return g, VertexLayout(tuple(("path", i) for i in range(n)))


def _cycle(spec):
    (n,) = spec.params
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    return g, VertexLayout(tuple(("cycle", i) for i in range(n)))


def _complete(spec):
    (n,) = spec.params
    g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return g, VertexLayout(tuple(("complete", i) for i in range(n)))


def _multipartite(spec):
    sizes = spec.params
    n = sum(sizes)
    offsets = []
    start = 0
    roles = []
    for p, m in enumerate(sizes):
        offsets.append(start)
        roles.extend(("part", p, j) for j in range(m))
        start += m
    edges = []
    for p in range(len(sizes)):
        for q in range(p + 1, len(sizes)):
            for u in range(offsets[p], offsets[p] + sizes[p]):
                for v in range(offsets[q], offsets[q] + sizes[q]):
                    edges.append((u, v))
    return build_graph(n, edges), VertexLayout(tuple(roles))


def _product_edges(ga: Graph, gb: Graph):
    # (g, h) -> h * |G| + g
    edges = []
    na = ga.n
    for h in range(gb.n):
        base = h * na
        for u, v in ga.edges():
            edges.append((base + u, base + v))
    for u, v in gb.edges():
        for gvert in range(na):
            edges.append((u * na + gvert, v * na + gvert))
    return edges


def _product(spec):
    sa, sb = spec.params
    ga, la = generate(sa)
    gb, lb = generate(sb)
    g = build_graph(ga.n * gb.n, _product_edges(ga, gb))
    roles = []
    for h in range(gb.n):
        for gvert in range(ga.n):
            roles.append(("product", la.roles[gvert], lb.roles[h]))
    return g, VertexLayout(tuple(roles))


def _grid(spec):
    m, n = spec.params
    ga, _ = generate(FamilySpec("path", (m,)))
    gb, _ = generate(FamilySpec("path", (n,)))
    g = build_graph(m * n, _product_edges(ga, gb))
    roles = tuple(("grid", v % m, v // m) for v in range(m * n))
    return g, VertexLayout(roles)


def _prism(spec):
    (n,) = spec.params
    ga, _ = generate(FamilySpec("cycle", (n,)))
    gb, _ = generate(FamilySpec("path", (2,)))
    g = build_graph(2 * n, _product_edges(ga, gb))
    roles = tuple(("prism", v % n, v // n) for v in range(2 * n))
    return g, VertexLayout(roles)


def _petersen(spec):
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer 5-cycle
        edges.append((i, i + 5))              # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    roles = tuple(("outer", i) for i in range(5)) + tuple(
        ("inner", i) for i in range(5)
    )
    return build_graph(10, edges), VertexLayout(roles)


def _caterpillar(spec):
    counts = spec.params
    n_spine = len(counts)
    edges = [(i, i + 1) for i in range(n_spine - 1)]
    roles = [("spine", i) for i in range(n_spine)]
    nxt = n_spine
    for i, li in enumerate(counts):
        for j in range(li):
            edges.append((i, nxt))
            roles.append(("leaf", i, j))
            nxt += 1
    return build_graph(nxt, edges), VertexLayout(tuple(roles))


_GENERATORS = {
    "path": _path,
    "cycle": _cycle,
    "complete": _complete,
    "multipartite": _multipartite,
    "grid": _grid,
    "prism": _prism,
    "petersen": _petersen,
    "caterpillar": _caterpillar,
    "product": _product,
}
