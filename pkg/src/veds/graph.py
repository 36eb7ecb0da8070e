"""Bipartite graph container, induced subgraphs, connectivity, and the
vertex-edge domination verifier.

Vertices are addressed 1-based on each side: ``x1..x{n1}`` and ``y1..y{n2}``.
A vertex w ve-dominates an edge uv when w lies in the closed neighbourhood of
u or of v; a set D is a vertex-edge dominating set (VED-set) when every edge
is ve-dominated by some member of D.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError

__all__ = [
    "VertexRef",
    "xref",
    "yref",
    "parse_vertex_name",
    "BipartiteGraph",
    "SubgraphMaps",
    "build_graph",
    "is_ve_dominating_set",
    "first_undominated_edge",
    "induced_subgraph",
    "connected_components",
]


class VertexRef(NamedTuple):
    """A vertex of a bipartite graph: side ``"x"`` or ``"y"`` plus 1-based index."""

    side: str
    index: int

    def name(self) -> str:
        return f"{self.side}{self.index}"


def xref(i: int) -> VertexRef:
    return VertexRef("x", i)


def yref(j: int) -> VertexRef:
    return VertexRef("y", j)


def parse_vertex_name(text: str) -> VertexRef:
    """Parse ``"x3"`` / ``"y12"`` into a VertexRef."""
    text = text.strip()
    if len(text) < 2 or text[0] not in ("x", "y") or not text[1:].isdigit():
        raise InputError(f"invalid vertex name {text!r}: expected x<i> or y<j>")
    index = int(text[1:])
    if index < 1:
        raise InputError(f"invalid vertex name {text!r}: indices are 1-based")
    return VertexRef(text[0], index)


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph with adjacency stored sorted on both sides.

    ``adj_x[i - 1]`` is the ascending tuple of Y-indices adjacent to ``x_i``;
    ``adj_y`` mirrors it.  The two maps are mutually consistent by
    construction, so bipartiteness always holds and parallel edges or loops
    cannot be expressed.
    """

    n1: int
    n2: int
    adj_x: tuple[tuple[int, ...], ...]
    adj_y: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj_x)

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def neighbors_x(self, i: int) -> tuple[int, ...]:
        return self.adj_x[i - 1]

    def neighbors_y(self, j: int) -> tuple[int, ...]:
        return self.adj_y[j - 1]

    def has_edge(self, i: int, j: int) -> bool:
        nb = self.adj_x[i - 1]
        k = bisect_left(nb, j)
        return k < len(nb) and nb[k] == j

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (x-index, y-index) in ascending order."""
        for i, nb in enumerate(self.adj_x, start=1):
            for j in nb:
                yield (i, j)

    def degree(self, v: VertexRef) -> int:
        if v.side == "x":
            return len(self.adj_x[v.index - 1])
        return len(self.adj_y[v.index - 1])

    def vertices(self) -> Iterator[VertexRef]:
        for i in range(1, self.n1 + 1):
            yield xref(i)
        for j in range(1, self.n2 + 1):
            yield yref(j)

    def check_refs(self, refs: Iterable[VertexRef]) -> None:
        """Raise InputError if any reference falls outside this graph."""
        for v in refs:
            if v.side == "x":
                if not 1 <= v.index <= self.n1:
                    raise InputError(f"vertex {v.name()} out of range (n1={self.n1})")
            elif v.side == "y":
                if not 1 <= v.index <= self.n2:
                    raise InputError(f"vertex {v.name()} out of range (n2={self.n2})")
            else:
                raise InputError(f"invalid vertex side {v.side!r}")


def build_graph(n1: int, n2: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a graph from (x-index, y-index) pairs; duplicates collapse.

    Raises InputError naming the offending pair when an index is out of range.
    """
    if n1 < 0 or n2 < 0:
        raise InputError(f"side sizes must be nonnegative, got n1={n1}, n2={n2}")
    sets_x: list[set[int]] = [set() for _ in range(n1)]
    sets_y: list[set[int]] = [set() for _ in range(n2)]
    for i, j in edges:
        if not (1 <= i <= n1 and 1 <= j <= n2):
            raise InputError(f"edge ({i}, {j}) out of range for n1={n1}, n2={n2}")
        sets_x[i - 1].add(j)
        sets_y[j - 1].add(i)
    return BipartiteGraph(
        n1=n1,
        n2=n2,
        adj_x=tuple(tuple(sorted(s)) for s in sets_x),
        adj_y=tuple(tuple(sorted(s)) for s in sets_y),
    )


def _coverage(g: BipartiteGraph, d: Iterable[VertexRef]) -> tuple[list[bool], list[bool]]:
    """covered_x[i-1] is true when x_i or a neighbour of x_i lies in d."""
    in_x = [False] * g.n1
    in_y = [False] * g.n2
    for v in d:
        if v.side == "x":
            in_x[v.index - 1] = True
        else:
            in_y[v.index - 1] = True
    covered_x = [in_x[i] or any(in_y[j - 1] for j in g.adj_x[i]) for i in range(g.n1)]
    covered_y = [in_y[j] or any(in_x[i - 1] for i in g.adj_y[j]) for j in range(g.n2)]
    return covered_x, covered_y


def first_undominated_edge(g: BipartiteGraph, d: Iterable[VertexRef]) -> tuple[int, int] | None:
    """Return the smallest edge not ve-dominated by d, or None when d is a VED-set."""
    d = set(d)
    g.check_refs(d)
    covered_x, covered_y = _coverage(g, d)
    for i, j in g.edges():
        if not (covered_x[i - 1] or covered_y[j - 1]):
            return (i, j)
    return None


def is_ve_dominating_set(g: BipartiteGraph, d: Iterable[VertexRef]) -> bool:
    """True iff every edge uv of g has a vertex of d within N[u] or N[v].

    Runs in O(n + m) via one coverage pass over both sides.
    """
    return first_undominated_edge(g, d) is None


class SubgraphMaps(NamedTuple):
    """Index translations between a graph and one of its induced subgraphs."""

    x_to_sub: dict[int, int]
    x_from_sub: tuple[int, ...]
    y_to_sub: dict[int, int]
    y_from_sub: tuple[int, ...]

    def lift(self, v: VertexRef) -> VertexRef:
        """Translate a subgraph vertex back to the parent graph."""
        if v.side == "x":
            return xref(self.x_from_sub[v.index - 1])
        return yref(self.y_from_sub[v.index - 1])

    def lift_set(self, refs: Iterable[VertexRef]) -> frozenset[VertexRef]:
        return frozenset(self.lift(v) for v in refs)

    def push(self, v: VertexRef) -> VertexRef | None:
        """Translate a parent-graph vertex into the subgraph, if retained."""
        table = self.x_to_sub if v.side == "x" else self.y_to_sub
        sub = table.get(v.index)
        if sub is None:
            return None
        return VertexRef(v.side, sub)


def induced_subgraph(
    g: BipartiteGraph, xs: Iterable[int], ys: Iterable[int]
) -> tuple[BipartiteGraph, SubgraphMaps]:
    """Induce on the given vertex sets, renumbering 1..|xs|, 1..|ys| in
    ascending original order, and return the graph plus translation maps."""
    xs = sorted(set(xs))
    ys = sorted(set(ys))
    for i in xs:
        if not 1 <= i <= g.n1:
            raise InputError(f"x-index {i} out of range (n1={g.n1})")
    for j in ys:
        if not 1 <= j <= g.n2:
            raise InputError(f"y-index {j} out of range (n2={g.n2})")
    x_to_sub = {orig: k + 1 for k, orig in enumerate(xs)}
    y_to_sub = {orig: k + 1 for k, orig in enumerate(ys)}
    edges = [
        (x_to_sub[i], y_to_sub[j])
        for i in xs
        for j in g.neighbors_x(i)
        if j in y_to_sub
    ]
    sub = build_graph(len(xs), len(ys), edges)
    maps = SubgraphMaps(x_to_sub, tuple(xs), y_to_sub, tuple(ys))
    return sub, maps


def connected_components(g: BipartiteGraph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Partition vertices into components as (x-indices, y-indices) pairs.

    Isolated vertices appear as singleton components.  Order is deterministic:
    by smallest contained index, X-anchored components before Y-only ones.
    """
    seen_x = [False] * g.n1
    seen_y = [False] * g.n2
    comps: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def sweep(start: VertexRef) -> tuple[tuple[int, ...], tuple[int, ...]]:
        xs: list[int] = []
        ys: list[int] = []
        stack = [start]
        while stack:
            v = stack.pop()
            if v.side == "x":
                if seen_x[v.index - 1]:
                    continue
                seen_x[v.index - 1] = True
                xs.append(v.index)
                stack.extend(yref(j) for j in g.neighbors_x(v.index))
            else:
                if seen_y[v.index - 1]:
                    continue
                seen_y[v.index - 1] = True
                ys.append(v.index)
                stack.extend(xref(i) for i in g.neighbors_y(v.index))
        return tuple(sorted(xs)), tuple(sorted(ys))

    for i in range(1, g.n1 + 1):
        if not seen_x[i - 1]:
            comps.append(sweep(xref(i)))
    for j in range(1, g.n2 + 1):
        if not seen_y[j - 1]:
            comps.append(sweep(yref(j)))
    return comps
