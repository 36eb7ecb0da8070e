"""Constructive reductions from set cover to vertex-edge domination on
star-convex and comb-convex bipartite graphs.

Both constructions attach one element vertex a_i per universe element and one
set vertex b_j per family member, wire memberships, give every a_i a private
pendant z_i, and add a hub gadget whose pendant edge forces the hub into any
normalised solution.  A cover of size t then corresponds exactly to a VED-set
of size t + 1, in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, NamedTuple

from .errors import ContractError, DomainError, InputError
from .graph import (
    BipartiteGraph,
    VertexRef,
    build_graph,
    is_ve_dominating_set,
    xref,
    yref,
)

__all__ = [
    "SetSystem",
    "TreeCertificate",
    "ReductionArtifact",
    "TreeConvexityCheck",
    "reduce_star_convex",
    "reduce_comb_convex",
    "cover_to_vedset",
    "vedset_to_cover",
    "verify_tree_convexity",
    "approx_set_cover",
]


@dataclass(frozen=True)
class SetSystem:
    """A universe 1..universe and a family of nonempty subsets of it."""

    universe: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.universe < 1:
            raise InputError(f"universe size must be at least 1, got {self.universe}")
        for k, s in enumerate(self.sets, start=1):
            if not s:
                raise InputError(f"set {k} is empty")
            for e in s:
                if not 1 <= e <= self.universe:
                    raise InputError(f"set {k} contains out-of-range element {e}")

    @property
    def q(self) -> int:
        return len(self.sets)

    def uncovered_elements(self) -> frozenset[int]:
        hit: set[int] = set()
        for s in self.sets:
            hit |= s
        return frozenset(range(1, self.universe + 1)) - hit

    def is_cover(self, indices: Iterable[int]) -> bool:
        chosen: set[int] = set()
        for k in indices:
            if not 1 <= k <= self.q:
                raise InputError(f"set index {k} out of range (q={self.q})")
            chosen |= self.sets[k - 1]
        return len(chosen) == self.universe


@dataclass(frozen=True)
class TreeCertificate:
    """Witness tree over the X side: a star (one centre) or a comb (a path
    backbone with exactly one pendant tooth per backbone vertex)."""

    kind: str  # "star" | "comb"
    edges: tuple[tuple[int, int], ...]
    center: int | None = None
    backbone: tuple[int, ...] = ()
    teeth: tuple[tuple[int, int], ...] = ()  # (backbone vertex, tooth) pairs


@dataclass(frozen=True)
class ReductionArtifact:
    """A reduced graph, its witness tree, the role of every vertex, and the
    set system it came from.  ``coverless`` flags systems whose universe is
    not fully covered by the family (the correspondence needs a cover)."""

    graph: BipartiteGraph
    certificate: TreeCertificate
    vertex_roles: tuple[tuple[str, VertexRef], ...]
    system: SetSystem
    kind: str
    coverless: bool

    def roles(self) -> dict[str, VertexRef]:
        return dict(self.vertex_roles)

    def role(self, name: str) -> VertexRef:
        for role, ref in self.vertex_roles:
            if role == name:
                return ref
        raise InputError(f"unknown role {name!r}")


def _require_family_fits(ss: SetSystem) -> None:
    if ss.q > ss.universe:
        raise ContractError(
            f"reduction requires the family to be no larger than the universe "
            f"(got {ss.q} sets over {ss.universe} elements)"
        )
    if ss.q < 1:
        raise ContractError("reduction requires at least one set")


def reduce_star_convex(ss: SetSystem) -> ReductionArtifact:
    """X = elements + hub u + pendant u'; Y = sets + privates + bridge v.

    Edges: memberships a_i~b_j, privates a_i~z_i, the hub path u~v~u', and
    u~b_j for every set.  The witness star is centred at u.
    """
    _require_family_fits(ss)
    p, q = ss.universe, ss.q
    u, uprime = p + 1, p + 2
    v = q + p + 1
    edges: list[tuple[int, int]] = []
    for j, members in enumerate(ss.sets, start=1):
        edges.extend((i, j) for i in sorted(members))
    edges.extend((i, q + i) for i in range(1, p + 1))
    edges.append((u, v))
    edges.append((uprime, v))
    edges.extend((u, j) for j in range(1, q + 1))
    graph = build_graph(p + 2, q + p + 1, edges)
    cert = TreeCertificate(
        kind="star",
        edges=tuple((u, t) for t in range(1, p + 1)) + ((u, uprime),),
        center=u,
    )
    roles: list[tuple[str, VertexRef]] = []
    roles.extend((f"a{i}", xref(i)) for i in range(1, p + 1))
    roles.append(("u", xref(u)))
    roles.append(("u'", xref(uprime)))
    roles.extend((f"b{j}", yref(j)) for j in range(1, q + 1))
    roles.extend((f"z{i}", yref(q + i)) for i in range(1, p + 1))
    roles.append(("v", yref(v)))
    return ReductionArtifact(
        graph=graph,
        certificate=cert,
        vertex_roles=tuple(roles),
        system=ss,
        kind="star",
        coverless=bool(ss.uncovered_elements()),
    )


def reduce_comb_convex(ss: SetSystem) -> ReductionArtifact:
    """X = elements + backbone r_1..r_{p+1} + pendant r'; Y = sets + privates
    + bridge w.

    Every set vertex sees the whole backbone; the hub path is
    r_{p+1}~w~r'.  The witness comb hangs a_i off r_i and r' off r_{p+1}.
    """
    _require_family_fits(ss)
    p, q = ss.universe, ss.q
    backbone = tuple(p + k for k in range(1, p + 2))  # r_1..r_{p+1}
    rprime = 2 * p + 2
    w = q + p + 1
    edges: list[tuple[int, int]] = []
    for j, members in enumerate(ss.sets, start=1):
        edges.extend((i, j) for i in sorted(members))
    edges.extend((i, q + i) for i in range(1, p + 1))
    edges.extend((r, j) for j in range(1, q + 1) for r in backbone)
    edges.append((backbone[-1], w))
    edges.append((rprime, w))
    graph = build_graph(2 * p + 2, q + p + 1, edges)
    cert_edges = tuple(zip(backbone, backbone[1:]))
    teeth = tuple((backbone[i - 1], i) for i in range(1, p + 1)) + ((backbone[-1], rprime),)
    cert = TreeCertificate(
        kind="comb",
        edges=cert_edges + tuple((r, t) for r, t in teeth),
        backbone=backbone,
        teeth=teeth,
    )
    roles: list[tuple[str, VertexRef]] = []
    roles.extend((f"a{i}", xref(i)) for i in range(1, p + 1))
    roles.extend((f"r{k}", xref(r)) for k, r in enumerate(backbone, start=1))
    roles.append((f"r'{p + 1}", xref(rprime)))
    roles.extend((f"b{j}", yref(j)) for j in range(1, q + 1))
    roles.extend((f"z{i}", yref(q + i)) for i in range(1, p + 1))
    roles.append(("w", yref(w)))
    return ReductionArtifact(
        graph=graph,
        certificate=cert,
        vertex_roles=tuple(roles),
        system=ss,
        kind="comb",
        coverless=bool(ss.uncovered_elements()),
    )


def _hub(art: ReductionArtifact) -> VertexRef:
    if art.kind == "star":
        return art.role("u")
    return art.role(f"r{art.system.universe + 1}")


def _hub_pendants(art: ReductionArtifact) -> set[VertexRef]:
    if art.kind == "star":
        return {art.role("v"), art.role("u'")}
    return {art.role("w"), art.role(f"r'{art.system.universe + 1}")}


def cover_to_vedset(art: ReductionArtifact, cover: Iterable[int]) -> frozenset[VertexRef]:
    """Map a cover to the VED-set {b_j : j in cover} plus the hub."""
    cover = sorted(set(cover))
    if not art.system.is_cover(cover):
        raise ContractError(f"indices {cover} do not cover the universe")
    d = frozenset(yref(j) for j in cover) | {_hub(art)}
    assert is_ve_dominating_set(art.graph, d)
    return d


def vedset_to_cover(art: ReductionArtifact, d: Iterable[VertexRef]) -> frozenset[int]:
    """Normalise a VED-set of a reduced graph down to the cover it encodes.

    Replacements, in fixed order: hub pendants collapse into the hub;
    non-hub backbone vertices drop (comb); each private z_i and each element
    a_i is dropped when a set-neighbour of a_i is already present, otherwise
    replaced by the lowest-index set containing element i.  What survives is
    set vertices plus the hub; the set indices are the cover.
    """
    d = set(d)
    art.graph.check_refs(d)
    if not is_ve_dominating_set(art.graph, d):
        raise ContractError("the given set is not a VED-set of the reduced graph")
    p, q = art.system.universe, art.system.q
    hub = _hub(art)
    pendants = _hub_pendants(art)
    if d & (pendants | {hub}):
        d -= pendants
        d.add(hub)
    if art.kind == "comb":
        d -= {xref(p + k) for k in range(1, p + 1)}

    def set_neighbours(element: int) -> list[int]:
        return [j for j, s in enumerate(art.system.sets, start=1) if element in s]

    def settle(element: int, member: VertexRef) -> None:
        if member not in d:
            return
        hoods = set_neighbours(element)
        if not any(yref(j) in d for j in hoods):
            if not hoods:
                raise DomainError(
                    f"element {element} belongs to no set; the system has no cover"
                )
            d.add(yref(hoods[0]))
        d.discard(member)

    for i in range(1, p + 1):
        settle(i, yref(q + i))  # private z_i
    for i in range(1, p + 1):
        settle(i, xref(i))  # element a_i
    assert d <= {hub} | {yref(j) for j in range(1, q + 1)}
    cover = frozenset(ref.index for ref in d if ref != hub)
    assert art.system.is_cover(cover)
    return cover


class TreeConvexityCheck(NamedTuple):
    ok: bool
    violator: int | None  # smallest offending y-index


def verify_tree_convexity(g: BipartiteGraph, cert: TreeCertificate) -> TreeConvexityCheck:
    """Check that every Y-neighbourhood induces a subtree of the certificate.

    The certificate must be a tree spanning exactly the X side; anything else
    is an input error.
    """
    adj: dict[int, set[int]] = {i: set() for i in range(1, g.n1 + 1)}
    for a, b in cert.edges:
        if not (1 <= a <= g.n1 and 1 <= b <= g.n1) or a == b:
            raise InputError(f"certificate edge ({a}, {b}) is not over the X side")
        adj[a].add(b)
        adj[b].add(a)
    if len(cert.edges) != max(g.n1 - 1, 0):
        raise InputError(
            f"certificate has {len(cert.edges)} edges; a tree on {g.n1} vertices needs {g.n1 - 1}"
        )
    if g.n1 > 0:
        seen = {1}
        stack = [1]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != g.n1:
            raise InputError("certificate edges do not form a spanning tree of X")
    for j in range(1, g.n2 + 1):
        hood = set(g.neighbors_y(j))
        if len(hood) <= 1:
            continue
        first = min(hood)
        seen = {first}
        stack = [first]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt in hood and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if seen != hood:
            return TreeConvexityCheck(False, j)
    return TreeConvexityCheck(True, None)


def approx_set_cover(
    ss: SetSystem,
    k: int,
    ved_solver: Callable[[BipartiteGraph], Iterable[VertexRef]],
) -> frozenset[int]:
    """Return a cover of size <= k when one exists (exhaustive search);
    otherwise reduce to the star-convex graph, run the supplied VED solver,
    and convert its output back into a cover."""
    if ss.uncovered_elements():
        raise DomainError("the system has no cover: some element lies in no set")
    for size in range(1, min(k, ss.q) + 1):
        for combo in combinations(range(1, ss.q + 1), size):
            if ss.is_cover(combo):
                return frozenset(combo)
    art = reduce_star_convex(ss)
    d = frozenset(ved_solver(art.graph))
    return vedset_to_cover(art, d)
