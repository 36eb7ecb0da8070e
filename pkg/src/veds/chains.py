"""Chain decomposition of a connected convex bipartite graph.

The decomposition repeatedly peels a chain subgraph off the front of the
ordering: take the first remaining Y-position, its neighbourhood, and the
neighbourhood of its farthest-reaching neighbour; remove them; collect the
X vertices stranded (isolated) by the removal; repeat.  When the remainder is
itself a chain graph it is emitted whole as the final chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .graph import BipartiteGraph, VertexRef, connected_components, xref, yref
from .ordering import LexConvexOrdering, ensure_valid_lex_ordering

__all__ = [
    "ChainDecomposition",
    "ClauseCheck",
    "DecompositionLemmaReport",
    "decompose",
    "is_chain_graph",
    "verify_decomposition_lemma",
]


@dataclass(frozen=True)
class ChainDecomposition:
    """Alternating sequence of chain subgraphs and stranded X-vertex sets.

    ``chains[i]`` is the (X, Y) vertex pair of the i-th chain (original
    indices); ``isolated_sets[i]`` holds the X vertices stranded right after
    it (possibly empty, always the same length as ``chains``).
    ``tail_isolated`` collects vertices left untouched at the end; it stays
    empty for connected inputs and exists to flag degenerate cases.  The
    ordering the decomposition was computed under is kept for verification.
    """

    chains: tuple[tuple[frozenset[int], frozenset[int]], ...]
    isolated_sets: tuple[frozenset[int], ...]
    tail_isolated: frozenset[VertexRef]
    ordering: LexConvexOrdering

    def vertex_partition(self) -> list[frozenset[VertexRef]]:
        parts: list[frozenset[VertexRef]] = []
        for (hx, hy), js in zip(self.chains, self.isolated_sets):
            parts.append(frozenset(xref(i) for i in hx) | frozenset(yref(j) for j in hy))
            parts.append(frozenset(xref(i) for i in js))
        parts.append(self.tail_isolated)
        return parts


def _clip(left: int, start: int) -> int:
    return left if left > start else start


def _nested(entries: list[tuple[int, int, int]], start: int) -> bool:
    """True when the clipped intervals form a chain under containment."""
    seq = sorted(entries, key=lambda e: (_clip(e[0], start), -e[1]))
    return all(seq[k][1] >= seq[k + 1][1] for k in range(len(seq) - 1))


def decompose(g: BipartiteGraph, ordering: LexConvexOrdering) -> ChainDecomposition:
    """Peel chains off a connected convex bipartite graph.

    All reasoning happens on ordering positions; the reported sets carry
    original vertex indices.  The X ordering is re-derived per stage because
    truncating Y can break the lexicographic condition of the inherited one.
    """
    ensure_valid_lex_ordering(g, ordering)
    if len(connected_components(g)) > 1:
        raise ContractError("decompose requires a connected graph; split components first")

    ypos = {j: p for p, j in enumerate(ordering.yperm, start=1)}
    entries: list[tuple[int, int, int]] = []  # (left, right, x-index), positions
    for i in range(1, g.n1 + 1):
        nb = g.neighbors_x(i)
        if nb:
            ps = [ypos[j] for j in nb]
            entries.append((min(ps), max(ps), i))

    chains: list[tuple[frozenset[int], frozenset[int]]] = []
    strands: list[frozenset[int]] = []
    tail: set[VertexRef] = set()
    if not entries:
        # No edges: a connected graph this small is a single vertex.
        tail.update(xref(i) for i in range(1, g.n1 + 1))
        tail.update(yref(j) for j in range(1, g.n2 + 1))
        return ChainDecomposition((), (), frozenset(tail), ordering)

    def y_original(position: int) -> int:
        return ordering.yperm[position - 1]

    start = 1
    remaining = entries
    while remaining:
        remaining.sort(key=lambda e: (_clip(e[0], start), e[1], e[2]))
        lowest = _clip(remaining[0][0], start)
        if lowest > start:
            # Stranded Y positions: impossible for connected inputs, flagged
            # rather than guessed when they do appear.
            tail.update(yref(y_original(p)) for p in range(start, lowest))
            start = lowest
        k = 1
        while k < len(remaining) and remaining[k][0] <= start:
            k += 1
        front = remaining[:k]
        pivot = front[-1]
        reach = pivot[1]
        rest = remaining[k:]
        stranded = [e for e in rest if e[1] <= reach]
        future = [e for e in rest if e[1] > reach]
        y_block = frozenset(y_original(p) for p in range(start, reach + 1))
        whole_is_chain = (
            not future
            and stranded
            and _nested(stranded, start)
            and max(e[1] for e in stranded) <= min(e[1] for e in front)
        )
        if whole_is_chain:
            chains.append((frozenset(e[2] for e in front + stranded), y_block))
            strands.append(frozenset())
        else:
            chains.append((frozenset(e[2] for e in front), y_block))
            strands.append(frozenset(e[2] for e in stranded))
        remaining = future
        start = reach + 1
    if start <= g.n2:
        tail.update(yref(y_original(p)) for p in range(start, g.n2 + 1))
    return ChainDecomposition(tuple(chains), tuple(strands), frozenset(tail), ordering)


def is_chain_graph(g: BipartiteGraph) -> bool:
    """True iff the X-neighbourhoods are totally ordered by inclusion."""
    hoods = sorted(
        (frozenset(g.neighbors_x(i)) for i in range(1, g.n1 + 1)),
        key=lambda s: -len(s),
    )
    return all(b <= a for a, b in zip(hoods, hoods[1:]))


@dataclass(frozen=True)
class ClauseCheck:
    chain_index: int  # 1-based
    clause: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class DecompositionLemmaReport:
    checks: tuple[ClauseCheck, ...]
    tail_flagged: bool

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_decomposition_lemma(
    g: BipartiteGraph, decomp: ChainDecomposition
) -> DecompositionLemmaReport:
    """Structural checks on a decomposition, evaluated against g itself.

    Per chain i: (a) every stranded vertex of round i is adjacent to the Y
    side of chain i; (b) the last Y vertex of chain i has a neighbour inside
    chain i+1; (c) chain i has no adjacency into the strand of round i+1 nor
    into chain i+2.
    """
    _check_partition(g, decomp)
    ypos = {j: p for p, j in enumerate(decomp.ordering.yperm, start=1)}
    checks: list[ClauseCheck] = []
    chains = decomp.chains
    strands = decomp.isolated_sets
    for idx, ((hx, hy), js) in enumerate(zip(chains, strands), start=1):
        bad = sorted(v for v in js if not set(g.neighbors_x(v)) & hy)
        checks.append(
            ClauseCheck(
                idx,
                "strand-attached",
                not bad,
                "all stranded vertices touch the chain"
                if not bad
                else f"x{bad[0]} has no neighbour in the chain's Y side",
            )
        )
        if idx < len(chains):
            last_y = max(hy, key=lambda j: ypos[j])
            nxt_x = chains[idx][0]
            linked = sorted(set(g.neighbors_y(last_y)) & nxt_x)
            checks.append(
                ClauseCheck(
                    idx,
                    "next-chain-linked",
                    bool(linked),
                    f"y{last_y} reaches x{linked[0]} in chain {idx + 1}"
                    if linked
                    else f"y{last_y} has no neighbour in chain {idx + 1}",
                )
            )
        forward_strand = strands[idx] if idx < len(strands) else frozenset()
        forward_chain = chains[idx + 1] if idx + 1 < len(chains) else None
        leaks: list[str] = []
        for j in hy:
            hit = set(g.neighbors_y(j)) & forward_strand
            if hit:
                leaks.append(f"y{j}~x{min(hit)} (strand {idx + 1})")
        if forward_chain is not None:
            fx, fy = forward_chain
            for j in hy:
                hit = set(g.neighbors_y(j)) & fx
                if hit:
                    leaks.append(f"y{j}~x{min(hit)} (chain {idx + 2})")
            for i in hx:
                hit = set(g.neighbors_x(i)) & fy
                if hit:
                    leaks.append(f"x{i}~y{min(hit)} (chain {idx + 2})")
        checks.append(
            ClauseCheck(
                idx,
                "no-forward-reach",
                not leaks,
                "no adjacency past the next strand" if not leaks else "; ".join(sorted(leaks)),
            )
        )
    return DecompositionLemmaReport(tuple(checks), bool(decomp.tail_isolated))


def _check_partition(g: BipartiteGraph, decomp: ChainDecomposition) -> None:
    seen: set[VertexRef] = set()
    total = 0
    for part in decomp.vertex_partition():
        for v in part:
            limit = g.n1 if v.side == "x" else g.n2
            if not 1 <= v.index <= limit:
                raise ContractError(
                    f"decomposition mentions {v.name()}, which the graph lacks"
                )
        total += len(part)
        seen |= part
    if total != len(seen) or len(seen) != g.n:
        raise ContractError("decomposition does not partition the graph's vertices")
