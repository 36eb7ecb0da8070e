"""Exact and baseline solvers for minimum vertex-edge domination on convex
bipartite graphs.

The exact solver recurses on the ordering: either commit the
farthest-reaching neighbour of the first Y vertex (an X pivot) and continue
past everything it dominates, or commit a Y vertex that additionally covers
every stranded X vertex of the first peel (a Y blanket) and continue past its
reach; the smaller branch wins.  Universal vertices and edgeless remainders
terminate the recursion, disconnected remainders split and sum, and states
are memoised per component so the recursion stays polynomial.

The baseline solver picks one pivot per chain of the chain decomposition.
It always yields a valid VED-set but is not always minimum;
``counterexample_graph`` is a six-vertex instance where it returns two
vertices while the optimum is one.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Literal, NamedTuple

from .chains import ChainDecomposition
from .errors import ContractError, InputError
from .graph import (
    BipartiteGraph,
    SubgraphMaps,
    VertexRef,
    build_graph,
    connected_components,
    induced_subgraph,
    is_ve_dominating_set,
    xref,
    yref,
)
from .ordering import LexConvexOrdering, ensure_valid_lex_ordering

__all__ = [
    "FrontierIndices",
    "TraceStep",
    "SolveResult",
    "frontier_indices",
    "solve_exact",
    "solve_baseline",
    "reduce_to_suffix",
    "counterexample_graph",
]

Branch = Literal["x_pivot", "y_blanket"]


@dataclass(frozen=True)
class FrontierIndices:
    """Positions steering one recursion step, all relative to the ordering.

    first_x_reach        Y-position of the farthest neighbour of the first X vertex.
    pivot_x              X-position of the farthest neighbour of the first Y vertex.
    pivot_reach          Y-position of the farthest neighbour of that pivot.
    beyond_left_x        X-position of the nearest neighbour of the first Y vertex
                         past pivot_reach (absent when pivot_reach is the last).
    beyond_right_x       X-position of its farthest neighbour (same absence rule).
    blanket_y            largest Y-position up to first_x_reach whose vertex is
                         adjacent to every stranded vertex of the first peel
                         (equals first_x_reach when nothing is stranded; absent
                         when no position qualifies).
    blanket_reach_x      X-position of the farthest neighbour of the blanket.
    beyond_blanket_left_y  Y-position of the nearest neighbour of the X vertex
                         just past blanket_reach_x (absent at the boundary).
    """

    first_x_reach: int
    pivot_x: int
    pivot_reach: int
    beyond_left_x: int | None
    beyond_right_x: int | None
    blanket_y: int | None
    blanket_reach_x: int | None
    beyond_blanket_left_y: int | None


class TraceStep(NamedTuple):
    """One recursion decision: the subproblem's first retained vertices, the
    branch taken, and the vertex committed (when any)."""

    subproblem: tuple[str, str]
    branch: str
    chosen: str | None


@dataclass(frozen=True)
class SolveResult:
    gamma_ve: int
    witness: frozenset[VertexRef]
    trace: tuple[TraceStep, ...]


def counterexample_graph() -> BipartiteGraph:
    """Six-vertex convex graph on which the chain-pivot baseline returns a
    two-vertex set while a single vertex suffices."""
    return build_graph(3, 3, [(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)])


def _clip(left: int, start: int) -> int:
    return left if left > start else start


Entry = tuple[int, int, int]  # (left position, right position, x-index)


def _coverage_runs(entries: list[Entry], start: int) -> list[tuple[list[Entry], int, int]]:
    """Group clipped intervals into maximal overlap-connected runs.

    Entries must arrive sorted by (clipped left, right, index).  Two intervals
    land in the same run iff a chain of pairwise-overlapping intervals joins
    them, which for convex graphs is exactly connectivity; Y-positions not
    covered by any run are isolated.
    """
    runs: list[tuple[list[Entry], int, int]] = []
    members: list[Entry] = []
    lo = hi = 0
    for e in entries:
        cl = _clip(e[0], start)
        if members and cl <= hi:
            members.append(e)
            if e[1] > hi:
                hi = e[1]
        else:
            if members:
                runs.append((members, lo, hi))
            members, lo, hi = [e], cl, e[1]
    if members:
        runs.append((members, lo, hi))
    return runs


def _solve_component(
    entries: list[Entry],
    ylo: int,
    yhi: int,
    yname: Callable[[int], str],
    trace: list[TraceStep],
    memoize: bool,
) -> tuple[int, tuple[tuple[str, int], ...]]:
    """Count and witness for one connected piece, working purely on intervals.

    ``entries`` are sorted by (clipped left, right, index) with every interval
    inside [ylo, yhi] and every Y-position in range covered.  Witness entries
    come back as ("x", index) / ("y", position) pairs.

    Subproblems inside one component are always "keep intervals reaching past
    a Y threshold" (x-pivot step) or "keep intervals starting past a Y
    threshold" (y-blanket step); the pair of thresholds identifies the state,
    so memoisation keys on it.  Both steps advance the Y start strictly, which
    bounds the recursion.
    """
    memo: dict[tuple[int, int], tuple[int, tuple[tuple[str, int], ...]]] = {}

    def solve(xs: list[Entry], start: int, floor: int) -> tuple[int, tuple[tuple[str, int], ...]]:
        key = (floor, start)
        if memoize:
            hit = memo.get(key)
            if hit is not None:
                return hit
        res = evaluate(xs, start, floor)
        if memoize:
            memo[key] = res
        return res

    def evaluate(xs: list[Entry], start: int, floor: int) -> tuple[int, tuple[tuple[str, int], ...]]:
        if not xs:
            return 0, ()
        runs = _coverage_runs(xs, start)
        if len(runs) > 1 or runs[0][1] != start or runs[0][2] != yhi:
            total = 0
            picked: tuple[tuple[str, int], ...] = ()
            for members, lo, hi in runs:
                clipped = [(_clip(e[0], start), e[1], e[2]) for e in members]
                cnt, wit = _solve_component(clipped, lo, hi, yname, trace, memoize)
                total += cnt
                picked += wit
            trace.append(TraceStep((f"x{xs[0][2]}", yname(start)), "split", None))
            return total, picked

        label = (f"x{xs[0][2]}", yname(start))
        first_reach = xs[0][1]
        k = 1
        while k < len(xs) and xs[k][0] <= start:
            k += 1
        pivot = xs[k - 1]
        reach = pivot[1]
        if reach == yhi:
            # The pivot's interval spans the whole remaining Y side.
            trace.append(TraceStep(label, "universal", f"x{pivot[2]}"))
            return 1, (("x", pivot[2]),)
        max_left = _clip(xs[-1][0], start)
        min_right = min(e[1] for e in xs)
        if max_left <= min_right:
            trace.append(TraceStep(label, "universal", yname(max_left)))
            return 1, (("y", max_left),)

        stranded = [e for e in xs[k:] if e[1] <= reach]
        blanket: int | None
        if stranded:
            blanket = min(first_reach, min(e[1] for e in stranded))
            if blanket < max(e[0] for e in stranded):
                blanket = None
        else:
            blanket = first_reach

        after_reach = reach + 1
        kept = [e for e in xs if e[1] >= after_reach]
        kept.sort(key=lambda e: (_clip(e[0], after_reach), e[1], e[2]))
        cnt, wit = solve(kept, after_reach, floor)
        best_count = 1 + cnt
        best_wit = wit + (("x", pivot[2]),)
        best_branch = "x_pivot"
        best_chosen = f"x{pivot[2]}"
        if blanket is not None:
            last = -1
            for at, e in enumerate(xs):
                if _clip(e[0], start) <= blanket <= e[1]:
                    last = at
            after = xs[last + 1 :]
            if after:
                cnt2, wit2 = solve(after, _clip(after[0][0], start), blanket)
            else:
                cnt2, wit2 = 0, ()
            if 1 + cnt2 < best_count:
                best_count = 1 + cnt2
                best_wit = wit2 + (("y", blanket),)
                best_branch = "y_blanket"
                best_chosen = yname(blanket)
        trace.append(TraceStep(label, best_branch, best_chosen))
        return best_count, best_wit

    return solve(entries, ylo, ylo - 1)


def _interval_entries(g: BipartiteGraph, ordering: LexConvexOrdering) -> list[Entry]:
    ypos = {j: p for p, j in enumerate(ordering.yperm, start=1)}
    entries: list[Entry] = []
    for i in range(1, g.n1 + 1):
        nb = g.neighbors_x(i)
        if nb:
            ps = [ypos[j] for j in nb]
            entries.append((min(ps), max(ps), i))
    entries.sort()
    return entries


def solve_exact(
    g: BipartiteGraph, ordering: LexConvexOrdering, *, memoize: bool = True
) -> SolveResult:
    """Minimum VED-set of a convex bipartite graph under a declared ordering.

    Disconnected graphs split into components (the count is additive); the
    witness is verified against the edge-domination definition before return.
    """
    ensure_valid_lex_ordering(g, ordering)
    if g.m == 0:
        return SolveResult(0, frozenset(), ())
    entries = _interval_entries(g, ordering)

    def yname(position: int) -> str:
        return f"y{ordering.yperm[position - 1]}"

    needed = 4 * (g.n1 + g.n2) + 1000
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    trace: list[TraceStep] = []
    total = 0
    picked: list[tuple[str, int]] = []
    for members, lo, hi in _coverage_runs(entries, 1):
        cnt, wit = _solve_component(members, lo, hi, yname, trace, memoize)
        total += cnt
        picked.extend(wit)
    witness = frozenset(
        xref(idx) if side == "x" else yref(ordering.yperm[idx - 1])
        for side, idx in picked
    )
    assert len(witness) == total and is_ve_dominating_set(g, witness)
    return SolveResult(total, witness, tuple(trace))


def frontier_indices(
    g: BipartiteGraph, ordering: LexConvexOrdering, decomp: ChainDecomposition
) -> FrontierIndices:
    """Compute the positions steering the first recursion step of the exact
    solver, straight from their defining equalities."""
    if g.m == 0:
        raise ContractError("frontier indices are undefined for edgeless graphs")
    if len(connected_components(g)) > 1:
        raise ContractError("frontier indices require a connected graph")
    ensure_valid_lex_ordering(g, ordering)
    n1, n2 = g.n1, g.n2
    first_x_reach = ordering.right_x[0]
    pivot_x = ordering.right_y[0]
    assert first_x_reach is not None and pivot_x is not None
    pivot_reach = ordering.right_x[pivot_x - 1]
    assert pivot_reach is not None
    if pivot_reach < n2:
        beyond_left_x = ordering.left_y[pivot_reach]
        beyond_right_x = ordering.right_y[pivot_reach]
    else:
        beyond_left_x = beyond_right_x = None

    stranded = decomp.isolated_sets[0] if decomp.isolated_sets else frozenset()
    blanket_y: int | None
    if stranded:
        lefts = []
        rights = []
        for i in stranded:
            p = ordering.x_position(i)
            lefts.append(ordering.left_x[p - 1])
            rights.append(ordering.right_x[p - 1])
        blanket_y = min(first_x_reach, min(rights))
        if blanket_y < max(lefts):
            blanket_y = None
    else:
        blanket_y = first_x_reach

    blanket_reach_x: int | None = None
    beyond_blanket_left_y: int | None = None
    if blanket_y is not None:
        for p in range(1, n1 + 1):
            lo, hi = ordering.left_x[p - 1], ordering.right_x[p - 1]
            if lo is not None and lo <= blanket_y <= hi:
                blanket_reach_x = p
        assert blanket_reach_x is not None
        if blanket_reach_x < n1:
            beyond_blanket_left_y = ordering.left_x[blanket_reach_x]
    return FrontierIndices(
        first_x_reach=first_x_reach,
        pivot_x=pivot_x,
        pivot_reach=pivot_reach,
        beyond_left_x=beyond_left_x,
        beyond_right_x=beyond_right_x,
        blanket_y=blanket_y,
        blanket_reach_x=blanket_reach_x,
        beyond_blanket_left_y=beyond_blanket_left_y,
    )


def reduce_to_suffix(
    g: BipartiteGraph,
    ordering: LexConvexOrdering,
    fi: FrontierIndices,
    branch: Branch,
) -> tuple[BipartiteGraph, SubgraphMaps]:
    """Materialise the subproblem a branch recurses on, dropping vertices the
    truncation isolates.  Absent defining positions yield the empty
    subproblem rather than an error."""
    if branch == "x_pivot":
        if fi.beyond_left_x is None:
            return _empty_subproblem()
        x_from, y_from = fi.beyond_left_x, fi.pivot_reach + 1
    elif branch == "y_blanket":
        if (
            fi.blanket_y is None
            or fi.blanket_reach_x is None
            or fi.beyond_blanket_left_y is None
        ):
            return _empty_subproblem()
        x_from, y_from = fi.blanket_reach_x + 1, fi.beyond_blanket_left_y
    else:
        raise InputError(f"unknown branch {branch!r}")
    xs = [ordering.xperm[p - 1] for p in range(x_from, g.n1 + 1)]
    ys = [ordering.yperm[p - 1] for p in range(y_from, g.n2 + 1)]
    keep_y = set(ys)
    touched_x = [i for i in xs if any(j in keep_y for j in g.neighbors_x(i))]
    keep_x = set(touched_x)
    touched_y = [j for j in ys if any(i in keep_x for i in g.neighbors_y(j))]
    return induced_subgraph(g, touched_x, touched_y)


def _empty_subproblem() -> tuple[BipartiteGraph, SubgraphMaps]:
    return build_graph(0, 0, []), SubgraphMaps({}, (), {}, ())


def solve_baseline(
    g: BipartiteGraph, ordering: LexConvexOrdering, decomp: ChainDecomposition
) -> SolveResult:
    """One pivot per chain: the farthest-reaching neighbour of each chain's
    first Y vertex.

    The result is always a valid VED-set (verified here) but not always a
    minimum one; see ``counterexample_graph``.
    """
    if g.m == 0:
        raise ContractError("baseline requires at least one edge")
    if len(connected_components(g)) > 1:
        raise ContractError("baseline requires a connected graph; split components first")
    ypos = {j: p for p, j in enumerate(ordering.yperm, start=1)}
    reach: dict[int, int] = {}
    for i in range(1, g.n1 + 1):
        nb = g.neighbors_x(i)
        if nb:
            reach[i] = max(ypos[j] for j in nb)
    pivots: list[int] = []
    for hx, hy in decomp.chains:
        first_y = min(hy, key=ypos.__getitem__)
        candidates = [i for i in g.neighbors_y(first_y) if i in hx]
        pivots.append(max(candidates, key=lambda i: (reach[i], i)))
    witness = frozenset(xref(i) for i in pivots)
    assert is_ve_dominating_set(g, witness)
    return SolveResult(len(witness), witness, ())
