"""Convex orderings of Y, lexicographic orderings of X, and per-vertex
interval endpoints.

A permutation of Y is convex when every X-neighbourhood occupies a contiguous
block of positions under it.  Given a convex ordering, X is re-ordered
lexicographically by (leftmost position, rightmost position) of its interval;
the combined structure is what the solver and decomposition consume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import NamedTuple, Sequence

from .errors import CapacityError, InputError
from .graph import BipartiteGraph

__all__ = [
    "ConvexityCheck",
    "LexConvexOrdering",
    "validate_convex_ordering",
    "compute_lex_convex_ordering",
    "find_convex_ordering_exhaustive",
    "ensure_valid_lex_ordering",
    "identity_permutation",
]

EXHAUSTIVE_Y_LIMIT = 10


class ConvexityCheck(NamedTuple):
    """Outcome of a convexity validation: on failure, the smallest violating
    x-index and the first gap position inside its would-be interval."""

    ok: bool
    violator: int | None
    gap_position: int | None


def identity_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _check_permutation(perm: Sequence[int], n: int, label: str) -> None:
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise InputError(f"{label} is not a permutation of 1..{n}: {tuple(perm)!r}")


def validate_convex_ordering(g: BipartiteGraph, yperm: Sequence[int]) -> ConvexityCheck:
    """Check that every N(x) is contiguous under yperm.

    Reports the smallest violating x-index together with the first uncovered
    position inside its interval span.
    """
    _check_permutation(yperm, g.n2, "yperm")
    pos = {j: p for p, j in enumerate(yperm, start=1)}
    for i in range(1, g.n1 + 1):
        nb = g.neighbors_x(i)
        if len(nb) <= 1:
            continue
        ps = sorted(pos[j] for j in nb)
        if ps[-1] - ps[0] + 1 == len(ps):
            continue
        have = set(ps)
        gap = next(p for p in range(ps[0], ps[-1] + 1) if p not in have)
        return ConvexityCheck(False, i, gap)
    return ConvexityCheck(True, None, None)


@dataclass
class LexConvexOrdering:
    """A convex ordering of Y plus the lexicographic re-ordering of X.

    ``left_x[k]`` / ``right_x[k]`` give the Y-position interval of the x vertex
    at position k+1 (None for isolated vertices, which sit at the front of
    xperm).  ``left_y`` / ``right_y`` give, for each Y-position, the minimum and
    maximum X-positions among its neighbours; no contiguity is implied on the
    X side.
    """

    xperm: tuple[int, ...]
    yperm: tuple[int, ...]
    left_x: tuple[int | None, ...]
    right_x: tuple[int | None, ...]
    left_y: tuple[int | None, ...]
    right_y: tuple[int | None, ...]
    _xpos: dict[int, int] = field(init=False, repr=False, compare=False)
    _ypos: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._xpos = {i: p for p, i in enumerate(self.xperm, start=1)}
        self._ypos = {j: p for p, j in enumerate(self.yperm, start=1)}

    def x_position(self, i: int) -> int:
        return self._xpos[i]

    def y_position(self, j: int) -> int:
        return self._ypos[j]

    def x_at(self, position: int) -> int:
        return self.xperm[position - 1]

    def y_at(self, position: int) -> int:
        return self.yperm[position - 1]


def compute_lex_convex_ordering(g: BipartiteGraph, yperm: Sequence[int]) -> LexConvexOrdering:
    """Sort X by (left, right) with two stable bucket passes over positions.

    Isolated x vertices carry no interval and are placed at the front; ties
    after (left, right) break by original index.  Runs in O(n + m).
    """
    check = validate_convex_ordering(g, yperm)
    if not check.ok:
        raise InputError(
            f"yperm is not a convex ordering: N(x{check.violator}) has a gap "
            f"at position {check.gap_position}"
        )
    ypos = {j: p for p, j in enumerate(yperm, start=1)}
    lefts = [0] * (g.n1 + 1)
    rights = [0] * (g.n1 + 1)
    for i in range(1, g.n1 + 1):
        nb = g.neighbors_x(i)
        if nb:
            ps = [ypos[j] for j in nb]
            lefts[i] = min(ps)
            rights[i] = max(ps)

    def bucket_pass(seq: list[int], key: list[int]) -> list[int]:
        buckets: list[list[int]] = [[] for _ in range(g.n2 + 1)]
        for i in seq:
            buckets[key[i]].append(i)
        return [i for b in buckets for i in b]

    order = bucket_pass(list(range(1, g.n1 + 1)), rights)
    order = bucket_pass(order, lefts)

    left_x = tuple(lefts[i] or None for i in order)
    right_x = tuple(rights[i] or None for i in order)
    xpos = {i: p for p, i in enumerate(order, start=1)}
    left_y: list[int | None] = [None] * g.n2
    right_y: list[int | None] = [None] * g.n2
    for p, j in enumerate(yperm, start=1):
        nb = g.neighbors_y(j)
        if nb:
            ps = [xpos[i] for i in nb]
            left_y[p - 1] = min(ps)
            right_y[p - 1] = max(ps)
    return LexConvexOrdering(
        xperm=tuple(order),
        yperm=tuple(yperm),
        left_x=left_x,
        right_x=right_x,
        left_y=tuple(left_y),
        right_y=tuple(right_y),
    )


def find_convex_ordering_exhaustive(g: BipartiteGraph) -> tuple[int, ...] | None:
    """Search all permutations of Y; return the lexicographically least convex
    one, or None when the graph is not convex on Y.

    Test oracle only: capped at n2 <= 10; larger graphs must declare an
    ordering in their input file.
    """
    if g.n2 > EXHAUSTIVE_Y_LIMIT:
        raise CapacityError(
            f"exhaustive ordering search is capped at n2={EXHAUSTIVE_Y_LIMIT} "
            f"(got {g.n2}); supply a yorder declaration instead"
        )
    for perm in permutations(range(1, g.n2 + 1)):
        if validate_convex_ordering(g, perm).ok:
            return tuple(perm)
    return None


def ensure_valid_lex_ordering(g: BipartiteGraph, ordering: LexConvexOrdering) -> None:
    """Validate an ordering against a graph: permutation shapes, convexity,
    interval endpoints, and the pairwise lexicographic condition.

    Raises InputError on the first violation found.
    """
    _check_permutation(ordering.xperm, g.n1, "xperm")
    check = validate_convex_ordering(g, ordering.yperm)
    if not check.ok:
        raise InputError(
            f"ordering is not convex: N(x{check.violator}) has a gap at "
            f"position {check.gap_position}"
        )
    ypos = {j: p for p, j in enumerate(ordering.yperm, start=1)}
    xpos = {i: p for p, i in enumerate(ordering.xperm, start=1)}
    for p, i in enumerate(ordering.xperm, start=1):
        nb = g.neighbors_x(i)
        want_l = min((ypos[j] for j in nb), default=None)
        want_r = max((ypos[j] for j in nb), default=None)
        if ordering.left_x[p - 1] != want_l or ordering.right_x[p - 1] != want_r:
            raise InputError(f"interval endpoints for x{i} disagree with adjacency")
    for p in range(1, g.n2 + 1):
        nb = g.neighbors_y(ordering.yperm[p - 1])
        want_l = min((xpos[i] for i in nb), default=None)
        want_r = max((xpos[i] for i in nb), default=None)
        if ordering.left_y[p - 1] != want_l or ordering.right_y[p - 1] != want_r:
            raise InputError(f"span endpoints for position {p} disagree with adjacency")
    # Lexicographic condition; checking adjacent positions suffices since the
    # sort keys are totally ordered.
    keys = [
        (ordering.left_x[k] or 0, ordering.right_x[k] or 0)
        for k in range(g.n1)
    ]
    for k in range(g.n1 - 1):
        if keys[k] > keys[k + 1]:
            raise InputError(
                f"xperm violates the lexicographic condition between positions "
                f"{k + 1} and {k + 2}"
            )
