"""Brute-force ground truth, random instance generation, and the
cross-checking harness that anchors the acceptance tests.

The subset enumerators are deliberately simple: edge-domination masks are
precomputed per vertex, then subsets are tried in increasing cardinality, so
the first hit is both minimum and lexicographically least.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .chains import decompose
from .errors import CapacityError, GenerationError, InputError
from .graph import BipartiteGraph, build_graph, connected_components
from .io import format_graph_text
from .ordering import compute_lex_convex_ordering, identity_permutation
from .reductions import SetSystem
from .solver import SolveResult, counterexample_graph, solve_baseline, solve_exact

__all__ = [
    "GeneratorConfig",
    "Disagreement",
    "CrossCheckReport",
    "brute_force_gamma_ve",
    "brute_force_min_cover",
    "gen_random_convex_bipartite",
    "cross_check",
]

BRUTE_FORCE_VERTEX_LIMIT = 22
BRUTE_FORCE_SET_LIMIT = 20
GENERATION_RETRIES = 500


def brute_force_gamma_ve(
    g: BipartiteGraph, *, max_vertices: int = BRUTE_FORCE_VERTEX_LIMIT
) -> SolveResult:
    """Exhaustive minimum VED-set by increasing cardinality.

    Ties break to the lexicographically least member list over the vertex
    order x1..x{n1}, y1..y{n2}.  Capped by ``max_vertices``; callers that know
    their instances stay tractable may raise the cap explicitly.
    """
    if g.n > max_vertices:
        raise CapacityError(
            f"brute force is capped at {max_vertices} vertices (got {g.n})"
        )
    edges = list(g.edges())
    if not edges:
        return SolveResult(0, frozenset(), ())
    edge_bit = {e: 1 << k for k, e in enumerate(edges)}
    incident_x = [0] * (g.n1 + 1)
    incident_y = [0] * (g.n2 + 1)
    for i, j in edges:
        incident_x[i] |= edge_bit[(i, j)]
        incident_y[j] |= edge_bit[(i, j)]
    order = list(g.vertices())
    masks = []
    for v in order:
        # Edges dominated by v: those incident to v's closed neighbourhood.
        if v.side == "x":
            acc = incident_x[v.index]
            for j in g.neighbors_x(v.index):
                acc |= incident_y[j]
        else:
            acc = incident_y[v.index]
            for i in g.neighbors_y(v.index):
                acc |= incident_x[i]
        masks.append(acc)
    full = (1 << len(edges)) - 1
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            acc = 0
            for k in combo:
                acc |= masks[k]
            if acc == full:
                return SolveResult(size, frozenset(order[k] for k in combo), ())
    raise AssertionError("unreachable: the full vertex set dominates every edge")


def brute_force_min_cover(
    ss: SetSystem, *, max_sets: int = BRUTE_FORCE_SET_LIMIT
) -> frozenset[int] | None:
    """Smallest subfamily covering the universe, or None when there is none."""
    if ss.q > max_sets:
        raise CapacityError(f"cover search is capped at {max_sets} sets (got {ss.q})")
    masks = [sum(1 << (e - 1) for e in s) for s in ss.sets]
    full = (1 << ss.universe) - 1
    whole = 0
    for mk in masks:
        whole |= mk
    if whole != full:
        return None
    for size in range(1, ss.q + 1):
        for combo in combinations(range(ss.q), size):
            acc = 0
            for k in combo:
                acc |= masks[k]
            if acc == full:
                return frozenset(k + 1 for k in combo)
    raise AssertionError("unreachable: the whole family covers")


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for the seeded convex-instance generator; identical configs
    reproduce identical instances."""

    n1: int
    n2: int
    density: float
    seed: int
    require_connected: bool = False


def _geometric(rng: random.Random, mean: float) -> int:
    if mean <= 1.0:
        return 1
    p = 1.0 / mean
    u = rng.random()
    return int(math.log1p(-u) / math.log1p(-p)) + 1


def gen_random_convex_bipartite(cfg: GeneratorConfig) -> BipartiteGraph:
    """Draw one Y-interval per X vertex; the result is convex on Y under the
    identity ordering by construction.

    Interval lengths are geometric around density * n2 (clipped to the side
    size).  With ``require_connected`` the instance is rejection-sampled; the
    retry budget exhausting raises a generation error suggesting a higher
    density.
    """
    if cfg.n1 < 1 or cfg.n2 < 1:
        raise InputError(f"generator needs n1, n2 >= 1 (got {cfg.n1}, {cfg.n2})")
    if not 0.0 < cfg.density <= 1.0:
        raise InputError(f"density must lie in (0, 1], got {cfg.density}")
    rng = random.Random(cfg.seed)
    mean = cfg.density * cfg.n2
    for _ in range(GENERATION_RETRIES):
        edges: list[tuple[int, int]] = []
        for i in range(1, cfg.n1 + 1):
            length = min(cfg.n2, _geometric(rng, mean))
            a = rng.randint(1, cfg.n2 - length + 1)
            edges.extend((i, j) for j in range(a, a + length))
        g = build_graph(cfg.n1, cfg.n2, edges)
        if not cfg.require_connected or len(connected_components(g)) == 1:
            return g
    raise GenerationError(
        f"no connected instance after {GENERATION_RETRIES} draws "
        f"(n1={cfg.n1}, n2={cfg.n2}, density={cfg.density}); try a higher density"
    )


class Disagreement(NamedTuple):
    trial: int
    graph_text: str
    expected: int
    got: int


@dataclass(frozen=True)
class CrossCheckReport:
    trials: int
    agreements: int
    disagreements: tuple[Disagreement, ...]
    strict_gap_trials: int
    gap_total: int
    gap_max: int

    def to_text(self) -> str:
        lines = [
            f"trials: {self.trials}",
            f"agreements: {self.agreements}",
            f"disagreements: {len(self.disagreements)}",
            f"baseline strict gaps: {self.strict_gap_trials}",
            f"baseline gap max: {self.gap_max}",
            f"baseline gap total: {self.gap_total}",
        ]
        for d in self.disagreements:
            lines.append(
                f"trial {d.trial}: expected {d.expected}, got {d.got}; instance:"
            )
            lines.extend("  " + row for row in d.graph_text.splitlines())
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "agreements": self.agreements,
            "disagreements": [d._asdict() for d in self.disagreements],
            "baseline_strict_gaps": self.strict_gap_trials,
            "baseline_gap_max": self.gap_max,
            "baseline_gap_total": self.gap_total,
        }


def random_connected_instance(
    rng: random.Random, size_cap: int
) -> BipartiteGraph:
    """Draw sizes and density, then sample until a connected instance lands."""
    while True:
        n1 = rng.randint(1, size_cap - 1)
        n2 = rng.randint(1, size_cap - n1)
        density = rng.uniform(0.3, 0.95)
        try:
            return gen_random_convex_bipartite(
                GeneratorConfig(
                    n1=n1,
                    n2=n2,
                    density=density,
                    seed=rng.getrandbits(48),
                    require_connected=True,
                )
            )
        except GenerationError:
            continue


def cross_check(count: int, size_cap: int, seed: int) -> CrossCheckReport:
    """Run the exact solver against brute force on ``count`` instances.

    Trial 0 is always the shipped counterexample (so its baseline gap is on
    record); the rest are seeded random connected convex instances with
    n1 + n2 <= size_cap.  Disagreements ship the failing instance inline in
    the graph text format for immediate replay.
    """
    agreements = 0
    disagreements: list[Disagreement] = []
    strict = 0
    gap_total = 0
    gap_max = 0
    for t in range(count):
        if t == 0:
            g = counterexample_graph()
        else:
            rng = random.Random(seed * 1_000_003 + t)
            g = random_connected_instance(rng, size_cap)
        ordering = compute_lex_convex_ordering(g, identity_permutation(g.n2))
        exact = solve_exact(g, ordering)
        truth = brute_force_gamma_ve(g, max_vertices=max(BRUTE_FORCE_VERTEX_LIMIT, size_cap))
        if exact.gamma_ve == truth.gamma_ve:
            agreements += 1
        else:
            disagreements.append(
                Disagreement(
                    t,
                    format_graph_text(g, yorder=identity_permutation(g.n2)),
                    truth.gamma_ve,
                    exact.gamma_ve,
                )
            )
        baseline = solve_baseline(g, ordering, decompose(g, ordering))
        gap = baseline.gamma_ve - exact.gamma_ve
        gap_total += gap
        gap_max = max(gap_max, gap)
        if gap > 0:
            strict += 1
    return CrossCheckReport(
        trials=count,
        agreements=agreements,
        disagreements=tuple(disagreements),
        strict_gap_trials=strict,
        gap_total=gap_total,
        gap_max=gap_max,
    )
