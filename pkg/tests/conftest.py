import random

import pytest

from veds import (
    BipartiteGraph,
    GeneratorConfig,
    build_graph,
    compute_lex_convex_ordering,
    counterexample_graph,
    gen_random_convex_bipartite,
    identity_permutation,
)


@pytest.fixture
def counterexample():
    return counterexample_graph()


@pytest.fixture
def p8():
    """Path x1-y1-x2-y2-x3-y3-x4-y4."""
    return build_graph(4, 4, [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4)])


def naive_ve_dominates(g: BipartiteGraph, d) -> bool:
    """Independent restatement: every edge has a member of d within the union
    of its endpoints' closed neighbourhoods, checked by a double loop."""
    d = set(d)
    for i, j in g.edges():
        hood = {("x", i), ("y", j)}
        hood.update(("y", k) for k in g.neighbors_x(i))
        hood.update(("x", k) for k in g.neighbors_y(j))
        if not any((v.side, v.index) in hood for v in d):
            return False
    return True


def random_convex_instance(rng: random.Random, max_side: int = 6, connected: bool = False):
    """Seeded convex instance with identity yorder, plus its lex ordering."""
    while True:
        cfg = GeneratorConfig(
            n1=rng.randint(1, max_side),
            n2=rng.randint(1, max_side),
            density=rng.uniform(0.2, 1.0),
            seed=rng.getrandbits(48),
            require_connected=connected,
        )
        try:
            g = gen_random_convex_bipartite(cfg)
        except Exception:
            continue
        return g, compute_lex_convex_ordering(g, identity_permutation(g.n2))
