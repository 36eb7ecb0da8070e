import random
from itertools import combinations

import pytest

from veds import (
    ContractError,
    build_graph,
    brute_force_gamma_ve,
    compute_lex_convex_ordering,
    counterexample_graph,
    decompose,
    frontier_indices,
    identity_permutation,
    is_ve_dominating_set,
    reduce_to_suffix,
    solve_baseline,
    solve_exact,
    xref,
    yref,
)

from conftest import naive_ve_dominates, random_convex_instance


def ordered(g):
    return compute_lex_convex_ordering(g, identity_permutation(g.n2))


def complete(n1, n2):
    return build_graph(n1, n2, [(i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1)])


def exhaustive_gamma(g):
    """Second, mask-free oracle: scan subsets by size with the naive verifier."""
    verts = sorted(g.vertices())
    for size in range(0, len(verts) + 1):
        for combo in combinations(verts, size):
            if naive_ve_dominates(g, combo):
                return size, frozenset(combo)
    raise AssertionError("unreachable")


def test_frontier_p8(p8):
    fi = frontier_indices(p8, ordered(p8), decompose(p8, ordered(p8)))
    assert (fi.first_x_reach, fi.pivot_x, fi.pivot_reach) == (1, 2, 2)
    assert (fi.beyond_left_x, fi.beyond_right_x) == (3, 4)
    assert (fi.blanket_y, fi.blanket_reach_x, fi.beyond_blanket_left_y) == (1, 2, 2)


def test_frontier_complete_bipartite():
    g = complete(3, 4)
    fi = frontier_indices(g, ordered(g), decompose(g, ordered(g)))
    assert (fi.pivot_x, fi.pivot_reach) == (3, 4)
    assert fi.beyond_left_x is None and fi.beyond_right_x is None
    assert fi.blanket_y == 4
    assert fi.blanket_reach_x == 3
    assert fi.beyond_blanket_left_y is None


def test_frontier_counterexample(counterexample):
    fi = frontier_indices(
        counterexample, ordered(counterexample), decompose(counterexample, ordered(counterexample))
    )
    assert (fi.first_x_reach, fi.pivot_x, fi.pivot_reach) == (2, 1, 2)
    assert (fi.beyond_left_x, fi.beyond_right_x) == (3, 3)
    assert fi.blanket_y == 2
    assert fi.blanket_reach_x == 3
    assert fi.beyond_blanket_left_y is None


def test_frontier_requires_edges():
    g = build_graph(1, 0, [])
    ordv = compute_lex_convex_ordering(g, ())
    with pytest.raises(ContractError):
        frontier_indices(g, ordv, decompose(g, ordv))


def test_exact_counterexample(counterexample):
    r = solve_exact(counterexample, ordered(counterexample))
    assert r.gamma_ve == 1
    assert r.witness == {yref(2)}
    assert r.trace[-1].branch == "universal"


def test_exact_p8(p8):
    r = solve_exact(p8, ordered(p8))
    assert r.gamma_ve == 2
    assert r.trace[-1] == (("x1", "y1"), "x_pivot", "x2")


def test_exact_single_edge():
    g = build_graph(1, 1, [(1, 1)])
    r = solve_exact(g, ordered(g))
    assert r.gamma_ve == 1 and r.witness == {xref(1)}


def test_exact_edgeless_and_disconnected():
    g = build_graph(2, 2, [])
    assert solve_exact(g, ordered(g)).gamma_ve == 0
    two = build_graph(2, 2, [(1, 1), (2, 2)])
    r = solve_exact(two, ordered(two))
    assert r.gamma_ve == 2
    assert is_ve_dominating_set(two, r.witness)


def test_baseline_counterexample_gap(counterexample):
    ordv = ordered(counterexample)
    base = solve_baseline(counterexample, ordv, decompose(counterexample, ordv))
    assert base.gamma_ve == 2
    assert base.witness == {xref(1), xref(3)}
    assert solve_exact(counterexample, ordv).gamma_ve == 1


def test_baseline_complete_bipartite():
    g = complete(3, 4)
    ordv = ordered(g)
    base = solve_baseline(g, ordv, decompose(g, ordv))
    assert base.gamma_ve == 1
    assert base.witness == {xref(3)}


def test_baseline_p8(p8):
    ordv = ordered(p8)
    base = solve_baseline(p8, ordv, decompose(p8, ordv))
    assert base.witness == {xref(2), xref(4)}
    assert base.gamma_ve == brute_force_gamma_ve(p8).gamma_ve


def test_baseline_requires_connected():
    g = build_graph(2, 2, [(1, 1), (2, 2)])
    with pytest.raises(ContractError):
        solve_baseline(g, ordered(g), None)


def test_reduce_to_suffix_p8(p8):
    ordv = ordered(p8)
    fi = frontier_indices(p8, ordv, decompose(p8, ordv))
    sub, maps = reduce_to_suffix(p8, ordv, fi, "x_pivot")
    assert maps.x_from_sub == (3, 4) and maps.y_from_sub == (3, 4)
    assert sorted(sub.edges()) == [(1, 1), (2, 1), (2, 2)]
    sub2, maps2 = reduce_to_suffix(p8, ordv, fi, "y_blanket")
    assert maps2.x_from_sub == (3, 4) and maps2.y_from_sub == (2, 3, 4)
    assert sub2.m == 4


def test_reduce_to_suffix_empty_branch():
    g = complete(2, 3)
    ordv = ordered(g)
    fi = frontier_indices(g, ordv, decompose(g, ordv))
    sub, maps = reduce_to_suffix(g, ordv, fi, "x_pivot")
    assert (sub.n1, sub.n2, sub.m) == (0, 0, 0)
    assert maps.x_from_sub == ()


def test_reduce_to_suffix_empty_blanket_branch(counterexample):
    # The blanket reaches the last X position, so nothing lies beyond it.
    ordv = ordered(counterexample)
    fi = frontier_indices(counterexample, ordv, decompose(counterexample, ordv))
    sub, maps = reduce_to_suffix(counterexample, ordv, fi, "y_blanket")
    assert (sub.n1, sub.n2, sub.m) == (0, 0, 0)
    assert maps.y_from_sub == ()


def test_reduce_to_suffix_matches_recursion_counts(p8):
    # gamma of the whole path equals 1 plus the smaller branch gamma.
    ordv = ordered(p8)
    fi = frontier_indices(p8, ordv, decompose(p8, ordv))
    parts = []
    for branch in ("x_pivot", "y_blanket"):
        sub, _ = reduce_to_suffix(p8, ordv, fi, branch)
        parts.append(brute_force_gamma_ve(sub).gamma_ve)
    assert 1 + min(parts) == brute_force_gamma_ve(p8).gamma_ve == 2


def test_exact_agrees_with_both_oracles_small():
    rng = random.Random(101)
    for _ in range(150):
        g, ordv = random_convex_instance(rng, max_side=4)
        r = solve_exact(g, ordv)
        masked = brute_force_gamma_ve(g)
        assert r.gamma_ve == masked.gamma_ve
        if g.n <= 7:
            plain_size, _ = exhaustive_gamma(g)
            assert r.gamma_ve == plain_size


def test_exact_agrees_with_oracle_connected():
    rng = random.Random(103)
    for _ in range(200):
        g, ordv = random_convex_instance(rng, max_side=7, connected=True)
        assert solve_exact(g, ordv).gamma_ve == brute_force_gamma_ve(g).gamma_ve


def test_memoized_equals_unmemoized():
    rng = random.Random(107)
    for _ in range(80):
        g, ordv = random_convex_instance(rng, max_side=6)
        assert (
            solve_exact(g, ordv).gamma_ve
            == solve_exact(g, ordv, memoize=False).gamma_ve
        )


def test_witness_contract_and_baseline_dominance():
    rng = random.Random(109)
    strict_seen = False
    for _ in range(150):
        g, ordv = random_convex_instance(rng, max_side=7, connected=True)
        exact = solve_exact(g, ordv)
        base = solve_baseline(g, ordv, decompose(g, ordv))
        for r in (exact, base):
            assert is_ve_dominating_set(g, r.witness)
            assert len(r.witness) == r.gamma_ve
        assert exact.gamma_ve <= base.gamma_ve
        strict_seen |= exact.gamma_ve < base.gamma_ve
    assert strict_seen  # the counterexample phenomenon shows up in the wild


def test_additivity_over_components():
    rng = random.Random(113)
    for _ in range(60):
        a, _ = random_convex_instance(rng, max_side=4)
        b, _ = random_convex_instance(rng, max_side=4)
        edges = list(a.edges()) + [(i + a.n1, j + a.n2) for i, j in b.edges()]
        union = build_graph(a.n1 + b.n1, a.n2 + b.n2, edges)
        ordv = ordered(union)
        if union.n <= 22:
            assert solve_exact(union, ordv).gamma_ve == brute_force_gamma_ve(union).gamma_ve
        assert (
            solve_exact(union, ordv).gamma_ve
            == solve_exact(a, ordered(a)).gamma_ve + solve_exact(b, ordered(b)).gamma_ve
        )


def path_graph(k):
    """Alternating path v1..vk with odd positions on the X side."""
    edges = []
    for t in range(1, (k + 1) // 2 + 1):
        if 2 * t <= k:
            edges.append((t, t))
        if 2 * t + 1 <= k:
            edges.append((t + 1, t))
    return build_graph((k + 1) // 2, k // 2, edges)


def test_exact_on_path_family():
    for k in range(2, 17):
        g = path_graph(k)
        assert solve_exact(g, ordered(g)).gamma_ve == brute_force_gamma_ve(g).gamma_ve


def test_exact_on_complete_and_star_families():
    for a in range(1, 5):
        for b in range(1, 5):
            g = complete(a, b)
            r = solve_exact(g, ordered(g))
            assert r.gamma_ve == 1 == brute_force_gamma_ve(g).gamma_ve


def test_exact_on_all_interval_assignments_3x3():
    # Every convex graph with identity ordering and n1 = n2 = 3, exhaustively:
    # each x carries one of the 7 subintervals of [1, 3] (or no edges at all).
    intervals = [None] + [(a, b) for a in range(1, 4) for b in range(a, 4)]
    for i1 in intervals:
        for i2 in intervals:
            for i3 in intervals:
                edges = []
                for x, iv in enumerate((i1, i2, i3), start=1):
                    if iv:
                        edges.extend((x, j) for j in range(iv[0], iv[1] + 1))
                g = build_graph(3, 3, edges)
                assert solve_exact(g, ordered(g)).gamma_ve == brute_force_gamma_ve(g).gamma_ve


def test_trace_branches_and_chosen_names_wellformed():
    rng = random.Random(127)
    allowed = {"universal", "x_pivot", "y_blanket", "split"}
    for _ in range(60):
        g, ordv = random_convex_instance(rng, max_side=6)
        r = solve_exact(g, ordv)
        for step in r.trace:
            assert step.branch in allowed
            if step.branch == "split":
                assert step.chosen is None
            else:
                assert step.chosen[0] in "xy"
