import random

import pytest

from veds import (
    ContractError,
    DomainError,
    InputError,
    SetSystem,
    approx_set_cover,
    brute_force_gamma_ve,
    brute_force_min_cover,
    build_graph,
    cover_to_vedset,
    is_ve_dominating_set,
    reduce_comb_convex,
    reduce_star_convex,
    vedset_to_cover,
    verify_tree_convexity,
    xref,
    yref,
)


def system(p, *sets):
    return SetSystem(p, tuple(frozenset(s) for s in sets))


def brute_ved_solver(g):
    return brute_force_gamma_ve(g, max_vertices=23).witness


def random_coverable_system(rng, max_p=5):
    while True:
        p = rng.randint(1, max_p)
        q = rng.randint(1, p)
        sets = [
            frozenset(e for e in range(1, p + 1) if rng.random() < 0.55) or frozenset({rng.randint(1, p)})
            for _ in range(q)
        ]
        ss = SetSystem(p, tuple(sets))
        if not ss.uncovered_elements():
            return ss


def test_set_system_validation():
    with pytest.raises(InputError):
        system(0, {1})
    with pytest.raises(InputError):
        system(2, set())
    with pytest.raises(InputError):
        system(2, {3})
    assert system(3, {1}, {2, 3}).uncovered_elements() == frozenset()
    assert system(3, {1}).uncovered_elements() == {2, 3}


def test_star_reduction_shape_small():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    assert (art.graph.n1, art.graph.n2) == (4, 5)
    assert art.graph.m == 9
    roles = art.roles()
    assert roles["u"] == xref(3) and roles["v"] == yref(5) and roles["u'"] == xref(4)
    assert art.certificate.kind == "star" and art.certificate.center == 3


def test_star_reduction_smallest():
    art = reduce_star_convex(system(1, {1}))
    assert (art.graph.n1, art.graph.n2, art.graph.m) == (3, 3, 5)


def test_star_reduction_roundtrip_p3():
    ss = system(3, {1, 2}, {2, 3}, {3})
    assert len(brute_force_min_cover(ss)) == 2
    art = reduce_star_convex(ss)
    assert brute_force_gamma_ve(art.graph).gamma_ve == 3


def test_comb_reduction_shape_small():
    art = reduce_comb_convex(system(2, {1}, {1, 2}))
    assert (art.graph.n1, art.graph.n2) == (6, 5)
    assert art.graph.m == 13
    assert art.certificate.backbone == (3, 4, 5)


def test_comb_reduction_smallest():
    art = reduce_comb_convex(system(1, {1}))
    assert (art.graph.n1, art.graph.n2) == (4, 3)
    assert art.certificate.backbone == (2, 3)
    teeth = dict(art.certificate.teeth)
    assert teeth == {2: 1, 3: 4}  # a1 under r1, pendant under r2


def test_comb_reduction_roundtrip_p3():
    ss = system(3, {1, 2}, {2, 3}, {3})
    art = reduce_comb_convex(ss)
    assert brute_force_gamma_ve(art.graph).gamma_ve == 3


def test_reductions_reject_large_families():
    ss = system(1, {1})
    big = SetSystem(1, (frozenset({1}), frozenset({1})))
    with pytest.raises(ContractError, match="no larger than the universe"):
        reduce_star_convex(big)
    with pytest.raises(ContractError):
        reduce_comb_convex(big)
    reduce_star_convex(ss)  # boundary q == p is fine


def test_size_formulas_hold():
    rng = random.Random(41)
    for _ in range(60):
        ss = random_coverable_system(rng)
        p, q = ss.universe, ss.q
        assert reduce_star_convex(ss).graph.n == 2 * p + q + 3
        assert reduce_comb_convex(ss).graph.n == 3 * p + q + 3


def test_cover_to_vedset_star():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    d = cover_to_vedset(art, {2})
    assert d == {yref(2), xref(3)}
    assert is_ve_dominating_set(art.graph, d)


def test_cover_to_vedset_comb():
    art = reduce_comb_convex(system(2, {1}, {1, 2}))
    d = cover_to_vedset(art, {2})
    assert d == {yref(2), xref(5)}  # b2 plus the last backbone vertex


def test_cover_to_vedset_full_family():
    ss = system(3, {1, 2}, {2, 3}, {3})
    art = reduce_star_convex(ss)
    d = cover_to_vedset(art, {1, 2, 3})
    assert len(d) == ss.q + 1


def test_cover_to_vedset_rejects_noncover():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    with pytest.raises(ContractError):
        cover_to_vedset(art, {1})


def test_vedset_to_cover_plain():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    assert vedset_to_cover(art, {yref(2), xref(3)}) == {2}


def test_vedset_to_cover_drops_private():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    # {z1, b2, u}: z1 is redundant because b2 already covers element 1.
    cover = vedset_to_cover(art, {yref(3), yref(2), xref(3)})
    assert cover == {2}


def test_vedset_to_cover_whole_vertex_set():
    art = reduce_star_convex(system(3, {1, 2}, {2, 3}, {3}))
    cover = vedset_to_cover(art, set(art.graph.vertices()))
    assert art.system.is_cover(cover)
    assert len(cover) <= art.graph.n - 1


def test_vedset_to_cover_rejects_nondominating():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    with pytest.raises(ContractError):
        vedset_to_cover(art, {yref(2)})


def test_vedset_to_cover_comb_backbone_vertices():
    ss = system(2, {1}, {1, 2})
    art = reduce_comb_convex(ss)
    d = brute_force_gamma_ve(art.graph).witness
    cover = vedset_to_cover(art, d)
    assert ss.is_cover(cover)
    assert len(cover) <= len(d) - 1


def test_tree_convexity_on_reduction_outputs():
    rng = random.Random(43)
    for _ in range(50):
        ss = random_coverable_system(rng)
        for art in (reduce_star_convex(ss), reduce_comb_convex(ss)):
            assert verify_tree_convexity(art.graph, art.certificate).ok


def test_tree_convexity_detects_violation():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    g = art.graph
    # Extra edge z1~a2: neither a1 nor a2 is the star centre, so N(z1) is
    # disconnected in the certificate.
    tampered = build_graph(g.n1, g.n2, list(g.edges()) + [(2, 3)])
    check = verify_tree_convexity(tampered, art.certificate)
    assert not check.ok and check.violator == 3


def test_tree_convexity_rejects_nontrees():
    art = reduce_star_convex(system(2, {1}, {1, 2}))
    bad = art.certificate.__class__(kind="star", edges=((1, 2),), center=1)
    with pytest.raises(InputError):
        verify_tree_convexity(art.graph, bad)


def test_every_minimum_vedset_converts_to_a_cover():
    from itertools import combinations

    for ss in (system(2, {1}, {1, 2}), system(3, {1, 2}, {2, 3}, {3})):
        t = len(brute_force_min_cover(ss))
        for art in (reduce_star_convex(ss), reduce_comb_convex(ss)):
            g = art.graph
            gamma = brute_force_gamma_ve(g, max_vertices=23).gamma_ve
            assert gamma == t + 1
            verts = sorted(g.vertices())
            minimums = [
                frozenset(combo)
                for combo in combinations(verts, gamma)
                if is_ve_dominating_set(g, combo)
            ]
            assert minimums
            for d in minimums:
                cover = vedset_to_cover(art, d)
                assert ss.is_cover(cover)
                assert len(cover) <= len(d) - 1


def test_roundtrip_equality_random_systems():
    rng = random.Random(47)
    for _ in range(40):
        ss = random_coverable_system(rng, max_p=4)
        t = len(brute_force_min_cover(ss))
        star = brute_force_gamma_ve(reduce_star_convex(ss).graph, max_vertices=23)
        comb = brute_force_gamma_ve(reduce_comb_convex(ss).graph, max_vertices=23)
        assert star.gamma_ve == t + 1
        assert comb.gamma_ve == t + 1


def test_approx_cover_phase1():
    ss = system(2, {1}, {1, 2})
    assert approx_set_cover(ss, 1, brute_ved_solver) == {2}


def test_approx_cover_phase2():
    ss = system(3, {1, 2}, {2, 3}, {3})
    cover = approx_set_cover(ss, 1, brute_ved_solver)
    assert ss.is_cover(cover)
    assert len(cover) == 2


def test_approx_cover_full_depth_is_exact():
    rng = random.Random(53)
    for _ in range(25):
        ss = random_coverable_system(rng, max_p=4)
        cover = approx_set_cover(ss, ss.q, brute_ved_solver)
        assert ss.is_cover(cover)
        assert len(cover) == len(brute_force_min_cover(ss))


def test_approx_cover_rejects_coverless():
    ss = system(3, {1})
    with pytest.raises(DomainError):
        approx_set_cover(ss, 2, brute_ved_solver)
