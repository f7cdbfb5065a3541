import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_valid, graphs
from relaxcolor.errors import InvalidInput, InvalidParameter
from relaxcolor.families import small_graphs
from relaxcolor.graph import Graph, make_family
from relaxcolor.reductions import (attach_cliques, blowup_compose, check_equivalence,
                                   classical_defective, gadget_A, lift_blowup, lift_cliques,
                                   lift_gadget_A, lift_p4, map_2d_to_42d, map_42d_to_2d,
                                   p4_internal_colors, project_blowup, restrict_to_originals,
                                   subdivide_p4)
from relaxcolor.reproduce import run_equivalence_suite
from relaxcolor.semantics import Coloring, check_defective, check_relaxed

K2 = make_family("path", 2)


def small(max_n):
    return [g for n in range(1, max_n + 1) for g in small_graphs(n)]


# -- constructions ----------------------------------------------------------


def test_subdivided_triangle_is_nine_cycle():
    h = subdivide_p4(make_family("complete", 3)).constructed
    assert (h.n, h.m) == (9, 9)
    assert h.is_connected() and all(h.degree(v) == 2 for v in range(9))


def test_subdivided_edge_is_p4():
    inst = subdivide_p4(K2)
    h = inst.constructed
    x, y = inst.edge_gadget_map[(0, 1)]
    assert h.edges == {tuple(sorted(e)) for e in [(0, x), (x, y), (y, 1)]}


def test_subdivided_k4_counts():
    h = subdivide_p4(make_family("complete", 4)).constructed
    assert (h.n, h.m) == (16, 18)


def test_gadget_a_counts():
    inst = gadget_A(K2, 2)
    assert inst.constructed.n == 8 and inst.constructed.m == 9


def test_gadget_a_with_four_pairs():
    inst = gadget_A(K2, 5)
    h = inst.constructed
    ids = inst.edge_gadget_map[(0, 1)]
    x, y = ids[0], ids[1]
    assert h.n == 2 + 2 + 16
    assert h.degree(x) == 2 + 8 and h.degree(y) == 2 + 8
    assert ids == tuple(range(2, 20))


def test_gadget_a_rejects_small_t():
    with pytest.raises(InvalidParameter):
        gadget_A(K2, 1)


def test_blowup_of_edge_is_k33():
    h = blowup_compose(K2, 3).constructed
    assert (h.n, h.m) == (6, 9)
    assert all(h.degree(v) == 3 for v in range(6))


def test_blowup_identity():
    g = make_family("cycle", 5)
    assert blowup_compose(g, 1).constructed.edges == g.edges


def test_blowup_path_counts():
    h = blowup_compose(make_family("path", 3), 2).constructed
    assert (h.n, h.m) == (6, 8)


def test_cliques_single_vertex():
    h = attach_cliques(make_family("empty", 1), 5, 1).constructed
    assert h.edges == make_family("complete", 4).edges


def test_cliques_counts():
    assert attach_cliques(K2, 5, 1).constructed.n == 8
    assert attach_cliques(make_family("empty", 3), 6, 2).constructed.n == 27


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), st.integers(2, 3), st.integers(1, 3))
def test_expected_sizes(g, t, p):
    for inst in (subdivide_p4(g), gadget_A(g, t), blowup_compose(g, p), attach_cliques(g, 5, 1)):
        assert inst.expected_size() == (inst.constructed.n, inst.constructed.m)
        for v, w in inst.original_vertex_map.items():
            assert 0 <= w < inst.constructed.n


# -- transfers --------------------------------------------------------------


@pytest.mark.parametrize("ab, want", [((0, 1), (2, 3)), ((0, 2), (2, 0)), ((0, 0), (1, 3))])
def test_p4_internal_examples(ab, want):
    assert p4_internal_colors(*ab) == want


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("b", range(4))
def test_p4_internal_all_pairs(a, b):
    x, y = p4_internal_colors(a, b)
    rep = check_relaxed(make_family("path", 4), Coloring(4, (a, x, y, b)), 1)
    assert rep.valid
    ends = (rep.relaxations[0], rep.relaxations[3])
    assert ends == ((1, 1) if a == b else (0, 0))


def test_lift_gadget_equal_ends():
    inst = gadget_A(K2, 2)
    f = lift_gadget_A(inst, Coloring(4, (0, 0), q=1))
    assert check_relaxed(inst.constructed, f, 2).valid


def test_lift_gadget_proper_triangle():
    inst = gadget_A(make_family("complete", 3), 2)
    f = lift_gadget_A(inst, Coloring(4, (0, 1, 2), q=1))
    rep = check_relaxed(inst.constructed, f, 2)
    assert rep.valid and rep.relaxations[:3] == (0, 0, 0)


def test_lift_rejects_invalid_source():
    inst = subdivide_p4(make_family("complete", 3))
    with pytest.raises(InvalidInput):
        lift_p4(inst, Coloring(4, (0, 0, 0), q=1))
    with pytest.raises(InvalidInput):
        lift_cliques(attach_cliques(K2, 5, 1), Coloring(5, (0, 1)))


@pytest.mark.parametrize("g", small(4), ids=lambda g: f"n{g.n}m{g.m}")
def test_every_p4_and_gadget_lift_verifies(g):
    p4 = subdivide_p4(g)
    for colors in all_valid(g, 4, 1, "defective", q=1):
        assert check_relaxed(p4.constructed, lift_p4(p4, Coloring(4, colors, q=1)), 1).valid
    ga = gadget_A(g, 2)
    for colors in all_valid(g, 4, 2, "defective", q=1):
        assert check_relaxed(ga.constructed, lift_gadget_A(ga, Coloring(4, colors, q=1)), 2).valid


@pytest.mark.parametrize("g", small(3), ids=lambda g: f"n{g.n}m{g.m}")
def test_every_blowup_and_clique_lift_verifies(g):
    bl = blowup_compose(g, 6)
    cl = attach_cliques(g, 5, 1)
    for colors in all_valid(g, 5, 0):
        f = Coloring(5, colors)
        lifted = lift_blowup(bl, f)
        assert check_relaxed(bl.constructed, lifted, 1).valid
        assert project_blowup(bl, lifted, 1, verify=True) == f
        assert check_defective(cl.constructed, lift_cliques(cl, f), 1).valid
        assert restrict_to_originals(cl, lift_cliques(cl, f)) == f


def test_project_constant_classes():
    inst = blowup_compose(make_family("path", 3), 4)
    cols = tuple(c for c in (1, 3, 0) for _ in range(4))
    assert project_blowup(inst, Coloring(5, cols), 1).colors == (1, 3, 0)


def test_project_picks_color_with_enough_copies():
    inst = blowup_compose(K2, 6)
    gstar = Coloring(5, (0, 0, 0, 0, 1, 1, 2, 2, 2, 2, 3, 3))
    assert project_blowup(inst, gstar, 1).colors == (0, 2)


def test_clique_colors_for_single_vertex():
    inst = attach_cliques(make_family("empty", 1), 5, 1)
    f = lift_cliques(inst, Coloring(5, (0,)))
    assert sorted(f.colors) == [0, 0, 2, 2] and f[0] == 0


def test_clique_lift_on_edge():
    inst = attach_cliques(K2, 5, 1)
    assert check_defective(inst.constructed, lift_cliques(inst, Coloring(5, (0, 2))), 1).valid


def test_clique_colors_for_k6():
    inst = attach_cliques(make_family("empty", 1), 6, 1)
    f = lift_cliques(inst, Coloring(6, (1,)))
    assert Counter(f.colors) == Counter([1, 1, 3, 3, 5, 5])


def test_42d_maps():
    assert map_42d_to_2d(Coloring(4, (0, 3))).colors == (0, 1)
    back = map_2d_to_42d(Coloring(2, (1, 1), q=1))
    assert back.colors == (2, 2)
    assert check_defective(K2, back, 1).relaxations == (1, 1)


@settings(max_examples=100)
@given(st.lists(st.sampled_from([0, 2]), min_size=1, max_size=8))
def test_42d_round_trip_on_even_colors(colors):
    f = Coloring(4, tuple(colors))
    once = map_2d_to_42d(map_42d_to_2d(f))
    assert once == f and map_2d_to_42d(map_42d_to_2d(once)) == once


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), st.integers(0, 3))
def test_42d_transfer_preserves_validity(g, d):
    for colors in all_valid(g, 2, d, "defective", q=1)[:20]:
        assert check_defective(g, map_2d_to_42d(Coloring(2, colors, q=1)), d).valid
    for colors in all_valid(g, 4, d, "defective")[:20]:
        assert classical_defective(g, map_42d_to_2d(Coloring(4, colors)).colors, 2, d).valid


# -- equivalences -----------------------------------------------------------


@pytest.mark.parametrize("kind, max_n, params", [
    ("p4", 4, {}), ("gadget_A", 3, {"t": 2}), ("blowup", 2, {"k": 5, "t": 1}),
    ("cliques", 3, {"k": 5, "d": 1}), ("42d", 5, {"d": 1}),
])
def test_equivalence_small(kind, max_n, params):
    if kind == "42d":
        assert all(check_equivalence(kind, g, **params).agree for g in small(max_n))
        return
    count, failures = run_equivalence_suite(kind, max_n, params, random_count=10, seed=1)
    assert failures == []


def test_gadget_a_t3_on_triangle():
    assert check_equivalence("gadget_A", make_family("complete", 3), t=3).agree
