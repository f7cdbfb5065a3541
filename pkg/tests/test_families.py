import random

import pytest
from hypothesis import given, settings, strategies as st

from relaxcolor.errors import InvalidParameter
from relaxcolor.families import (closed_form_cchi, g5_defective_coloring, g5_names, gen_G5, gen_H,
                                 h_names, h_witness, random_outerplanar, search_not_colorable_outerplanar,
                                 small_graphs, witness_coloring)
from relaxcolor.graph import make_family, validate_outer_embedding
from relaxcolor.semantics import check_defective, check_relaxed
from relaxcolor.solver import is_colorable, min_k

CASES = ([("path", n, t) for n in range(3, 9) for t in (1, 2, 3)]
         + [("cycle", n, t) for n in range(3, 9) for t in (1, 2, 3)]
         + [("complete", n, t) for n in range(3, 9) for t in (1, 2, 3)])


@pytest.mark.parametrize("kind, n, t", CASES)
def test_closed_form_matches_solver(kind, n, t):
    g = make_family(kind, n)
    assert closed_form_cchi(kind, n, t) == min_k(g, "relaxed", t)


@pytest.mark.parametrize("kind, n, t", CASES)
def test_witness_attains_closed_form(kind, n, t):
    f = witness_coloring(kind, n, t)
    assert f.k == closed_form_cchi(kind, n, t)
    assert check_relaxed(make_family(kind, n), f, t).valid


@pytest.mark.parametrize("args, want", [(("path", 5, 1), 4), (("cycle", 3, 1), 5),
                                        (("complete", 5, 1), 8), (("complete", 6, 2), 6)])
def test_closed_form_examples(args, want):
    assert closed_form_cchi(*args) == want


def test_small_complete_graphs_are_exact():
    assert closed_form_cchi("complete", 1, 1) == min_k(make_family("complete", 1), "relaxed", 1) == 1
    assert closed_form_cchi("complete", 2, 1) == min_k(make_family("complete", 2), "relaxed", 1) == 2


@pytest.mark.parametrize("args", [("path", 2, 1), ("cycle", 2, 1), ("complete", 0, 1),
                                  ("path", 5, 0), ("star", 4, 1)])
def test_closed_form_rejects(args):
    with pytest.raises(InvalidParameter):
        closed_form_cchi(*args)


def test_witness_examples():
    assert sorted(witness_coloring("complete", 4, 1).colors) == [0, 1, 3, 4]
    assert witness_coloring("complete", 4, 1).k == 6
    assert sorted(witness_coloring("complete", 3, 1).colors) == [0, 1, 3]
    assert witness_coloring("cycle", 5, 1).colors == (0, 2, 0, 1, 3)


def test_g5_shape():
    g, emb = gen_G5()
    assert (g.n, g.m) == (17, 21)
    assert validate_outer_embedding(g, emb)
    nm = g5_names()
    assert g.degree(nm["x"]) == 6
    assert all(g.has_edge(nm[f"u{i}"], nm[f"v{i}"]) for i in range(1, 6))


def test_g5_separation():
    g, _ = gen_G5()
    assert check_defective(g, g5_defective_coloring(), 1).valid
    assert not is_colorable(g, "relaxed", 4, 1)
    assert is_colorable(g, "relaxed", 4, 2)


def test_h0_is_triangle():
    g, emb = gen_H(0)
    assert g.edges == make_family("complete", 3).edges


def test_h2_shape():
    g, emb = gen_H(2)
    nm = h_names(2)
    assert g.n == 9 and validate_outer_embedding(g, emb)
    assert g.degree(nm["x"]) == g.degree(nm["y"]) == g.degree(nm["z"]) == 5


@pytest.mark.parametrize("t", [2, 3, 4])
def test_h_witness_needs_one_more_relaxation(t):
    g, emb = gen_H(2 * t - 2)
    assert validate_outer_embedding(g, emb)
    f = h_witness(t)
    assert check_relaxed(g, f, t + 1).valid
    assert not check_relaxed(g, f, t).valid
    assert not is_colorable(g, "relaxed", 4, t)


def test_h_witness_rejects_small_t():
    with pytest.raises(InvalidParameter):
        h_witness(1)


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_random_triangle(seed):
    g, _ = random_outerplanar(3, 1.0, seed)
    assert g.edges == make_family("complete", 3).edges


def test_random_without_diagonals_is_cycle():
    g, emb = random_outerplanar(9, 0.0, 4, shuffle=False)
    assert g.edges == make_family("cycle", 9).edges


def test_random_is_seeded():
    assert random_outerplanar(40, 0.5, 11) == random_outerplanar(40, 0.5, 11)


def test_random_outerplanar_rejects():
    with pytest.raises(InvalidParameter):
        random_outerplanar(2, 0.5, 0)
    with pytest.raises(InvalidParameter):
        random_outerplanar(5, 1.5, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 120), st.floats(0, 1), st.integers(0, 2**31))
def test_random_outerplanar_is_valid(n, p, seed):
    g, emb = random_outerplanar(n, p, seed)
    assert validate_outer_embedding(g, emb)
    assert n <= g.m <= 2 * n - 3


def test_maximal_outerplanar_edge_count():
    g, _ = random_outerplanar(30, 1.0, 5)
    assert g.m == 2 * 30 - 3


def test_triangulation_shape_frequencies():
    # a pentagon has 5 triangulations, all fans; each apex should appear
    rng = random.Random(0)
    seen = set()
    for _ in range(300):
        g, emb = random_outerplanar(5, 1.0, rng.randrange(10**6), shuffle=False)
        seen.add(max(range(5), key=g.degree))
    assert seen == set(range(5))


def test_small_graph_counts():
    assert [len(small_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_search_finds_no_graph_for_easy_parameters():
    assert search_not_colorable_outerplanar(5, 4, sizes=range(4, 8), samples=20) is None


def test_search_finds_h0_like_obstruction():
    found = search_not_colorable_outerplanar(4, 1, sizes=range(3, 6), samples=10)
    assert found is not None
    g, emb = found
    assert validate_outer_embedding(g, emb) and not is_colorable(g, "relaxed", 4, 1)


def test_hexagon_triangulations_roughly_uniform():
    # 14 triangulations of a hexagon; 2800 draws gives about 200 each
    counts = {}
    for s in range(2800):
        g, _ = random_outerplanar(6, 1.0, s, shuffle=False)
        counts[g.edges] = counts.get(g.edges, 0) + 1
    assert len(counts) == 14
    assert all(120 < c < 280 for c in counts.values())


def test_six_vertex_outerplanar_needs_two_relaxations_with_five_colors():
    # three triangles glued around vertex 0 and 2; found by the random search
    from relaxcolor.graph import Graph, OuterEmbedding

    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)])
    assert validate_outer_embedding(g, OuterEmbedding(tuple(range(6))))
    assert not is_colorable(g, "relaxed", 5, 1)
    assert is_colorable(g, "relaxed", 5, 2)
