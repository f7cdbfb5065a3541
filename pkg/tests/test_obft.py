import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from relaxcolor.errors import InvalidInput
from relaxcolor.families import g5_names, gen_G5, random_outerplanar
from relaxcolor.graph import Graph, OuterEmbedding, make_family
from relaxcolor.obft import (consecutive_son_pairs, interior_set, lca, obft_partition,
                             partition_dot, verify_obft_properties)


def g5_partition():
    g, emb = gen_G5()
    return obft_partition(g, emb, g5_names()["x"])


def test_g5_layers_and_nontree_edges():
    p = g5_partition()
    nm = g5_names()
    assert p.layers[0] == (nm["x"],)
    assert set(p.layers[1]) == {nm[f"y{j}"] for j in range(1, 7)}
    assert set(p.layers[2]) == {nm[f"{c}{i}"] for c in "uv" for i in range(1, 6)}
    assert p.nontree_edges == {(nm[f"u{i}"], nm[f"v{i}"]) for i in range(1, 6)}


def test_c4_partition():
    p = obft_partition(make_family("cycle", 4), OuterEmbedding((0, 1, 2, 3)), 0)
    assert p.tree_edges == {(0, 1), (0, 3), (1, 2)}
    assert p.nontree_edges == {(2, 3)}
    assert p.layers == ((0,), (1, 3), (2,))
    assert p.position[3] == 2 and p.at(1, 2) == 3


def test_star_partition():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    p = obft_partition(star, OuterEmbedding((0, 1, 2, 3)), 0)
    assert not p.nontree_edges and p.layers[1] == (1, 2, 3)
    assert verify_obft_properties(p).all_passed


def test_root_changes_reading_order():
    p = obft_partition(make_family("cycle", 5), OuterEmbedding((0, 1, 2, 3, 4)), 2)
    assert p.layers[1] == (3, 1)
    assert p.path_to_root(0) == [0, 1, 2]


def test_lca_examples():
    p = g5_partition()
    nm = g5_names()
    assert lca(p, nm["u1"], nm["u1"]) == nm["u1"]
    assert lca(p, nm["u1"], nm["v1"]) == nm["x"]
    c = obft_partition(make_family("cycle", 4), OuterEmbedding((0, 1, 2, 3)), 0)
    assert lca(c, 1, 3) == 0


def test_g5_interiors_empty():
    p = g5_partition()
    nm = g5_names()
    for i in range(1, 6):
        assert interior_set(p, nm[f"u{i}"], nm[f"v{i}"]) == set()


def test_consecutive_siblings_have_empty_interior():
    p = g5_partition()
    nm = g5_names()
    assert interior_set(p, nm["y1"], nm["y2"]) == set()


def test_interior_contains_enclosed_vertex():
    # r has sons a, w, b; u hangs under a and v under b; u and v are consecutive in layer 2
    g = Graph.from_edges(6, [(0, 1), (0, 3), (0, 5), (1, 2), (5, 4)])
    p = obft_partition(g, OuterEmbedding((0, 1, 2, 3, 4, 5)), 0)
    assert p.layers[2] == (2, 4)
    assert interior_set(p, 2, 4) == {3}


def test_interior_undefined_pair():
    p = g5_partition()
    nm = g5_names()
    with pytest.raises(InvalidInput):
        interior_set(p, nm["x"], nm["u3"])


def test_partition_rejects_bad_input():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InvalidInput):
        obft_partition(g, OuterEmbedding((0, 1, 2, 3)), 0)
    with pytest.raises(InvalidInput):
        obft_partition(make_family("cycle", 4), OuterEmbedding((0, 2, 1, 3)), 0)
    with pytest.raises(InvalidInput):
        obft_partition(make_family("cycle", 4), OuterEmbedding((0, 1, 2, 3)), 7)


def test_g5_properties_pass():
    assert verify_obft_properties(g5_partition()).summary() == {i: True for i in range(1, 6)}


def test_property_report_flags_broken_partition():
    p = obft_partition(make_family("cycle", 4), OuterEmbedding((0, 1, 2, 3)), 0)
    broken = dataclasses.replace(p, layer=(0, 1, 3, 1))
    report = verify_obft_properties(broken)
    assert not report.all_passed and not report.passed(3)


def test_dot_output():
    p = g5_partition()
    dot = partition_dot(p, colors=[0] * 17)
    assert dot.startswith("graph obft {")
    assert dot.count("style=dashed") == 5
    assert dot.count("rank=same") == 3
    assert 'v1 [label="1:0"]' in dot


def test_consecutive_son_pairs_on_g5():
    # every y_j has a son, so y_j, y_{j+1} pair up with sons u_j and v_j
    nm = g5_names()
    pairs = list(consecutive_son_pairs(g5_partition()))
    assert pairs == [(nm[f"y{j}"], nm[f"y{j + 1}"], nm[f"u{j}"], nm[f"v{j}"]) for j in range(1, 6)]


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 80), st.floats(0, 1), st.integers(0, 2**31), st.data())
def test_random_outerplanar_partitions_satisfy_properties(n, p, seed, data):
    g, emb = random_outerplanar(n, p, seed)
    root = data.draw(st.integers(0, n - 1))
    part = obft_partition(g, emb, root)
    report = verify_obft_properties(part)
    assert report.all_passed, report.violations
    assert len(part.tree_edges) == n - 1
    assert part.tree_edges | part.nontree_edges == g.edges


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 60), st.floats(0, 1), st.integers(0, 2**31), st.floats(0.5, 1))
def test_properties_hold_for_connected_subgraphs(n, p, seed, keep):
    # dropping edges keeps the embedding valid; only connected pieces are partitioned
    g, emb = random_outerplanar(n, p, seed)
    rng = random.Random(seed)
    h = Graph.from_edges(n, [e for e in g.edges if rng.random() < keep])
    for comp in h.components():
        members = set(comp)
        sub, _ = h.induced([v for v in emb.order if v in members])
        part = obft_partition(sub, OuterEmbedding(tuple(range(sub.n))), rng.randrange(sub.n))
        assert verify_obft_properties(part).all_passed
