"""Independent brute-force oracles used to cross-check the package.

Nothing here imports the solver or the checkers; colorings are enumerated with
itertools and validity is recomputed from the definitions.
"""

import itertools

import networkx as nx
from hypothesis import strategies as st

from relaxcolor.graph import Graph


def cdist(a, b, k):
    d = abs(a - b) % k
    return min(d, k - d)


def is_valid(g, colors, k, bound, semantics="relaxed", q=2):
    for v in range(g.n):
        bad = 0
        for u in g.adjacency[v]:
            if semantics == "relaxed" and colors[u] == colors[v]:
                return False
            if cdist(colors[u], colors[v], k) < q:
                bad += 1
        if bad > bound:
            return False
    return True


def relax_counts(g, colors, k, q=2):
    return [sum(cdist(colors[u], colors[v], k) < q for u in g.adjacency[v]) for v in range(g.n)]


def all_valid(g, k, bound, semantics="relaxed", q=2):
    return [c for c in itertools.product(range(k), repeat=g.n) if is_valid(g, c, k, bound, semantics, q)]


def first_valid(g, k, bound, semantics="relaxed", q=2):
    for c in itertools.product(range(k), repeat=g.n):
        if is_valid(g, c, k, bound, semantics, q):
            return c
    return None


def brute_min_k(g, bound, semantics="relaxed", q=2):
    k = 1
    while first_valid(g, k, bound, semantics, q) is None:
        k += 1
    return k


def crossing_pairs(g, order):
    """O(m^2) count of strictly interleaving edge pairs in a cyclic order."""
    pos = {v: i for i, v in enumerate(order)}
    chords = [tuple(sorted((pos[u], pos[v]))) for u, v in g.edges]
    count = 0
    for (a, b), (c, d) in itertools.combinations(chords, 2):
        if a < c < b < d or c < a < d < b:
            count += 1
    return count


def brute_outerplanar(g):
    """Try every cyclic order (first vertex fixed)."""
    if g.n <= 3:
        return True
    for rest in itertools.permutations(range(1, g.n)):
        if crossing_pairs(g, (0,) + rest) == 0:
            return True
    return False


def apex_outerplanar(g):
    """Outerplanar iff adding a vertex joined to everything keeps it planar."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n + 1))
    h.add_edges_from(g.edges)
    h.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def colored_graphs(draw, max_n=6, max_k=7):
    g = draw(graphs(max_n=max_n))
    k = draw(st.integers(2, max_k))
    colors = tuple(draw(st.lists(st.integers(0, k - 1), min_size=g.n, max_size=g.n)))
    return g, k, colors
