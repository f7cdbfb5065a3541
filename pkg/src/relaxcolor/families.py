"""Special graph families, their closed-form values and witness colorings.

Also holds the two outerplanar separating families (the 17-vertex graph G5 and
the triangle-of-fans H(m)), the random outerplanar generator and small-graph
corpora used by the cross-validation suites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameter
from .graph import Graph, OuterEmbedding, make_family
from .semantics import Coloring


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    size: int
    t: int = 1


def closed_form_cchi(kind: str, n: int, t: int) -> int:
    """Minimum k admitting a t-relaxed 2-distant k-coloring of P_n, C_n or K_n.

    K_1 and K_2 are degenerate for t = 1 (the 3n/2 counting bound needs k >= 3)
    and return their exact values 1 and 2.
    """
    if t < 1:
        raise InvalidParameter("t must be positive")
    if kind == "path":
        if n < 3:
            raise InvalidParameter("path needs n >= 3")
        return 4 if t == 1 else 2
    if kind == "cycle":
        if n < 3:
            raise InvalidParameter("cycle needs n >= 3")
        if t == 1:
            return 5 if n == 3 else 4
        return 2 if n % 2 == 0 else 3
    if kind == "complete":
        if n < 1:
            raise InvalidParameter("complete graph needs n >= 1")
        if t >= 2 or n <= 2:
            return n
        return 3 * n // 2 if n % 2 == 0 else (3 * n + 1) // 2
    raise InvalidParameter(f"unknown family {kind!r}")


def _complete_t1_colors(n: int) -> list[int]:
    p = n // 2
    cols = [c for i in range(p) for c in (3 * i, 3 * i + 1)]
    if n % 2:
        cols.append(3 * p)
    return cols


def witness_coloring(kind: str, n: int, t: int) -> Coloring:
    """Coloring attaining :func:`closed_form_cchi`."""
    k = closed_form_cchi(kind, n, t)
    if kind == "path":
        cols = [(2 if t == 1 else 1) * (i % 2) for i in range(n)]
    elif kind == "cycle":
        if t == 1:
            if n == 3:
                cols = [0, 2, 4]
            elif n % 2 == 0:
                cols = [2 * (i % 2) for i in range(n)]
            else:
                cols = [2 * (i % 2) for i in range(n - 3)] + [0, 1, 3]
        else:
            cols = [i % 2 for i in range(n)]
            if n % 2:
                cols[-1] = 2
    else:
        if t >= 2 or n <= 2:
            cols = list(range(n))
        else:
            cols = _complete_t1_colors(n)
    return Coloring(k, tuple(cols))


def family_graph(kind: str, n: int) -> Graph:
    return make_family(kind, n)


# -- G5 ---------------------------------------------------------------------


def g5_names() -> dict[str, int]:
    """Name -> id; ids follow the exterior cycle x, y1, u1, v1, y2, ..., v5, y6."""
    names = {"x": 0}
    for i in range(1, 6):
        names[f"y{i}"] = 3 * i - 2
        names[f"u{i}"] = 3 * i - 1
        names[f"v{i}"] = 3 * i
    names["y6"] = 16
    return names


def gen_G5() -> tuple[Graph, OuterEmbedding]:
    nm = g5_names()
    edges = [(nm["x"], nm[f"y{i}"]) for i in range(1, 7)]
    for i in range(1, 6):
        edges += [
            (nm[f"y{i}"], nm[f"u{i}"]),
            (nm[f"u{i}"], nm[f"v{i}"]),
            (nm[f"v{i}"], nm[f"y{i + 1}"]),
        ]
    return Graph.from_edges(17, edges), OuterEmbedding(tuple(range(17)))


def g5_defective_coloring() -> Coloring:
    """x, every u_i and v_i get 0; every y_j gets 2 (k = 4)."""
    nm = g5_names()
    cols = [0] * 17
    for j in range(1, 7):
        cols[nm[f"y{j}"]] = 2
    return Coloring(4, tuple(cols))


# -- H(m) -------------------------------------------------------------------


def h_names(m: int) -> dict[str, int]:
    """Ids in exterior order x, x1..xm, y, y1..ym, z, z1..zm."""
    names = {}
    for b, hub in enumerate("xyz"):
        base = b * (m + 1)
        names[hub] = base
        for i in range(1, m + 1):
            names[f"{hub}{i}"] = base + i
    return names


def gen_H(m: int) -> tuple[Graph, OuterEmbedding]:
    if m < 0:
        raise InvalidParameter("m must be nonnegative")
    nm = h_names(m)
    edges = [(nm["x"], nm["y"]), (nm["y"], nm["z"]), (nm["z"], nm["x"])]
    for hub, nxt in (("x", "y"), ("y", "z"), ("z", "x")):
        for i in range(1, m + 1):
            edges.append((nm[hub], nm[f"{hub}{i}"]))
        for i in range(1, m):
            edges.append((nm[f"{hub}{i}"], nm[f"{hub}{i + 1}"]))
        if m >= 1:
            edges.append((nm[f"{hub}{m}"], nm[nxt]))
    n = 3 * (m + 1)
    return Graph.from_edges(n, edges), OuterEmbedding(tuple(range(n)))


def h_witness(t: int) -> Coloring:
    """k = 4 coloring of H(2t-2) with (RT(x), RT(y), RT(z)) = (t+1, t+1, t)."""
    if t < 2:
        raise InvalidParameter("h_witness needs t >= 2")
    m = 2 * t - 2
    nm = h_names(m)
    cols = [0] * (3 * (m + 1))
    cols[nm["x"]], cols[nm["y"]], cols[nm["z"]] = 0, 1, 2
    for i in range(1, t):
        cols[nm[f"x{2 * i - 1}"]] = 2
        cols[nm[f"x{2 * i}"]] = 3
        cols[nm[f"y{2 * i - 1}"]] = 3
        cols[nm[f"y{2 * i}"]] = 0
        cols[nm[f"z{2 * i - 1}"]] = 0
        cols[nm[f"z{2 * i}"]] = 1
    return Coloring(4, tuple(cols))


# -- random outerplanar corpus ---------------------------------------------


@lru_cache(maxsize=None)
def _triangulations(m: int) -> int:
    """Number of triangulations of a convex m-gon (Catalan(m-2)); 1 for m <= 3."""
    if m <= 3:
        return 1
    # apex choices over the base edge of an m-gon
    return sum(_triangulations(a + 1) * _triangulations(m - a) for a in range(1, m - 1))


def random_triangulation(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Diagonals of a uniformly random triangulation of the polygon 0..n-1."""
    diagonals = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        size = j - i + 1
        if size < 3:
            continue
        weights = [(_triangulations(a - i + 1) * _triangulations(j - a + 1)) for a in range(i + 1, j)]
        r = rng.randrange(sum(weights))
        for a, w in zip(range(i + 1, j), weights):
            if r < w:
                break
            r -= w
        for e in ((i, a), (a, j)):
            if e[1] - e[0] > 1:
                diagonals.append(e)
                stack.append(e)
    return diagonals


def random_outerplanar(n: int, edge_keep_prob: float, seed: int,
                       shuffle: bool = True) -> tuple[Graph, OuterEmbedding]:
    """Random triangulated n-gon with each diagonal kept with ``edge_keep_prob``.

    Polygon sides are always kept, so the result is 2-connected.  With
    ``shuffle`` the vertex ids are a seeded permutation of the polygon order.
    """
    if n < 3:
        raise InvalidParameter("n must be at least 3")
    if not 0.0 <= edge_keep_prob <= 1.0:
        raise InvalidParameter("edge_keep_prob must lie in [0, 1]")
    rng = random.Random(seed)
    diagonals = random_triangulation(n, rng)
    kept = [e for e in diagonals if rng.random() < edge_keep_prob]
    perm = list(range(n))
    if shuffle:
        rng.shuffle(perm)
    sides = [(i, (i + 1) % n) for i in range(n)]
    g = Graph.from_edges(n, ((perm[a], perm[b]) for a, b in sides + kept))
    return g, OuterEmbedding(tuple(perm))


def small_graphs(n: int) -> list[Graph]:
    """All graphs on exactly ``n`` vertices up to isomorphism (n <= 7)."""
    import networkx as nx

    if not 0 <= n <= 7:
        raise InvalidParameter("the graph atlas covers n <= 7")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            out.append(Graph.from_edges(n, h.edges()))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def search_not_colorable_outerplanar(k: int, t: int, sizes=range(4, 13), samples: int = 200,
                                     seed: int = 0, semantics: str = "relaxed"):
    """Scan seeded random outerplanar graphs for one that is not colorable.

    Returns ``(graph, embedding)`` with the fewest vertices found, or None.
    Used to exhibit outerplanar graphs that are not (5/2,1)*-colorable.
    """
    from .solver import SolverConfig, decide

    rng = random.Random(seed)
    for n in sizes:
        for _ in range(samples):
            g, emb = random_outerplanar(n, rng.random(), rng.randrange(2**31), shuffle=False)
            if decide(g, SolverConfig(semantics, k, t)) is None:
                return g, emb
    return None
