"""OBFT-based colorings of outerplanar graphs.

* :func:`color_tree_52` colors the ordered BFS tree with 5 colors so that every
  tree edge is at circular distance exactly 2.  Sons of consecutive sonful
  vertices with empty Int are chained so that the boundary sons differ by 1;
  this is what keeps every non-tree edge properly colored.
* :func:`color_outerplanar_52` lifts that to a (5/2, 4)*-coloring of the graph.
* :func:`color_outerplanar_42_defective` colors by layer parity (0 / 2), a
  (4/2, 2)-coloring.
"""

from __future__ import annotations

from typing import Callable

from .errors import InvalidInput, InvariantViolation
from .graph import Graph, OuterEmbedding, validate_outer_embedding
from .obft import ObftPartition, interior_set, obft_partition
from .semantics import Coloring


def _d5(a: int, b: int) -> int:
    d = abs(a - b) % 5
    return min(d, 5 - d)


def _alternate(sons, start: int, other: int, f: list[int]) -> None:
    for j, s in enumerate(sons):
        f[s] = start if j % 2 == 0 else other


def color_tree_52(p: ObftPartition) -> Coloring:
    """Algorithm producing a (5/2, 0)*-coloring of the OBFT tree."""
    f = [-1] * p.n
    f[p.root] = 0
    _alternate(p.sons[p.root], 2, 3, f)
    for i in range(1, p.layer_count - 1):
        lay = p.layers[i]
        for j, v in enumerate(lay):
            if not p.sons[v]:
                continue
            a, b = (f[v] + 2) % 5, (f[v] + 3) % 5
            start, other = a, b
            left = lay[j - 1] if j > 0 else None
            if left is not None and p.sons[left] and not interior_set(p, left, v, check=False):
                target = f[p.sons[left][-1]]
                if _d5(a, target) == 1:
                    pass
                elif _d5(b, target) == 1:
                    start, other = b, a
                else:
                    raise InvariantViolation(
                        f"no son color of vertex {v} is at distance 1 from {target}; "
                        "partition or embedding is inconsistent"
                    )
            _alternate(p.sons[v], start, other, f)
    return Coloring(5, tuple(f))


def _per_component(g: Graph, emb: OuterEmbedding, r: int | None,
                   color_one: Callable[[ObftPartition], list[int]]) -> list[int]:
    if len(emb.order) != g.n or sorted(emb.order) != list(range(g.n)):
        raise InvalidInput("embedding order is not a permutation of the vertices")
    if not validate_outer_embedding(g, emb):
        raise InvalidInput("embedding is not a valid outer-face order")
    if r is not None and not 0 <= r < g.n:
        raise InvalidInput(f"root {r} is not a vertex")
    colors = [0] * g.n
    pos = emb.positions()
    for comp in g.components():
        members = set(comp)
        sub_order = [v for v in emb.order if v in members]
        sub, old = g.induced(sub_order)
        root = 0
        if r is not None and r in members:
            root = sub_order.index(r)
        else:
            root = sub_order.index(min(comp, key=pos.__getitem__))
        part = obft_partition(sub, OuterEmbedding(tuple(range(len(sub_order)))), root)
        for i, c in enumerate(color_one(part)):
            colors[old[i]] = c
    return colors


def color_outerplanar_52(g: Graph, emb: OuterEmbedding, r: int | None = None) -> Coloring:
    """(5/2, 4)*-coloring from the OBFT tree coloring.

    ``r`` defaults to the embedding's first vertex; other components are rooted
    at their first vertex in the embedding.
    """
    return Coloring(5, tuple(_per_component(g, emb, r, lambda p: list(color_tree_52(p).colors))))


def _parity(p: ObftPartition) -> list[int]:
    return [0 if p.layer[v] % 2 == 0 else 2 for v in range(p.n)]


def color_outerplanar_42_defective(g: Graph, emb: OuterEmbedding, r: int | None = None) -> Coloring:
    """Color 0 on even layers and 2 on odd layers (k = 4)."""
    return Coloring(4, tuple(_per_component(g, emb, r, _parity)))
