"""Simple undirected graphs, basic families and outer-face embeddings.

Vertices are dense integers ``0..n-1``.  An :class:`OuterEmbedding` is a cyclic
order of all vertices; it witnesses outerplanarity when no two edges cross
as chords of a circle drawn in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidParameter, InvariantViolation

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; ``adjacency[v]``
    is the sorted tuple of neighbours of ``v``.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise InvalidParameter("vertex count must be nonnegative")
        es: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            uv = _norm(u, v)
            if uv in es:
                raise InvalidInput(f"parallel edge {uv}")
            es.add(uv)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, frozenset(es), adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len-1``; returns it with the old ids."""
        idx = {v: i for i, v in enumerate(vertices)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return Graph.from_edges(len(vertices), es), list(vertices)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class OuterEmbedding:
    """Cyclic vertex order; position 0 is the designated start."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def index_from(self, r: int) -> dict[int, int]:
        """Index of every vertex when the cyclic order is read starting at ``r``."""
        pos = self.positions()
        n = len(self.order)
        p0 = pos[r]
        return {v: (p - p0) % n for v, p in pos.items()}


def make_family(kind: str, n: int) -> Graph:
    """``path`` P_n, ``cycle`` C_n, ``complete`` K_n or ``empty`` (edgeless) graph."""
    if n < 1:
        raise InvalidParameter("n must be positive")
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise InvalidParameter("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "complete":
        return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind == "empty":
        return Graph.from_edges(n, ())
    raise InvalidParameter(f"unknown family {kind!r}")


def _check_permutation(g: Graph, order: Sequence[int]) -> None:
    if len(order) != g.n or sorted(order) != list(range(g.n)):
        raise InvalidInput("embedding order is not a permutation of the vertices")


def _chords_cross(n_pos: int, chords: list[tuple[int, int]]) -> bool:
    # chords are (l, r) with l < r; two cross iff l1 < l2 < r1 < r2
    chords = sorted(chords, key=lambda c: (c[0], -c[1]))
    stack: list[int] = []
    for l, r in chords:
        while stack and stack[-1] <= l:
            stack.pop()
        if stack and stack[-1] < r:
            return True
        stack.append(r)
    return False


def validate_outer_embedding(g: Graph, emb: OuterEmbedding) -> bool:
    """True iff no two edges strictly interleave in the cyclic order."""
    _check_permutation(g, emb.order)
    pos = emb.positions()
    chords = []
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        chords.append((a, b) if a < b else (b, a))
    return not _chords_cross(g.n, chords)


def find_outer_embedding(g: Graph) -> OuterEmbedding | None:
    """Outer-face order, or None when ``g`` is not outerplanar.

    ``g`` is outerplanar iff ``g`` plus one apex vertex joined to every vertex
    is planar.  In a planar embedding of that graph nothing crosses the rays
    leaving the apex, so the cyclic order of its neighbours is an outer-face
    order of ``g``.  The result starts at vertex 0 and runs in the direction
    whose second vertex is smaller.  A 2-connected outerplanar graph has a
    unique outer cycle, so there this is the lexicographically smallest valid
    order.
    """
    import networkx as nx

    if g.n <= 3:
        return OuterEmbedding(tuple(range(g.n)))
    if g.m > 2 * g.n - 3:
        return None
    apex = g.n
    h = nx.Graph()
    h.add_nodes_from(range(g.n + 1))
    h.add_edges_from(g.edges)
    h.add_edges_from((apex, v) for v in range(g.n))
    planar, emb = nx.check_planarity(h)
    if not planar:
        return None
    ring = list(emb.neighbors_cw_order(apex))
    start = ring.index(0)
    ring = ring[start:] + ring[:start]
    if len(ring) > 2 and ring[-1] < ring[1]:
        ring = ring[:1] + ring[:0:-1]
    result = OuterEmbedding(tuple(ring))
    if not validate_outer_embedding(g, result):
        raise InvariantViolation("apex rotation produced crossing chords")
    return result
