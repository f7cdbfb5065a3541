"""Ordered breadth-first search (OBFS) partitions of connected outerplanar graphs.

A BFS from the root ``r`` that enqueues the unvisited neighbours of each
vertex by increasing outer-face index (the position in the embedding read
from ``r``).  Discovery edges form the spanning tree; every other edge goes
to the non-tree subgraph ``H``.  Layers are listed left to right in enqueue
order and positions inside a layer are 1-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidInput
from .graph import Edge, Graph, OuterEmbedding, _norm, validate_outer_embedding


@dataclass(frozen=True)
class ObftPartition:
    root: int
    parent: tuple[int, ...]
    layer: tuple[int, ...]
    position: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]
    sons: tuple[tuple[int, ...], ...]
    tree_edges: frozenset[Edge]
    nontree_edges: frozenset[Edge]
    index: tuple[int, ...] = field(repr=False)

    @property
    def layer_count(self) -> int:
        return len(self.layers)

    @property
    def n(self) -> int:
        return len(self.parent)

    def at(self, i: int, p: int) -> int:
        """The vertex v_p^i (1-based position ``p`` in layer ``i``)."""
        return self.layers[i][p - 1]

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] >= 0:
            out.append(self.parent[out[-1]])
        return out


def obft_partition(g: Graph, emb: OuterEmbedding, r: int) -> ObftPartition:
    """OBFT partition of connected ``g`` rooted at ``r``."""
    if not 0 <= r < g.n:
        raise InvalidInput(f"root {r} is not a vertex")
    if not g.is_connected():
        raise InvalidInput("OBFT partition needs a connected graph")
    if not validate_outer_embedding(g, emb):
        raise InvalidInput("embedding is not a valid outer-face order")
    idx_map = emb.index_from(r)
    index = tuple(idx_map[v] for v in range(g.n))
    parent = [-1] * g.n
    layer = [-1] * g.n
    sons: list[list[int]] = [[] for _ in range(g.n)]
    layer[r] = 0
    layers: list[list[int]] = [[r]]
    tree: set[Edge] = set()
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in sorted((w for w in g.adjacency[u] if layer[w] < 0), key=index.__getitem__):
            layer[w] = layer[u] + 1
            parent[w] = u
            sons[u].append(w)
            if layer[w] == len(layers):
                layers.append([])
            layers[layer[w]].append(w)
            tree.add(_norm(u, w))
            queue.append(w)
    position = [0] * g.n
    for lay in layers:
        for p, v in enumerate(lay, start=1):
            position[v] = p
    return ObftPartition(
        root=r,
        parent=tuple(parent),
        layer=tuple(layer),
        position=tuple(position),
        layers=tuple(tuple(lay) for lay in layers),
        sons=tuple(tuple(s) for s in sons),
        tree_edges=frozenset(tree),
        nontree_edges=frozenset(g.edges - tree),
        index=index,
    )


def lca(p: ObftPartition, u: int, v: int) -> int:
    """Deepest common vertex of the root paths to ``u`` and ``v``."""
    while p.layer[u] > p.layer[v]:
        u = p.parent[u]
    while p.layer[v] > p.layer[u]:
        v = p.parent[v]
    while u != v:
        u, v = p.parent[u], p.parent[v]
    return u


def _path_up(p: ObftPartition, v: int, top: int) -> list[int]:
    out = [v]
    while out[-1] != top:
        out.append(p.parent[out[-1]])
    return out


def interior_set(p: ObftPartition, u: int, v: int, *, check: bool = True) -> set[int]:
    """Int(u, v): vertices inside the region bounded by the tree paths from
    LCA(u, v) to ``u`` and ``v`` and the segment ``uv``, in the layered drawing.

    For every layer strictly below the LCA and no deeper than the shallower of
    ``u``, ``v``, these are the vertices lying strictly between the two path
    vertices of that layer.  Defined when ``uv`` is a non-tree edge or ``u``,
    ``v`` are consecutive in a layer.
    """
    if check:
        consecutive = p.layer[u] == p.layer[v] and abs(p.position[u] - p.position[v]) == 1
        if _norm(u, v) not in p.nontree_edges and not consecutive:
            raise InvalidInput(f"Int({u}, {v}) undefined: not an H edge nor consecutive in a layer")
    a = lca(p, u, v)
    bottom = min(p.layer[u], p.layer[v])
    pu = {p.layer[w]: w for w in _path_up(p, u, a)}
    pv = {p.layer[w]: w for w in _path_up(p, v, a)}
    out: set[int] = set()
    for j in range(p.layer[a] + 1, bottom + 1):
        lo, hi = sorted((p.position[pu[j]], p.position[pv[j]]))
        out.update(p.layers[j][lo:hi - 1])
    return out


@dataclass
class PropertyReport:
    """Offending edges per partition property (1..5); empty lists mean pass."""

    violations: dict[int, list[Edge]]

    def passed(self, prop: int) -> bool:
        return not self.violations[prop]

    @property
    def all_passed(self) -> bool:
        return all(not v for v in self.violations.values())

    def summary(self) -> dict[int, bool]:
        return {i: self.passed(i) for i in sorted(self.violations)}


def verify_obft_properties(p: ObftPartition) -> PropertyReport:
    viol: dict[int, list[Edge]] = {i: [] for i in range(1, 6)}
    hdeg = [0] * p.n
    for u, v in p.nontree_edges:
        hdeg[u] += 1
        hdeg[v] += 1
    for u, v in p.nontree_edges:
        if hdeg[u] > 4 or hdeg[v] > 4:
            viol[1].append((u, v))
    for e in sorted(p.nontree_edges):
        u, v = e
        lu, lv = p.layer[u], p.layer[v]
        if lu == lv:
            if abs(p.position[u] - p.position[v]) != 1:
                viol[2].append(e)
                viol[5].append(e)
                continue
            left, right = (u, v) if p.position[u] < p.position[v] else (v, u)
            fl, fr = p.parent[left], p.parent[right]
            if lu > 0 and p.position[fr] - p.position[fl] not in (0, 1):
                viol[5].append(e)
            elif interior_set(p, u, v, check=False):
                viol[5].append(e)
        else:
            if abs(lu - lv) != 1:
                viol[3].append(e)
                viol[4].append(e)
                continue
            x, y = (u, v) if lu > lv else (v, u)
            father = p.parent[x]
            if (p.position[y] != p.position[father] + 1
                    or p.sons[father][-1] != x
                    or interior_set(p, x, y, check=False)):
                viol[4].append(e)
    for u, v in p.tree_edges:
        if abs(p.layer[u] - p.layer[v]) != 1:
            viol[3].append((u, v))
    return PropertyReport(viol)


def consecutive_son_pairs(p: ObftPartition):
    """Yield ``(v_p, v_{p+1}, rightmost son of v_p, leftmost son of v_{p+1})``
    for consecutive sonful vertices of one layer with empty Int."""
    for lay in p.layers[1:]:
        for a, b in zip(lay, lay[1:]):
            if p.sons[a] and p.sons[b] and not interior_set(p, a, b, check=False):
                yield a, b, p.sons[a][-1], p.sons[b][0]


def partition_dot(p: ObftPartition, colors=None, name: str = "obft") -> str:
    """DOT text: solid tree edges, dashed non-tree edges, one rank per layer.

    Node labels are 1-based ids, followed by the color when ``colors`` is given.
    """
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for i, lay in enumerate(p.layers):
        nodes = " ".join(f"v{v + 1};" for v in lay)
        lines.append(f"  {{ rank=same; {nodes} }}  // layer {i}")
    for v in range(p.n):
        label = f"{v + 1}" if colors is None else f"{v + 1}:{colors[v]}"
        lines.append(f'  v{v + 1} [label="{label}"];')
    for u, v in sorted(p.tree_edges):
        lines.append(f"  v{u + 1} -- v{v + 1};")
    for u, v in sorted(p.nontree_edges):
        lines.append(f"  v{u + 1} -- v{v + 1} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
