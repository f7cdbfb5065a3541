"""Reduction gadgets and the coloring transfers that go with them.

Four constructions, each paired with a source problem on the original graph:

=============  =====================================  ==============================
kind           construction                           source -> target
=============  =====================================  ==============================
``p4``         every edge becomes a path u-x-y-v      (4,1)-defective -> (4/2,1)*
``gadget_A``   path u-x-y-v, x and y each joined to   (4,t)-defective -> (4/2,t)*
               both ends of t-1 disjoint K_2's
``blowup``     composition G[K_p^c], p = k*t + 1      k/2-coloring -> (k/2,t)*
``cliques``    a K_{floor(k/2)(d+1)} glued at each v  k/2-coloring -> (k/2,d)
=============  =====================================  ==============================

"(k,d)-defective" is the classical same-color budget; it is the defective
semantics with ``q = 1``.  Original vertices keep ids ``0..n-1`` for ``p4``,
``gadget_A`` and ``cliques``; gadget vertices are appended edge by edge (or
vertex by vertex) in sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InvalidInput, InvalidParameter, InvariantViolation
from .graph import Edge, Graph
from .semantics import Coloring, check_defective, check_relaxed
from .solver import DEFAULT_NODE_LIMIT, SolverConfig, decide


@dataclass(frozen=True)
class ReductionInstance:
    constructed: Graph
    original: Graph
    kind: str
    original_vertex_map: dict[int, int]
    edge_gadget_map: dict[Edge, tuple[int, ...]] = field(default_factory=dict)
    # blow-up classes V_i, or the clique K_v of each vertex
    vertex_groups: dict[int, tuple[int, ...]] = field(default_factory=dict)
    params: dict[str, int] = field(default_factory=dict)

    def expected_size(self) -> tuple[int, int]:
        """Closed-form (vertex count, edge count) for this construction."""
        n, m = self.original.n, self.original.m
        if self.kind == "p4":
            return n + 2 * m, 3 * m
        if self.kind == "gadget_A":
            t = self.params["t"]
            return n + m * (2 + 4 * (t - 1)), m * (3 + 6 * (t - 1))
        if self.kind == "blowup":
            p = self.params["p"]
            return n * p, m * p * p
        if self.kind == "cliques":
            s = self.params["clique"]
            return n * s, m + n * comb(s, 2)
        raise InvalidParameter(self.kind)


def subdivide_p4(g: Graph) -> ReductionInstance:
    """Replace each edge uv by a path u-x-y-v."""
    edges = []
    gadgets = {}
    nxt = g.n
    for u, v in g.sorted_edges():
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(u, x), (x, y), (y, v)]
        gadgets[(u, v)] = (x, y)
    return ReductionInstance(
        constructed=Graph.from_edges(nxt, edges),
        original=g,
        kind="p4",
        original_vertex_map={v: v for v in range(g.n)},
        edge_gadget_map=gadgets,
    )


def gadget_A(g: Graph, t: int) -> ReductionInstance:
    """Replace each edge uv by A_{t-1}(u, v).

    Gadget layout per edge: ``x, y``, then the t-1 K_2 pairs at ``x``, then the
    t-1 pairs at ``y``.
    """
    if t < 2:
        raise InvalidParameter("gadget A needs t >= 2")
    edges = []
    gadgets = {}
    nxt = g.n
    for u, v in g.sorted_edges():
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(u, x), (x, y), (y, v)]
        ids = [x, y]
        for hub in (x, y):
            for _ in range(t - 1):
                a, b = nxt, nxt + 1
                nxt += 2
                edges += [(a, b), (hub, a), (hub, b)]
                ids += [a, b]
        gadgets[(u, v)] = tuple(ids)
    return ReductionInstance(
        constructed=Graph.from_edges(nxt, edges),
        original=g,
        kind="gadget_A",
        original_vertex_map={v: v for v in range(g.n)},
        edge_gadget_map=gadgets,
        params={"t": t},
    )


def blowup_compose(g: Graph, p: int) -> ReductionInstance:
    """Composition G[K_p^c]; vertex (v_i, w_j) gets id ``i*p + j``."""
    if p < 1:
        raise InvalidParameter("p must be positive")
    edges = [(u * p + a, v * p + b) for u, v in g.sorted_edges() for a in range(p) for b in range(p)]
    groups = {v: tuple(range(v * p, (v + 1) * p)) for v in range(g.n)}
    return ReductionInstance(
        constructed=Graph.from_edges(g.n * p, edges),
        original=g,
        kind="blowup",
        original_vertex_map={v: v * p for v in range(g.n)},
        vertex_groups=groups,
        params={"p": p},
    )


def attach_cliques(g: Graph, k: int, d: int) -> ReductionInstance:
    """Glue a copy of K_{floor(k/2)(d+1)} onto every vertex."""
    if k < 5 or d < 1:
        raise InvalidParameter("attach_cliques needs k >= 5 and d >= 1")
    s = (k // 2) * (d + 1)
    edges = list(g.sorted_edges())
    groups = {}
    nxt = g.n
    for v in range(g.n):
        members = [v] + list(range(nxt, nxt + s - 1))
        nxt += s - 1
        edges += [(a, b) for i, a in enumerate(members) for b in members[i + 1:]]
        groups[v] = tuple(members)
    return ReductionInstance(
        constructed=Graph.from_edges(nxt, edges),
        original=g,
        kind="cliques",
        original_vertex_map={v: v for v in range(g.n)},
        vertex_groups=groups,
        params={"k": k, "d": d, "clique": s},
    )


# -- coloring transfers -----------------------------------------------------


def p4_internal_colors(a: int, b: int) -> tuple[int, int]:
    """Colors for x, y so that a-x-y-b is a (4/2,1)*-coloring of P_4.

    Unequal ends get no relaxations; equal ends get exactly one each.
    """
    if not (0 <= a < 4 and 0 <= b < 4):
        raise InvalidInput("colors must lie in 0..3")
    diff = (b - a) % 4
    if diff == 0:
        return (a + 1) % 4, (a + 3) % 4
    if diff == 1:
        return (a + 2) % 4, (a + 3) % 4
    if diff == 2:
        return (a + 2) % 4, a
    # b = a - 1: the diff == 1 case read from the other end
    y, x = (b + 2) % 4, (b + 3) % 4
    return x, y


def classical_defective(g: Graph, colors, k: int, d: int):
    """Report for a (k,d)-defective coloring (same-color budget ``d``)."""
    return check_defective(g, Coloring(k, tuple(colors), q=1), d)


def lift_p4(inst: ReductionInstance, f: Coloring) -> Coloring:
    """(4/2,1)*-coloring of the subdivided graph from a (4,1)-defective coloring."""
    if inst.kind != "p4":
        raise InvalidInput("instance is not a P4 subdivision")
    if not classical_defective(inst.original, f.colors, 4, 1).valid:
        raise InvalidInput("source coloring is not (4,1)-defective")
    cols = list(f.colors) + [0] * (inst.constructed.n - inst.original.n)
    for (u, v), (x, y) in inst.edge_gadget_map.items():
        cols[x], cols[y] = p4_internal_colors(f[u], f[v])
    return Coloring(4, tuple(cols))


def lift_gadget_A(inst: ReductionInstance, f: Coloring, t: int | None = None) -> Coloring:
    """(4/2,t)*-coloring of G_t* from a (4,t)-defective coloring of G."""
    if inst.kind != "gadget_A":
        raise InvalidInput("instance is not a gadget-A construction")
    t = inst.params["t"] if t is None else t
    if t != inst.params["t"]:
        raise InvalidParameter("t differs from the instance's t")
    if not classical_defective(inst.original, f.colors, 4, t).valid:
        raise InvalidInput(f"source coloring is not (4,{t})-defective")
    cols = list(f.colors) + [0] * (inst.constructed.n - inst.original.n)
    pairs = t - 1
    for (u, v), ids in inst.edge_gadget_map.items():
        x, y = ids[0], ids[1]
        a = f[u]
        if f[u] == f[v]:
            cx, cy = (a + 1) % 4, (a + 3) % 4
            at_x = ((a + 2) % 4, (a + 3) % 4)
            at_y = (a, (a + 1) % 4)
        else:
            cx, cy = p4_internal_colors(f[u], f[v])
            at_x = ((cx + 1) % 4, (cx + 2) % 4)
            at_y = ((cy + 1) % 4, (cy + 2) % 4)
        cols[x], cols[y] = cx, cy
        rest = ids[2:]
        for j in range(pairs):
            cols[rest[2 * j]], cols[rest[2 * j + 1]] = at_x
        for j in range(pairs, 2 * pairs):
            cols[rest[2 * j]], cols[rest[2 * j + 1]] = at_y
    return Coloring(4, tuple(cols))


def restrict_to_originals(inst: ReductionInstance, f: Coloring) -> Coloring:
    """h(v) = g(v) for original vertices (projection for p4, gadget_A, cliques)."""
    return Coloring(f.k, tuple(f[inst.original_vertex_map[v]] for v in range(inst.original.n)), f.q)


def lift_blowup(inst: ReductionInstance, f: Coloring) -> Coloring:
    """Copy each vertex color to its whole class."""
    p = inst.params["p"]
    return Coloring(f.k, tuple(f[i // p] for i in range(inst.constructed.n)), f.q)


def project_blowup(inst: ReductionInstance, gstar: Coloring, t: int, verify: bool = False) -> Coloring:
    """Give each original vertex the smallest color used at least t+1 times in its class.

    With ``verify`` the input must be a (k/2,t)*-coloring of the blow-up with
    p = k*t + 1; the result is then a k/2-coloring of the original graph.
    """
    if inst.kind != "blowup":
        raise InvalidInput("instance is not a blow-up")
    if verify:
        if inst.params["p"] != gstar.k * t + 1:
            raise InvalidInput("class size must be k*t + 1")
        if not check_relaxed(inst.constructed, gstar, t).valid:
            raise InvalidInput(f"coloring is not ({gstar.k}/2,{t})*-valid on the blow-up")
    cols = []
    for v in range(inst.original.n):
        counts = [0] * gstar.k
        for w in inst.vertex_groups[v]:
            counts[gstar[w]] += 1
        c = next((c for c in range(gstar.k) if counts[c] >= t + 1), None)
        if c is None:
            raise InvariantViolation(f"no color appears {t + 1} times in class {v}")
        cols.append(c)
    return Coloring(gstar.k, tuple(cols), gstar.q)


def lift_cliques(inst: ReductionInstance, f: Coloring) -> Coloring:
    """(k/2,d)-coloring of G* from a k/2-coloring of G.

    K_v receives the colors f(v), f(v)+2, ... (floor(k/2) of them), each d+1
    times; ``v`` keeps f(v).
    """
    if inst.kind != "cliques":
        raise InvalidInput("instance is not a clique attachment")
    k, d = inst.params["k"], inst.params["d"]
    if f.k != k:
        raise InvalidParameter(f"coloring uses k={f.k}, instance built for k={k}")
    if not check_relaxed(inst.original, f, 0).valid:
        raise InvalidInput(f"source coloring is not a {k}/2-coloring")
    cols = list(f.colors) + [0] * (inst.constructed.n - inst.original.n)
    for v, members in inst.vertex_groups.items():
        multiset = [(f[v] + 2 * i) % k for i in range(k // 2) for _ in range(d + 1)]
        multiset.remove(f[v])
        for w, c in zip(members[1:], multiset):
            cols[w] = c
    return Coloring(k, tuple(cols))


def map_42d_to_2d(f: Coloring) -> Coloring:
    """{0,1} -> 0 and {2,3} -> 1; the result is read with the same-color budget."""
    if f.k != 4:
        raise InvalidParameter("expects a k = 4 coloring")
    return Coloring(2, tuple(0 if c < 2 else 1 for c in f.colors), q=1)


def map_2d_to_42d(g2: Coloring) -> Coloring:
    """0 -> 0 and 1 -> 2."""
    if g2.k != 2:
        raise InvalidParameter("expects a k = 2 coloring")
    return Coloring(4, tuple(2 * c for c in g2.colors), q=2)


# -- equivalence checks -----------------------------------------------------


def build(kind: str, g: Graph, **params) -> ReductionInstance:
    if kind == "p4":
        return subdivide_p4(g)
    if kind == "gadget_A":
        return gadget_A(g, params["t"])
    if kind == "blowup":
        return blowup_compose(g, params["k"] * params["t"] + 1)
    if kind == "cliques":
        return attach_cliques(g, params["k"], params["d"])
    raise InvalidParameter(f"unknown reduction {kind!r}")


def source_config(kind: str, **params) -> SolverConfig:
    """Solver configuration of the source problem on the original graph."""
    lim = params.get("node_limit", DEFAULT_NODE_LIMIT)
    if kind == "p4":
        return SolverConfig("defective", 4, 1, q=1, node_limit=lim)
    if kind == "gadget_A":
        return SolverConfig("defective", 4, params["t"], q=1, node_limit=lim)
    if kind in ("blowup", "cliques"):
        return SolverConfig("relaxed", params["k"], 0, node_limit=lim)
    if kind == "42d":
        return SolverConfig("defective", 2, params["d"], q=1, node_limit=lim)
    raise InvalidParameter(f"unknown reduction {kind!r}")


def target_config(kind: str, **params) -> SolverConfig:
    """Solver configuration of the target problem on the constructed graph."""
    lim = params.get("node_limit", DEFAULT_NODE_LIMIT)
    if kind == "p4":
        return SolverConfig("relaxed", 4, 1, node_limit=lim)
    if kind == "gadget_A":
        return SolverConfig("relaxed", 4, params["t"], node_limit=lim)
    if kind == "blowup":
        return SolverConfig("relaxed", params["k"], params["t"], node_limit=lim)
    if kind == "cliques":
        return SolverConfig("defective", params["k"], params["d"], node_limit=lim)
    if kind == "42d":
        return SolverConfig("defective", 4, params["d"], node_limit=lim)
    raise InvalidParameter(f"unknown reduction {kind!r}")


@dataclass(frozen=True)
class EquivalenceResult:
    source: bool
    target: bool
    source_witness: Coloring | None
    target_witness: Coloring | None

    @property
    def agree(self) -> bool:
        return self.source == self.target


def check_equivalence(kind: str, g: Graph, **params) -> EquivalenceResult:
    """Decide the source problem on ``g`` and the target problem on its instance."""
    src = decide(g, source_config(kind, **params))
    target_graph = g if kind == "42d" else build(kind, g, **params).constructed
    dst = decide(target_graph, target_config(kind, **params))
    return EquivalenceResult(src is not None, dst is not None, src, dst)
