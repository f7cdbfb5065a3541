"""Exact backtracking oracle for relaxed and defective circular colorability.

Vertices are assigned in increasing id order and colors are tried in
increasing order, so the first solution found is the lexicographically
smallest valid coloring.  Each uncolored vertex keeps a bitmask domain that
is narrowed as soon as a colored neighbour exhausts its relaxation budget
(forward checking).

Two symmetry reductions are used:

* twins (vertices with equal open or equal closed neighbourhoods and equal
  budgets) are forced into nondecreasing colors.  Swapping two twins is an
  automorphism, and the lexicographic minimum always has twins sorted, so this
  is safe even for :func:`decide`.
* in enumeration mode with a rotation-invariant predicate the smallest vertex
  of each component is fixed to color 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .errors import InvalidParameter, ResourceLimit
from .graph import Graph
from .semantics import Coloring, relaxation_counts

DEFAULT_NODE_LIMIT = 10**8
_MEMO_CAP = 2_000_000

SEMANTICS = ("relaxed", "defective")


def _norm_semantics(s: str) -> str:
    if s in ("relaxed", "relaxed_star", "star"):
        return "relaxed"
    if s == "defective":
        return "defective"
    raise InvalidParameter(f"unknown semantics {s!r}")


@dataclass(frozen=True)
class SolverConfig:
    """What to solve: ``semantics`` with modulus ``k``, distance ``q`` and budget ``bound``.

    ``vertex_bounds`` overrides ``bound`` for individual vertices.
    """

    semantics: str
    k: int
    bound: int
    q: int = 2
    node_limit: int | None = DEFAULT_NODE_LIMIT
    vertex_bounds: Mapping[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "semantics", _norm_semantics(self.semantics))
        if self.k < 1:
            raise InvalidParameter("k must be at least 1")
        if self.q < 1:
            raise InvalidParameter("q must be at least 1")
        if self.bound < 0:
            raise InvalidParameter("bound must be nonnegative")
        if self.vertex_bounds and min(self.vertex_bounds.values()) < 0:
            raise InvalidParameter("vertex bounds must be nonnegative")

    def bounds_for(self, n: int) -> list[int]:
        b = [self.bound] * n
        for v, x in (self.vertex_bounds or {}).items():
            b[v] = x
        return b


# predicates over the per-vertex relaxation counts of a valid coloring


@dataclass(frozen=True)
class EveryVertexRelaxedAtLeast:
    x: int
    vertices: tuple[int, ...] | None = None

    def __call__(self, rt: Sequence[int]) -> bool:
        vs = range(len(rt)) if self.vertices is None else self.vertices
        return all(rt[v] >= self.x for v in vs)


@dataclass(frozen=True)
class NoVertexRelaxedMoreThan:
    x: int
    vertices: tuple[int, ...] | None = None

    def __call__(self, rt: Sequence[int]) -> bool:
        vs = range(len(rt)) if self.vertices is None else self.vertices
        return all(rt[v] <= self.x for v in vs)


@dataclass(frozen=True)
class SomeVertexRelaxedAtLeast:
    x: int
    vertices: tuple[int, ...] | None = None

    def __call__(self, rt: Sequence[int]) -> bool:
        vs = range(len(rt)) if self.vertices is None else self.vertices
        return any(rt[v] >= self.x for v in vs)


def every_vertex_relaxed_at_least(x: int, vertices=None) -> EveryVertexRelaxedAtLeast:
    return EveryVertexRelaxedAtLeast(x, None if vertices is None else tuple(vertices))


def no_vertex_relaxed_more_than(x: int, vertices=None) -> NoVertexRelaxedMoreThan:
    return NoVertexRelaxedMoreThan(x, None if vertices is None else tuple(vertices))


def some_vertex_relaxed_at_least(x: int, vertices=None) -> SomeVertexRelaxedAtLeast:
    return SomeVertexRelaxedAtLeast(x, None if vertices is None else tuple(vertices))


def twin_predecessors(g: Graph, bounds: Sequence[int], exclude=()) -> list[int]:
    """For each vertex, the previous vertex of its twin class (or -1)."""
    prev = [-1] * g.n
    skip = set(exclude)
    for closed in (False, True):
        groups: dict[tuple, list[int]] = {}
        for v in range(g.n):
            if v in skip:
                continue
            nb = set(g.adjacency[v])
            if closed:
                if not nb:
                    continue
                nb.add(v)
            groups.setdefault((tuple(sorted(nb)), bounds[v]), []).append(v)
        for members in groups.values():
            for a, b in zip(members, members[1:]):
                if prev[b] == -1:
                    prev[b] = a
    return prev


class _Search:
    def __init__(self, g: Graph, cfg: SolverConfig, pins: Mapping[int, int] | None,
                 twins: bool, anchor_components: bool):
        self.g = g
        self.n = n = g.n
        self.k = k = cfg.k
        self.q = cfg.q
        self.relaxed = cfg.semantics == "relaxed"
        self.bnd = cfg.bounds_for(n)
        self.limit = cfg.node_limit
        self.nodes = 0
        near = []
        for c in range(k):
            mask = 0
            for d in range(k):
                dd = abs(c - d)
                if min(dd, k - dd) < cfg.q:
                    mask |= 1 << d
            near.append(mask)
        self.near = near
        self.back = [[u for u in g.adjacency[v] if u < v] for v in range(n)]
        self.fwd = [[u for u in g.adjacency[v] if u > v] for v in range(n)]
        full = (1 << k) - 1
        self.dom = [full] * n
        pins = dict(pins or {})
        for v, c in pins.items():
            if not 0 <= c < k:
                raise InvalidParameter(f"pinned color {c} out of range")
            self.dom[v] = 1 << c
        if anchor_components:
            for comp in g.components():
                if comp[0] not in pins:
                    self.dom[comp[0]] = 1
        self.prev = twin_predecessors(g, self.bnd, exclude=pins) if twins else [-1] * n
        self.color = [-1] * n
        self.rt = [0] * n
        # colored vertices that still influence the suffix v..n-1
        reach = [max(self.fwd[u], default=-1) for u in range(n)]
        for w, p in enumerate(self.prev):
            if p >= 0:
                reach[p] = max(reach[p], w)
        self.frontier = [tuple(u for u in range(v) if reach[u] >= v) for v in range(n + 1)]
        self.dead: set = set()
        self.solutions = 0

    def run(self, on_solution: Callable[[list[int]], bool]) -> bool:
        """Depth-first search; returns True if ``on_solution`` asked to stop."""
        if self.n == 0:
            return on_solution([])
        return self._rec(0, on_solution)

    def _rec(self, v: int, on_solution) -> bool:
        if v == self.n:
            self.solutions += 1
            return on_solution(self.color)
        color, rt, dom, near, bnd = self.color, self.rt, self.dom, self.near, self.bnd
        # the suffix only sees the frontier's colors and spent budgets
        key = (v, tuple((color[u], rt[u]) for u in self.frontier[v]))
        if key in self.dead:
            return False
        before = self.solutions
        back, fwd = self.back[v], self.fwd[v]
        relaxed = self.relaxed
        mask = dom[v]
        p = self.prev[v]
        if p >= 0:
            mask &= ~((1 << color[p]) - 1)
        bv = bnd[v]
        c = -1
        while mask:
            low = mask & -mask
            c = low.bit_length() - 1
            mask ^= low
            self.nodes += 1
            if self.limit is not None and self.nodes > self.limit:
                raise ResourceLimit(self.nodes)
            nm = near[c]
            hits = [u for u in back if (nm >> color[u]) & 1]
            if len(hits) > bv:
                continue
            trail: list[tuple[int, int]] = []
            ok = True
            for u in hits:
                rt[u] += 1
            for u in hits:
                if rt[u] == bnd[u] and ok:
                    cut = ~near[color[u]]
                    for w in self.fwd[u]:
                        if w > v:
                            old = dom[w]
                            new = old & cut
                            if new != old:
                                trail.append((w, old))
                                dom[w] = new
                                if not new:
                                    ok = False
                                    break
            if ok:
                cut = -1
                if relaxed:
                    cut &= ~low
                if len(hits) == bv:
                    cut &= ~nm
                if cut != -1:
                    for w in fwd:
                        old = dom[w]
                        new = old & cut
                        if new != old:
                            trail.append((w, old))
                            dom[w] = new
                            if not new:
                                ok = False
                                break
            if ok:
                color[v] = c
                rt[v] = len(hits)
                stop = self._rec(v + 1, on_solution)
                color[v] = -1
                rt[v] = 0
            else:
                stop = False
            for w, old in reversed(trail):
                dom[w] = old
            for u in hits:
                rt[u] -= 1
            if stop:
                return True
        if self.solutions == before and len(self.dead) < _MEMO_CAP:
            self.dead.add(key)
        return False


def decide(g: Graph, cfg: SolverConfig, pins: Mapping[int, int] | None = None) -> Coloring | None:
    """Lexicographically smallest coloring valid under ``cfg``, or None if none exists."""
    search = _Search(g, cfg, pins, twins=True, anchor_components=False)
    found: list[list[int]] = []

    def take(colors):
        found.append(list(colors))
        return True

    search.run(take)
    if not found:
        return None
    return Coloring(cfg.k, tuple(found[0]), cfg.q)


def is_colorable(g: Graph, semantics: str, k: int, bound: int, q: int = 2,
                 node_limit: int | None = DEFAULT_NODE_LIMIT) -> bool:
    return decide(g, SolverConfig(semantics, k, bound, q, node_limit)) is not None


def iter_valid_colorings(g: Graph, cfg: SolverConfig, pins: Mapping[int, int] | None = None,
                         limit: int | None = None) -> list[Coloring]:
    """All valid colorings (no symmetry reduction), in lexicographic order."""
    search = _Search(g, cfg, pins, twins=False, anchor_components=False)
    out: list[Coloring] = []

    def take(colors):
        out.append(Coloring(cfg.k, tuple(colors), cfg.q))
        return limit is not None and len(out) >= limit

    search.run(take)
    return out


def forall_valid_colorings(g: Graph, cfg: SolverConfig, predicate: Callable[[Sequence[int]], bool],
                           pins: Mapping[int, int] | None = None) -> bool:
    """True iff every coloring accepted under ``cfg`` satisfies ``predicate``.

    ``predicate`` receives the per-vertex relaxation counts.  It is vacuously
    true when no valid coloring exists.  With ``pins`` no symmetry reduction
    is applied.
    """
    restricted = getattr(predicate, "vertices", None) is not None
    symmetric = not pins
    search = _Search(g, cfg, pins, twins=symmetric and not restricted,
                     anchor_components=symmetric)
    failed: list[list[int]] = []

    def check(colors):
        rt = relaxation_counts(g, colors, cfg.k, cfg.q)
        if not predicate(rt):
            failed.append(list(colors))
            return True
        return False

    search.run(check)
    return not failed


def min_k(g: Graph, semantics: str, bound: int, q: int = 2,
          node_limit: int | None = DEFAULT_NODE_LIMIT) -> int:
    """Smallest k for which ``g`` is colorable under ``semantics`` with budget ``bound``."""
    sem = _norm_semantics(semantics)
    if g.n == 0:
        return 1
    start = 1 if (sem == "defective" or g.m == 0) else 2
    for k in range(start, 2 * q * g.n + 1):
        if decide(g, SolverConfig(sem, k, bound, q, node_limit)) is not None:
            return k
    raise AssertionError("unreachable: k = q*n always admits a q-distant coloring")


def chromatic_number(g: Graph, node_limit: int | None = DEFAULT_NODE_LIMIT) -> int:
    """Ordinary chromatic number via the same engine (q = 1, no relaxations)."""
    if g.n == 0:
        return 0
    return min_k(g, "relaxed", 0, q=1, node_limit=node_limit)
