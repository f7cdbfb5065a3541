"""Circular distance and the two relaxation semantics.

``check_relaxed`` implements t-relaxed q-distant circular k-colorings: adjacent
vertices must get distinct colors and each vertex may have at most ``t``
neighbours at circular distance below ``q``.  ``check_defective`` drops the
distinctness requirement (equal colors count as a relaxation).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidInput, InvalidParameter
from .graph import Graph


def circ_dist(i: int, j: int, k: int) -> int:
    """``min(|i-j|, k-|i-j|)`` for colors in ``[0, k)``."""
    if k < 1:
        raise InvalidParameter("k must be positive")
    if not (0 <= i < k and 0 <= j < k):
        raise InvalidInput(f"colors ({i}, {j}) out of range for k={k}")
    d = abs(i - j)
    return min(d, k - d)


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in ``[0, k)``; ``colors[v]`` is the color of ``v``."""

    k: int
    colors: tuple[int, ...]
    q: int = 2

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise InvalidParameter("k must be positive")
        if self.q < 1:
            raise InvalidParameter("q must be positive")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise InvalidInput(f"vertex {v} has color {c} outside [0, {self.k})")

    @classmethod
    def from_mapping(cls, k: int, mapping: Mapping[int, int], n: int, q: int = 2) -> "Coloring":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise InvalidInput(f"coloring is partial; uncolored vertices {missing[:5]}")
        return cls(k, tuple(mapping[v] for v in range(n)), q)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def rotated(self, shift: int = 1) -> "Coloring":
        return Coloring(self.k, tuple((c + shift) % self.k for c in self.colors), self.q)

    def reflected(self) -> "Coloring":
        return Coloring(self.k, tuple((self.k - 1 - c) % self.k for c in self.colors), self.q)


@dataclass(frozen=True)
class ColoringReport:
    relaxations: tuple[int, ...]
    max_relaxations: int
    proper: bool
    histogram: tuple[int, ...]
    valid: bool
    semantics: str
    bound: int

    def relaxed_edges(self) -> int:
        return sum(self.relaxations) // 2


def relaxation_counts(g: Graph, colors: Sequence[int], k: int, q: int = 2) -> list[int]:
    """Per-vertex number of neighbours at circular distance below ``q``."""
    rt = [0] * g.n
    for u, v in g.edges:
        d = abs(colors[u] - colors[v])
        if min(d, k - d) < q:
            rt[u] += 1
            rt[v] += 1
    return rt


def _report(g: Graph, f: Coloring, semantics: str, bound: int) -> ColoringReport:
    if bound < 0:
        raise InvalidParameter("relaxation bound must be nonnegative")
    if len(f.colors) != g.n:
        raise InvalidInput(f"coloring covers {len(f.colors)} of {g.n} vertices")
    rt = relaxation_counts(g, f.colors, f.k, f.q)
    proper = all(f.colors[u] != f.colors[v] for u, v in g.edges)
    hist = Counter(f.colors)
    mx = max(rt, default=0)
    valid = mx <= bound and (proper or semantics == "defective")
    return ColoringReport(
        relaxations=tuple(rt),
        max_relaxations=mx,
        proper=proper,
        histogram=tuple(hist.get(c, 0) for c in range(f.k)),
        valid=valid,
        semantics=semantics,
        bound=bound,
    )


def check_relaxed(g: Graph, f: Coloring, t: int) -> ColoringReport:
    """Report for the t-relaxed semantics: proper and at most ``t`` relaxations per vertex."""
    return _report(g, f, "relaxed", t)


def check_defective(g: Graph, f: Coloring, d: int) -> ColoringReport:
    """Report for the d-defective semantics: at most ``d`` relaxations per vertex."""
    return _report(g, f, "defective", d)


def check(g: Graph, f: Coloring, semantics: str, bound: int) -> ColoringReport:
    if semantics in ("relaxed", "relaxed_star"):
        return check_relaxed(g, f, bound)
    if semantics == "defective":
        return check_defective(g, f, bound)
    raise InvalidParameter(f"unknown semantics {semantics!r}")
