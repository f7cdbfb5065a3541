"""Reproduction checks, one function per acceptance criterion.

Each check returns a :class:`CriterionResult`; a check passes only if every
comparison holds and it finished inside its time budget.  The CLI's
``verify-paper`` command and the acceptance tests both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import ResourceLimit
from .families import (closed_form_cchi, family_graph, g5_defective_coloring, gen_G5, gen_H,
                       h_witness, random_graph, random_outerplanar, small_graphs, witness_coloring)
from .graph import Graph
from .obft import consecutive_son_pairs, obft_partition, verify_obft_properties
from .outerplanar import color_outerplanar_42_defective, color_outerplanar_52
from .reductions import (build, check_equivalence, classical_defective, lift_blowup, lift_cliques,
                         lift_gadget_A, lift_p4, project_blowup, restrict_to_originals)
from .semantics import Coloring, check_defective, check_relaxed, circ_dist
from .solver import (SolverConfig, decide, every_vertex_relaxed_at_least,
                     forall_valid_colorings, is_colorable, min_k)


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    seconds: float
    limit: float | None
    detail: str = ""
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.ok and (self.limit is None or self.seconds < self.limit)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        budget = f" (limit {self.limit:g}s)" if self.limit is not None else ""
        return f"[{verdict}] {self.number:>2}. {self.title}: {self.seconds:.2f}s{budget} {self.detail}".rstrip()


def _timed(number, title, limit, body) -> CriterionResult:
    start = time.perf_counter()
    failures, detail = body()
    return CriterionResult(number, title, not failures, time.perf_counter() - start, limit,
                           detail, failures)


PATH_SIZES = range(3, 11)
CYCLE_SIZES = range(3, 10)
COMPLETE_SIZES = range(2, 7)


def complete_t1_formula(n: int) -> int:
    """The counting value 3n/2 (even n) or (3n+1)/2 (odd n), taken literally."""
    return 3 * n // 2 if n % 2 == 0 else (3 * n + 1) // 2


def check_paths() -> CriterionResult:
    def body():
        bad = []
        for n in PATH_SIZES:
            g = family_graph("path", n)
            for t, want in ((1, 4), (2, 2), (3, 2)):
                got = min_k(g, "relaxed", t)
                if got != want or got != closed_form_cchi("path", n, t):
                    bad.append(("path", n, t, got, want))
        return bad, f"{len(PATH_SIZES) * 3} cases"
    return _timed(1, "paths: min k matches closed form", 1.0, body)


def check_cycles() -> CriterionResult:
    def body():
        bad = []
        for n in CYCLE_SIZES:
            g = family_graph("cycle", n)
            cases = ((1, 5 if n == 3 else 4), (2, 2 if n % 2 == 0 else 3))
            for t, want in cases:
                got = min_k(g, "relaxed", t)
                if got != want or got != closed_form_cchi("cycle", n, t):
                    bad.append(("cycle", n, t, got, want))
        return bad, f"{len(CYCLE_SIZES) * 2} cases"
    return _timed(2, "cycles: min k matches closed form", 1.0, body)


def check_complete() -> CriterionResult:
    def body():
        bad = []
        for n in COMPLETE_SIZES:
            g = family_graph("complete", n)
            for t, want in ((1, complete_t1_formula(n)), (2, n)):
                got = min_k(g, "relaxed", t)
                if got != want:
                    bad.append(("complete", n, t, got, want))
        detail = "; ".join(f"K_{n} t={t}: solver {got}, formula {want}" for _, n, t, got, want in bad)
        return bad, detail or f"{len(COMPLETE_SIZES) * 2} cases"
    return _timed(3, "complete graphs: min k equals counting formula", 30.0, body)


def _family_cases():
    for n in PATH_SIZES:
        for t in (1, 2, 3):
            yield "path", n, t
    for n in CYCLE_SIZES:
        for t in (1, 2):
            yield "cycle", n, t
    for n in COMPLETE_SIZES:
        for t in (1, 2):
            yield "complete", n, t


def check_witnesses() -> CriterionResult:
    def body():
        bad = []
        count = 0
        for kind, n, t in _family_cases():
            count += 1
            g = family_graph(kind, n)
            f = witness_coloring(kind, n, t)
            k = closed_form_cchi(kind, n, t)
            if f.k != k or not check_relaxed(g, f, t).valid:
                bad.append((kind, n, t, "witness invalid"))
            if k > 1 and is_colorable(g, "relaxed", k - 1, t):
                bad.append((kind, n, t, "k-1 feasible"))
        return bad, f"{count} witnesses"
    return _timed(4, "witness colorings valid, k-1 infeasible", None, body)


def check_g5() -> CriterionResult:
    def body():
        g, _ = gen_G5()
        bad = []
        if not is_colorable(g, "defective", 4, 1):
            bad.append("(4/2,1)-defective should be colorable")
        if is_colorable(g, "relaxed", 4, 1):
            bad.append("(4/2,1)* should not be colorable")
        if not is_colorable(g, "relaxed", 4, 2):
            bad.append("(4/2,2)* should be colorable")
        if not check_defective(g, g5_defective_coloring(), 1).valid:
            bad.append("stored defective coloring fails")
        return bad, ""
    return _timed(5, "G5 separates defective from relaxed", 60.0, body)


def check_h_family() -> CriterionResult:
    def body():
        bad = []
        h0, _ = gen_H(0)
        if is_colorable(h0, "relaxed", 4, 1):
            bad.append("H(0) is (4/2,1)*-colorable")
        for m, t in ((2, 2), (4, 3)):
            g, _ = gen_H(m)
            if is_colorable(g, "relaxed", 4, t):
                bad.append(f"H({m}) is (4/2,{t})*-colorable")
            w = h_witness(t)
            if not check_relaxed(g, w, t + 1).valid:
                bad.append(f"witness for H({m}) is not (4/2,{t + 1})*")
        return bad, ""
    return _timed(6, "H(m) needs m/2 + 2 relaxations", 600.0, body)


def check_forced_relaxation() -> CriterionResult:
    def body():
        bad = []
        for n, k in ((4, 5), (6, 6)):
            cfg = SolverConfig("defective", k, 1)
            if not forall_valid_colorings(family_graph("complete", n), cfg,
                                          every_vertex_relaxed_at_least(1)):
                bad.append(f"K_{n}, k={k}")
        return bad, ""
    return _timed(7, "every (k/2,1)-coloring of K_4 (k=5), K_6 (k=6) relaxes each vertex", 60.0, body)


# -- reduction suites -------------------------------------------------------

SUITES = {
    "p4": (5, {}),
    "gadget_A": (4, {"t": 2}),
    "blowup": (3, {"k": 5, "t": 1}),
    "cliques": (3, {"k": 5, "d": 1}),
}


def _transfer_failures(kind: str, g: Graph, params: dict, src: Coloring | None,
                       dst: Coloring | None) -> list[str]:
    """Check the lift of a source witness and the projection of a target witness."""
    inst = build(kind, g, **params)
    h = inst.constructed
    bad = []
    if kind == "p4":
        if src is not None and not check_relaxed(h, lift_p4(inst, src), 1).valid:
            bad.append("lift")
        if dst is not None and not classical_defective(g, restrict_to_originals(inst, dst).colors, 4, 1).valid:
            bad.append("projection")
    elif kind == "gadget_A":
        t = params["t"]
        if src is not None and not check_relaxed(h, lift_gadget_A(inst, src), t).valid:
            bad.append("lift")
        if dst is not None and not classical_defective(g, restrict_to_originals(inst, dst).colors, 4, t).valid:
            bad.append("projection")
    elif kind == "blowup":
        t = params["t"]
        if src is not None and not check_relaxed(h, lift_blowup(inst, src), t).valid:
            bad.append("lift")
        if dst is not None and not check_relaxed(g, project_blowup(inst, dst, t, verify=True), 0).valid:
            bad.append("projection")
    elif kind == "cliques":
        if src is not None and not check_defective(h, lift_cliques(inst, src), params["d"]).valid:
            bad.append("lift")
        if dst is not None and not check_relaxed(g, restrict_to_originals(inst, dst), 0).valid:
            bad.append("projection")
    return bad


def run_equivalence_suite(kind: str, max_n: int, params: dict, random_count: int = 200,
                          seed: int = 0, density: float = 0.5) -> tuple[int, list]:
    """All graphs on <= max_n vertices plus ``random_count`` random graphs on max_n + 1.

    Returns (graphs checked, failures).
    """
    graphs = [g for n in range(1, max_n + 1) for g in small_graphs(n)]
    rng = random.Random(seed)
    graphs += [random_graph(max_n + 1, density, rng) for _ in range(random_count)]
    bad = []
    for g in graphs:
        res = check_equivalence(kind, g, **params)
        if not res.agree:
            bad.append((kind, sorted(g.edges), "disagree", res.source, res.target))
            continue
        for what in _transfer_failures(kind, g, params, res.source_witness, res.target_witness):
            bad.append((kind, sorted(g.edges), what))
    return len(graphs), bad


def check_reductions(random_count: int = 200) -> CriterionResult:
    def body():
        bad = []
        parts = []
        for kind, (max_n, params) in SUITES.items():
            count, fails = run_equivalence_suite(kind, max_n, params, random_count)
            bad += fails
            parts.append(f"{kind}={count}")
        return bad, "graphs " + " ".join(parts)
    return _timed(8, "reduction equivalences and transfers", 600.0, body)


# -- outerplanar corpus -----------------------------------------------------


def outerplanar_instance_failures(g: Graph, emb) -> list[str]:
    root = emb.order[0]
    part = obft_partition(g, emb, root)
    bad = []
    rep = verify_obft_properties(part)
    if not rep.all_passed:
        bad.append(f"properties {rep.summary()}")
    f = color_outerplanar_52(g, emb, root)
    if not check_relaxed(g, f, 4).valid:
        bad.append("5/2 coloring not 4-relaxed")
    if any(circ_dist(f[u], f[v], 5) != 2 for u, v in part.tree_edges):
        bad.append("tree edge not at distance 2")
    if any(f[u] == f[v] for u, v in part.nontree_edges):
        bad.append("non-tree edge monochromatic")
    if any(circ_dist(f[a], f[b], 5) != 1 for _, _, a, b in consecutive_son_pairs(part)):
        bad.append("consecutive sons not at distance 1")
    if not check_defective(g, color_outerplanar_42_defective(g, emb, root), 2).valid:
        bad.append("4/2 coloring not 2-defective")
    return bad


def check_outerplanar_corpus(count: int = 1000, max_n: int = 200, seed: int = 2024) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        bad = []
        for i in range(count):
            n = rng.randint(3, max_n)
            g, emb = random_outerplanar(n, rng.random(), rng.randrange(2**31))
            for what in outerplanar_instance_failures(g, emb):
                bad.append((i, n, what))
        return bad, f"{count} graphs"
    return _timed(9, "outerplanar corpus colorings and OBFT properties", 60.0, body)


def check_semantics_order(count: int = 500, seed: int = 7) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        bad = []
        relaxed_valid = 0
        for i in range(count):
            n = rng.randint(1, 9)
            g = random_graph(n, rng.random(), rng)
            k = rng.randint(2, 8)
            t = rng.randint(0, 3)
            f = None
            if rng.random() < 0.5:
                try:
                    f = decide(g, SolverConfig("relaxed", k, t, node_limit=10**5))
                except ResourceLimit:
                    f = None
            if f is None:
                f = Coloring(k, tuple(rng.randrange(k) for _ in range(n)))
            if check_relaxed(g, f, t).valid:
                relaxed_valid += 1
                if not check_defective(g, f, t).valid:
                    bad.append((i, sorted(g.edges), f.colors, t))
        return bad, f"{relaxed_valid} of {count} relaxed-valid"
    return _timed(10, "relaxed validity implies defective validity", None, body)


CHECKS = (check_paths, check_cycles, check_complete, check_witnesses, check_g5, check_h_family,
          check_forced_relaxation, check_reductions, check_outerplanar_corpus, check_semantics_order)


def run_all() -> list[CriterionResult]:
    return [c() for c in CHECKS]
