"""Command-line driver.

Exit codes: 0 success, 1 negative answer (invalid coloring, not colorable,
failed property or criterion), 2 input error, 3 solver node limit reached.
Vertex ids on the command line are 1-based, like in the file formats.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ColoringError, InvalidInput, InvalidParameter, ResourceLimit
from .families import gen_G5, gen_H, random_outerplanar
from .graph import Graph, OuterEmbedding, find_outer_embedding, make_family
from .obft import obft_partition, partition_dot, verify_obft_properties
from .outerplanar import color_outerplanar_42_defective, color_outerplanar_52
from .reductions import build
from .semantics import check
from .solver import DEFAULT_NODE_LIMIT, SolverConfig, decide, min_k
from .textio import (GraphDocument, coloring_dot, emit_coloring, emit_graph, parse_coloring,
                     parse_graph)

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str) -> GraphDocument:
    return parse_graph(_read(path))


def _bound(args) -> int:
    bound = args.t if args.t is not None else args.d
    if bound is None:
        raise InvalidParameter("give the relaxation budget with --t or --d")
    return bound


def _root(args, g: Graph) -> int | None:
    if args.root is None:
        return None
    if not 1 <= args.root <= g.n:
        raise InvalidInput(f"--root {args.root} outside 1..{g.n}")
    return args.root - 1


def _embedding(doc: GraphDocument) -> OuterEmbedding:
    if doc.embedding is not None:
        return doc.embedding
    emb = find_outer_embedding(doc.graph)
    if emb is None:
        raise InvalidInput("graph is not outerplanar")
    return emb


def cmd_check(args) -> int:
    doc = _load_graph(args.graph)
    f = parse_coloring(_read(args.coloring)).coloring
    if len(f) != doc.graph.n:
        raise InvalidInput(f"coloring has {len(f)} vertices, graph has {doc.graph.n}")
    report = check(doc.graph, f, args.semantics, _bound(args))
    sys.stdout.write(emit_coloring(f, report))
    return EXIT_OK if report.valid else EXIT_NO


def cmd_solve(args) -> int:
    g = _load_graph(args.graph).graph
    bound = _bound(args)
    k = args.k
    if k is None:
        k = min_k(g, args.semantics, bound, args.q, args.node_limit)
        print(f"c min_k {k}")
    f = decide(g, SolverConfig(args.semantics, k, bound, args.q, args.node_limit))
    if f is None:
        print(f"c not colorable: semantics={args.semantics} k={k} q={args.q} bound={bound}")
        return EXIT_NO
    sys.stdout.write(emit_coloring(f, check(g, f, args.semantics, bound)))
    return EXIT_OK


def cmd_color(args) -> int:
    doc = _load_graph(args.graph)
    g, emb = doc.graph, _embedding(doc)
    r = _root(args, g)
    if args.method == "52":
        f = color_outerplanar_52(g, emb, r)
        report = check(g, f, "relaxed", 4)
    else:
        f = color_outerplanar_42_defective(g, emb, r)
        report = check(g, f, "defective", 2)
    if args.format == "dot":
        sys.stdout.write(coloring_dot(g, f.colors))
    else:
        sys.stdout.write(emit_coloring(f, report))
    return EXIT_OK if report.valid else EXIT_NO


def cmd_obft(args) -> int:
    doc = _load_graph(args.graph)
    g, emb = doc.graph, _embedding(doc)
    r = _root(args, g)
    part = obft_partition(g, emb, emb.order[0] if r is None else r)
    report = verify_obft_properties(part)
    if args.format == "dot":
        sys.stdout.write(partition_dot(part))
    else:
        print(f"root {part.root + 1}")
        for i, lay in enumerate(part.layers):
            print(f"layer {i} " + " ".join(str(v + 1) for v in lay))
        print(f"tree_edges {len(part.tree_edges)} nontree_edges {len(part.nontree_edges)}")
        for prop, ok in report.summary().items():
            bad = " ".join(f"{u + 1}-{v + 1}" for u, v in report.violations[prop])
            print(f"property {prop} {'pass' if ok else 'fail'} {bad}".rstrip())
    return EXIT_OK if report.all_passed else EXIT_NO


def cmd_gadget(args) -> int:
    g = _load_graph(args.graph).graph
    params = {}
    if args.kind == "gadget_A":
        params["t"] = _need(args.t, "--t")
    elif args.kind == "blowup":
        params = {"k": _need(args.k, "--k"), "t": _need(args.t, "--t")}
    elif args.kind == "cliques":
        params = {"k": _need(args.k, "--k"), "d": _need(args.d, "--d")}
    inst = build(args.kind, g, **params)
    comments = [f"reduction {inst.kind} " + " ".join(f"{k}={v}" for k, v in sorted(inst.params.items()))]
    comments += [f"original {v + 1} -> {w + 1}" for v, w in sorted(inst.original_vertex_map.items())]
    for (u, v), ids in sorted(inst.edge_gadget_map.items()):
        comments.append(f"gadget {u + 1}-{v + 1} : " + " ".join(str(w + 1) for w in ids))
    for v, ids in sorted(inst.vertex_groups.items()):
        comments.append(f"group {v + 1} : " + " ".join(str(w + 1) for w in ids))
    sys.stdout.write(emit_graph(GraphDocument(inst.constructed, comments=tuple(comments))))
    return EXIT_OK


def _need(value, flag: str) -> int:
    if value is None:
        raise InvalidParameter(f"this command needs {flag}")
    return value


def _family_doc(args, seed: int) -> GraphDocument:
    kind = args.kind
    if kind in ("path", "cycle", "complete", "P", "C", "K"):
        name = {"P": "path", "C": "cycle", "K": "complete"}.get(kind, kind)
        n = _need(args.n, "--n")
        g = make_family(name, n)
        emb = None
        if name in ("path", "cycle") or n <= 3:
            emb = OuterEmbedding(tuple(range(n)))
        return GraphDocument(g, emb, comments=(f"{name} n={n}",))
    if kind == "G5":
        g, emb = gen_G5()
        return GraphDocument(g, emb, comments=("G5",))
    if kind == "H":
        m = _need(args.m, "--m")
        g, emb = gen_H(m)
        return GraphDocument(g, emb, comments=(f"H m={m}",))
    n = _need(args.n, "--n")
    g, emb = random_outerplanar(n, args.p, seed)
    return GraphDocument(g, emb, comments=(f"random outerplanar n={n} p={args.p} seed={seed}",))


def cmd_family(args) -> int:
    if args.count > 1:
        if args.kind != "random" or args.out is None:
            raise InvalidParameter("--count > 1 needs kind 'random' and --out DIR")
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i in range(args.count):
            doc = _family_doc(args, args.seed + i)
            (out / f"outerplanar_{i:04d}.graph").write_text(emit_graph(doc))
        return EXIT_OK
    sys.stdout.write(emit_graph(_family_doc(args, args.seed)))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .reproduce import CHECKS

    results = []
    for run in CHECKS:
        res = run()
        print(res.line(), flush=True)
        results.append(res)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_NO


def _add_budget(p):
    p.add_argument("--semantics", choices=["relaxed", "defective"], default="relaxed")
    p.add_argument("--t", type=int, help="relaxation budget (relaxed semantics)")
    p.add_argument("--d", type=int, help="relaxation budget (defective semantics)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="relaxcolor", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify a coloring file against a graph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    _add_budget(p)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("solve", help="decide colorability at --k, or find the minimum k")
    p.add_argument("graph")
    _add_budget(p)
    p.add_argument("--k", type=int)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("color", help="color an outerplanar graph from its OBFT")
    p.add_argument("graph")
    p.add_argument("--method", choices=["52", "42d"], default="52")
    p.add_argument("--root", type=int)
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(run=cmd_color)

    p = sub.add_parser("obft", help="OBFT partition, property report and DOT drawing")
    p.add_argument("graph")
    p.add_argument("--root", type=int)
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(run=cmd_obft)

    p = sub.add_parser("gadget", help="build a reduction instance")
    p.add_argument("graph")
    p.add_argument("--kind", choices=["p4", "gadget_A", "blowup", "cliques"], required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(run=cmd_gadget)

    p = sub.add_parser("family", help="emit a named graph family or random outerplanar graphs")
    p.add_argument("kind", choices=["path", "cycle", "complete", "P", "C", "K", "G5", "H", "random"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float, default=0.5, help="diagonal keep probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(run=cmd_family)

    p = sub.add_parser("verify-paper", help="run every reproduction check and print a table")
    p.set_defaults(run=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ColoringError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
