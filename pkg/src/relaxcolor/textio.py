"""Text formats for graphs and colorings.

Graph documents are DIMACS-flavoured, with 1-based vertex ids::

    c any comment
    p graph <n> <m>
    e <u> <v>
    o <v1> ... <vn>       optional outer-face order
    n <id> <label>        optional external name of a vertex

Coloring documents::

    k <k> q <q>
    v <id> <color>        one line per vertex, in id order
    s valid=<true|false> max_relax=<int>

Every parse error carries the offending line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (BadEmbedding, DuplicateEdge, IdOutOfRange, MalformedHeader, ParseError,
                     SelfLoop)
from .graph import Graph, OuterEmbedding, _norm, validate_outer_embedding
from .semantics import Coloring, ColoringReport


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    embedding: OuterEmbedding | None = None
    names: dict[int, str] = field(default_factory=dict)
    comments: tuple[str, ...] = ()


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based column."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int(tok: tuple[str, int], lineno: int, what: str, err=ParseError) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise err(f"{what} must be an integer, got {text!r}", lineno, col) from None


def _vertex(tok, lineno: int, n: int) -> int:
    v = _int(tok, lineno, "vertex id")
    if not 1 <= v <= n:
        raise IdOutOfRange(f"vertex id {v} outside 1..{n}", lineno, tok[1])
    return v - 1


def parse_graph(text: str) -> GraphDocument:
    n = m = None
    header_line = 0
    edges: set[tuple[int, int]] = set()
    order = None
    names: dict[int, str] = {}
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        tag, col = toks[0]
        if tag == "c":
            comments.append(raw.strip()[1:].strip())
            continue
        if tag == "p":
            if n is not None:
                raise MalformedHeader("second header line", lineno, col)
            if len(toks) != 4 or toks[1][0] not in ("graph", "edge"):
                raise MalformedHeader("expected 'p graph <n> <m>'", lineno, col)
            n = _int(toks[2], lineno, "vertex count", MalformedHeader)
            m = _int(toks[3], lineno, "edge count", MalformedHeader)
            if n < 0 or m < 0:
                raise MalformedHeader("counts must be nonnegative", lineno, toks[2][1])
            header_line = lineno
            continue
        if n is None:
            raise MalformedHeader(f"{tag!r} line before the 'p graph' header", lineno, col)
        if tag == "e":
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno, col)
            u = _vertex(toks[1], lineno, n)
            v = _vertex(toks[2], lineno, n)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u + 1}", lineno, toks[2][1])
            e = _norm(u, v)
            if e in edges:
                raise DuplicateEdge(f"edge {u + 1}-{v + 1} listed twice", lineno, col)
            edges.add(e)
        elif tag == "o":
            if order is not None:
                raise BadEmbedding("second outer-face order line", lineno, col)
            order = []
            for tok in toks[1:]:
                v = _int(tok, lineno, "vertex id", BadEmbedding)
                if not 1 <= v <= n or (v - 1) in order:
                    raise BadEmbedding(f"order is not a permutation of 1..{n} (at {v})", lineno, tok[1])
                order.append(v - 1)
            if len(order) != n:
                raise BadEmbedding(f"order lists {len(order)} of {n} vertices", lineno, col)
            order_line = lineno
        elif tag == "n":
            if len(toks) < 3:
                raise ParseError("expected 'n <id> <label>'", lineno, col)
            v = _vertex(toks[1], lineno, n)
            names[v] = raw[toks[2][1] - 1:].strip()
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno, col)
    if n is None:
        raise MalformedHeader("missing 'p graph <n> <m>' header", max(1, len(text.splitlines())), 1)
    if len(edges) != m:
        raise MalformedHeader(f"header announces {m} edges, found {len(edges)}", header_line, 1)
    g = Graph.from_edges(n, edges)
    emb = None
    if order is not None:
        emb = OuterEmbedding(tuple(order))
        if not validate_outer_embedding(g, emb):
            raise BadEmbedding("edges cross in the given outer-face order", order_line, 1)
    return GraphDocument(g, emb, names, tuple(comments))


def emit_graph(doc: GraphDocument | Graph) -> str:
    if isinstance(doc, Graph):
        doc = GraphDocument(doc)
    g = doc.graph
    lines = [f"c {c}".rstrip() for c in doc.comments]
    lines.append(f"p graph {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    if doc.embedding is not None:
        lines.append("o " + " ".join(str(v + 1) for v in doc.embedding.order))
    lines += [f"n {v + 1} {doc.names[v]}" for v in sorted(doc.names)]
    return "\n".join(lines) + "\n"


def emit_coloring(f: Coloring, report: ColoringReport | None = None) -> str:
    lines = [f"k {f.k} q {f.q}"]
    lines += [f"v {v + 1} {c}" for v, c in enumerate(f.colors)]
    if report is not None:
        valid = "true" if report.valid else "false"
        lines.append(f"s valid={valid} max_relax={report.max_relaxations}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ColoringDocument:
    coloring: Coloring
    valid: bool | None = None
    max_relax: int | None = None


def parse_coloring(text: str) -> ColoringDocument:
    k = q = None
    colors: dict[int, int] = {}
    valid = max_relax = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        tag, col = toks[0]
        if tag == "c":
            continue
        if tag == "k":
            if len(toks) not in (2, 4) or (len(toks) == 4 and toks[2][0] != "q"):
                raise MalformedHeader("expected 'k <k> q <q>'", lineno, col)
            k = _int(toks[1], lineno, "k", MalformedHeader)
            q = _int(toks[3], lineno, "q", MalformedHeader) if len(toks) == 4 else 2
            if k < 1 or q < 1:
                raise MalformedHeader("k and q must be positive", lineno, col)
        elif tag == "v":
            if k is None:
                raise MalformedHeader("'v' line before the 'k' header", lineno, col)
            if len(toks) != 3:
                raise ParseError("expected 'v <id> <color>'", lineno, col)
            v = _int(toks[1], lineno, "vertex id")
            if v < 1:
                raise IdOutOfRange(f"vertex id {v} must be positive", lineno, toks[1][1])
            if v - 1 in colors:
                raise ParseError(f"vertex {v} colored twice", lineno, col)
            c = _int(toks[2], lineno, "color")
            if not 0 <= c < k:
                raise ParseError(f"color {c} outside [0, {k})", lineno, toks[2][1])
            colors[v - 1] = c
        elif tag == "s":
            for text_, tcol in toks[1:]:
                key, _, val = text_.partition("=")
                if key == "valid" and val in ("true", "false"):
                    valid = val == "true"
                elif key == "max_relax":
                    max_relax = _int((val, tcol), lineno, "max_relax")
                else:
                    raise ParseError(f"bad summary field {text_!r}", lineno, tcol)
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno, col)
    if k is None:
        raise MalformedHeader("missing 'k <k> q <q>' header", 1, 1)
    n = len(colors)
    missing = [v + 1 for v in range(n) if v not in colors]
    if missing:
        raise IdOutOfRange(f"vertex ids are not dense; missing {missing[:5]}", 1, 1)
    return ColoringDocument(Coloring(k, tuple(colors[v] for v in range(n)), q), valid, max_relax)


def coloring_dot(g: Graph, colors, name: str = "coloring") -> str:
    """DOT text for a colored graph; node labels are ``id:color`` with 1-based ids."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f'  v{v + 1} [label="{v + 1}:{colors[v]}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  v{u + 1} -- v{v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
