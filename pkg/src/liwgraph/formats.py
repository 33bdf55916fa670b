"""Plain-text semigroup and graph files, and DOT export/import.

Semigroup file::

    # comments start with '#'
    size 3
    names e f g
    0 1 2
    1 1 2
    2 2 2
    gen x e f        # images of x and x'

Graph file::

    left a1 a2
    right b1
    line a1 b1
    arrow a1 x b1
    root a1 b1       # optional
"""

from __future__ import annotations

import re

from .graph import LEFT, RIGHT, BliwGraph, GraphError, LiwGraph
from .semigroup import FiniteSemigroup, GeneratorAssignment, SemigroupError, validate

_LETTER = re.compile(r"[A-Za-z][0-9]*'?$")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col, self.msg = line, col, msg


def _tokens(text: str):
    """Yield (line number, [(col, token)]) for non-blank lines, comments stripped."""
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if toks:
            yield i, toks


def _end(text: str) -> tuple[int, int]:
    lines = text.splitlines() or [""]
    return len(lines), len(lines[-1]) + 1


def parse_semigroup(text: str) -> tuple[FiniteSemigroup, GeneratorAssignment]:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty semigroup file", 1, 1)
    it = iter(lines)
    ln, toks = next(it)
    if toks[0][1] != "size" or len(toks) != 2 or not toks[1][1].isdigit():
        raise ParseError("expected 'size <n>'", ln, toks[0][0])
    n = int(toks[1][1])
    if n == 0:
        raise ParseError("size must be positive", ln, toks[1][0])
    try:
        ln, toks = next(it)
    except StopIteration:
        raise ParseError("expected 'names'", *_end(text)) from None
    if toks[0][1] != "names":
        raise ParseError("expected 'names'", ln, toks[0][0])
    names = [t for _, t in toks[1:]]
    if len(names) != n:
        raise ParseError(f"expected {n} names, got {len(names)}", ln, toks[0][0])
    if len(set(names)) != n:
        raise ParseError("duplicate element names", ln, toks[0][0])
    index = {nm: i for i, nm in enumerate(names)}
    table = []
    for _ in range(n):
        try:
            ln, toks = next(it)
        except StopIteration:
            raise ParseError(f"expected {n} table rows", *_end(text)) from None
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, got {len(toks)}", ln, toks[0][0])
        row = []
        for col, t in toks:
            if not t.isdigit() or int(t) >= n:
                raise ParseError(f"bad table entry {t!r}", ln, col)
            row.append(int(t))
        table.append(row)
    images = {}
    for ln, toks in it:
        if toks[0][1] != "gen" or len(toks) != 4:
            raise ParseError("expected 'gen <letter> <image> <inverse image>'", ln, toks[0][0])
        (_, x), (c1, a), (c2, b) = toks[1], toks[2], toks[3]
        if not re.fullmatch(r"[A-Za-z][0-9]*", x):
            raise ParseError(f"bad generator name {x!r}", ln, toks[1][0])
        for col, nm in ((c1, a), (c2, b)):
            if nm not in index:
                raise ParseError(f"unknown element {nm!r}", ln, col)
        images[x], images[x + "'"] = index[a], index[b]
    if not images:
        raise ParseError("no generator lines", *_end(text))
    try:
        s = validate(FiniteSemigroup(table, names))
    except SemigroupError as exc:
        raise ParseError(str(exc), 1, 1) from None
    return s, GeneratorAssignment.from_dict(images)


def emit_semigroup(s: FiniteSemigroup, g: GeneratorAssignment) -> str:
    out = [f"size {s.n}", "names " + " ".join(s.names)]
    out += [" ".join(str(v) for v in row) for row in s.table]
    for x in g.generators:
        out.append(f"gen {x} {s.names[g[x]]} {s.names[g[x + chr(39)]]}")
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> LiwGraph | BliwGraph:
    """Returns a BliwGraph when a root line is present."""
    left, right, lines, arrows, root, seen_root = [], [], [], [], None, False
    side: dict[str, str] = {}
    pending = []
    for ln, toks in _tokens(text):
        kw = toks[0][1]
        args = toks[1:]
        if kw in ("left", "right"):
            for col, nm in args:
                if nm in side:
                    raise ParseError(f"vertex {nm!r} declared twice", ln, col)
                side[nm] = LEFT if kw == "left" else RIGHT
                (left if kw == "left" else right).append(nm)
        elif kw == "line":
            if len(args) != 2:
                raise ParseError("expected 'line <left> <right>'", ln, toks[0][0])
            pending.append((ln, "line", args))
        elif kw == "arrow":
            if len(args) != 3:
                raise ParseError("expected 'arrow <left> <label> <right>'", ln, toks[0][0])
            if not _LETTER.match(args[1][1]):
                raise ParseError(f"bad arrow label {args[1][1]!r}", ln, args[1][0])
            pending.append((ln, "arrow", args))
        elif kw == "root":
            if len(args) != 2 or seen_root:
                raise ParseError("expected a single 'root <left> <right>'", ln, toks[0][0])
            seen_root = True
            pending.append((ln, "root", args))
        else:
            raise ParseError(f"unknown keyword {kw!r}", ln, toks[0][0])
    if not side:
        raise ParseError("no vertices declared", *(_end(text) if text.strip() else (1, 1)))

    def need(ln, col, nm, sd):
        if nm not in side:
            raise ParseError(f"undeclared vertex {nm!r}", ln, col)
        if side[nm] != sd:
            raise ParseError(f"vertex {nm!r} is not a {'left' if sd == LEFT else 'right'} vertex", ln, col)
        return nm

    for ln, kind, args in pending:
        if kind == "line":
            lines.append((need(ln, *args[0], LEFT), need(ln, *args[1], RIGHT)))
        elif kind == "arrow":
            arrows.append((need(ln, *args[0], LEFT), args[1][1], need(ln, *args[2], RIGHT)))
        else:
            root = (need(ln, *args[0], LEFT), need(ln, *args[1], RIGHT))
    g = LiwGraph.build(left, right, lines, arrows)
    if root is None:
        return g
    return BliwGraph(g, g.vertex(root[0]), g.vertex(root[1]))


def emit_graph(a: LiwGraph | BliwGraph) -> str:
    g = a.graph if isinstance(a, BliwGraph) else a
    nm = g.names
    out = ["left " + " ".join(nm[v] for v in g.left_vertices),
           "right " + " ".join(nm[v] for v in g.right_vertices)]
    out += [f"line {nm[x]} {nm[y]}" for x, y in sorted(g.lines)]
    out += [f"arrow {nm[x]} {lab} {nm[y]}" for x, lab, y in sorted(g.arrows)]
    if isinstance(a, BliwGraph):
        out.append(f"root {nm[a.left_root]} {nm[a.right_root]}")
    return "\n".join(out) + "\n"


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(a: LiwGraph | BliwGraph, title: str = "liw") -> str:
    """Lines are dashed undirected edges, arrows labelled directed edges,
    roots double circles."""
    g = a.graph if isinstance(a, BliwGraph) else a
    roots = set(a.roots) if isinstance(a, BliwGraph) else set()
    out = [f"digraph {_q(title)} {{", "  rankdir=LR;"]
    for v in range(g.n):
        side = "left" if g.sides[v] == LEFT else "right"
        shape = "doublecircle" if v in roots else "circle"
        out.append(f"  {_q(g.names[v])} [side={side}, shape={shape}];")
    for x, y in sorted(g.lines):
        out.append(f"  {_q(g.names[x])} -> {_q(g.names[y])} [style=dashed, dir=none];")
    for x, lab, y in sorted(g.arrows):
        out.append(f"  {_q(g.names[x])} -> {_q(g.names[y])} [label={_q(lab)}];")
    out.append("}")
    return "\n".join(out) + "\n"


_ID = r'"(?:[^"\\]|\\.)*"|[A-Za-z0-9_.:\']+'
_NODE = re.compile(rf"^\s*({_ID})\s*\[(.*)\]\s*;?\s*$")
_EDGE = re.compile(rf"^\s*({_ID})\s*->\s*({_ID})\s*\[(.*)\]\s*;?\s*$")
_ATTR = re.compile(rf"(\w+)\s*=\s*({_ID})")


def _unq(s: str) -> str:
    if s.startswith('"'):
        return re.sub(r"\\(.)", r"\1", s[1:-1])
    return s


def parse_dot(text: str) -> LiwGraph | BliwGraph:
    """Read back the subset of DOT written by emit_dot."""
    side, order, lines, arrows, roots = {}, [], [], [], []
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.strip()
        if not body or body.startswith(("digraph", "}", "rankdir", "//")):
            continue
        m = _EDGE.match(body)
        if m:
            attrs = {k: _unq(v) for k, v in _ATTR.findall(m.group(3))}
            a, b = _unq(m.group(1)), _unq(m.group(2))
            if attrs.get("style") == "dashed":
                lines.append((a, b))
            elif "label" in attrs:
                arrows.append((a, attrs["label"], b))
            else:
                raise ParseError("edge is neither a line nor a labelled arrow", ln, 1)
            continue
        m = _NODE.match(body)
        if m:
            attrs = {k: _unq(v) for k, v in _ATTR.findall(m.group(2))}
            nm = _unq(m.group(1))
            if attrs.get("side") not in ("left", "right"):
                raise ParseError(f"vertex {nm!r} has no side", ln, 1)
            side[nm] = attrs["side"]
            order.append(nm)
            if attrs.get("shape") == "doublecircle":
                roots.append(nm)
            continue
        raise ParseError("unsupported DOT statement", ln, 1)
    left = [v for v in order if side[v] == "left"]
    right = [v for v in order if side[v] == "right"]
    try:
        g = LiwGraph.build(left, right, lines, arrows)
    except GraphError as exc:
        raise ParseError(str(exc), 1, 1) from None
    if not roots:
        return g
    lr = [v for v in roots if side[v] == "left"]
    rr = [v for v in roots if side[v] == "right"]
    if len(lr) != 1 or len(rr) != 1:
        raise ParseError("expected one left and one right root", 1, 1)
    return BliwGraph(g, g.vertex(lr[0]), g.vertex(rr[0]))
