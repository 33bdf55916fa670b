"""Command-line interface.

Exit codes: 0 success or positive decision, 1 negative decision, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classifier import classify
from .fixtures import BUILDERS, fixture
from .formats import ParseError, emit_dot, emit_graph, parse_dot, parse_graph, parse_semigroup
from .graph import BliwGraph, GraphError, LiwGraph, member, validate_liw
from .morphism import MODES, automorphisms, find_hom, graph_isomorphisms
from .reduction import reduce
from .semantics import RELATIONS, SemigroupGraphContext, dot, wedge
from .semigroup import SemigroupError, validate
from .words import WordSyntaxError, format_word, parse_word

OK, NO, BAD = 0, 1, 2


class InputError(Exception):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


# --- loading ---

def _context(args) -> SemigroupGraphContext:
    if args.fixture:
        return SemigroupGraphContext.from_fixture(fixture(args.fixture))
    if args.semigroup:
        s, g = parse_semigroup(Path(args.semigroup).read_text(encoding="utf-8"))
        g.check(validate(s))
        return SemigroupGraphContext(s, g)
    raise InputError("a semigroup source is required (--fixture or --semigroup)")


def _has_semigroup(args) -> bool:
    return bool(args.fixture or args.semigroup)


def _load_graph(path: str) -> LiwGraph | BliwGraph:
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".dot") or text.lstrip().startswith("digraph"):
        return parse_dot(text)
    return parse_graph(text)


def _graphs(args) -> list[LiwGraph | BliwGraph]:
    return [_load_graph(p) for p in args.graph or []]


def _idempotent(ctx: SemigroupGraphContext, text: str) -> int:
    e = ctx.element(text)
    if not ctx.s.is_idempotent(e):
        raise InputError(f"{text!r} is not idempotent")
    return e


def _elements(ctx, args, k: int) -> list[int]:
    items = list(args.element or [])
    if len(items) != k:
        raise InputError(f"expected {k} --element option(s), got {len(items)}")
    return [ctx.element(t) for t in items]


def _plain(a) -> LiwGraph:
    return a.graph if isinstance(a, BliwGraph) else a


def _rooted(a) -> BliwGraph:
    if not isinstance(a, BliwGraph):
        raise InputError("graph file has no root line")
    return a


def _emit(args, a, title: str) -> None:
    if getattr(args, "png", None):
        from .render import save_png
        save_png(a, args.png, title=title)
    _out(emit_dot(a, title) if getattr(args, "export_dot", False) else emit_graph(a))


def _vmap_table(phi) -> None:
    for u, v in phi.table():
        _out(f"{u}\t{v}")


# --- subcommands ---

def cmd_validate(args) -> int:
    if args.graph:
        code = OK
        for path, a in zip(args.graph, _graphs(args)):
            probs = validate_liw(_plain(a))
            red = _plain(a).reduced
            _out(f"{path}\t{'liw' if not probs else 'invalid'}\t{'reduced' if red else 'not reduced'}")
            for p in probs:
                _out(f"  {p}")
            code = code if not probs else NO
        return code
    if args.fixture:
        fx = fixture(args.fixture)
        s, g = fx.semigroup, fx.assignment
    elif args.semigroup:
        s, g = parse_semigroup(Path(args.semigroup).read_text(encoding="utf-8"))
    else:
        raise InputError("nothing to validate")
    validate(s)
    g.check(s)
    li = s.is_locally_inverse()
    green = s.green()
    _out(f"elements\t{s.n}")
    _out(f"idempotents\t{len(s.idempotents)}")
    _out(f"D-classes\t{len(green.classes('D'))}")
    _out(f"regular\t{'yes' if s.is_regular() else 'no'}")
    _out(f"locally inverse\t{'yes' if li else 'no'}")
    return OK if li else NO


def cmd_gamma(args) -> int:
    ctx = _context(args)
    text = args.e or args.idempotent
    if not text:
        raise InputError("which idempotent? (positional or --idempotent)")
    e = _idempotent(ctx, text)
    _emit(args, ctx.gamma(e), f"gamma {ctx.s.names[e]}")
    return OK


def cmd_bliw(args) -> int:
    ctx = _context(args)
    text = args.s or args.element and args.element[0]
    if not text:
        raise InputError("which element? (positional or --element)")
    s_ = ctx.element(text)
    _emit(args, ctx.bliw(s_), f"A {ctx.s.names[s_]}")
    return OK


def cmd_reduce(args) -> int:
    graphs = _graphs(args)
    if len(graphs) != 1:
        raise InputError("reduce takes exactly one --graph")
    r = reduce(_rooted(graphs[0]))
    if args.trace:
        for st in r.steps:
            _out(f"# {st}")
    _emit(args, r.output, "reduced")
    return OK


def _bliw_pair(args) -> tuple[BliwGraph, BliwGraph, SemigroupGraphContext | None]:
    if args.graph:
        gs = _graphs(args)
        if len(gs) != 2:
            raise InputError("expected two --graph options")
        return _rooted(gs[0]), _rooted(gs[1]), None
    ctx = _context(args)
    src = [args.source] if args.source else []
    dst = [args.target] if args.target else []
    items = src + dst + list(args.element or [])
    if len(items) != 2:
        raise InputError("expected two elements (--from/--to or --element twice)")
    return ctx.bliw(ctx.element(items[0])), ctx.bliw(ctx.element(items[1])), ctx


def cmd_hom(args) -> int:
    a, b, _ = _bliw_pair(args)
    phi = find_hom(a, b, args.mode)
    if phi is None:
        _out(f"no {args.mode} homomorphism")
        return NO
    _vmap_table(phi)
    return OK


def cmd_iso(args) -> int:
    if args.gamma:
        ctx = _context(args)
        if len(args.gamma) != 2:
            raise InputError("expected two --gamma options")
        g1, g2 = (ctx.gamma(_idempotent(ctx, t)) for t in args.gamma)
        phi = next(graph_isomorphisms(g1, g2), None)
    elif args.graph and any(not isinstance(x, BliwGraph) for x in _graphs(args)):
        g1, g2 = (_plain(x) for x in _graphs(args))
        phi = next(graph_isomorphisms(g1, g2), None)
    else:
        a, b, _ = _bliw_pair(args)
        phi = next((p for p in _full_isos(a, b)), None)
    if phi is None:
        _out("not isomorphic")
        return NO
    _vmap_table(phi)
    return OK


def _full_isos(a, b):
    from .morphism import homs
    return (p for p in homs(a, b, "full") if p.is_bijective())


def cmd_aut(args) -> int:
    if args.gamma:
        ctx = _context(args)
        g = ctx.gamma(_idempotent(ctx, args.gamma[0]))
    else:
        gs = _graphs(args)
        if len(gs) != 1:
            raise InputError("aut takes one --gamma or one --graph")
        g = _plain(gs[0])
    auts = automorphisms(g)
    _out(f"automorphisms\t{len(auts)}")
    for i, phi in enumerate(auts):
        moved = [(u, v) for u, v in phi.table() if u != v]
        _out(f"{i}\t" + (", ".join(f"{u}->{v}" for u, v in moved) or "identity"))
    return OK


def cmd_green(args) -> int:
    ctx = _context(args)
    s = ctx.s
    if not args.element:
        green = s.green()
        for rel in (args.rel,) if args.rel else RELATIONS:
            for members in green.classes(rel).values():
                _out(f"{rel}\t" + " ".join(s.names[a] for a in members))
        return OK
    a, b = _elements(ctx, args, 2)
    code = OK
    for rel in RELATIONS:
        gv, tv = ctx.green_via_graphs(a, b, rel), s.related(rel, a, b)
        _out(f"{rel}\t{_yn(gv)}\t{_yn(tv)}")
        if args.rel and args.rel.upper() == rel and not gv:
            code = NO
    return code


ORDERS = ("natural", "R", "L", "H", "J", "omega", "omega-r", "omega-l")


def cmd_order(args) -> int:
    """t <= s for --element t --element s."""
    ctx = _context(args)
    s = ctx.s
    t, u = _elements(ctx, args, 2)
    both_idem = s.is_idempotent(t) and s.is_idempotent(u)
    code = OK
    for rel in ORDERS:
        if rel.startswith("omega"):
            if not both_idem:
                continue
            kind = rel[6:]
            gv = ctx.omega_via_graphs(t, u, kind)
            tv = {"": s.omega, "r": s.omega_r, "l": s.omega_l}[kind](t, u)
        else:
            key = "" if rel == "natural" else rel
            gv = ctx.leq_via_graphs(t, u, key)
            tv = s.natural_leq(t, u) if rel == "natural" else s.leq(rel, t, u)
        _out(f"{rel}\t{_yn(gv)}\t{_yn(tv)}")
        if args.rel == rel and not gv:
            code = NO
    return code


def cmd_member(args) -> int:
    text = args.word or args.w
    if not text:
        raise InputError("which word? (positional or --word)")
    u = parse_word(text)
    if not u:
        raise InputError("empty word")
    if not (args.source and args.target):
        raise InputError("member needs --from and --to vertices")
    if args.graph:
        g = _plain(_graphs(args)[0])
    else:
        ctx = _context(args)
        if args.gamma:
            e = _idempotent(ctx, args.gamma[0])
        else:
            e = _home_idempotent(ctx, args.source)
        g = ctx.gamma(e)
    try:
        a, b = g.vertex(args.source), g.vertex(args.target)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    ok = member(g, a, b, u)
    _out(f"{format_word(u)}\t{'member' if ok else 'not a member'}")
    return OK if ok else NO


def _home_idempotent(ctx, vertex: str) -> int:
    """The least idempotent whose graph has this vertex."""
    if vertex[:2] not in ("l:", "r:"):
        raise InputError(f"vertices are written l:<name> or r:<name>, got {vertex!r}")
    a = ctx.element(vertex[2:])
    rel = "L" if vertex[0] == "l" else "R"
    return min(f for f in ctx.s.idempotents if ctx.s.related(rel, f, a))


def _product_cmd(args, op, table_op, label) -> int:
    a, b, ctx = _bliw_pair(args)
    c = op(a, b)
    _emit(args, c, label)
    if ctx is not None:
        items = [args.source, args.target] if args.source else args.element
        x, y = (ctx.element(t) for t in items)
        z = table_op(ctx.s, x, y)
        ok = find_hom(c, ctx.bliw(z)) is not None
        _out(f"# hom to A({ctx.s.names[z]}): {_yn(ok)}")
    return OK


def cmd_wedge(args) -> int:
    return _product_cmd(args, wedge, lambda s, x, y: s.sandwich_ext(x, y), "wedge")


def cmd_dot_product(args) -> int:
    return _product_cmd(args, dot, lambda s, x, y: s.mul(x, y), "dot")


def cmd_classify(args) -> int:
    ctx = _context(args)
    verdicts = classify(ctx)
    _out("predicate\tscope\tgraph\toracle\tresult")
    for v in verdicts:
        _out(v.line())
    if args.figures:
        from .render import save_png
        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        green = ctx.s.green()
        reps = sorted({green.d_class[e] for e in ctx.s.idempotents})
        for i, d in enumerate(reps):
            e = min(f for f in ctx.s.idempotents if green.d_class[f] == d)
            save_png(ctx.gamma(e), out / f"gamma_{i}.png", title=f"gamma {ctx.s.names[e]}")
    return OK if all(v.agree for v in verdicts) else NO


def cmd_export_dot(args) -> int:
    if args.graph:
        a = _graphs(args)[0]
    else:
        ctx = _context(args)
        if args.gamma:
            a = ctx.gamma(_idempotent(ctx, args.gamma[0]))
        elif args.element:
            a = ctx.bliw(ctx.element(args.element[0]))
        else:
            raise InputError("export-dot needs --graph, --gamma or --element")
    _out(emit_dot(a))
    return OK


def _yn(b: bool) -> str:
    return "yes" if b else "no"


# --- parser ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--fixture", choices=sorted(BUILDERS))
    src.add_argument("--semigroup", metavar="FILE")
    common.add_argument("--graph", action="append", metavar="FILE")
    common.add_argument("--gamma", action="append", metavar="E")
    common.add_argument("--element", action="append", metavar="S")
    common.add_argument("--from", dest="source", metavar="X")
    common.add_argument("--to", dest="target", metavar="Y")

    p = argparse.ArgumentParser(prog="liw", description="Birooted locally inverse word graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        q = sub.add_parser(name, parents=[common], help=help_)
        q.set_defaults(func=fn)
        return q

    def outputs(q):
        q.add_argument("--export-dot", action="store_true", help="write DOT instead of the graph format")
        q.add_argument("--png", metavar="PATH", help="also draw the graph to a PNG file")

    add("validate", cmd_validate, "check a semigroup or graph file")
    q = add("gamma", cmd_gamma, "the graph of an idempotent")
    q.add_argument("e", nargs="?")
    q.add_argument("--idempotent")
    outputs(q)
    q = add("bliw", cmd_bliw, "the birooted graph of an element")
    q.add_argument("s", nargs="?")
    outputs(q)
    q = add("reduce", cmd_reduce, "reduced form of a rooted graph file")
    q.add_argument("--trace", action="store_true")
    outputs(q)
    q = add("hom", cmd_hom, "find a homomorphism")
    q.add_argument("mode", choices=MODES)
    add("iso", cmd_iso, "test isomorphism")
    add("aut", cmd_aut, "list automorphisms")
    q = add("green", cmd_green, "Green's relations, graph side against table side")
    q.add_argument("--rel", choices=RELATIONS)
    q = add("order", cmd_order, "orders and omega relations for --element t --element s")
    q.add_argument("--rel", choices=ORDERS)
    q = add("member", cmd_member, "word membership between two vertices")
    q.add_argument("w", nargs="?")
    q.add_argument("--word")
    q = add("wedge", cmd_wedge, "wedge of two birooted graphs")
    outputs(q)
    q = add("dot-product", cmd_dot_product, "dot product of two birooted graphs")
    outputs(q)
    q = add("classify", cmd_classify, "graph-side class predicates against table oracles")
    q.add_argument("--figures", metavar="DIR", help="write one PNG per D-class graph")
    add("export-dot", cmd_export_dot, "write DOT for a graph")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, ParseError, SemigroupError, GraphError, WordSyntaxError,
            KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"liw {args.command}: error: {msg}", file=sys.stderr)
        return BAD


def cli(argv) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
