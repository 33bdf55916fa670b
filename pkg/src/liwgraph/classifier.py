"""Graph-side class predicates paired with table-side oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graph import LEFT, RIGHT, LiwGraph, connected_components
from .morphism import automorphisms
from .semantics import SemigroupGraphContext
from .semigroup import FiniteSemigroup
from .words import is_x_straight


@dataclass(frozen=True)
class LineComponentData:
    component: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OrbitData:
    orbit: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]
    full: tuple[bool, ...]


def line_components(g: LiwGraph) -> LineComponentData:
    comps = connected_components(g, lines_only=True)
    comp = [0] * g.n
    for k, c in enumerate(comps):
        for v in c:
            comp[v] = k
    return LineComponentData(tuple(comp), tuple(tuple(c) for c in comps))


def line_degree(g: LiwGraph, v: int) -> int:
    return g.line_degree(v)


def _complete_bipartite(g: LiwGraph, verts) -> bool:
    ls = [v for v in verts if g.sides[v] == LEFT]
    rs = [v for v in verts if g.sides[v] == RIGHT]
    return all((a, b) in g.lines for a in ls for b in rs)


def orbits(g: LiwGraph, auts=None) -> OrbitData:
    auts = automorphisms(g) if auts is None else auts
    orbit = [-1] * g.n
    groups = []
    for v in range(g.n):
        if orbit[v] >= 0:
            continue
        members = sorted({phi(v) for phi in auts})
        for w in members:
            orbit[w] = len(groups)
        groups.append(tuple(members))
    full = []
    for grp in groups:
        # full: every vertex of the other side is a line neighbour of some orbit member
        side = g.sides[grp[0]]
        others = g.right_vertices if side == LEFT else g.left_vertices
        near = {w for v in grp for w in g.line_adj[v]}
        full.append(set(others) <= near)
    return OrbitData(tuple(orbit), tuple(groups), tuple(full))


def transitivity(g: LiwGraph, kind: str, auts=None) -> bool:
    auts = automorphisms(g) if auts is None else auts
    if kind == "line":
        lines = sorted(g.lines)
        return all(any((phi(lines[0][0]), phi(lines[0][1])) == ln for phi in auts) for ln in lines)
    if kind in ("left-vertex", "right-vertex"):
        side = g.left_vertices if kind == "left-vertex" else g.right_vertices
        return len({phi(side[0]) for phi in auts}) == len(side)
    if kind == "arrow":
        for x in sorted({x for _, x, _ in g.arrows}):
            arr = sorted((a, b) for a, y, b in g.arrows if y == x)
            hit = {(phi(arr[0][0]), phi(arr[0][1])) for phi in auts}
            if not set(arr) <= hit:
                return False
        return True
    if kind == "almost-vertex":
        return all(orbits(g, auts).full)
    if kind == "component-almost":
        return all(_component_almost(g, c, auts) for c in line_components(g).components)
    raise ValueError(f"unknown transitivity kind {kind!r}")


def _component_almost(g: LiwGraph, comp, auts) -> bool:
    """Every left/right pair inside comp is joined by a line after some automorphism."""
    for v in comp:
        near = {w for phi in auts for w in g.line_adj[phi(v)]}
        if any(g.sides[w] != g.sides[v] and w not in near for w in comp):
            return False
    return True


def contract_line_components(g: LiwGraph) -> tuple[list[tuple[int, ...]], set]:
    """Vertices are the line components; one labelled edge per arrow between them."""
    data = line_components(g)
    edges = {(data.component[a], x, data.component[b]) for a, x, b in g.arrows}
    return list(data.components), edges


def graph_flags(g: LiwGraph, auts=None) -> dict[str, bool]:
    """All graph-side predicates of one graph."""
    auts = automorphisms(g) if auts is None else auts
    comps = line_components(g).components
    return dict(
        rect=_complete_bipartite(g, range(g.n)),
        one_r=all(g.line_degree(v) == 1 for v in g.left_vertices),
        one_l=all(g.line_degree(v) == 1 for v in g.right_vertices),
        connected=len(comps) == 1,
        comps_complete=all(_complete_bipartite(g, c) for c in comps),
        line_t=transitivity(g, "line", auts),
        lv_t=transitivity(g, "left-vertex", auts),
        rv_t=transitivity(g, "right-vertex", auts),
        arrow_t=transitivity(g, "arrow", auts),
        almost=transitivity(g, "almost-vertex", auts),
        comp_almost=transitivity(g, "component-almost", auts),
    )


# --- table-side oracles ---

def _d_class(s: FiniteSemigroup, e: int) -> list[int]:
    return s.green_class("D", e)


def _is_subsemigroup(s: FiniteSemigroup, elems) -> bool:
    es = set(elems)
    return all(s.mul(a, b) in es for a in es for b in es)


def _h_has_idempotent(s: FiniteSemigroup, a: int) -> bool:
    return any(s.is_idempotent(b) for b in s.green_class("H", a))


def _is_clifford_semigroup(s: FiniteSemigroup, elems) -> bool:
    """Subsemigroup in which every element lies in a subgroup and idempotents are central."""
    elems = list(elems)
    idem = [e for e in elems if s.is_idempotent(e)]
    central = all(s.mul(e, a) == s.mul(a, e) for e in idem for a in elems)
    in_group = all(any(s.mul(s.mul(a, b), a) == a and s.mul(a, b) == s.mul(b, a)
                       for b in elems) for a in elems)
    return central and in_group


def _normal_band(s: FiniteSemigroup, elems) -> bool:
    elems = list(elems)
    if not _is_subsemigroup(s, elems) or not all(s.is_idempotent(a) for a in elems):
        return False
    return all(s.product(e, x, y, e) == s.product(e, y, x, e)
               for e, x, y in product(elems, repeat=3))


def _left_normal_band(s, elems) -> bool:
    elems = list(elems)
    return (_is_subsemigroup(s, elems) and all(s.is_idempotent(a) for a in elems)
            and all(s.product(e, x, y) == s.product(e, y, x) for e, x, y in product(elems, repeat=3)))


def _right_normal_band(s, elems) -> bool:
    elems = list(elems)
    return (_is_subsemigroup(s, elems) and all(s.is_idempotent(a) for a in elems)
            and all(s.product(x, y, e) == s.product(y, x, e) for e, x, y in product(elems, repeat=3)))


def straightness_oracle(ctx: SemigroupGraphContext) -> bool:
    """Whether words with different first or last bar letter never share a value.

    Computes, for each pair (x, y) of bar letters, the set of values of words
    starting with x and ending with y, and tests that these sets are disjoint.
    """
    s, letters = ctx.s, ctx.letters
    vals: dict[tuple[str, str], set[int]] = {(x, y): set() for x in letters for y in letters}
    for x in letters:
        vals[(x, x)].add(ctx.assignment[x])
        for y in letters:
            vals[(x, y)].add(s.sandwich_ext(ctx.assignment[x], ctx.assignment[y]))
    changed = True
    while changed:
        changed = False
        for (x, y), (y2, z) in product(list(vals), repeat=2):
            new = {s.mul(a, b) for a in vals[(x, y)] for b in vals[(y2, z)]} - vals[(x, z)]
            if new:
                vals[(x, z)] |= new
                changed = True
    keys = list(vals)
    return all(not (vals[k1] & vals[k2]) for i, k1 in enumerate(keys) for k2 in keys[i + 1:])


# --- report ---

@dataclass(frozen=True)
class Verdict:
    name: str
    scope: str
    graph: bool
    oracle: bool

    @property
    def agree(self) -> bool:
        return self.graph == self.oracle

    def line(self, sep: str = "\t") -> str:
        yn = {True: "yes", False: "no"}
        return sep.join([self.name, self.scope, yn[self.graph], yn[self.oracle],
                         "agree" if self.agree else "disagree"])


def classify(ctx: SemigroupGraphContext) -> list[Verdict]:
    s = ctx.s
    nm = s.names
    out: list[Verdict] = []
    green = s.green()
    idem = s.idempotents
    # one representative idempotent per D-class for the per-class predicates
    reps = sorted({min(f for f in idem if green.d_class[f] == green.d_class[e]) for e in idem})
    per_e = {}
    for e in idem:
        g = ctx.gamma(e)
        auts = automorphisms(g)
        per_e[e] = (g, auts)

    def add(name, scope, graph, oracle):
        out.append(Verdict(name, scope, bool(graph), bool(oracle)))

    all_e = {e: graph_flags(g, auts) for e, (g, auts) in per_e.items()}
    for e in reps:
        fl = all_e[e]
        d = _d_class(s, e)
        scope = f"D({nm[e]})"
        add("rectangular band D-class", scope, fl["rect"], all(s.is_idempotent(a) for a in d))
        add("one idempotent per R-class", scope, fl["one_r"],
            all(sum(s.is_idempotent(b) for b in s.green_class("R", a)) == 1 for a in d))
        add("one idempotent per L-class", scope, fl["one_l"],
            all(sum(s.is_idempotent(b) for b in s.green_class("L", a)) == 1 for a in d))
        add("contained in core", scope, fl["connected"], set(d) <= s.core())
        n_r = len({green.r_class[a] for a in d})
        n_l = len({green.l_class[a] for a in d})
        add("group D-class", scope, fl["line_t"], n_r == 1 and n_l == 1)
        add("left group D-class", scope, fl["rv_t"], n_l == 1)
        add("right group D-class", scope, fl["lv_t"], n_r == 1)
        add("arrow-transitive", scope, fl["arrow_t"], _atrans_oracle(ctx, e))
        add("completely simple D-class", scope, fl["almost"], _is_subsemigroup(s, d))
        add("rectangular group D-class", scope, fl["almost"] and fl["comps_complete"],
            _is_subsemigroup(s, d) and _is_subsemigroup(s, [a for a in d if s.is_idempotent(a)]))

    def every(key):
        return all(v[key] for v in all_e.values())

    E = list(idem)
    scope = "S"
    add("normal band", scope, every("rect"), _normal_band(s, range(s.n)))
    add("left generalized inverse", scope, every("one_r"), s.is_regular() and _left_normal_band(s, E))
    add("right generalized inverse", scope, every("one_l"), s.is_regular() and _right_normal_band(s, E))
    add("inverse", scope, every("one_r") and every("one_l"),
        all(len(s.inverses(a)) == 1 for a in range(s.n)))
    add("generalized inverse", scope, every("comps_complete"), _normal_band(s, E))
    add("idempotent generated", scope, every("connected"), s.core() == frozenset(range(s.n)))
    add("Clifford", scope, every("line_t"), green.h_class == green.d_class)
    add("left Clifford", scope, every("rv_t"), green.l_class == green.d_class)
    add("right Clifford", scope, every("lv_t"), green.r_class == green.d_class)
    add("strict regular", scope, every("arrow_t"),
        all(_is_clifford_semigroup(s, s.local_submonoid(e)) for e in E))
    add("completely regular", scope, every("almost"),
        all(_h_has_idempotent(s, a) for a in range(s.n)))
    add("E-solid", scope, every("comp_almost"), _e_solid(s))
    contents = all(len(c) == 1 for e in E for c in per_e[e][0].contents)
    add("singleton contents", scope, contents, straightness_oracle(ctx))
    if ctx.presentation is not None:
        add("X-straight presentation", scope, contents, is_x_straight(ctx.presentation))

    for a in range(s.n):
        e = min(f for f in idem if green.l_class[f] == green.l_class[a])
        g, auts = per_e[e]
        orb = orbits(g, auts)
        v = ctx.lv(e, a)
        add("R-class is a subsemigroup", f"R({nm[a]})", orb.full[orb.orbit[v]],
            _is_subsemigroup(s, s.green_class("R", a)))
        f = min(x for x in idem if green.r_class[x] == green.r_class[a])
        g, auts = per_e[f]
        orb = orbits(g, auts)
        v = ctx.rv(f, a)
        add("L-class is a subsemigroup", f"L({nm[a]})", orb.full[orb.orbit[v]],
            _is_subsemigroup(s, s.green_class("L", a)))
        add("in core", nm[a], core_membership_via_graph(ctx, a), a in s.core())
    return out


def _atrans_oracle(ctx: SemigroupGraphContext, e: int) -> bool:
    """For every bar letter x: D_e meets xx'Sxx' in nothing or in a subgroup."""
    s = ctx.s
    d = set(_d_class(s, e))
    for x in ctx.letters:
        xx = s.mul(ctx.assignment[x], ctx.assignment[x[:-1] if x.endswith("'") else x + "'"])
        part = d & {s.product(xx, t, xx) for t in range(s.n)}
        if part and not (_is_subsemigroup(s, part)
                         and len({s.green().h_class[a] for a in part}) == 1
                         and any(s.is_idempotent(a) for a in part)):
            return False
    return True


def _e_solid(s: FiniteSemigroup) -> bool:
    """For idempotents f L e R g the H-class of fg contains an idempotent."""
    for e, f, g in product(s.idempotents, repeat=3):
        if s.related("L", f, e) and s.related("R", e, g):
            if not _h_has_idempotent(s, s.mul(f, g)):
                return False
    return True


def core_membership_via_graph(ctx: SemigroupGraphContext, a: int) -> bool:
    A = ctx.bliw(a)
    comp = line_components(A.graph).component
    return comp[A.left_root] == comp[A.right_root]


def x_straight_contents(ctx: SemigroupGraphContext) -> tuple[bool, bool | None]:
    """(all contents singleton, presentation X-straight or None without one)."""
    contents = all(len(c) == 1 for e in ctx.s.idempotents for c in ctx.gamma(e).contents)
    pres = None if ctx.presentation is None else is_x_straight(ctx.presentation)
    return contents, pres
