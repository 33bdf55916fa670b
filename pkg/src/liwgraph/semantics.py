"""Word graphs of a finite locally inverse semigroup, with graph-side versions
of its relations and products."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .fixtures import Fixture
from .graph import BliwGraph, LiwGraph, disjoint_union
from .morphism import find_hom, hom_from_anchor, homs, is_isomorphic
from .reduction import reduce
from .semigroup import FiniteSemigroup, GeneratorAssignment, NotLocallyInverse, SemigroupError
from .words import Presentation, Wedge, WordSyntaxError, bar_alphabet, evaluate, evaluate_letter, parse_word

RELATIONS = ("R", "L", "H", "D", "J")


@dataclass
class SemigroupGraphContext:
    semigroup: FiniteSemigroup
    assignment: GeneratorAssignment
    presentation: Presentation | None = None
    _gammas: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_fixture(cls, fx: Fixture) -> "SemigroupGraphContext":
        return cls(fx.semigroup, fx.assignment, fx.presentation)

    def __post_init__(self):
        if not self.semigroup.is_locally_inverse():
            raise NotLocallyInverse(-1, -1, "semigroup is not locally inverse")

    @property
    def s(self) -> FiniteSemigroup:
        return self.semigroup

    @cached_property
    def letters(self) -> list[str]:
        return bar_alphabet(self.assignment.generators)

    def element(self, text: str) -> int:
        """Look up an element by name, falling back to evaluating a word."""
        if text in self.s.names:
            return self.s.index(text)
        try:
            u = parse_word(text)
        except WordSyntaxError as exc:
            raise SemigroupError(f"unknown element {text!r}: {exc}") from None
        if not u:
            raise SemigroupError("empty element expression")
        missing = {z for z in u if isinstance(z, str) and z not in self.assignment}
        missing |= {c for z in u if isinstance(z, Wedge) for c in z if c not in self.assignment}
        if missing:
            raise SemigroupError(f"unknown letters {sorted(missing)}")
        return evaluate(u, self.s, self.assignment)

    def evaluate(self, u) -> int:
        return evaluate(u, self.s, self.assignment)

    # --- the graphs ---

    def gamma(self, e: int) -> LiwGraph:
        if e not in self._gammas:
            self._gammas[e] = self._build_gamma(e)
        return self._gammas[e]

    def _build_gamma(self, e: int) -> LiwGraph:
        s, g = self.s, self.assignment
        if not s.is_idempotent(e):
            raise SemigroupError(f"{s.names[e]} is not idempotent")
        left = s.green_class("L", e)
        right = s.green_class("R", e)
        lidx = {a: i for i, a in enumerate(left)}
        ridx = {b: len(left) + i for i, b in enumerate(right)}
        rset = set(right)
        lines = {(lidx[a], ridx[b]) for a in left for b in right if b in s.inverses(a)}
        arrows = set()
        for x in self.letters:
            xx = evaluate_letter(Wedge(x, x[:-1] if x.endswith("'") else x + "'"), s, g)
            for a in left:
                if s.mul(xx, a) != a:
                    continue
                cands = [a1 for a1 in s.inverses(a) & rset if s.mul(a1, xx) == a1]
                if len(cands) != 1:
                    raise NotLocallyInverse(a, e, f"no unique inverse of {s.names[a]} in R_e and S(x^x')")
                b = s.mul(cands[0], g[x])
                assert b in rset
                arrows.add((lidx[a], x, ridx[b]))
        names = [f"l:{s.names[a]}" for a in left] + [f"r:{s.names[b]}" for b in right]
        return LiwGraph(("l",) * len(left) + ("r",) * len(right), names, lines, arrows)

    def lv(self, e: int, a: int) -> int:
        return self.gamma(e).vertex(f"l:{self.s.names[a]}")

    def rv(self, e: int, b: int) -> int:
        return self.gamma(e).vertex(f"r:{self.s.names[b]}")

    def element_of(self, e: int, v: int) -> int:
        return self.s.index(self.gamma(e).names[v][2:])

    def canonical_idempotent(self, s_: int) -> int:
        """Least-index idempotent R-related to s_."""
        r = self.s.green().r_class
        return min(f for f in self.s.idempotents if r[f] == r[s_])

    def birooted(self, e: int, a: int, b: int) -> BliwGraph:
        """(l_a, gamma_e, r_b) for a in L_e and b in R_e."""
        return BliwGraph(self.gamma(e), self.lv(e, a), self.rv(e, b))

    def bliw(self, s_: int) -> BliwGraph:
        e = self.canonical_idempotent(s_)
        return self.birooted(e, e, s_)

    # --- Green's relations and orders ---

    def green_via_graphs(self, s_: int, t: int, rel: str) -> bool:
        A, B = self.bliw(s_), self.bliw(t)
        rel = rel.upper()
        if rel == "R":
            return is_isomorphic(A, B, "left")
        if rel == "L":
            return is_isomorphic(A, B, "right")
        if rel == "H":
            return is_isomorphic(A, B, "left") and is_isomorphic(A, B, "right")
        if rel == "D":
            return is_isomorphic(A, B, "weak")
        if rel == "J":
            return find_hom(A, B, "weak") is not None and find_hom(B, A, "weak") is not None
        raise ValueError(f"unknown relation {rel!r}")

    def leq_via_graphs(self, t: int, s_: int, rel: str = "") -> bool:
        """t <= s_ (natural order, or <=_R, <=_L, <=_H, <=_J) from homomorphisms A_s -> A_t."""
        A, B = self.bliw(s_), self.bliw(t)
        rel = rel.upper()
        if rel == "":
            return find_hom(A, B, "full") is not None
        if rel == "R":
            return find_hom(A, B, "left") is not None
        if rel == "L":
            return find_hom(A, B, "right") is not None
        if rel == "H":
            return find_hom(A, B, "left") is not None and find_hom(A, B, "right") is not None
        if rel == "J":
            return find_hom(A, B, "weak") is not None
        raise ValueError(f"unknown order {rel!r}")

    def omega_via_graphs(self, f: int, e: int, kind: str = "") -> bool:
        """f omega^r e, f omega^l e or f omega e, via homomorphisms A_e -> A_f."""
        for x in (e, f):
            if not self.s.is_idempotent(x):
                raise SemigroupError(f"{self.s.names[x]} is not idempotent")
        mode = {"r": "left", "l": "right", "": "full"}[kind]
        return find_hom(self.bliw(e), self.bliw(f), mode) is not None

    def idempotent_via_graph(self, s_: int) -> bool:
        A = self.bliw(s_)
        return A.roots in A.graph.lines

    def inverses_via_graph(self, s_: int) -> frozenset[int]:
        A = self.bliw(s_)
        out = set()
        for t in range(self.s.n):
            B = self.bliw(t)
            for phi in homs(A, B, "weak"):
                if (phi.is_bijective()
                        and (phi(A.left_root), B.right_root) in B.graph.lines
                        and (B.left_root, phi(A.right_root)) in B.graph.lines):
                    out.add(t)
                    break
        return frozenset(out)

    # --- wedge and dot ---

    def universal_report(self) -> list[str]:
        return verify_universal_properties(self)


def wedge(a: BliwGraph, b: BliwGraph) -> BliwGraph:
    """Reduced form of the disjoint union plus the line (left root of a, right root of b)."""
    g, k = disjoint_union(a.graph, b.graph)
    g = LiwGraph(g.sides, g.names, set(g.lines) | {(a.left_root, b.right_root + k)}, g.arrows)
    return reduce(BliwGraph(g, a.left_root, b.right_root + k)).output


def dot(a: BliwGraph, b: BliwGraph) -> BliwGraph:
    """Reduced form of the disjoint union plus the line (left root of b, right root of a)."""
    g, k = disjoint_union(a.graph, b.graph)
    g = LiwGraph(g.sides, g.names, set(g.lines) | {(b.left_root + k, a.right_root)}, g.arrows)
    return reduce(BliwGraph(g, a.left_root, b.right_root + k)).output


def dot_cor_left(ctx: SemigroupGraphContext, s_: int, t: int) -> bool:
    """Graph condition for st = t."""
    A, B = ctx.bliw(s_), ctx.bliw(t)
    phi = find_hom(A, B, "left")
    return phi is not None and (B.left_root, phi(A.right_root)) in B.graph.lines


def dot_cor_right(ctx: SemigroupGraphContext, s_: int, t: int) -> bool:
    """Graph condition for st = s."""
    A, B = ctx.bliw(s_), ctx.bliw(t)
    phi = find_hom(B, A, "right")
    return phi is not None and (phi(B.left_root), A.right_root) in A.graph.lines


def verify_universal_properties(ctx: SemigroupGraphContext) -> list[str]:
    """Check the wedge/dot characterizations over all pairs and triples.

    Returns a list of counterexample descriptions; empty means all hold.
    """
    s = ctx.s
    nm = s.names
    bad = []
    n = s.n
    for x in range(n):
        for y in range(n):
            W = wedge(ctx.bliw(x), ctx.bliw(y))
            D = dot(ctx.bliw(x), ctx.bliw(y))
            xy = s.mul(x, y)
            xw = s.sandwich_ext(x, y)
            canon = find_hom(D, ctx.bliw(xy))
            if canon is None:
                bad.append(f"dot_hom fails for ({nm[x]}, {nm[y]})")
            if find_hom(W, ctx.bliw(xw)) is None:
                bad.append(f"no hom from wedge({nm[x]}, {nm[y]}) to its sandwich")
            for a in range(n):
                below = s.is_idempotent(a) and s.natural_leq(a, xw)
                if (find_hom(W, ctx.bliw(a)) is not None) != below:
                    bad.append(f"wedge_car fails for ({nm[x]}, {nm[y]}, {nm[a]})")
                phi = find_hom(D, ctx.bliw(a))
                if (phi is not None) != s.natural_leq(a, xy):
                    bad.append(f"dot_car fails for ({nm[x]}, {nm[y]}, {nm[a]})")
                if phi is not None and canon is not None:
                    psi = find_hom(ctx.bliw(xy), ctx.bliw(a))
                    if psi is None or canon.then(psi).vmap != phi.vmap:
                        bad.append(f"dot_uni fails for ({nm[x]}, {nm[y]}, {nm[a]})")
            if dot_cor_left(ctx, x, y) != (xy == y):
                bad.append(f"dot_cor (i) fails for ({nm[x]}, {nm[y]})")
            if dot_cor_right(ctx, x, y) != (xy == x):
                bad.append(f"dot_cor (ii) fails for ({nm[x]}, {nm[y]})")
    return bad


def isom_descr_holds(ctx: SemigroupGraphContext, e: int, a: int) -> bool:
    """For a in R_e and f the idempotent of L_a: l_e -> l_a extends to an isomorphism
    gamma_e -> gamma_f with l_s -> l_{sa} and r_t -> r_{a't}."""
    s = ctx.s
    f = [x for x in s.idempotents if s.related("L", x, a)][0]
    a1 = [x for x in s.inverses(a) if s.mul(x, a) == f and s.mul(a, x) == e][0]
    phi = hom_from_anchor(ctx.gamma(e), ctx.gamma(f), ctx.lv(e, e), ctx.lv(f, a))
    if phi is None or not phi.is_bijective():
        return False
    ge = ctx.gamma(e)
    for v in range(ge.n):
        x = ctx.element_of(e, v)
        want = ctx.lv(f, s.mul(x, a)) if ge.sides[v] == "l" else ctx.rv(f, s.mul(a1, x))
        if phi(v) != want:
            return False
    return True
