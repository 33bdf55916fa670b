"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import context, load  # noqa: E402
from liwgraph.classifier import classify  # noqa: E402
from liwgraph.fixtures import BUILDERS  # noqa: E402
from liwgraph.graph import language_equal, language_included, validate_liw  # noqa: E402
from liwgraph.morphism import (automorphisms, find_hom, graphs_isomorphic, hom_from_anchor,  # noqa: E402
                               is_isomorphic)
from liwgraph.reduction import is_reduced, reduce  # noqa: E402
from liwgraph.semantics import verify_universal_properties  # noqa: E402
from liwgraph.words import evaluate, evaluate_letter, formal_inverse, hat_alphabet, random_word  # noqa: E402

RESULTS: list[str] = []
BATTERY = sorted(BUILDERS)


def _edges(G):
    return ({(G.names[a], G.names[b]) for a, b in G.lines},
            {(G.names[a], x, G.names[b]) for a, x, b in G.arrows})


# --- criteria; each returns (ok, detail) ---

def c1_fixture_fidelity():
    t0 = time.perf_counter()
    # built from scratch so the timing covers the derivations
    s1, s2 = BUILDERS["s1"]().semigroup, BUILDERS["s2"]().semigroup
    g1, g2 = s1.green(), s2.green()
    d1 = sorted(len(c) for c in g1.classes("D").values())
    r1 = [len(c) for c in g1.classes("R").values() if len(c) > 1]
    l1 = [len(c) for c in g1.classes("L").values() if len(c) > 1]
    ok1 = (s1.n, len(s1.idempotents), d1) == (17, 8, [1, 16]) and r1 == l1 == [4] * 4
    h2 = sorted(len(c) for c in g2.classes("H").values())
    ok2 = ((s2.n, len(s2.idempotents), len(g2.classes("D"))) == (8, 4, 1)
           and len(g2.classes("R")) == len(g2.classes("L")) == 2 and h2 == [2] * 4)
    dt = time.perf_counter() - t0
    return ok1 and ok2 and dt < 1, f"S1 D-classes {d1}, S2 H-classes {h2}, {dt:.2f}s"


def c2_gamma_reproduction():
    t0 = time.perf_counter()
    s1, s2 = context("s1"), context("s2")
    G1 = s1.gamma(s1.s.index("x'x"))
    G2 = s2.gamma(s2.s.index("z'z"))
    ref1, ref2 = load("gamma_s1_xpx.txt"), load("gamma_s2_zpz.txt")
    shape = ((len(G1.left_vertices), len(G1.right_vertices), len(G1.lines)) == (4, 4, 7)
             and sorted(x for _, x, _ in G1.arrows) == ["x", "x'", "y", "y'"])
    same = (_edges(G1) == _edges(ref1) and _edges(G2) == _edges(ref2)
            and graphs_isomorphic(G1, ref1) and graphs_isomorphic(G2, ref2))
    dt = time.perf_counter() - t0
    return shape and same and dt < 1, f"S1: 4+4 vertices, {len(G1.lines)} lines; S2 matches; {dt:.2f}s"


def c3_gamma_reduced():
    count = 0
    for key in BATTERY:
        ctx = context(key)
        for e in ctx.s.idempotents:
            G = ctx.gamma(e)
            if validate_liw(G) or not is_reduced(G):
                return False, f"{key}: gamma of {ctx.s.names[e]} fails"
            count += 1
    return True, f"{count} graphs over {len(BATTERY)} fixtures"


def c4_reduction_example():
    t0 = time.perf_counter()
    A = load("example_liw.txt")
    out = reduce(A).output
    g = out.graph
    shape = (g.n, len(g.lines), len(g.arrows)) == (8, 5, 4)
    final = is_isomorphic(out, load("example_reduced.txt"), "full")
    shuffled = [reduce(A, rng=random.Random(seed)).output for seed in range(100)]
    confluent = all(is_isomorphic(out, r, "full") for r in shuffled)
    dt = time.perf_counter() - t0
    return shape and final and confluent and dt < 1, f"8/5/4, 100 orders agree, {dt:.2f}s"


def c5_automorphisms():
    sizes = {}
    for key in BATTERY:
        ctx = context(key)
        for e in ctx.s.idempotents:
            k = len(automorphisms(ctx.gamma(e)))
            if k != len(ctx.s.green_class("H", e)):
                return False, f"{key}: |Aut| = {k} at {ctx.s.names[e]}"
            sizes[(key, ctx.s.names[e])] = k
    ok = sizes[("s1", "x'x")] == 1 and sizes[("s2", "z'z")] == 2
    return ok, "|Aut| = |H_e| everywhere; S1 big D-class 1, S2 2"


def c6_d_class():
    for key in BATTERY:
        ctx = context(key)
        s = ctx.s
        for e, f in itertools.product(s.idempotents, repeat=2):
            if graphs_isomorphic(ctx.gamma(e), ctx.gamma(f)) != s.related("D", e, f):
                return False, f"{key}: ({s.names[e]}, {s.names[f]})"
    s1 = context("s1")
    pos = graphs_isomorphic(s1.gamma(s1.s.index("x'x")), s1.gamma(s1.s.index("y'")))
    return pos, "iso iff D over all idempotent pairs; gamma(x'x) ~ gamma(y')"


def _language_check(ctx, e, cls, vertex, act, depth=4):
    """Compare act(start, u) == target with NFA acceptance for all |u| <= depth."""
    s, G = ctx.s, ctx.gamma(e)
    nfa = G.nfa
    alpha = hat_alphabet(ctx.assignment.generators)
    val = {z: evaluate_letter(z, s, ctx.assignment) for z in alpha}
    verts = {c: vertex(e, c) for c in cls}
    memo = {}
    checked = 0

    def step(st, z):
        if (st, z) not in memo:
            memo[(st, z)] = nfa.step(st, z)
        return memo[(st, z)]

    for start in cls:
        stack = [(nfa.close([verts[start]]), None, 0)]
        while stack:
            st, u, d = stack.pop()
            for c in cls:
                checked += 1
                if act(start, c, u) != (verts[c] in st):
                    return None
            if d < depth:
                for z in alpha:
                    w = val[z] if u is None else s.mul(u, val[z])
                    stack.append((step(st, z), w, d + 1))
    return checked


def c7_language_lemmas():
    t0 = time.perf_counter()
    total = 0
    for key in ("s1", "s2"):
        ctx = context(key)
        s = ctx.s
        for e in s.idempotents:
            # a u = b with a, b in R_e read from r_a to r_b
            n = _language_check(ctx, e, s.green_class("R", e), ctx.rv,
                                lambda a, b, u: (a if u is None else s.mul(a, u)) == b)
            # u a = b with a, b in L_e read from l_b to l_a; the walk starts at b
            m = _language_check(ctx, e, s.green_class("L", e), ctx.lv,
                                lambda b, a, u: (a if u is None else s.mul(u, a)) == b)
            if n is None or m is None:
                return False, f"{key}: mismatch at {s.names[e]}"
            total += n + m
    dt = time.perf_counter() - t0
    return dt < 300, f"{total} (pair, word) checks, {dt:.1f}s"


def c8_green_orders():
    t0 = time.perf_counter()
    checks = 0
    for key in ("s1", "s2"):
        ctx = context(key)
        s = ctx.s
        for a, b in itertools.product(range(s.n), repeat=2):
            for rel in "RLHDJ":
                if ctx.green_via_graphs(a, b, rel) != s.related(rel, a, b):
                    return False, f"{key}: {rel} at ({s.names[a]}, {s.names[b]})"
            if ctx.leq_via_graphs(a, b) != s.natural_leq(a, b):
                return False, f"{key}: <= at ({s.names[a]}, {s.names[b]})"
            for rel in "RLHJ":
                if ctx.leq_via_graphs(a, b, rel) != s.leq(rel, a, b):
                    return False, f"{key}: <={rel} at ({s.names[a]}, {s.names[b]})"
            checks += 10
        for f, e in itertools.product(s.idempotents, repeat=2):
            for kind, table in (("r", s.omega_r), ("l", s.omega_l), ("", s.omega)):
                if ctx.omega_via_graphs(f, e, kind) != table(f, e):
                    return False, f"{key}: omega{kind} at ({s.names[f]}, {s.names[e]})"
                checks += 1
    dt = time.perf_counter() - t0
    return dt < 60, f"{checks} verdicts agree, {dt:.1f}s"


def c9_element_identity():
    for key in ("s1", "s2"):
        ctx = context(key)
        s = ctx.s
        for a, b in itertools.product(range(s.n), repeat=2):
            if is_isomorphic(ctx.bliw(a), ctx.bliw(b), "full") != (a == b):
                return False, f"{key}: ({s.names[a]}, {s.names[b]})"
        for a in range(s.n):
            if ctx.idempotent_via_graph(a) != s.is_idempotent(a):
                return False, f"{key}: idempotency of {s.names[a]}"
            if ctx.inverses_via_graph(a) != s.inverses(a):
                return False, f"{key}: inverses of {s.names[a]}"
    return True, "A_s ~ A_t iff s = t; idempotents and inverses agree"


def c10_universal_properties():
    t0 = time.perf_counter()
    for key in ("s1", "s2"):
        bad = verify_universal_properties(context(key))
        if bad:
            return False, f"{key}: {bad[0]} ({len(bad)} failures)"
    dt = time.perf_counter() - t0
    return dt < 300, f"17^3 + 8^3 triples hold, {dt:.1f}s"


def _vertex_configs(rng, count, rooted):
    """Random (G, a, b, H, a1, b1) with matching sides; rooted forces a left, b right."""
    keys = ("s1", "s2", "b2", "rectband")
    out = []
    while len(out) < count:
        ctx = context(rng.choice(keys))
        s = ctx.s
        G, H = ctx.gamma(rng.choice(s.idempotents)), ctx.gamma(rng.choice(s.idempotents))
        if rooted:
            a, b = rng.choice(G.left_vertices), rng.choice(G.right_vertices)
        else:
            a, b = rng.randrange(G.n), rng.randrange(G.n)
        a1 = rng.choice([v for v in range(H.n) if H.sides[v] == G.sides[a]])
        b1 = rng.choice([v for v in range(H.n) if H.sides[v] == G.sides[b]])
        out.append((G, a, b, H, a1, b1))
    return out


def _anchored_hom(G, a, b, H, a1, b1):
    phi = hom_from_anchor(G, H, a, a1)
    return phi is not None and phi(b) == b1


def c11_automata():
    rng = random.Random(2024)
    outcomes = {True: 0, False: 0}
    # equivalence in the automaton orientation: left start, right end
    for G, a, b, H, a1, b1 in _vertex_configs(rng, 50, rooted=True):
        has_hom = _anchored_hom(G, a, b, H, a1, b1)
        if has_hom != language_included(G, a, b, H, a1, b1):
            return False, f"mismatch at {G.names[a]}, {G.names[b]} -> {H.names[a1]}, {H.names[b1]}"
        outcomes[has_hom] += 1
    # other orientations: a leading or trailing empty-labelled line step breaks the
    # converse, so only hom => inclusion is checked there
    for cfg in _vertex_configs(rng, 50, rooted=False):
        if _anchored_hom(*cfg) and not language_included(*cfg):
            return False, "hom without language inclusion"
    A, B = load("no_hom_source.txt"), load("no_hom_target.txt")
    negative = language_equal(A.graph, *A.roots, B.graph, *B.roots) and find_hom(A, B, "full") is None
    return negative and all(outcomes.values()), \
        f"50 left-right configs ({outcomes[True]} hom, {outcomes[False]} no hom); " \
        "equal languages without hom"


def c12_formal_inverse():
    for key in BATTERY:
        ctx = context(key)
        rng = random.Random(key)
        alpha = hat_alphabet(ctx.assignment.generators)
        for _ in range(1000):
            u = random_word(rng, alpha, 8)
            a = evaluate(u, ctx.s, ctx.assignment)
            if evaluate(formal_inverse(u), ctx.s, ctx.assignment) not in ctx.s.inverses(a):
                return False, f"{key}: fails"
    return True, f"1000 words on each of {len(BATTERY)} fixtures"


def c13_classifiers():
    verdicts = {key: classify(context(key)) for key in BATTERY}
    for key, vs in verdicts.items():
        for v in vs:
            if not v.agree:
                return False, f"{key}: {v.line()}"

    def get(key, name, scope="S"):
        return next(v for v in verdicts[key] if v.name == name and v.scope == scope).graph

    named = (get("s2", "completely simple D-class", "D(z'z)") and get("b2", "inverse")
             and get("rectband", "normal band") and not get("s1", "completely regular"))
    total = sum(len(vs) for vs in verdicts.values())
    return named, f"{total} verdicts agree; named cases hold"


CRITERIA = [
    (1, "fixture fidelity", c1_fixture_fidelity),
    (2, "gamma reproduction", c2_gamma_reproduction),
    (3, "gamma graphs are reduced liw-graphs", c3_gamma_reduced),
    (4, "reduction example and confluence", c4_reduction_example),
    (5, "automorphisms and H-classes", c5_automorphisms),
    (6, "D-class characterization", c6_d_class),
    (7, "language lemmas", c7_language_lemmas),
    (8, "Green and order equivalences", c8_green_orders),
    (9, "element identity", c9_element_identity),
    (10, "universal properties", c10_universal_properties),
    (11, "automata cross-check", c11_automata),
    (12, "formal inverse", c12_formal_inverse),
    (13, "classifiers", c13_classifiers),
]


def _run(num, title, check):
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failure, not an error in the runner
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"criterion {num:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    print(line)
    RESULTS.append(line)
    return ok, line


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, check):
    ok, line = _run(num, title, check)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
