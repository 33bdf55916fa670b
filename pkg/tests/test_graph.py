import random

import pytest

from conftest import context, load
from liwgraph.graph import (BliwGraph, GraphError, LiwGraph, Walk, check_walk, connected_components,
                            language_equal, language_included, member, quotient, to_nfa,
                            validate_liw, word_labels_walk)
from liwgraph.morphism import find_hom
from liwgraph.words import Wedge, hat_alphabet, parse_word, random_word

W = parse_word


def test_example_graph_is_valid(example_bliw):
    g = example_bliw.graph
    assert g.n == 15 and len(g.lines) == 10 and len(g.arrows) == 8
    assert validate_liw(g) == []


def test_tiny_graph_is_valid(tiny):
    assert validate_liw(tiny.graph) == []


def test_deleting_an_arrow_breaks_the_closure_condition(example_bliw):
    g = example_bliw.graph
    v = g.vertex
    arrows = set(g.arrows) - {(v("a1"), "x", v("a"))}
    h = LiwGraph(g.sides, g.names, g.lines, arrows)
    problems = validate_liw(h)
    assert "arrow (a3, x', a2) has no inverse arrow across lines" in problems


def test_other_invalid_graphs():
    g = LiwGraph.build(["l", "m"], ["r"], [("l", "r")], [("l", "x", "r"), ("l", "x'", "r")])
    assert any("empty content" in p for p in validate_liw(g))
    two = LiwGraph.build(["l", "m"], ["r", "s"], [("l", "r"), ("m", "s")],
                         [("l", "x", "r"), ("l", "x'", "r"), ("m", "x", "s"), ("m", "x'", "s")])
    assert "graph is not connected" in validate_liw(two)
    with pytest.raises(GraphError):
        BliwGraph(two, 2, 0)


def test_contents(s1):
    g = load("no_hom_source.txt").graph
    assert g.content(g.vertex("a1")) == {"x", "y"}
    G = s1.gamma(s1.s.index("x'x"))
    assert G.content(G.vertex("l:x'x")) == {"x'"}
    for key in ("s1", "s2", "b2"):
        ctx = context(key)
        for e in ctx.s.idempotents:
            assert all(ctx.gamma(e).contents)


def test_walk_labels(tiny, s1):
    g = tiny.graph
    assert word_labels_walk(g, Walk((0,)), ())
    assert word_labels_walk(g, Walk((0, 1), (("arrow", "x"),)), W("x"))
    assert not word_labels_walk(g, Walk((0, 1), (("arrow", "x"),)), W("x'"))
    G = s1.gamma(s1.s.index("x'x"))
    v = G.vertex
    p = Walk((v("l:x"), v("r:x'x"), v("l:x'x"), v("r:x'")), (("arrow", "x"), ("line",), ("line",)))
    assert check_walk(G, p)
    assert word_labels_walk(G, p, W("x(x'^x')"))
    assert not word_labels_walk(G, p, W("x(x^x')"))
    with pytest.raises(GraphError):
        word_labels_walk(G, Walk((v("l:x"), v("r:x'y'")), (("line",),)), W("x"))


def test_trivial_walk_membership(s1):
    G = s1.gamma(s1.s.index("x'x"))
    for a in range(G.n):
        assert member(G, a, a, ())


def test_tiny_language(tiny):
    nfa = to_nfa(tiny.graph, 0, 1)
    assert nfa.accepts(W("x")) and nfa.accepts(W("(x^x')")) and nfa.accepts(W("x'"))
    assert not nfa.accepts(())


def test_no_empty_word_in_rooted_languages(any_ctx):
    for a in range(any_ctx.s.n):
        A = any_ctx.bliw(a)
        assert not member(A.graph, A.left_root, A.right_root, ())


def test_w_language_example(s1):
    G = s1.gamma(s1.s.index("x'x"))
    a, b = G.vertex("r:x'x"), G.vertex("r:x'y'")
    # words from the decomposition W1 (y'^x') W2 and friends
    for u in ["x'(y'^x')y'", "(x'^x)x'(y'^x')(y'^y')", "(x'^x')(y'^x')y'(y^y')",
              "x'x x'(y'^x')y'", "x'(y'^x')(y'^y)y'"]:
        assert member(G, a, b, W(u))
    for u in ["x'y'", "y'", "x'(y'^x')y"]:
        assert member(G, a, b, W(u)) == (s1.s.mul(s1.s.index("x'x"), s1.element(u)) == s1.s.index("x'y'"))


def test_s2_parity_language(s2):
    G = s2.gamma(s2.s.index("z'z"))
    a, b = G.vertex("l:z"), G.vertex("l:z'zz")
    alpha = hat_alphabet(["z"])
    rng = random.Random(3)
    seen = {True: 0, False: 0}
    for _ in range(600):
        u = random_word(rng, alpha, 7)
        flat = [c for z in u for c in ((z.left, z.right) if isinstance(z, Wedge) else (z,))]
        n1 = flat.count("z")
        n2 = sum(1 for i, c in enumerate(flat) if c == "z" and (i == 0 or flat[i - 1] != "z"))
        lam = u[0].left if isinstance(u[0], Wedge) else u[0]
        want = lam == "z" and (n1 - n2) % 2 == 1
        assert member(G, a, b, u) == want
        seen[want] += 1
    assert seen[True] and seen[False]


def test_prefix_language(s1):
    # every word readable from a vertex extends to a word reaching any target
    G = s1.gamma(s1.s.index("x'x"))
    nfa = G.nfa
    reach = {}
    for v in range(G.n):
        seen, todo = {v}, [v]
        while todo:
            u = todo.pop()
            nxt = set(nfa.eps[u])
            for (w, _), ts in nfa.delta.items():
                if w == u:
                    nxt |= ts
            for w in nxt - seen:
                seen.add(w)
                todo.append(w)
        reach[v] = seen
    assert all(reach[v] == set(range(G.n)) for v in range(G.n))


def test_language_inclusion_basics(s1):
    G = s1.gamma(s1.s.index("x'x"))
    a, b = G.vertex("l:x'x"), G.vertex("r:x'y'")
    assert language_equal(G, a, b, G, a, b)
    Z = s1.gamma(s1.s.index("0"))
    assert language_included(G, a, b, Z, Z.left_vertices[0], Z.right_vertices[0])
    assert not language_included(Z, Z.left_vertices[0], Z.right_vertices[0], G, a, b)
    with pytest.raises(GraphError):
        language_included(G, a, b, G, b, b)


def test_equal_languages_without_homomorphism():
    A, B = load("no_hom_source.txt"), load("no_hom_target.txt")
    assert language_equal(A.graph, *A.roots, B.graph, *B.roots)
    assert find_hom(A, B, "full") is None


def test_identity_quotient(example_bliw):
    g = example_bliw.graph
    q, phi = quotient(g, list(range(g.n)))
    assert phi == tuple(range(g.n))
    assert (q.lines, q.arrows) == (g.lines, g.arrows)


def test_quotient_first_determination(example_bliw):
    g = example_bliw.graph
    v = g.vertex
    cls = list(range(g.n))
    for a, b in (("a2", "a5"), ("a3", "a6")):
        cls[v(b)] = cls[v(a)]
    q, phi = quotient(g, cls)
    assert q.n == 13 and validate_liw(q) == []
    assert q.vertex("a3+a6") == phi[v("a3")] == phi[v("a6")]
    for a, b in (("b1", "b5"), ("b4", "b8")):
        cls[v(b)] = cls[v(a)]
    q, phi = quotient(g, cls)
    assert q.n == 11 and len(q.lines) == 8 and len(q.arrows) == 6
    with pytest.raises(GraphError):
        quotient(g, [0] * g.n)


def _sample_walks(g, rng, count, length):
    out = []
    for _ in range(count):
        vs, es = [rng.randrange(g.n)], []
        for _ in range(length):
            u = vs[-1]
            opts = [(w, ("line",)) for w in g.line_adj[u]]
            opts += [(w, ("arrow", x)) for x, w in g.out_arrows[u]]
            if not opts:
                break
            w, e = rng.choice(opts)
            vs.append(w)
            es.append(e)
        out.append(Walk(tuple(vs), tuple(es)))
    return out


def _a_label(g, p, rng):
    from liwgraph.graph import elementary_paths
    u = []
    for q in elementary_paths(g, p):
        if q[0] == "arrow":
            u.append(q[1])
        elif q[0] == "line":
            u.append(Wedge(rng.choice(sorted(g.contents[q[1]])), rng.choice(sorted(g.contents[q[2]]))))
    return tuple(u)


def test_quotient_keeps_walk_labels(example_bliw):
    g = example_bliw.graph
    rng = random.Random(11)
    cls = list(range(g.n))
    v = g.vertex
    for a, b in (("a2", "a5"), ("a3", "a6"), ("b1", "b5"), ("b4", "b8")):
        cls[v(b)] = cls[v(a)]
    q, phi = quotient(g, cls)
    for p in _sample_walks(g, rng, 60, 5):
        u = _a_label(g, p, rng)
        assert word_labels_walk(g, p, u)
        img = Walk(tuple(phi[x] for x in p.vertices), p.edges)
        assert word_labels_walk(q, img, u)


def test_homomorphisms_grow_contents_and_labels(s1):
    rng = random.Random(5)
    s = s1.s
    for t in range(s.n):
        A, B = s1.bliw(t), s1.bliw(s.index("0"))
        phi = find_hom(A, B, "weak")
        assert phi is not None
        g, h = A.graph, B.graph
        for x in range(g.n):
            assert g.contents[x] <= h.contents[phi(x)]
        for p in _sample_walks(g, rng, 10, 4):
            u = _a_label(g, p, rng)
            assert word_labels_walk(h, Walk(tuple(phi(x) for x in p.vertices), p.edges), u)


def test_subgraph_and_quotient_languages(example_bliw):
    from liwgraph.reduction import reduce
    A = example_bliw
    sub = load("example_reduced.txt")  # same shape, sits inside A on the same names
    g = A.graph
    keep = [g.vertex(nm) for nm in sub.graph.names]
    idx = {v: i for i, v in enumerate(keep)}
    lines = {(idx[a], idx[b]) for a, b in g.lines if a in idx and b in idx}
    arrows = {(idx[a], x, idx[b]) for a, x, b in g.arrows if a in idx and b in idx}
    G1 = LiwGraph(tuple(g.sides[v] for v in keep), sub.graph.names, lines, arrows)
    assert validate_liw(G1) == []
    A1 = BliwGraph(G1, idx[A.left_root], idx[A.right_root])
    Q = reduce(A).output
    assert language_included(A1.graph, *A1.roots, A.graph, *A.roots)
    assert language_included(A.graph, *A.roots, Q.graph, *Q.roots)


def test_connected_components(s1):
    G = s1.gamma(s1.s.index("x'x"))
    assert len(connected_components(G)) == 1
    assert len(connected_components(G, lines_only=True)) == 1
