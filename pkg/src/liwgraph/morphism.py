"""Word tracing, anchored homomorphism search, isomorphisms and automorphisms.

In a reduced target a homomorphism is fixed by the image of one vertex, so
every search propagates from an anchor and then verifies the candidate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import LEFT, RIGHT, BliwGraph, GraphError, LiwGraph, graph_nfa, member
from .words import Word, letter_key

MODES = ("full", "left", "right", "weak")


@dataclass(frozen=True)
class Morphism:
    source: LiwGraph
    target: LiwGraph
    vmap: tuple[int, ...]
    left_root: bool = False
    right_root: bool = False

    def __call__(self, v: int) -> int:
        return self.vmap[v]

    def is_bijective(self) -> bool:
        return (len(set(self.vmap)) == self.target.n == self.source.n
                and len(self.source.lines) == len(self.target.lines)
                and len(self.source.arrows) == len(self.target.arrows))

    def then(self, other: "Morphism") -> "Morphism":
        """Apply self first, then other."""
        if other.source != self.target:
            raise GraphError("morphisms do not compose")
        return Morphism(self.source, other.target, tuple(other.vmap[v] for v in self.vmap))

    def inverse(self) -> "Morphism":
        if not self.is_bijective():
            raise GraphError("not invertible")
        back = [0] * self.target.n
        for v, w in enumerate(self.vmap):
            back[w] = v
        return Morphism(self.target, self.source, tuple(back))

    def table(self) -> list[tuple[str, str]]:
        return [(self.source.names[v], self.target.names[w]) for v, w in enumerate(self.vmap)]


def is_homomorphism(g: LiwGraph, g2: LiwGraph, vmap) -> bool:
    if len(vmap) != g.n:
        return False
    if any(g.sides[v] != g2.sides[vmap[v]] for v in range(g.n)):
        return False
    if any((vmap[a], vmap[b]) not in g2.lines for a, b in g.lines):
        return False
    return all((vmap[a], x, vmap[b]) in g2.arrows for a, x, b in g.arrows)


def _need_reduced(g: LiwGraph):
    if not g.reduced:
        raise GraphError("graph is not reduced")


def trace(g: LiwGraph, v: int, u: Word) -> int | None:
    """End of the walk from v labelled u that ends at a right vertex."""
    _need_reduced(g)
    ends = [w for w in graph_nfa(g).run(u, start=v) if g.sides[w] == RIGHT]
    assert len(ends) <= 1
    return ends[0] if ends else None


def trace_back(g: LiwGraph, v: int, u: Word) -> int | None:
    """Start of the walk labelled u ending at v that starts at a left vertex."""
    _need_reduced(g)
    starts = [a for a in g.left_vertices if member(g, a, v, u)]
    assert len(starts) <= 1
    return starts[0] if starts else None


def _propagate(g: LiwGraph, g2: LiwGraph, v: int, v2: int) -> list[int] | None:
    img = [-1] * g.n
    img[v] = v2
    todo = deque([v])
    while todo:
        a = todo.popleft()
        A = img[a]
        nxt = []
        if g.sides[a] == LEFT:
            for x, b in g.out_arrows[a]:
                cands = [B for y, B in g2.out_arrows[A] if y == x]
                nxt.append((b, cands))
            for b in g.line_adj[a]:
                if not g.contents[b]:
                    continue
                y = min(g.contents[b], key=letter_key)
                cands = [B for B in g2.line_adj[A] if y in g2.contents[B]]
                nxt.append((b, cands))
        else:
            for x, b in g.in_arrows[a]:
                cands = [B for y, B in g2.in_arrows[A] if y == x]
                nxt.append((b, cands))
            for b in g.line_adj[a]:
                if not g.contents[b]:
                    continue
                x = min(g.contents[b], key=letter_key)
                cands = [B for B in g2.line_adj[A] if any(y == x for y, _ in g2.out_arrows[B])]
                nxt.append((b, cands))
        for b, cands in nxt:
            if img[b] >= 0:
                continue
            if not cands:
                return None
            if len(cands) > 1:
                raise GraphError("ambiguous propagation; the target must be a reduced liw-graph")
            img[b] = cands[0]
            todo.append(b)
    if min(img) < 0:
        return None
    return img


def hom_from_anchor(g: LiwGraph, g2: LiwGraph, v: int, v2: int) -> Morphism | None:
    """The unique homomorphism g -> g2 sending v to v2, if any. g2 must be reduced."""
    _need_reduced(g2)
    if g.sides[v] != g2.sides[v2]:
        raise GraphError("anchor sides differ")
    img = _propagate(g, g2, v, v2)
    if img is None or not is_homomorphism(g, g2, img):
        return None
    return Morphism(g, g2, tuple(img))


def homs(a: BliwGraph, a2: BliwGraph, mode: str = "full") -> Iterator[Morphism]:
    """All homomorphisms a -> a2 honouring the root constraints of mode."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    g, g2 = a.graph, a2.graph
    if mode in ("full", "left"):
        anchors = [(a.left_root, a2.left_root)]
    elif mode == "right":
        anchors = [(a.right_root, a2.right_root)]
    else:
        anchors = [(a.left_root, w) for w in g2.left_vertices]
    for v, v2 in anchors:
        phi = hom_from_anchor(g, g2, v, v2)
        if phi is None:
            continue
        lr = phi(a.left_root) == a2.left_root
        rr = phi(a.right_root) == a2.right_root
        if mode == "full" and not rr:
            continue
        yield Morphism(g, g2, phi.vmap, lr, rr)


def find_hom(a: BliwGraph, a2: BliwGraph, mode: str = "full") -> Morphism | None:
    return next(homs(a, a2, mode), None)


def is_isomorphic(a: BliwGraph, a2: BliwGraph, mode: str = "full") -> bool:
    return any(phi.is_bijective() for phi in homs(a, a2, mode))


def graph_isomorphisms(g: LiwGraph, g2: LiwGraph) -> Iterator[Morphism]:
    if len(g.left_vertices) != len(g2.left_vertices) or g.n != g2.n:
        return
    v = g.left_vertices[0]
    for w in g2.left_vertices:
        phi = hom_from_anchor(g, g2, v, w)
        if phi is not None and phi.is_bijective():
            yield phi


def graphs_isomorphic(g: LiwGraph, g2: LiwGraph) -> bool:
    return next(graph_isomorphisms(g, g2), None) is not None


def automorphisms(g: LiwGraph) -> list[Morphism]:
    return list(graph_isomorphisms(g, g))
