"""Locally inverse word graphs, walks, walk labels and their automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .words import Letter, Wedge, Word, is_wedge, inv, letter_key

LEFT, RIGHT = "l", "r"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class LiwGraph:
    """Bipartite graph on vertices 0..n-1.

    ``sides[v]`` is "l" or "r"; lines are (left, right) pairs, arrows are
    (left, label, right) triples.
    """

    sides: tuple[str, ...]
    names: tuple[str, ...]
    lines: frozenset
    arrows: frozenset

    def __post_init__(self):
        sides = tuple(self.sides)
        names = tuple(self.names) if self.names else tuple(str(v) for v in range(len(sides)))
        lines = frozenset((int(a), int(b)) for a, b in self.lines)
        arrows = frozenset((int(a), x, int(b)) for a, x, b in self.arrows)
        if len(names) != len(sides):
            raise GraphError("names and sides differ in length")
        if len(set(names)) != len(names):
            raise GraphError("duplicate vertex names")
        for sd in sides:
            if sd not in (LEFT, RIGHT):
                raise GraphError(f"bad side {sd!r}")
        n = len(sides)
        for a, b in lines:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"line ({a}, {b}) has an unknown endpoint")
        for a, x, b in arrows:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"arrow ({a}, {x}, {b}) has an unknown endpoint")
            if is_wedge(x):
                raise GraphError("arrow labels must be base or inverse letters")
        object.__setattr__(self, "sides", sides)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def build(cls, left: Sequence[str], right: Sequence[str],
              lines: Iterable[tuple[str, str]], arrows: Iterable[tuple[str, str, str]]) -> "LiwGraph":
        """Build from vertex names; lines and arrows refer to names."""
        names = list(left) + list(right)
        idx = {nm: i for i, nm in enumerate(names)}
        try:
            ls = {(idx[a], idx[b]) for a, b in lines}
            ar = {(idx[a], x, idx[b]) for a, x, b in arrows}
        except KeyError as exc:
            raise GraphError(f"unknown vertex {exc.args[0]!r}") from None
        return cls(tuple([LEFT] * len(left) + [RIGHT] * len(right)), tuple(names), ls, ar)

    @property
    def n(self) -> int:
        return len(self.sides)

    def vertex(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    @cached_property
    def left_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.sides[v] == LEFT)

    @cached_property
    def right_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.sides[v] == RIGHT)

    @cached_property
    def line_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in sorted(self.lines):
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(x) for x in adj)

    @cached_property
    def out_arrows(self) -> tuple[tuple[tuple[str, int], ...], ...]:
        adj: list[list] = [[] for _ in range(self.n)]
        for a, x, b in sorted(self.arrows, key=lambda t: (t[0], t[1], t[2])):
            adj[a].append((x, b))
        return tuple(tuple(x) for x in adj)

    @cached_property
    def in_arrows(self) -> tuple[tuple[tuple[str, int], ...], ...]:
        adj: list[list] = [[] for _ in range(self.n)]
        for a, x, b in sorted(self.arrows, key=lambda t: (t[2], t[1], t[0])):
            adj[b].append((x, a))
        return tuple(tuple(x) for x in adj)

    @cached_property
    def contents(self) -> tuple[frozenset[str], ...]:
        out = [set() for _ in range(self.n)]
        for a, x, b in self.arrows:
            out[a].add(x)
            out[b].add(x)
        return tuple(frozenset(c) for c in out)

    def content(self, v: int) -> frozenset[str]:
        if not 0 <= v < self.n:
            raise GraphError(f"unknown vertex {v}")
        return self.contents[v]

    @cached_property
    def nfa(self) -> "Nfa":
        return _build_nfa(self)

    @cached_property
    def reduced(self) -> bool:
        from .reduction import is_reduced
        return is_reduced(self)

    def line_degree(self, v: int) -> int:
        return len(self.line_adj[v])

    def relabel(self, names: Sequence[str]) -> "LiwGraph":
        return LiwGraph(self.sides, tuple(names), self.lines, self.arrows)

    def __str__(self):
        return (f"LiwGraph({len(self.left_vertices)} left, {len(self.right_vertices)} right, "
                f"{len(self.lines)} lines, {len(self.arrows)} arrows)")


@dataclass(frozen=True)
class BliwGraph:
    graph: LiwGraph
    left_root: int
    right_root: int

    def __post_init__(self):
        g = self.graph
        if not 0 <= self.left_root < g.n or g.sides[self.left_root] != LEFT:
            raise GraphError("left root must be a left vertex")
        if not 0 <= self.right_root < g.n or g.sides[self.right_root] != RIGHT:
            raise GraphError("right root must be a right vertex")

    @property
    def roots(self) -> tuple[int, int]:
        return self.left_root, self.right_root


def disjoint_union(g1: LiwGraph, g2: LiwGraph, tags=("1", "2")) -> tuple[LiwGraph, int]:
    """Union with g2's vertices shifted by g1.n; returns (graph, shift)."""
    k = g1.n
    names = tuple(f"{tags[0]}.{nm}" for nm in g1.names) + tuple(f"{tags[1]}.{nm}" for nm in g2.names)
    lines = set(g1.lines) | {(a + k, b + k) for a, b in g2.lines}
    arrows = set(g1.arrows) | {(a + k, x, b + k) for a, x, b in g2.arrows}
    return LiwGraph(g1.sides + g2.sides, names, lines, arrows), k


# --- validation ---

def validate_liw(g: LiwGraph) -> list[str]:
    """List every violated liw-graph condition; empty means valid."""
    problems = []
    if g.n == 0:
        return ["graph has no vertices"]
    for a, b in sorted(g.lines):
        if g.sides[a] != LEFT or g.sides[b] != RIGHT:
            problems.append(f"line ({g.names[a]}, {g.names[b]}) is not left-to-right")
    for a, x, b in sorted(g.arrows):
        if g.sides[a] != LEFT or g.sides[b] != RIGHT:
            problems.append(f"arrow ({g.names[a]}, {x}, {g.names[b]}) is not left-to-right")
    if problems:
        return problems
    for v in range(g.n):
        if not g.contents[v]:
            problems.append(f"empty content at {g.names[v]}")
    for a, x, b in sorted(g.arrows):
        ok = any((a1, inv(x), b1) in g.arrows
                 for b1 in g.line_adj[a] for a1 in g.line_adj[b])
        if not ok:
            problems.append(f"arrow ({g.names[a]}, {x}, {g.names[b]}) has no inverse arrow across lines")
    if len(connected_components(g)) > 1:
        problems.append("graph is not connected")
    return problems


def is_liw(g: LiwGraph) -> bool:
    return not validate_liw(g)


def connected_components(g: LiwGraph, lines_only: bool = False) -> list[list[int]]:
    adj = [set(g.line_adj[v]) for v in range(g.n)]
    if not lines_only:
        for a, _, b in g.arrows:
            adj[a].add(b)
            adj[b].add(a)
    seen, comps = set(), []
    for v in range(g.n):
        if v in seen:
            continue
        comp, todo = [], [v]
        seen.add(v)
        while todo:
            u = todo.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        comps.append(sorted(comp))
    return comps


# --- walks ---

@dataclass(frozen=True)
class Walk:
    """Vertices v0..vk and the edges between them; an edge is ("line",) or ("arrow", x)."""

    vertices: tuple[int, ...]
    edges: tuple[tuple, ...] = field(default=())

    def __post_init__(self):
        if len(self.edges) != len(self.vertices) - 1:
            raise GraphError("a walk needs one edge fewer than vertices")


def check_walk(g: LiwGraph, p: Walk) -> bool:
    for (u, v), e in zip(zip(p.vertices, p.vertices[1:]), p.edges):
        if e[0] == "line":
            if (u, v) not in g.lines and (v, u) not in g.lines:
                return False
        elif e[0] == "arrow":
            if (u, e[1], v) not in g.arrows:
                return False
        else:
            return False
    return True


def elementary_paths(g: LiwGraph, p: Walk) -> list[tuple]:
    """Split a walk into ("right",), ("arrow", x) and ("line", a0, a1) pieces.

    Every edge is one elementary path except a line traversed right to left,
    which is a right elementary path labelled by the empty word.
    """
    out = []
    for (u, v), e in zip(zip(p.vertices, p.vertices[1:]), p.edges):
        if e[0] == "arrow":
            out.append(("arrow", e[1]))
        elif g.sides[u] == RIGHT:
            out.append(("right",))
        else:
            out.append(("line", u, v))
    return out


def word_labels_walk(g: LiwGraph, p: Walk, u: Word) -> bool:
    """Is u one of the labels w(p)?"""
    if not check_walk(g, p):
        raise GraphError("not a walk of the graph")
    pieces = [q for q in elementary_paths(g, p) if q[0] != "right"]
    if len(pieces) != len(u):
        return False
    for q, z in zip(pieces, u):
        if q[0] == "arrow":
            if z != q[1]:
                return False
        else:
            if not is_wedge(z) or z.left not in g.contents[q[1]] or z.right not in g.contents[q[2]]:
                return False
    return True


# --- automata ---

@dataclass(frozen=True)
class Nfa:
    """States are vertices; eps moves go from right vertices to their line neighbours."""

    n: int
    delta: dict  # (state, letter) -> frozenset of states
    eps: tuple[frozenset[int], ...]
    start: int
    accept: int

    @cached_property
    def letters(self) -> frozenset:
        return frozenset(x for _, x in self.delta)

    @cached_property
    def closures(self) -> tuple[frozenset[int], ...]:
        out = []
        for v in range(self.n):
            seen, todo = {v}, [v]
            while todo:
                u = todo.pop()
                for w in self.eps[u]:
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            out.append(frozenset(seen))
        return tuple(out)

    def close(self, states: Iterable[int]) -> frozenset[int]:
        out = set()
        for v in states:
            out |= self.closures[v]
        return frozenset(out)

    def step(self, states: frozenset[int], z: Letter) -> frozenset[int]:
        nxt = set()
        for v in states:
            nxt |= self.delta.get((v, z), frozenset())
        return self.close(nxt)

    def run(self, u: Word, start: int | None = None) -> frozenset[int]:
        states = self.close([self.start if start is None else start])
        for z in u:
            states = self.step(states, z)
            if not states:
                break
        return states

    def accepts(self, u: Word) -> bool:
        return self.accept in self.run(u)


def graph_nfa(g: LiwGraph) -> Nfa:
    """Transition structure of g (start and accept are placeholders)."""
    return g.nfa


def _build_nfa(g: LiwGraph) -> Nfa:
    delta: dict = {}
    for a, x, b in g.arrows:
        delta.setdefault((a, x), set()).add(b)
    for a, b in g.lines:
        for x in g.contents[a]:
            for y in g.contents[b]:
                delta.setdefault((a, Wedge(x, y)), set()).add(b)
    delta = {k: frozenset(v) for k, v in delta.items()}
    eps = tuple(frozenset(g.line_adj[v]) if g.sides[v] == RIGHT else frozenset()
                for v in range(g.n))
    return Nfa(g.n, delta, eps, 0, 0)


def to_nfa(g: LiwGraph, a: int, b: int) -> Nfa:
    base = graph_nfa(g)
    return Nfa(base.n, base.delta, base.eps, a, b)


def member(g: LiwGraph, a: int, b: int, u: Word) -> bool:
    """Is u in L_{a,b}(g)? The empty word labels the walks made of right elementary paths."""
    return b in graph_nfa(g).run(u, start=a)


def language_included(g: LiwGraph, a: int, b: int, g2: LiwGraph, a2: int, b2: int) -> bool:
    """Decide L_{a,b}(g) <= L_{a2,b2}(g2) by exploring (state, subset) pairs."""
    if g.sides[a] != g2.sides[a2] or g.sides[b] != g2.sides[b2]:
        raise GraphError("vertex sides do not match")
    n1, n2 = graph_nfa(g), graph_nfa(g2)
    start = [(s, n2.closures[a2]) for s in n1.closures[a]]
    seen = set(start)
    todo = deque(start)
    by_state: dict[int, list] = {}
    for (v, z), targets in n1.delta.items():
        by_state.setdefault(v, []).append((z, targets))
    while todo:
        v, sub = todo.popleft()
        if v == b and b2 not in sub:
            return False
        for z, targets in by_state.get(v, ()):
            sub2 = n2.step(sub, z)
            for w in targets:
                for w2 in n1.closures[w]:
                    key = (w2, sub2)
                    if key not in seen:
                        seen.add(key)
                        todo.append(key)
    return True


def language_equal(g, a, b, g2, a2, b2) -> bool:
    return language_included(g, a, b, g2, a2, b2) and language_included(g2, a2, b2, g, a, b)


def root_language_included(A: BliwGraph, B: BliwGraph) -> bool:
    return language_included(A.graph, A.left_root, A.right_root, B.graph, B.left_root, B.right_root)


def sorted_letters(letters: Iterable[Letter]) -> list[Letter]:
    return sorted(letters, key=letter_key)


# --- quotients ---

def quotient(g: LiwGraph, classes: Sequence[int]) -> tuple[LiwGraph, tuple[int, ...]]:
    """Quotient by the partition given as a class label per vertex.

    Returns the quotient graph and the natural map from g's vertices.
    """
    labels = {}
    for v in range(g.n):
        labels.setdefault(classes[v], []).append(v)
    order = sorted(labels.values(), key=min)
    phi = [0] * g.n
    sides, names = [], []
    for k, members in enumerate(order):
        if len({g.sides[v] for v in members}) != 1:
            raise GraphError("a class mixes left and right vertices")
        for v in members:
            phi[v] = k
        sides.append(g.sides[members[0]])
        names.append("+".join(g.names[v] for v in members))
    lines = {(phi[a], phi[b]) for a, b in g.lines}
    arrows = {(phi[a], x, phi[b]) for a, x, b in g.arrows}
    return LiwGraph(tuple(sides), tuple(names), lines, arrows), tuple(phi)
