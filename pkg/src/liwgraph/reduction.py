"""Folding of equivalent basic paths down to the reduced form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import RIGHT, BliwGraph, GraphError, LiwGraph, quotient

DETERMINATION, INJECTION = "determination", "injection"


@dataclass(frozen=True)
class BasicPathPair:
    """Two equivalent basic paths sharing ``vertex`` and arrow ``label``.

    ``first`` and ``second`` are the (arrow source, arrow target) pairs.
    Determinations start at a right vertex, injections end at a left vertex.
    """

    kind: str
    vertex: int
    label: str
    first: tuple[int, int]
    second: tuple[int, int]

    @property
    def merges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        (a1, b1), (a2, b2) = self.first, self.second
        return (a1, a2), (b1, b2)


@dataclass(frozen=True)
class Step:
    kind: str
    vertex: str
    label: str
    merged: tuple[tuple[str, str], ...]

    def __str__(self):
        pairs = ", ".join(f"{u}~{v}" for u, v in self.merged)
        return f"{self.kind} at {self.vertex} on {self.label}: {pairs}"


@dataclass(frozen=True)
class Reduction:
    output: BliwGraph
    epimorphism: tuple[int, ...]
    steps: tuple[Step, ...]


def _paths_at(g: LiwGraph, v: int) -> list[tuple[str, int, int]]:
    out = []
    if g.sides[v] == RIGHT:
        for a in g.line_adj[v]:
            for x, b in g.out_arrows[a]:
                out.append((x, a, b))
    else:
        for b in g.line_adj[v]:
            for x, a in g.in_arrows[b]:
                out.append((x, a, b))
    return out


def violations(g: LiwGraph, kind: str | None = None) -> Iterator[BasicPathPair]:
    """All pairs of distinct equivalent basic paths, per shared vertex and label."""
    for v in range(g.n):
        k = DETERMINATION if g.sides[v] == RIGHT else INJECTION
        if kind is not None and kind != k:
            continue
        by_label: dict[str, list] = {}
        for x, a, b in _paths_at(g, v):
            by_label.setdefault(x, []).append((a, b))
        for x in sorted(by_label):
            ps = sorted(set(by_label[x]))
            for i in range(len(ps)):
                for j in range(i + 1, len(ps)):
                    yield BasicPathPair(k, v, x, ps[i], ps[j])


def is_deterministic(g: LiwGraph) -> bool:
    return next(violations(g, DETERMINATION), None) is None


def is_injective(g: LiwGraph) -> bool:
    return next(violations(g, INJECTION), None) is None


def is_reduced(g: LiwGraph) -> bool:
    return next(violations(g), None) is None


def _merge_quotient(a: BliwGraph, pairs) -> BliwGraph:
    g = a.graph
    labels = list(range(g.n))

    def find(v):
        while labels[v] != v:
            v = labels[v]
        return v

    for u, v in pairs:
        labels[find(u)] = find(v)
    q, phi = quotient(g, [find(v) for v in range(g.n)])
    return BliwGraph(q, phi[a.left_root], phi[a.right_root])


def _elementary(a: BliwGraph, pair: BasicPathPair, kind: str) -> BliwGraph:
    g = a.graph
    if pair.kind != kind:
        raise GraphError(f"expected a {kind} pair")
    live = {(x, s, t) for x, s, t in _paths_at(g, pair.vertex)} if 0 <= pair.vertex < g.n else set()
    if (pair.first == pair.second or (pair.label,) + pair.first not in live
            or (pair.label,) + pair.second not in live):
        raise GraphError("stale pair: the two basic paths are not a current violation")
    return _merge_quotient(a, pair.merges)


def elementary_determination(a: BliwGraph, pair: BasicPathPair) -> BliwGraph:
    return _elementary(a, pair, DETERMINATION)


def elementary_injection(a: BliwGraph, pair: BasicPathPair) -> BliwGraph:
    return _elementary(a, pair, INJECTION)


def reduce(a: BliwGraph, rng=None) -> Reduction:
    """Reduced form of a with its natural epimorphism and the list of steps.

    The default pops the worklist in FIFO order; with ``rng`` the next vertex
    and the violation to resolve are drawn at random.
    """
    g = a.graph
    parent = list(range(g.n))
    members = {v: [v] for v in range(g.n)}

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(u, v):
        u, v = find(u), find(v)
        if u == v:
            return u
        assert g.sides[u] == g.sides[v]
        if len(members[u]) < len(members[v]) or (len(members[u]) == len(members[v]) and v < u):
            u, v = v, u
        parent[v] = u
        members[u].extend(members.pop(v))
        return u

    def conflicts(v):
        seen: dict[str, tuple[int, int]] = {}
        found = []
        for m in members[v]:
            for nb in g.line_adj[m]:
                nb_rep = find(nb)
                for w in members[nb_rep]:
                    arrows = g.out_arrows[w] if g.sides[v] == RIGHT else g.in_arrows[w]
                    for x, t in arrows:
                        # (arrow source, arrow target) classes
                        ab = (nb_rep, find(t)) if g.sides[v] == RIGHT else (find(t), nb_rep)
                        old = seen.setdefault(x, ab)
                        if old != ab:
                            found.append((x, old, ab))
                            if rng is None:
                                return found
        return found

    work = deque(range(g.n))
    if rng is not None:
        work = list(range(g.n))
    steps = []
    while work:
        if rng is None:
            v = work.popleft()
        else:
            v = work.pop(rng.randrange(len(work)))
        v = find(v)
        found = conflicts(v)
        if not found:
            continue
        x, p1, p2 = found[0] if rng is None else rng.choice(found)
        kind = DETERMINATION if g.sides[v] == RIGHT else INJECTION
        merged = tuple((g.names[s], g.names[t]) for s, t in ((p1[0], p2[0]), (p1[1], p2[1])) if s != t)
        steps.append(Step(kind, g.names[v], x, merged))
        reps = {union(p1[0], p2[0]), union(p1[1], p2[1])}
        touched = {find(v)} | {find(r) for r in reps}
        for r in list(touched):
            for m in members[r]:
                touched.update(find(nb) for nb in g.line_adj[m])
        work.extend(sorted(touched))
    q, phi = quotient(g, [find(v) for v in range(g.n)])
    return Reduction(BliwGraph(q, phi[a.left_root], phi[a.right_root]), phi, tuple(steps))


def reduced(a: BliwGraph) -> BliwGraph:
    return reduce(a).output
