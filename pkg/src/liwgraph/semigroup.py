"""Finite semigroups given by multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class SemigroupError(ValueError):
    pass


class NotLocallyInverse(SemigroupError):
    def __init__(self, e: int, f: int, msg: str | None = None):
        super().__init__(msg or f"not locally inverse at ({e}, {f})")
        self.pair = (e, f)


class AssociativityError(SemigroupError):
    def __init__(self, triple: tuple[int, int, int], names: Sequence[str]):
        a, b, c = triple
        super().__init__(f"not associative at ({names[a]}, {names[b]}, {names[c]})")
        self.triple = triple


@dataclass(frozen=True)
class GreenSummary:
    """Class ids (least member index) and quasiorder matrices; leq_r[a][b] means a <=_R b."""

    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    h_class: tuple[int, ...]
    d_class: tuple[int, ...]
    j_class: tuple[int, ...]
    leq_r: tuple[tuple[bool, ...], ...]
    leq_l: tuple[tuple[bool, ...], ...]
    leq_h: tuple[tuple[bool, ...], ...]
    leq_j: tuple[tuple[bool, ...], ...]

    def classes(self, which: str) -> dict[int, list[int]]:
        ids = getattr(self, f"{which.lower()}_class")
        out: dict[int, list[int]] = {}
        for a, c in enumerate(ids):
            out.setdefault(c, []).append(a)
        return out


def _class_ids(n: int, related) -> tuple[int, ...]:
    ids = [-1] * n
    for a in range(n):
        if ids[a] < 0:
            for b in range(a, n):
                if ids[b] < 0 and related(a, b):
                    ids[b] = a
    return tuple(ids)


@dataclass(frozen=True)
class FiniteSemigroup:
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        names = tuple(str(x) for x in self.names)
        n = len(table)
        if n == 0:
            raise SemigroupError("empty semigroup")
        if len(names) != n:
            raise SemigroupError(f"{len(names)} names for {n} elements")
        if len(set(names)) != n:
            raise SemigroupError("duplicate element names")
        for i, row in enumerate(table):
            if len(row) != n:
                raise SemigroupError(f"row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise SemigroupError(f"entry {v} in row {i} out of range")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, *elems: int) -> int:
        out = elems[0]
        for b in elems[1:]:
            out = self.table[out][b]
        return out

    def name(self, a: int) -> str:
        return self.names[a]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SemigroupError(f"unknown element {name!r}") from None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.names)}

    # --- basic structure ---

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.n) if self.table[a][a] == a)

    def is_idempotent(self, a: int) -> bool:
        return self.table[a][a] == a

    @cached_property
    def _inverses(self) -> tuple[frozenset[int], ...]:
        t = self.table
        out = []
        for a in range(self.n):
            out.append(frozenset(b for b in range(self.n)
                                 if t[t[a][b]][a] == a and t[t[b][a]][b] == b))
        return tuple(out)

    def inverses(self, a: int) -> frozenset[int]:
        """V(a); empty iff a is not regular."""
        return self._inverses[a]

    def is_regular(self) -> bool:
        return all(self._inverses)

    def any_inverse(self, a: int) -> int:
        inv = self._inverses[a]
        if not inv:
            raise SemigroupError(f"{self.names[a]} is not regular")
        return min(inv)

    @cached_property
    def _right_ideals(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.table[a]) | {a} for a in range(self.n))

    @cached_property
    def _left_ideals(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.table[b][a] for b in range(self.n)) | {a}
                     for a in range(self.n))

    @cached_property
    def _two_sided_ideals(self) -> tuple[frozenset[int], ...]:
        out = []
        for a in range(self.n):
            ideal = set(self._left_ideals[a])
            for b in list(ideal):
                ideal.update(self.table[b])
            out.append(frozenset(ideal))
        return tuple(out)

    def green(self) -> GreenSummary:
        return self._green

    @cached_property
    def _green(self) -> GreenSummary:
        n = self.n
        rid, lid, jid = self._right_ideals, self._left_ideals, self._two_sided_ideals
        leq_r = tuple(tuple(a in rid[b] for b in range(n)) for a in range(n))
        leq_l = tuple(tuple(a in lid[b] for b in range(n)) for a in range(n))
        leq_h = tuple(tuple(leq_r[a][b] and leq_l[a][b] for b in range(n)) for a in range(n))
        leq_j = tuple(tuple(a in jid[b] for b in range(n)) for a in range(n))
        r = _class_ids(n, lambda a, b: leq_r[a][b] and leq_r[b][a])
        l = _class_ids(n, lambda a, b: leq_l[a][b] and leq_l[b][a])
        h = _class_ids(n, lambda a, b: r[a] == r[b] and l[a] == l[b])
        # D = R o L
        d = _class_ids(n, lambda a, b: any(r[a] == r[c] and l[c] == l[b] for c in range(n)))
        j = _class_ids(n, lambda a, b: leq_j[a][b] and leq_j[b][a])
        return GreenSummary(r, l, h, d, j, leq_r, leq_l, leq_h, leq_j)

    def related(self, rel: str, a: int, b: int) -> bool:
        g = self._green
        return getattr(g, f"{rel.lower()}_class")[a] == getattr(g, f"{rel.lower()}_class")[b]

    def leq(self, rel: str, a: int, b: int) -> bool:
        """a <=_K b for K in R, L, H, J."""
        return getattr(self._green, f"leq_{rel.lower()}")[a][b]

    def green_class(self, rel: str, a: int) -> list[int]:
        ids = getattr(self._green, f"{rel.lower()}_class")
        return [b for b in range(self.n) if ids[b] == ids[a]]

    # --- orders ---

    def natural_leq(self, t: int, u: int) -> bool:
        """t <= u iff t = fu = ug for idempotents f, g."""
        tab = self.table
        return (any(tab[f][u] == t for f in self.idempotents)
                and any(tab[u][g] == t for g in self.idempotents))

    def _need_idempotent(self, *elems: int):
        for e in elems:
            if not self.is_idempotent(e):
                raise SemigroupError(f"{self.names[e]} is not idempotent")

    def omega_r(self, e: int, f: int) -> bool:
        self._need_idempotent(e, f)
        return self.table[f][e] == e

    def omega_l(self, e: int, f: int) -> bool:
        self._need_idempotent(e, f)
        return self.table[e][f] == e

    def omega(self, e: int, f: int) -> bool:
        return self.omega_r(e, f) and self.omega_l(e, f)

    # --- sandwich ---

    def _down(self, g: int) -> frozenset[int]:
        t = self.table
        return frozenset(h for h in self.idempotents if t[g][h] == h and t[h][g] == h)

    def _sandwich(self, e: int, f: int) -> int | None:
        t = self.table
        meet = frozenset(g for g in self.idempotents if t[e][g] == g and t[g][f] == g)
        found = [g for g in meet if self._down(g) == meet]
        return found[0] if len(found) == 1 else None

    @cached_property
    def _sandwich_table(self) -> dict[tuple[int, int], int | None]:
        return {(e, f): self._sandwich(e, f) for e in self.idempotents for f in self.idempotents}

    def sandwich(self, e: int, f: int) -> int:
        """The unique idempotent g with (e]_r and (f]_l meeting in (g]."""
        self._need_idempotent(e, f)
        g = self._sandwich_table[(e, f)]
        if g is None:
            raise NotLocallyInverse(e, f, f"not locally inverse at ({self.names[e]}, {self.names[f]})")
        return g

    def sandwich_ext(self, a: int, b: int) -> int:
        a1, b1 = self.any_inverse(a), self.any_inverse(b)
        return self.sandwich(self.table[a][a1], self.table[b1][b])

    def is_locally_inverse(self) -> bool:
        return self.is_regular() and all(g is not None for g in self._sandwich_table.values())

    # --- misc ---

    def closure(self, gens: Iterable[int], with_sandwich: bool = False) -> frozenset[int]:
        """Subsemigroup generated by gens; optionally also closed under sandwich_ext."""
        out = set(gens)
        frontier = list(out)
        while frontier:
            new = set()
            for a in frontier:
                for b in list(out):
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in out:
                            new.add(c)
                    if with_sandwich:
                        for c in (self.sandwich_ext(a, b), self.sandwich_ext(b, a)):
                            if c not in out:
                                new.add(c)
                out |= new
            frontier = list(new)
        return frozenset(out)

    def core(self) -> frozenset[int]:
        return self.closure(self.idempotents)

    def local_submonoid(self, e: int) -> frozenset[int]:
        return frozenset(self.product(e, s, e) for s in range(self.n))


def validate(s: FiniteSemigroup) -> FiniteSemigroup:
    """Raise AssociativityError at the first violating triple, else return s."""
    t = s.table
    for a in range(s.n):
        for b in range(s.n):
            ab = t[a][b]
            for c in range(s.n):
                if t[ab][c] != t[a][t[b][c]]:
                    raise AssociativityError((a, b, c), s.names)
    return s


def is_associative(s: FiniteSemigroup) -> bool:
    try:
        validate(s)
    except AssociativityError:
        return False
    return True


@dataclass(frozen=True)
class GeneratorAssignment:
    """Images of the base letters x and x' for each generator x."""

    images: tuple[tuple[str, int], ...]

    @classmethod
    def from_dict(cls, d: dict[str, int]) -> "GeneratorAssignment":
        return cls(tuple(sorted(d.items())))

    @cached_property
    def _map(self) -> dict[str, int]:
        return dict(self.images)

    def __getitem__(self, letter: str) -> int:
        return self._map[letter]

    def __contains__(self, letter: str) -> bool:
        return letter in self._map

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.images if not x.endswith("'"))

    def check(self, s: FiniteSemigroup) -> None:
        for x in self.generators:
            xi = x + "'"
            if xi not in self._map:
                raise SemigroupError(f"no image for {xi}")
            if self._map[xi] not in s.inverses(self._map[x]):
                raise SemigroupError(f"image of {xi} is not an inverse of the image of {x}")
        for x, _ in self.images:
            base = x[:-1] if x.endswith("'") else x
            if base not in self._map:
                raise SemigroupError(f"no image for {base}")
        if s.closure(self._map.values(), with_sandwich=True) != frozenset(range(s.n)):
            raise SemigroupError("assignment does not generate the semigroup")
