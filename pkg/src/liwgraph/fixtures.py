"""Builtin example semigroups with generator assignments."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .semigroup import FiniteSemigroup, GeneratorAssignment, validate
from .words import Presentation, Wedge, hat_alphabet, parse_word, s2_word_oracle


@dataclass(frozen=True)
class Fixture:
    key: str
    semigroup: FiniteSemigroup
    assignment: GeneratorAssignment
    presentation: Presentation | None = None
    description: str = ""


def rees_matrix_zero(p: list[list[int]], names: list[str]) -> FiniteSemigroup:
    """Combinatorial M0({1}; I, L; P): (i,l)(j,m) = (i,m) if p[l][j] else 0.

    Elements are listed row-major (i, l) with the zero last.
    """
    n_rows, n_cols = len(p[0]), len(p)
    zero = n_rows * n_cols
    table = []
    for i, l in product(range(n_rows), range(n_cols)):
        row = [(i * n_cols + m) if p[l][j] else zero
               for j, m in product(range(n_rows), range(n_cols))]
        table.append(row + [zero])
    table.append([zero] * (zero + 1))
    return FiniteSemigroup(table, names)


# rows are R-classes, columns L-classes, stars mark idempotents
S1_EGGBOX = [
    ["x'x", "x'", "x'y'y", "x'y'"],
    ["x", "xx'", "xx'y'y", "xx'y'"],
    ["(y'^x')x", "(y'^x')", "y'y", "y'"],
    ["y(y'^x')x", "y(y'^x')", "y", "yy'"],
]
S1_STARS = {(0, 0), (0, 1), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3)}


def s1_presentation() -> Presentation:
    hat = hat_alphabet(["x", "y"])
    rels = [
        (("x'",), ("x'", "x'")),
        (("y'",), ("y'", "y'")),
        (("x'",), ("x'", Wedge("y'", "x'"))),
        (("y'",), (Wedge("y'", "x'"), "y'")),
    ]
    xx = ("x", "x")
    for z in hat:
        rels.append((xx, xx + (z,)))
        rels.append((xx, (z,) + xx))
    bar = ["x", "x'", "y", "y'"]
    keep = {("x'", "x'"), ("y'", "y'"), ("x'", "y'"),
            ("x", "x'"), ("x'", "x"), ("y", "y'"), ("y'", "y")}
    for a, b in product(bar, bar):
        if (a, b) not in keep:
            rels.append((xx, (a, b)))
    return Presentation(("x", "y"), tuple(rels))


def s1() -> Fixture:
    p = [[1 if (i, l) in S1_STARS else 0 for i in range(4)] for l in range(4)]
    names = [nm for row in S1_EGGBOX for nm in row] + ["0"]
    s = validate(rees_matrix_zero(p, names))
    g = GeneratorAssignment.from_dict({x: s.index(x) for x in ("x", "x'", "y", "y'")})
    return Fixture("s1", s, g, s1_presentation(),
                   "combinatorial completely 0-simple semigroup, 4x4 D-class plus zero")


S2_NAMES = ["z'zz", "z'zzz'", "z'z", "z'", "zz", "zzz'", "z", "zz'"]


def s2_presentation() -> Presentation:
    return Presentation(("z",), ((("z",), ("z", "z", "z")), (("z'",), ("z'", "z'"))))


def s2() -> Fixture:
    words = [parse_word(nm) for nm in S2_NAMES]
    table = []
    for u in words:
        row = []
        for v in words:
            hits = [k for k, w in enumerate(words) if s2_word_oracle(u + v, w)]
            assert len(hits) == 1
            row.append(hits[0])
        table.append(row)
    s = validate(FiniteSemigroup(table, S2_NAMES))
    g = GeneratorAssignment.from_dict({"z": s.index("z"), "z'": s.index("z'")})
    return Fixture("s2", s, g, s2_presentation(),
                   "completely simple semigroup with four groups of order two")


def trivial() -> Fixture:
    s = FiniteSemigroup([[0]], ["e"])
    return Fixture("trivial", s, GeneratorAssignment.from_dict({"x": 0, "x'": 0}),
                   description="one-element semigroup")


def rectangular_band() -> Fixture:
    cells = [(0, 0), (0, 1), (1, 0), (1, 1)]
    table = [[cells.index((a[0], b[1])) for b in cells] for a in cells]
    s = validate(FiniteSemigroup(table, ["x", "xx'", "x'x", "x'"]))
    return Fixture("rectband", s, GeneratorAssignment.from_dict({"x": 0, "x'": 3}),
                   description="2x2 rectangular band")


def brandt() -> Fixture:
    cells = [(0, 1), (1, 0), (0, 0), (1, 1)]
    zero = 4
    table = []
    for a in cells + [None]:
        row = []
        for b in cells + [None]:
            if a is None or b is None or a[1] != b[0]:
                row.append(zero)
            else:
                row.append(cells.index((a[0], b[1])))
        table.append(row)
    s = validate(FiniteSemigroup(table, ["x", "x'", "xx'", "x'x", "0"]))
    return Fixture("b2", s, GeneratorAssignment.from_dict({"x": 0, "x'": 1}),
                   description="five-element combinatorial Brandt semigroup")


def chain3() -> Fixture:
    s = FiniteSemigroup([[max(a, b) for b in range(3)] for a in range(3)], ["x", "y", "z"])
    g = GeneratorAssignment.from_dict({"x": 0, "x'": 0, "y": 1, "y'": 1, "z": 2, "z'": 2})
    return Fixture("chain3", s, g, description="three-element chain semilattice x > y > z")


def t2() -> FiniteSemigroup:
    """Full transformation monoid on two points; regular but not locally inverse."""
    maps = [(0, 1), (0, 0), (1, 1), (1, 0)]
    table = [[maps.index(tuple(b[a[k]] for k in range(2))) for b in maps] for a in maps]
    return validate(FiniteSemigroup(table, ["id", "c0", "c1", "sw"]))


BUILDERS = {"s1": s1, "s2": s2, "trivial": trivial, "rectband": rectangular_band,
            "b2": brandt, "chain3": chain3}

_cache: dict[str, Fixture] = {}


def fixture(key: str) -> Fixture:
    if key not in BUILDERS:
        raise KeyError(f"unknown fixture {key!r}; choose from {', '.join(BUILDERS)}")
    if key not in _cache:
        fx = BUILDERS[key]()
        fx.assignment.check(fx.semigroup)
        _cache[key] = fx
    return _cache[key]


def builtin_fixtures() -> list[Fixture]:
    return [fixture(k) for k in BUILDERS]
