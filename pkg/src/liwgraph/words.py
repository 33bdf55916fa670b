"""Letters and words over the extended alphabet, formal inverses and evaluation.

A base letter is a string such as ``"x"``, its inverse is ``"x'"``. Wedge
letters are ``Wedge("x", "y'")``. A word is a tuple of letters; the empty
tuple stands for the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .semigroup import FiniteSemigroup, GeneratorAssignment


class Wedge(NamedTuple):
    left: str
    right: str

    def __str__(self):
        return f"({self.left}^{self.right})"


Letter = Union[str, Wedge]
Word = tuple


class WordSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at column {pos + 1}")
        self.pos = pos


def is_wedge(z: Letter) -> bool:
    return isinstance(z, Wedge)


def inv(x: str) -> str:
    """x -> x' and x' -> x on bar letters."""
    return x[:-1] if x.endswith("'") else x + "'"


def bar_alphabet(generators: Sequence[str]) -> list[str]:
    out = []
    for x in generators:
        out += [x, x + "'"]
    return out


def hat_alphabet(generators: Sequence[str]) -> list[Letter]:
    bar = bar_alphabet(generators)
    return bar + [Wedge(a, b) for a in bar for b in bar]


def letter_key(z: Letter):
    return (1, z.left, z.right) if is_wedge(z) else (0, z, "")


def first_last(u: Word) -> tuple[Letter, str, Letter, str]:
    """(first hat letter, first bar letter, last hat letter, last bar letter)."""
    if not u:
        raise ValueError("empty word")
    a, b = u[0], u[-1]
    lam = a.left if is_wedge(a) else a
    tau = b.right if is_wedge(b) else b
    return a, lam, b, tau


def letter_inverse(z: Letter) -> Word:
    if is_wedge(z):
        return (Wedge(inv(z.right), z.right), Wedge(z.left, inv(z.left)))
    return (inv(z),)


def formal_inverse(u: Word) -> Word:
    if not u:
        raise ValueError("empty word")
    out: list[Letter] = list(letter_inverse(u[-1]))
    for i in range(len(u) - 1, 0, -1):
        hi, lo = u[i], u[i - 1]
        out.append(Wedge(first_last((hi,))[1], first_last((lo,))[3]))
        out.extend(letter_inverse(lo))
    return tuple(out)


_TOKEN = re.compile(r"\s*(?:(\()\s*([A-Za-z][0-9]*'?)\s*\^\s*([A-Za-z][0-9]*'?)\s*(\))|([A-Za-z][0-9]*'?))")


def parse_word(text: str) -> Word:
    """Parse the text syntax: ``x``, ``x'``, ``(a^b)``, juxtaposed with optional spaces."""
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos
            while col < len(text) and text[col].isspace():
                col += 1
            raise WordSyntaxError(f"unexpected {text[col]!r}", col)
        if m.group(5):
            out.append(m.group(5))
        else:
            out.append(Wedge(m.group(2), m.group(3)))
        pos = m.end()
    return tuple(out)


def format_word(u: Word) -> str:
    return "".join(str(z) for z in u)


def letters_used(u: Word) -> set[str]:
    out = set()
    for z in u:
        out.update(z if is_wedge(z) else (z,))
    return out


def evaluate_letter(z: Letter, s: FiniteSemigroup, g: GeneratorAssignment) -> int:
    if is_wedge(z):
        return s.sandwich_ext(g[z.left], g[z.right])
    return g[z]


def evaluate(u: Word, s: FiniteSemigroup, g: GeneratorAssignment) -> int:
    if not u:
        raise ValueError("cannot evaluate the empty word")
    val = evaluate_letter(u[0], s, g)
    for z in u[1:]:
        val = s.mul(val, evaluate_letter(z, s, g))
    return val


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        for u, v in self.relations:
            if not u or not v:
                raise ValueError("relation words must be nonempty")


def check_presentation(p: Presentation, s: FiniteSemigroup, g: GeneratorAssignment) -> bool:
    for u, v in p.relations:
        if not (letters_used(u) | letters_used(v)) <= set(dict(g.images)):
            return False
        if evaluate(u, s, g) != evaluate(v, s, g):
            return False
    return True


def is_x_straight(p: Presentation) -> bool:
    for u, v in p.relations:
        fu, fv = first_last(u), first_last(v)
        if fu[1] != fv[1] or fu[3] != fv[3]:
            return False
    return True


def _expand(u: Word) -> list[str]:
    out = []
    for z in u:
        out.extend((z.left, z.right) if is_wedge(z) else (z,))
    return out


def s2_n(u: Word) -> tuple[int, int]:
    """(n1, n2): number of z's and number of maximal z-runs, wedges unfolded."""
    flat = _expand(u)
    n1 = flat.count("z")
    n2 = sum(1 for i, c in enumerate(flat) if c == "z" and (i == 0 or flat[i - 1] != "z"))
    return n1, n2


def s2_word_oracle(u: Word, v: Word) -> bool:
    """Word problem of the second example semigroup, over z, z' and their wedges."""
    fu, fv = first_last(u), first_last(v)
    if fu[1] != fv[1] or fu[3] != fv[3]:
        return False
    (a1, a2), (b1, b2) = s2_n(u), s2_n(v)
    return (a1 - a2 - b1 + b2) % 2 == 0


def random_word(rng, alphabet: Sequence[Letter], max_len: int, min_len: int = 1) -> Word:
    n = rng.randint(min_len, max_len)
    return tuple(rng.choice(alphabet) for _ in range(n))
