"""Birooted locally inverse word graphs over finite locally inverse semigroups."""

from .fixtures import builtin_fixtures, fixture
from .graph import BliwGraph, LiwGraph, member, validate_liw
from .morphism import automorphisms, find_hom, homs, is_isomorphic
from .reduction import reduce
from .semantics import SemigroupGraphContext, dot, wedge
from .semigroup import FiniteSemigroup, GeneratorAssignment
from .words import evaluate, formal_inverse, parse_word

__all__ = [
    "BliwGraph", "FiniteSemigroup", "GeneratorAssignment", "LiwGraph", "SemigroupGraphContext",
    "automorphisms", "builtin_fixtures", "dot", "evaluate", "find_hom", "fixture",
    "formal_inverse", "homs", "is_isomorphic", "member", "parse_word", "reduce",
    "validate_liw", "wedge",
]
__version__ = "0.1.0"
