import sys
from pathlib import Path

import pytest

from liwgraph.fixtures import BUILDERS, fixture
from liwgraph.formats import parse_graph
from liwgraph.semantics import SemigroupGraphContext

DATA = Path(__file__).parent / "data"

_contexts = {}


def context(key):
    if key not in _contexts:
        _contexts[key] = SemigroupGraphContext.from_fixture(fixture(key))
    return _contexts[key]


def load(name):
    return parse_graph((DATA / name).read_text())


@pytest.fixture(scope="session")
def s1():
    return context("s1")


@pytest.fixture(scope="session")
def s2():
    return context("s2")


@pytest.fixture(params=sorted(BUILDERS))
def any_ctx(request):
    return context(request.param)


@pytest.fixture
def example_bliw():
    return load("example_liw.txt")


@pytest.fixture
def tiny():
    """Smallest liw-graph: one line and the arrows x, x' over it."""
    from liwgraph.graph import BliwGraph, LiwGraph
    g = LiwGraph.build(["l"], ["r"], [("l", "r")], [("l", "x", "r"), ("l", "x'", "r")])
    return BliwGraph(g, 0, 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
