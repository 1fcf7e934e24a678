import pytest

from nakayama_lab.free_algebra import span_reduce
from nakayama_lab.scalars import Cyclotomic, Rationals, RationalFunctions

ACCEPTANCE_LINES = []


@pytest.fixture
def Q():
    return Rationals()


@pytest.fixture
def Qt():
    return RationalFunctions(Rationals())


@pytest.fixture
def Qz4():
    return Cyclotomic(4)


def span_equal(polys_a, polys_b):
    """Same linear span, compared through the canonical echelon basis."""
    if not polys_a or not polys_b:
        return all(p.is_zero() for p in polys_a + polys_b)
    alg = polys_a[0].parent
    ra = span_reduce([p.rename(alg) for p in polys_a])[0]
    rb = span_reduce([p.rename(alg) for p in polys_b])[0]
    return [p.terms for p in ra] == [p.terms for p in rb]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
