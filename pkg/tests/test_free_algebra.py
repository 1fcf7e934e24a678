import pytest
from hypothesis import given, settings, strategies as st

from nakayama_lab.expr import ExprSyntaxError
from nakayama_lab.free_algebra import FreeAlgebra, NCPoly, deglex, dual_pairing, reduce_modulo, span_reduce
from nakayama_lab.scalars import Rationals, RationalFunctions

Q = Rationals()
X = FreeAlgebra(Q, ("x1", "x2", "x3"))

words = st.lists(st.integers(0, 2), min_size=0, max_size=3).map(tuple)
polys = st.dictionaries(words, st.integers(-3, 3), max_size=4).map(
    lambda d: NCPoly(X, {w: Q(c) for w, c in d.items() if c}))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f - f == X.zero()


@settings(max_examples=60, deadline=None)
@given(polys)
def test_text_round_trip(f):
    assert X.parse(str(f)) == f


def test_deglex_order():
    ws = [(1, 0), (0, 1), (0,), (0, 0), (2,)]
    assert sorted(ws, key=deglex) == [(0,), (2,), (0, 0), (0, 1), (1, 0)]
    f = X.parse("x1*x2 + x2*x1 + x3")
    assert f.leading_word() == (1, 0)


def test_parse_examples():
    Qt = RationalFunctions(Q)
    A = FreeAlgebra(Qt, ("x1", "x2"))
    f = A.parse("x1*x2 - t*x1*x1")
    assert f.coefficient((0, 0)) == -Qt.t
    with pytest.raises(ExprSyntaxError):
        A.parse("x1 x2")
    with pytest.raises(ExprSyntaxError):
        A.parse("x1*x3")


def test_span_reduce_is_canonical():
    a = X.parse("x1*x2 - x2*x1")
    b = X.parse("x1*x2 + x2*x1")
    basis1, _ = span_reduce([a, b])
    basis2, _ = span_reduce([a + b, a - b, 3 * a])
    assert [p.terms for p in basis1] == [p.terms for p in basis2]
    assert all(reduce_modulo(p, basis1).is_zero() for p in (a, b, a * 2 - b))


def test_dual_pairing():
    D = X.dual()
    assert D.names == ("x1'", "x2'", "x3'")
    r = X.parse("x2*x1 - 2*x1*x2")
    assert dual_pairing(D.parse("x1'*x2'"), r) == Q(-2)
    assert dual_pairing(D.parse("x2'*x1' + x1'*x1'"), r) == Q(1)
