from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from nakayama_lab.free_algebra import DegreeError, FreeAlgebra, NCPoly
from nakayama_lab.presentation import (
    DegreeCapError,
    GradedPresentation,
    UnsupportedError,
    jordan_plane,
    koszul_dual,
    koszul_numeric_check,
    presentation,
    quantum_plane,
    relation_span_equal,
    skew_matrix_from_upper,
    skew_tools,
)
from nakayama_lab.scalars import INFINITE, Cyclotomic, Rationals, RationalFunctions

from conftest import span_equal

Q = Rationals()
Qt = RationalFunctions(Q)


def test_quantum_plane_hilbert():
    assert quantum_plane(Qt.t).hilbert_series(5) == [1, 2, 3, 4, 5, 6]


def test_jordan_plane_hilbert_and_normal_words():
    J = jordan_plane(Q)
    assert J.hilbert_series(6) == [1, 2, 3, 4, 5, 6, 7]
    comp = J.graded_component(2)
    # leading word x2*x1 is rewritten, the other three words are normal
    assert comp.normal_words == [(0, 0), (0, 1), (1, 1)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_skew_ring_dimensions_are_commutative(n):
    p = skew_matrix_from_upper(Qt, n, lambda i, j: Qt.t ** (i + 2 * j + 1))
    P = skew_tools(p).presentation
    assert P.hilbert_series(4) == [comb(n - 1 + d, d) for d in range(5)]


def test_koszul_dual_of_quantum_plane_matches_closed_form():
    for F, p in ((Qt, Qt.t), (Cyclotomic(4), Cyclotomic(4).z)):
        D = koszul_dual(quantum_plane(p))
        a1, a2 = D.algebra.gens()
        expected = [a2 * a1 + p.inverse() * a1 * a2, a1 * a1, a2 * a2]
        assert span_equal(D.relations, expected)
        assert relation_span_equal(D, GradedPresentation(D.algebra, expected))


quad = st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=0, max_size=4)


@settings(max_examples=40, deadline=None)
@given(quad)
def test_double_dual_is_identity(rows):
    alg = FreeAlgebra(Q, ("x1", "x2"))
    rels = [NCPoly(alg, {w: Q(c) for w, c in zip(alg.words(2), row) if c}) for row in rows]
    P = GradedPresentation(alg, rels, degree=2)
    DD = koszul_dual(koszul_dual(P))
    assert relation_span_equal(P, DD)
    assert koszul_dual(P).m == 4 - P.m


def test_koszul_check_positive():
    for P in (quantum_plane(Qt.t), jordan_plane(Q)):
        assert koszul_numeric_check(P, 8).passed


def test_koszul_check_negative_control():
    P = presentation(Q, ["x1", "x2"], ["x1*x2", "x2*x2 - x1*x1"])
    k = koszul_numeric_check(P, 8)
    assert not k.passed and k.failing_degree == 4


def test_monomial_algebra_is_koszul():
    # x1*x2 alone: monomial quadratic algebras are Koszul, so the product test passes
    P = presentation(Q, ["x1", "x2"], ["x1*x2"])
    assert koszul_numeric_check(P, 8).passed


def test_cubic_dual_unsupported():
    P = presentation(Q, ["x1", "x2"], ["x1*x2*x1 - x2*x1*x2"])
    with pytest.raises(UnsupportedError):
        koszul_dual(P)


def test_presentation_errors():
    with pytest.raises(DegreeError):
        presentation(Q, ["x1", "x2"], ["x1*x2 - x1"])
    with pytest.raises(DegreeError):
        presentation(Q, ["x1", "x2"], ["x1*x2", "x1*x1*x1"])
    P = presentation(Q, ["x1", "x2"], ["x1*x2"], cap=3)
    with pytest.raises(DegreeCapError):
        P.hilbert_series(4)


def test_normal_form_and_ideal_membership():
    P = quantum_plane(Qt.t)
    x1, x2 = P.algebra.gens()
    assert P.in_ideal(x2 * x2 * x1 - Qt.t**2 * x1 * x2 * x2)
    assert not P.in_ideal(x2 * x1)
    assert P.normal_form(x2 * x1) == Qt.t * x1 * x2


def test_qij_of_skew_ring():
    z = Cyclotomic(4).z
    data = skew_tools(skew_matrix_from_upper(Cyclotomic(4), 2, lambda i, j: z))
    # q_12 = p_11 p_12 * p_12 p_22 = z^2 = -1
    assert data.q[0][1] == Cyclotomic(4)(-1)
    assert data.orders[0][1] == 2
    generic = skew_tools(skew_matrix_from_upper(Qt, 2, lambda i, j: Qt.t))
    assert generic.orders[0][1] == INFINITE
