from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from nakayama_lab.frobenius import (
    NakayamaVerificationError,
    NotFiniteDimensionalError,
    dual_bases_and_nakayama,
    finite_dim_algebra,
    frobenius_check,
    is_r_nakayama,
    nakayama_of_A,
    nakayama_report,
    pairing_identity_holds,
)
from nakayama_lab.free_algebra import FreeAlgebra, NCPoly
from nakayama_lab.linalg import inverse, mat_mul
from nakayama_lab.presentation import (
    GradedPresentation,
    jordan_plane,
    koszul_dual,
    presentation,
    quantum_plane,
    skew_matrix_from_upper,
    skew_tools,
)
from nakayama_lab.scalars import Rationals, RationalFunctions

Q = Rationals()
Qt = RationalFunctions(Q)


def _dual_data(P, **kw):
    return dual_bases_and_nakayama(finite_dim_algebra(koszul_dual(P)), **kw)


def _one_relation_oracle(coeffs):
    """alpha = G G^-T for A = k<x1,x2>/(r): E_2 is dual to R, so <x_i*, x_j*> ~ r_ij."""
    G = sympy.Matrix(2, 2, [sympy.Rational(c) for c in coeffs])
    return G * G.T.inv()


def _as_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.as_fraction()) for x in row] for row in m])


def test_jordan_alpha_and_M():
    data = _dual_data(jordan_plane(Q))
    alpha = [[str(x) for x in row] for row in data.alpha]
    assert alpha == [["-1", "2"], ["0", "-1"]]
    # independent dense solve on the 4-dimensional dual
    assert _as_sympy(data.alpha) == _one_relation_oracle([-1, -1, 1, 0])
    M = nakayama_of_A(data.alpha, 2)
    assert [[str(x) for x in row] for row in M] == [["1", "0"], ["-2", "1"]]


def test_quantum_plane_alpha():
    t = Qt.t
    data = _dual_data(quantum_plane(t))
    assert data.alpha == [[-t, Qt.zero], [Qt.zero, -t.inverse()]]
    M = nakayama_of_A(data.alpha, 2)
    assert M == [[t, Qt.zero], [Qt.zero, t.inverse()]]
    assert is_r_nakayama(M) is None


coeff = st.integers(-3, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(coeff, min_size=4, max_size=4))
def test_alpha_matches_bilinear_form_oracle(r):
    G = sympy.Matrix(2, 2, r)
    assume(G.det() != 0)
    alg = FreeAlgebra(Q, ("x1", "x2"))
    rel = NCPoly(alg, {w: Q(c) for w, c in zip(alg.words(2), r) if c})
    data = _dual_data(GradedPresentation(alg, [rel]))
    assert _as_sympy(data.alpha) == _one_relation_oracle(r)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_skew_closed_form(n):
    t = Qt.t
    p = skew_matrix_from_upper(Qt, n, lambda i, j: t ** (1 + i + 2 * j))
    data = _dual_data(skew_tools(p).presentation)
    sign = (-1) ** (n + 1)
    for i in range(n):
        prod = Qt.one
        for a in range(n):
            prod = prod * p[i][a]
        assert data.alpha[i][i] == prod * sign
        assert all(data.alpha[i][j].is_zero() for j in range(n) if j != i)
    M = nakayama_of_A(data.alpha, n)
    for i in range(n):
        prod = Qt.one
        for a in range(n):
            prod = prod * p[i][a]
        assert M[i][i] == prod


def test_all_minus_one_skew_ring_is_r_nakayama():
    for n in (2, 3):
        p = skew_matrix_from_upper(Q, n, lambda i, j: -1)
        rep = nakayama_report(skew_tools(p).presentation)
        assert rep["r_nakayama"] == str((-1) ** (n - 1))


scales = st.fractions(min_value=-5, max_value=5).filter(lambda x: x != 0)


@settings(max_examples=25, deadline=None)
@given(scales)
def test_e_scaling_invariance(s):
    base = _dual_data(jordan_plane(Q))
    scaled = _dual_data(jordan_plane(Q), e_scale=Q(Fraction(s)))
    assert scaled.alpha == base.alpha


bases = st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)


@settings(max_examples=25, deadline=None)
@given(bases)
def test_base_change_covariance(m):
    P = [[Q(m[0]), Q(m[1])], [Q(m[2]), Q(m[3])]]
    for A in (jordan_plane(Q), quantum_plane(Q(3))):
        base = _dual_data(A)
        moved = _dual_data(A, a=P)
        assert moved.alpha == mat_mul(mat_mul(P, base.alpha), inverse(P))


def test_pairing_identity_on_all_basis_pairs():
    for P in (jordan_plane(Q), quantum_plane(Qt.t)):
        data = _dual_data(P)
        E = data.algebra
        assert pairing_identity_holds(data)
        for i in range(E.top + 1):
            for s in range(E.dim(i)):
                for k in range(E.dim(E.top - i)):
                    u, v = E.basis_vector(i, s), E.basis_vector(E.top - i, k)
                    assert data.pairing(i, u, v) == data.pairing(E.top - i, v, data.mu[i][s])


def test_dual_bases_are_dual():
    data = _dual_data(jordan_plane(Q))
    E = data.algebra
    for i in range(2):
        for j in range(2):
            expected = Q.one if i == j else Q.zero
            assert data.pairing(1, data.a[i], data.b[j]) == expected
            assert data.pairing(1, data.b[i], data.c[j]) == expected


def test_dims_1_2_algebra_is_not_frobenius():
    P = presentation(Q, ["x1", "x2"], ["x1*x1", "x1*x2", "x2*x1", "x2*x2"])
    E = finite_dim_algebra(P)
    assert E.dims == [1, 2]
    rep = frobenius_check(E)
    assert not rep.passed
    assert rep.failing_degrees == [0, 1]
    assert all(d.witness is not None for d in rep.degrees if not d.passed)
    with pytest.raises(NakayamaVerificationError):
        dual_bases_and_nakayama(E)


def test_infinite_dimensional_rejected():
    with pytest.raises(NotFiniteDimensionalError):
        finite_dim_algebra(quantum_plane(Q(2)))
