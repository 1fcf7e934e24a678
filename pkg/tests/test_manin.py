import pytest

from nakayama_lab.coaction import dual_coaction_with_codet, frobenius_data_for
from nakayama_lab.manin import (
    codeterminant_element,
    consequence_check,
    jordan_identities,
    manin_matrix_relations,
    quantum_plane_identities,
    quantum_plane_s2_identities,
    relations_annihilated,
    sl_relation_set,
    substitute,
    with_codeterminant,
)
from nakayama_lab.presentation import DegreeCapError, UnsupportedError, jordan_plane, presentation, quantum_plane
from nakayama_lab.scalars import Rationals, RationalFunctions

from conftest import span_equal
from corpus import solved

Q = Rationals()
Qt = RationalFunctions(Q)


def _quantum_system(P, p):
    y = {(i + 1, j + 1): P.y(i, j) for i in range(2) for j in range(2)}
    e1 = y[1, 2] * y[1, 1] - p * y[1, 1] * y[1, 2]
    e2 = y[2, 2] * y[2, 1] - p * y[2, 1] * y[2, 2]
    e3 = y[2, 2] * y[1, 1] - p * y[2, 1] * y[1, 2]
    e4 = y[1, 1] * y[2, 2] - p.inverse() * y[1, 2] * y[2, 1]
    return [e1, e2, e3 - e4], e4


def _jordan_system(P):
    a = {(i + 1, j + 1): P.y(i, j) for i in range(2) for j in range(2)}
    e1 = a[1, 2] * a[1, 1] - a[1, 1] * a[1, 2] - a[1, 1] * a[1, 1]   # = -D
    e2 = a[1, 2] * a[2, 1] - a[1, 1] * a[2, 2] - a[1, 1] * a[2, 1]   # = -D
    e3 = a[2, 2] * a[1, 1] - a[2, 1] * a[1, 2] - a[2, 1] * a[1, 1]   # = D
    e4 = a[2, 2] * a[2, 1] - a[2, 1] * a[2, 2] - a[2, 1] * a[2, 1]   # = 0
    return [e1 + e3, e2 - e1, e4], e3


def test_quantum_plane_relations_match_eliminated_system():
    p = Qt.t
    A = quantum_plane(p)
    P = manin_matrix_relations(A)
    expected, _ = _quantum_system(P, p)
    assert P.raw_count == 3
    assert span_equal(P.relations, expected)


def test_quantum_plane_codeterminant():
    p = Qt.t
    A = quantum_plane(p)
    P = with_codeterminant(A, frobenius_data_for(A))
    _, D = _quantum_system(P, p)
    assert P.codeterminant == D


def test_jordan_relations_match_eliminated_system():
    A = jordan_plane(Q)
    P = with_codeterminant(A, frobenius_data_for(A))
    expected, D = _jordan_system(P)
    assert span_equal(P.relations, expected)
    # the computed codeterminant agrees with the stated one modulo the relations
    assert consequence_check(P, P.codeterminant - D)


def test_consequences():
    A = quantum_plane(Qt.t)
    P = manin_matrix_relations(A)
    y11, y22 = P.y(0, 0), P.y(1, 1)
    assert not consequence_check(P, y11 * y22 - y22 * y11)
    assert consequence_check(P, "y12*y11 - t*y11*y12")
    assert consequence_check(P, P.y(0, 1) * P.relations[0])
    with pytest.raises(DegreeCapError):
        consequence_check(P, y11 * y11 * y11, cap=2)


def test_sl_relation_set():
    A = quantum_plane(Qt.t)
    P = sl_relation_set(A, frobenius_data_for(A))
    assert len(P.extra) == 1
    assert str(P.extra[0]) == str(P.codeterminant - 1)
    js = P.to_json()
    assert list(js) == ["generators", "relations", "codeterminant", "comult", "counit", "extra"]
    assert js["comult"] == "matrix" and js["counit"] == "kronecker"


def test_cubic_algebra_unsupported():
    A = presentation(Q, ["x1", "x2"], ["x1*x2*x1"])
    with pytest.raises(UnsupportedError):
        manin_matrix_relations(A)


def test_every_verified_coaction_annihilates_the_manin_relations():
    for name, (A, K, _, sols) in solved().items():
        P = with_codeterminant(A, frobenius_data_for(A))
        for Y in sols:
            assert relations_annihilated(P, Y), name
            D = dual_coaction_with_codet(A, K, Y).D
            assert substitute(P.codeterminant, Y) == D


def test_quantum_plane_substitution_identities():
    for name in ("qp(-1) x C2", "qp(z4) x C4", "qp(-1) x Sweedler", "qp(z4) x Sweedler"):
        A, K, p, sols = solved()[name]
        for Y in sols:
            D = dual_coaction_with_codet(A, K, Y).D
            for label, lhs, rhs in quantum_plane_identities(p, Y, D):
                assert lhs == rhs, (name, label)
            if all(y.S().S() == y for row in Y for y in row):
                for label, lhs, rhs in quantum_plane_s2_identities(p, Y):
                    assert lhs == rhs, (name, label)


def test_s2_identities_can_fail_without_s2_trivial():
    A, K, p, sols = solved()["qp(-1) x Sweedler"]
    Y = next(Y for Y in sols if [[str(y) for y in r] for r in Y] == [["g", "x"], ["0", "1"]])
    results = {label: lhs == rhs for label, lhs, rhs in quantum_plane_s2_identities(p, Y)}
    assert not all(results.values())


def test_jordan_substitution_identities():
    A, K, _, sols = solved()["jordan x C2"]
    for Y in sols:
        D = dual_coaction_with_codet(A, K, Y).D
        for label, lhs, rhs in jordan_identities(Y, D):
            assert lhs == rhs, label


def test_codeterminant_element_needs_frobenius_data():
    with pytest.raises(ValueError):
        codeterminant_element(quantum_plane(Q(2)), None)
