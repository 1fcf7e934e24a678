"""
Manin's quantum matrix bialgebra O_A(M) as a presentation in generators y_ij.

Generators are ordered y11 < y12 < ... < ynn, i.e. y_ij has index
(i-1)*n + (j-1).  Relations are sum c_w^{ij} d_u^{kl} y_ki y_lj, one for each
relation r_w of A and each relation r'_u of A^!.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .frobenius import FrobeniusData
from .free_algebra import FreeAlgebra, NCPoly, span_reduce
from .hopf import HopfElement
from .presentation import DEFAULT_DEGREE_CAP, DegreeCapError, GradedPresentation, UnsupportedError, koszul_dual


def y_names(n: int):
    sep = "" if n < 10 else "_"
    return tuple(f"y{i + 1}{sep}{j + 1}" for i in range(n) for j in range(n))


def y_algebra(A: GradedPresentation) -> FreeAlgebra:
    return FreeAlgebra(A.field, y_names(A.n))


@dataclass
class MatrixBialgebraPresentation:
    A: GradedPresentation
    algebra: FreeAlgebra
    relations: list
    raw_count: int
    codeterminant: NCPoly | None = None
    extra: list = field(default_factory=list)  # inhomogeneous elements such as D - 1

    @property
    def n(self) -> int:
        return self.A.n

    def y(self, i: int, j: int) -> NCPoly:
        return self.algebra.gen(i * self.n + j)

    comult = "matrix"    # Delta(y_ij) = sum_s y_is (x) y_sj
    counit = "kronecker"  # epsilon(y_ij) = delta_ij

    def presentation(self, cap: int = DEFAULT_DEGREE_CAP) -> GradedPresentation:
        return GradedPresentation(self.algebra, self.relations, degree=2, cap=cap, name="O_A(M)")

    def to_json(self) -> dict:
        out = {
            "generators": list(self.algebra.names),
            "relations": [str(r) for r in self.relations],
            "codeterminant": None if self.codeterminant is None else str(self.codeterminant),
            "comult": self.comult,
            "counit": self.counit,
        }
        if self.extra:
            out["extra"] = [str(e) for e in self.extra]
        return out


def manin_matrix_relations(A: GradedPresentation) -> MatrixBialgebraPresentation:
    if not A.is_quadratic():
        raise UnsupportedError("unsupported: Manin relations need a quadratic algebra")
    n = A.n
    Y = y_algebra(A)
    dual = koszul_dual(A)
    raw = []
    for r in A.relations:
        for rp in dual.relations:
            terms = {}
            for (i, j), c in r.terms.items():
                for (k, l), d in rp.terms.items():
                    w = (k * n + i, l * n + j)  # y_ki y_lj
                    terms[w] = terms[w] + c * d if w in terms else c * d
            raw.append(NCPoly(Y, terms))
    assert len(raw) == A.m * (n * n - A.m)
    basis, _ = span_reduce([p for p in raw if not p.is_zero()]) if any(not p.is_zero() for p in raw) else ([], set())
    return MatrixBialgebraPresentation(A, Y, basis, len(raw))


def codeterminant_element(A: GradedPresentation, F: FrobeniusData) -> NCPoly:
    """Coefficient of e in rho^!(e), with the y_ij as free symbols."""
    if F is None:
        raise ValueError("Frobenius data missing")
    E = F.algebra
    n = A.n
    Y = y_algebra(A)
    top = E.slices[E.top][0]
    terms = {}
    for s in product(range(n), repeat=E.top):
        vec = E.word_vector(s)
        c = vec[0] if vec else None
        if c is None or c.is_zero():
            continue
        w = tuple(top[k] * n + s[k] for k in range(E.top))
        terms[w] = terms[w] + c if w in terms else c
    return NCPoly(Y, terms)


def with_codeterminant(A: GradedPresentation, F: FrobeniusData) -> MatrixBialgebraPresentation:
    P = manin_matrix_relations(A)
    P.codeterminant = codeterminant_element(A, F)
    return P


def sl_relation_set(A: GradedPresentation, F: FrobeniusData) -> MatrixBialgebraPresentation:
    """Manin relations plus the inhomogeneous element D - 1."""
    P = with_codeterminant(A, F)
    P.extra = [P.codeterminant - 1]
    return P


def consequence_check(P: MatrixBialgebraPresentation, target, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Is the homogeneous ``target`` in the ideal generated by the Manin relations?"""
    if isinstance(target, str):
        target = P.algebra.parse(target)
    if target.is_zero():
        return True
    d = target.degree()
    if d > cap:
        raise DegreeCapError(f"degree {d} exceeds the configured cap {cap}")
    return P.presentation(cap).in_ideal(target)


def substitute(f: NCPoly, Y) -> HopfElement:
    """Image of f under y_ij -> Y[i][j]."""
    n = len(Y)
    K = Y[0][0].parent
    out = K.zero()
    for w, c in f.terms.items():
        term = K.one()
        for g in w:
            term = term * Y[g // n][g % n]
        out = out + term * c
    return out


def relations_annihilated(P: MatrixBialgebraPresentation, Y) -> bool:
    return all(substitute(r, Y).is_zero() for r in P.relations)


# ---------------------------------------------------------------------------
# identities of the worked two-generator examples, checked by substitution


def quantum_plane_identities(p, Y, D):
    """(label, lhs, rhs) for the four Manin equations, the antipode formulas and,
    when S^2 = id, the derived commutation relations."""
    (y11, y12), (y21, y22) = Y
    Di = D.S()
    pi = p.inverse()
    out = [
        ("manin.1", y12 * y11 - y11 * y12 * p, y11 * 0),
        ("manin.2", y22 * y21 - y21 * y22 * p, y11 * 0),
        ("manin.3", y22 * y11 - y21 * y12 * p, D),
        ("manin.4", y11 * y22 - y12 * y21 * pi, D),
        ("antipode.11", y11.S(), y22 * Di),
        ("antipode.12", y12.S(), -(y12 * Di) * p),
        ("antipode.21", y21.S(), -(y21 * Di) * pi),
        ("antipode.22", y22.S(), y11 * Di),
    ]
    return out


def quantum_plane_s2_identities(p, Y):
    """Relations forced by S^2 = id (only meaningful when S^2 = id holds)."""
    (y11, y12), (y21, y22) = Y
    pi = p.inverse()
    return [
        ("s2.1", y21 * y11, y11 * y21 * pi),
        ("s2.2", y22 * y12, y12 * y22 * pi),
        ("s2.3", y21 * y12 * p, y12 * y21 * pi),
        ("s2.4", y22 * y11, y11 * y22),
    ]


def jordan_identities(Y, D):
    """Manin equations, antipode formulas and S^2 formulas for the Jordan plane."""
    (a11, a12), (a21, a22) = Y
    Di = D.S()
    zero = a11 * 0
    S2 = lambda a: a.S().S()  # noqa: E731
    return [
        ("manin.1", a12 * a11 - a11 * a12 - a11 * a11, -D),
        ("manin.2", a12 * a21 - a11 * a22 - a11 * a21, -D),
        ("manin.3", a22 * a11 - a21 * a12 - a21 * a11, D),
        ("manin.4", a22 * a21 - a21 * a22 - a21 * a21, zero),
        ("antipode.11", a11.S(), (a22 + a21) * Di),
        ("antipode.12", a12.S(), (-a11 - a12 + a21 + a22) * Di),
        ("antipode.21", a21.S(), -(a21 * Di)),
        ("antipode.22", a22.S(), (a11 - a21) * Di),
        ("s2.11", S2(a11), D * (a11 - a21 * 2) * Di),
        ("s2.12", S2(a12), D * (a12 + a11 * 2 - a22 * 2 - a21 * 4) * Di),
        ("s2.21", S2(a21), D * a21 * Di),
        ("s2.22", S2(a22), D * (a22 + a21 * 2) * Di),
    ]
