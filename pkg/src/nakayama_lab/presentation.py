"""
Connected graded algebras k<x1..xn>/(R) with R homogeneous of one degree N.

All quotient computations are exact per-degree linear algebra: the degree-d
slice of the two-sided ideal is spanned by I_{d-1}*V + V^{d-N}*R, reduced to
echelon form, and the words that are not leading words of that span are the
normal words of A_d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .free_algebra import (
    AmbientMismatchError,
    DegreeError,
    FreeAlgebra,
    NCPoly,
    deglex,
    dual_pairing,
    reduce_modulo,
    span_reduce,
)
from .linalg import echelon
from .scalars import Field, Scalar, multiplicative_order

DEFAULT_DEGREE_CAP = 8


class DegreeCapError(ValueError):
    pass


class UnsupportedError(ValueError):
    """Operation outside the supported (quadratic) setting."""


@dataclass(frozen=True)
class GradedSliceBasis:
    degree: int
    normal_words: list
    ideal_basis: list = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.normal_words)


class GradedPresentation:
    """Generators in degree 1 plus homogeneous relations of a common degree."""

    def __init__(self, algebra: FreeAlgebra, relations=(), degree: int | None = None,
                 cap: int = DEFAULT_DEGREE_CAP, name: str | None = None):
        relations = [algebra(r) if isinstance(r, str) else r for r in relations]
        relations = [r for r in relations if not r.is_zero()]
        degs = set()
        for r in relations:
            if not r.parent.compatible(algebra):
                raise AmbientMismatchError("relation lives in a different free algebra")
            if not r.is_homogeneous():
                raise DegreeError(f"relation {r} is not homogeneous")
            degs |= r.degrees()
        if len(degs) > 1:
            raise DegreeError(f"relations of mixed degree {sorted(degs)} are not supported")
        if degs:
            N = degs.pop()
            if degree is not None and degree != N:
                raise DegreeError(f"relations have degree {N}, not {degree}")
        else:
            N = degree if degree is not None else 2
        if N < 2:
            raise DegreeError("relations must have degree at least 2")
        self.algebra = algebra
        self.N = N
        self.cap = cap
        self.name = name
        basis, _ = span_reduce([r.rename(algebra) for r in relations])
        self.relations = basis
        self._ideal = {}

    # -- basic data -----------------------------------------------------------
    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def m(self) -> int:
        return len(self.relations)

    @property
    def names(self):
        return self.algebra.names

    def is_quadratic(self) -> bool:
        return self.N == 2

    def __repr__(self):
        rels = "; ".join(str(r) for r in self.relations)
        return f"GradedPresentation({', '.join(self.names)} | {rels})"

    # -- slices ---------------------------------------------------------------
    def _check_cap(self, d):
        if d > self.cap:
            raise DegreeCapError(f"degree {d} exceeds the configured cap {self.cap}")

    def ideal_slice(self, d: int):
        """Echelon basis of the degree-d part of the relation ideal."""
        self._check_cap(d)
        if d in self._ideal:
            return self._ideal[d]
        if d < self.N:
            basis = []
        elif d == self.N:
            basis = list(self.relations)
        else:
            prev = self.ideal_slice(d - 1)
            nwords = self.n ** (d - 1)
            if len(prev) == nwords:
                # A_{d-1} = 0 forces A_d = 0 (generated in degree 1)
                basis = [self.algebra.word(*w) for w in reversed(self.algebra.words(d))]
            else:
                rows = []
                gens = range(self.n)
                for b in prev:
                    for i in gens:
                        rows.append({w + (i,): c for w, c in b.terms.items()})
                for prefix in self.algebra.words(d - self.N):
                    for r in self.relations:
                        rows.append({prefix + w: c for w, c in r.terms.items()})
                basis = [NCPoly(self.algebra, r) for r in echelon(rows, order=deglex)]
        self._ideal[d] = basis
        return basis

    def graded_component(self, d: int) -> GradedSliceBasis:
        ideal = self.ideal_slice(d)
        leads = {b.leading_word() for b in ideal}
        normal = [w for w in self.algebra.words(d) if w not in leads]
        return GradedSliceBasis(d, normal, ideal)

    def dim(self, d: int) -> int:
        return self.n**d - len(self.ideal_slice(d))

    def normal_form(self, f: NCPoly) -> NCPoly:
        if not f.parent.compatible(self.algebra):
            raise AmbientMismatchError("polynomial lives in a different free algebra")
        out = self.algebra.zero()
        for d in sorted(f.degrees()):
            part = f.homogeneous_part(d).rename(self.algebra)
            out = out + reduce_modulo(part, self.ideal_slice(d))
        return out

    def in_ideal(self, f: NCPoly) -> bool:
        return self.normal_form(f).is_zero()

    def hilbert_series(self, D: int) -> list[int]:
        self._check_cap(D)
        return [self.dim(d) for d in range(D + 1)]


# ---------------------------------------------------------------------------
# constructors


def presentation(field: Field, names, relations, cap=DEFAULT_DEGREE_CAP, name=None):
    algebra = FreeAlgebra(field, tuple(names))
    rels = [algebra.parse(r) if isinstance(r, str) else r for r in relations]
    return GradedPresentation(algebra, rels, cap=cap, name=name)


def free_presentation(field: Field, n: int, cap=DEFAULT_DEGREE_CAP):
    return presentation(field, [f"x{i + 1}" for i in range(n)], [], cap=cap)


def quantum_plane(p: Scalar, cap=DEFAULT_DEGREE_CAP) -> GradedPresentation:
    """k_p[x1, x2] = k<x1, x2>/(x2*x1 - p*x1*x2)."""
    alg = FreeAlgebra(p.field, ("x1", "x2"))
    x1, x2 = alg.gens()
    return GradedPresentation(alg, [x2 * x1 - p * x1 * x2], cap=cap, name="quantum plane")


def jordan_plane(field: Field, cap=DEFAULT_DEGREE_CAP) -> GradedPresentation:
    """k_J[x1, x2] = k<x1, x2>/(x2*x1 - x1*x2 - x1^2)."""
    alg = FreeAlgebra(field, ("x1", "x2"))
    x1, x2 = alg.gens()
    return GradedPresentation(alg, [x2 * x1 - x1 * x2 - x1 * x1], cap=cap, name="Jordan plane")


# ---------------------------------------------------------------------------
# Koszul duality


def koszul_dual(P: GradedPresentation) -> GradedPresentation:
    """A^! = k<V*>/(R^perp), with R^perp the annihilator of R under the word pairing."""
    if not P.is_quadratic():
        raise UnsupportedError("unsupported: N >= 3 dual out of scope")
    dual_alg = P.algebra.dual()
    R = P.relations
    leads = {r.leading_word(): r for r in R}
    perp = []
    for w in P.algebra.words(2):
        if w in leads:
            continue
        # w* - sum_r r[w] * lead(r)*  is orthogonal to every echelon row r
        terms = {w: P.field.one}
        for lw, r in leads.items():
            c = r.terms.get(w)
            if c is not None:
                terms[lw] = -c
        perp.append(NCPoly(dual_alg, terms))
    for a in perp:
        for r in R:
            assert dual_pairing(a, r).is_zero()
    dual = GradedPresentation(dual_alg, perp, degree=2, cap=P.cap)
    assert dual.m == P.n**2 - P.m
    return dual


@dataclass
class KoszulCheck:
    passed: bool
    coefficients: list
    failing_degree: int | None
    hilbert_A: list
    hilbert_dual: list


def koszul_numeric_check(P: GradedPresentation, D: int = 8) -> KoszulCheck:
    """Check H_A(s) * H_{A^!}(-s) = 1 through degree D."""
    dual = koszul_dual(P)
    ha = P.hilbert_series(D)
    hd = dual.hilbert_series(D)
    coeffs = []
    for k in range(D + 1):
        coeffs.append(sum(ha[i] * (-1) ** (k - i) * hd[k - i] for i in range(k + 1)))
    failing = next((k for k, c in enumerate(coeffs) if c != (1 if k == 0 else 0)), None)
    return KoszulCheck(failing is None, coeffs, failing, ha, hd)


def relation_span_equal(P1: GradedPresentation, P2: GradedPresentation) -> bool:
    if not P1.algebra.compatible(P2.algebra) or P1.N != P2.N:
        raise AmbientMismatchError("presentations have different ambients")
    if P1.m != P2.m:
        return False
    return all(a.terms == b.terms for a, b in zip(P1.relations, P2.relations))


def relations_span(field_alg: FreeAlgebra, polys):
    """Echelon basis of a list of homogeneous polynomials (for span comparisons)."""
    return span_reduce([p.rename(field_alg) for p in polys])[0]


# ---------------------------------------------------------------------------
# skew polynomial rings


class IncompatibleSkewMatrix(ValueError):
    pass


@dataclass
class SkewData:
    presentation: GradedPresentation
    p: list
    q: list
    orders: list

    def q_not_root_of_unity_dividing(self, m: int) -> bool:
        """True if no off-diagonal q_ij has order dividing m."""
        for i, row in enumerate(self.orders):
            for j, o in enumerate(row):
                if i != j and o != "infinite" and m % o == 0:
                    return False
        return True


def skew_polynomial_ring(p, cap=DEFAULT_DEGREE_CAP) -> GradedPresentation:
    return skew_tools(p, cap=cap).presentation


def skew_tools(p, cap=DEFAULT_DEGREE_CAP) -> SkewData:
    """Skew ring x_j x_i = p_ij x_i x_j (i < j), the q-matrix and its orders."""
    n = len(p)
    fld = p[0][0].field
    for i in range(n):
        if p[i][i] != 1:
            raise IncompatibleSkewMatrix(f"p[{i + 1}][{i + 1}] must be 1")
        for j in range(n):
            if p[i][j].is_zero() or p[j][i] != p[i][j].inverse():
                raise IncompatibleSkewMatrix(f"need p[{j + 1}][{i + 1}] = p[{i + 1}][{j + 1}]^-1")
    alg = FreeAlgebra(fld, tuple(f"x{i + 1}" for i in range(n)))
    xs = alg.gens()
    rels = [xs[j] * xs[i] - p[i][j] * xs[i] * xs[j] for i in range(n) for j in range(i + 1, n)]
    P = GradedPresentation(alg, rels, degree=2, cap=cap, name="skew polynomial ring")
    q = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = fld.one
            for a in range(n):
                acc = acc * p[i][a] * p[a][j]
            row.append(acc)
        q.append(row)
    orders = [[multiplicative_order(x) for x in row] for row in q]
    return SkewData(P, p, q, orders)


def skew_matrix_from_upper(field: Field, n: int, upper) -> list:
    """Full p-matrix from a function (i, j) -> p_ij for i < j (0-based)."""
    p = [[field.one] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p[i][j] = field(upper(i, j))
            p[j][i] = p[i][j].inverse()
    return p


def skew_ring_dimension(n: int, d: int) -> int:
    return comb(n - 1 + d, d)
