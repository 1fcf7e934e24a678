"""
Finite-dimensional connected graded algebras, Frobenius pairings and
Nakayama automorphisms.

Given a basis a_1..a_n of E_1 and a top vector e spanning E_l, the dual bases
are the unique b (in E_{l-1}) and c (in E_1) with

    a_i * b_j = delta_ij e        b_i * c_j = delta_ij e

and the Nakayama matrix alpha is defined by c_i = sum_j alpha_ij a_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import (
    SingularMatrixError,
    identity,
    inverse,
    is_scalar_matrix,
    mat_mul,
    nullspace,
    rank,
    transpose,
)
from .presentation import DegreeCapError, GradedPresentation
from .scalars import Scalar


class NotFiniteDimensionalError(ValueError):
    pass


class NakayamaVerificationError(AssertionError):
    pass


class FDAlgebra:
    """A finite-dimensional quotient E = k<V>/(R), stored slice by slice."""

    def __init__(self, P: GradedPresentation, cap: int | None = None):
        cap = P.cap if cap is None else cap
        slices = []
        for d in range(cap + 1):
            if d > P.cap:
                break
            comp = P.graded_component(d)
            if comp.dim == 0:
                break
            slices.append(comp.normal_words)
        else:
            raise NotFiniteDimensionalError("not witnessed finite-dimensional")
        if len(slices) == cap + 1 or len(slices) > P.cap:
            raise NotFiniteDimensionalError("not witnessed finite-dimensional")
        self.presentation = P
        self.field = P.field
        self.slices = slices
        self.top = len(slices) - 1
        self.index = [{w: k for k, w in enumerate(s)} for s in slices]
        assert len(slices[0]) == 1, "graded algebra must be connected"
        # vanishing is permanent (degree-1 generation), checked up to the cap
        for d in range(self.top + 1, min(P.cap, self.top + 2) + 1):
            assert P.dim(d) == 0
        self._table = {}

    @property
    def dims(self) -> list[int]:
        return [len(s) for s in self.slices]

    def dim(self, d: int) -> int:
        return len(self.slices[d]) if 0 <= d <= self.top else 0

    def basis_vector(self, d: int, k: int):
        v = [self.field.zero] * self.dim(d)
        v[k] = self.field.one
        return v

    def word_vector(self, word):
        """Coordinates of an arbitrary word in the normal-word basis."""
        d = len(word)
        if d > self.top:
            return []
        nf = self.presentation.normal_form(self.presentation.algebra.word(*word))
        v = [self.field.zero] * self.dim(d)
        for w, c in nf.terms.items():
            v[self.index[d][w]] = c
        return v

    def poly_vector(self, f):
        """Coordinates of a homogeneous polynomial."""
        d = f.degree()
        if d is None:
            return None
        if d > self.top:
            return []
        nf = self.presentation.normal_form(f)
        v = [self.field.zero] * self.dim(d)
        for w, c in nf.terms.items():
            v[self.index[d][w]] = c
        return v

    def _products(self, i, j):
        key = (i, j)
        if key not in self._table:
            table = {}
            if i + j <= self.top:
                for a, u in enumerate(self.slices[i]):
                    for b, v in enumerate(self.slices[j]):
                        vec = self.word_vector(u + v)
                        table[a, b] = [(k, c) for k, c in enumerate(vec) if not c.is_zero()]
            self._table[key] = table
        return self._table[key]

    def multiply(self, i: int, u, j: int, v):
        """Product of u in E_i and v in E_j, as a vector of E_{i+j}."""
        if i + j > self.top:
            return []
        out = [self.field.zero] * self.dim(i + j)
        table = self._products(i, j)
        for a, x in enumerate(u):
            if x.is_zero():
                continue
            for b, y in enumerate(v):
                if y.is_zero():
                    continue
                xy = x * y
                for k, c in table[a, b]:
                    out[k] = out[k] + xy * c
        return out


def finite_dim_algebra(P: GradedPresentation, cap: int | None = None) -> FDAlgebra:
    try:
        return FDAlgebra(P, cap)
    except DegreeCapError as exc:
        raise NotFiniteDimensionalError("not witnessed finite-dimensional") from exc


# ---------------------------------------------------------------------------
# Frobenius check


@dataclass
class PairingDegree:
    degree: int
    rows: int
    cols: int
    rank: int
    passed: bool
    witness: list | None = None


@dataclass
class FrobeniusReport:
    passed: bool
    top_degree: int
    top_dimension: int
    degrees: list

    @property
    def failing_degrees(self):
        return [p.degree for p in self.degrees if not p.passed]

    @property
    def pairing_ranks(self):
        return [p.rank for p in self.degrees]


def _pairing_matrix(E: FDAlgebra, i: int, top_coord):
    j = E.top - i
    rows = []
    for a in range(E.dim(i)):
        u = E.basis_vector(i, a)
        row = []
        for b in range(E.dim(j)):
            v = E.basis_vector(j, b)
            row.append(top_coord(E.multiply(i, u, j, v)))
        rows.append(row)
    return rows


def _top_coordinate(E: FDAlgebra, scale: Scalar | None = None):
    """Coefficient on e = scale * (first normal word of the top slice)."""
    scale = E.field.one if scale is None else scale
    inv = scale.inverse()
    return lambda vec: vec[0] * inv


def frobenius_check(E: FDAlgebra) -> FrobeniusReport:
    coord = _top_coordinate(E)
    degrees = []
    top_dim = E.dim(E.top)
    for i in range(E.top + 1):
        m = _pairing_matrix(E, i, coord)
        rows, cols = E.dim(i), E.dim(E.top - i)
        r = rank(m) if rows and cols else 0
        ok = rows == cols and r == rows and top_dim == 1
        witness = None
        if not ok:
            # a vector of E_i pairing to zero with all of E_{l-i}
            kern = nullspace(transpose(m), rows, E.field) if cols else [E.basis_vector(i, 0)]
            side = "left"
            if not kern and rows:
                # otherwise a vector of E_{l-i} pairing to zero with all of E_i
                kern, side = nullspace(m, cols, E.field), "right"
            if kern:
                witness = {"side": side, "vector": [str(x) for x in kern[0]]}
        degrees.append(PairingDegree(i, rows, cols, r, ok, witness))
    return FrobeniusReport(all(p.passed for p in degrees), E.top, top_dim, degrees)


# ---------------------------------------------------------------------------
# dual bases and the Nakayama automorphism


@dataclass
class FrobeniusData:
    algebra: FDAlgebra
    e_scale: Scalar
    a: list          # basis of E_1, rows in generator coordinates
    b: list          # basis of E_{l-1}, rows in normal-word coordinates
    c: list          # basis of E_1, rows in generator coordinates
    alpha: list      # c_i = sum_j alpha_ij a_j
    mu: dict = field(repr=False)  # degree -> matrix, mu(w_k) = sum_m mu[d][k][m] w_m
    pairing_ranks: list = field(default_factory=list)

    @property
    def top_degree(self) -> int:
        return self.algebra.top

    def pairing(self, i: int, u, v) -> Scalar:
        """<u, v> = coefficient of e in u*v (u in E_i, v in E_{l-i})."""
        E = self.algebra
        prod = E.multiply(i, u, E.top - i, v)
        return prod[0] * self.e_scale.inverse() if prod else E.field.zero

    def apply_mu(self, d: int, v):
        m = self.mu[d]
        out = [self.algebra.field.zero] * len(v)
        for k, x in enumerate(v):
            if x.is_zero():
                continue
            for j, y in enumerate(m[k]):
                out[j] = out[j] + x * y
        return out


def dual_bases_and_nakayama(E: FDAlgebra, a=None, e_scale=None) -> FrobeniusData:
    """Solve for b, c and alpha, then extend and verify mu_E on every slice."""
    fld = E.field
    n = E.dim(1)
    l = E.top
    report = frobenius_check(E)
    if not report.passed:
        raise NakayamaVerificationError(f"pairing degenerate in degrees {report.failing_degrees}")
    a = identity(fld, n) if a is None else [[fld(x) for x in row] for row in a]
    e_scale = fld.one if e_scale is None else fld(e_scale)
    data = FrobeniusData(E, e_scale, a, [], [], [], {}, report.pairing_ranks)

    # a_i * w_k for the normal words w_k of E_{l-1}
    p1 = [[data.pairing(1, a[i], E.basis_vector(l - 1, k)) for k in range(E.dim(l - 1))] for i in range(n)]
    try:
        B = inverse(p1)
    except SingularMatrixError as exc:
        raise AssertionError("singular pairing despite a passing Frobenius check") from exc
    b = transpose(B)  # row j = coordinates of b_j
    q = [[data.pairing(l - 1, b[i], a[k]) for k in range(n)] for i in range(n)]
    C = inverse(q)
    alpha = transpose(C)
    c = mat_mul(alpha, a)
    data.b, data.c, data.alpha = b, c, alpha

    # mu on E_1 in generator coordinates: A^-1 alpha A
    mu1 = mat_mul(mat_mul(inverse(a), alpha), a)
    data.mu = _extend_multiplicatively(E, mu1)
    _verify_nakayama(data)
    return data


def _extend_multiplicatively(E: FDAlgebra, mu1):
    fld = E.field
    mu = {0: [[fld.one]], 1: mu1}
    for d in range(2, E.top + 1):
        rows = []
        for w in E.slices[d]:
            prefix, last = w[:-1], w[-1]
            pre = mu[d - 1][E.index[d - 1][prefix]]
            rows.append(E.multiply(d - 1, pre, 1, mu1[last]))
        mu[d] = rows
    return mu


def _verify_nakayama(data: FrobeniusData):
    E = data.algebra
    fld = E.field
    # relations of E are preserved
    for r in E.presentation.relations:
        total = [fld.zero] * E.dim(r.degree()) if r.degree() <= E.top else []
        for w, coef in r.terms.items():
            vec = data.mu[1][w[0]]
            for deg, letter in enumerate(w[1:], start=1):
                vec = E.multiply(deg, vec, 1, data.mu[1][letter])
            total = [x + coef * y for x, y in zip(total, vec)]
        if any(not x.is_zero() for x in total):
            raise NakayamaVerificationError(f"mu_E does not preserve relation {r}")
    # multiplicativity on basis pairs
    for i in range(E.top + 1):
        for j in range(E.top + 1 - i):
            for s in range(E.dim(i)):
                for u in range(E.dim(j)):
                    lhs = data.apply_mu(i + j, E.multiply(i, E.basis_vector(i, s), j, E.basis_vector(j, u)))
                    rhs = E.multiply(i, data.mu[i][s], j, data.mu[j][u])
                    if lhs != rhs:
                        raise NakayamaVerificationError("mu_E is not multiplicative")
    # <u, v> = <v, mu(u)> on every basis pair
    for i in range(E.top + 1):
        j = E.top - i
        for s in range(E.dim(i)):
            u = E.basis_vector(i, s)
            mu_u = data.mu[i][s]
            for k in range(E.dim(j)):
                v = E.basis_vector(j, k)
                if data.pairing(i, u, v) != data.pairing(j, v, mu_u):
                    raise NakayamaVerificationError("pairing identity fails")


def pairing_identity_holds(data: FrobeniusData) -> bool:
    try:
        _verify_nakayama(data)
    except NakayamaVerificationError:
        return False
    return True


def nakayama_of_A(alpha, d: int):
    """M with alpha = (-1)^(d+1) M^T, so mu_A(x_i) = sum_j M_ij x_j."""
    try:
        inverse(alpha)
    except SingularMatrixError:
        raise
    sign = 1 if (d + 1) % 2 == 0 else -1
    return [[x * sign for x in row] for row in transpose(alpha)]


def is_r_nakayama(M):
    """r if M = r*I (mu_A acts as the grading twist by r), else None."""
    return is_scalar_matrix(M)


def nakayama_report(P: GradedPresentation, d: int | None = None) -> dict:
    """Everything about mu_{A^!} and mu_A for a quadratic presentation P of A."""
    from .presentation import koszul_dual

    E = finite_dim_algebra(koszul_dual(P))
    data = dual_bases_and_nakayama(E)
    d = E.top if d is None else d
    M = nakayama_of_A(data.alpha, d)
    r = is_r_nakayama(M)
    return {
        "top_degree": E.top,
        "pairing_ranks": data.pairing_ranks,
        "alpha": [[str(x) for x in row] for row in data.alpha],
        "mu_A": [[str(x) for x in row] for row in M],
        "r_nakayama": None if r is None else str(r),
    }
