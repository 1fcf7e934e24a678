"""
Right coactions of a finite-dimensional Hopf algebra K on a quadratic algebra A.

Conventions: rho(x_j) = sum_i x_i (x) y_ij on A, and the induced left coaction
on E = A^! is rho^!(x_i*) = sum_s y_is (x) x_s*.  Matrices over K are lists of
lists of :class:`HopfElement`; scalar matrices act entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .frobenius import FDAlgebra, FrobeniusData, dual_bases_and_nakayama, finite_dim_algebra, nakayama_of_A
from .hopf import HopfAlgebra, HopfElement, conj_auto, element_order, hopf_verify, is_hopf_endomorphism, subalgebra_closure
from .linalg import inverse, is_scalar_matrix, mat_mul, transpose
from .presentation import GradedPresentation, UnsupportedError, koszul_dual, koszul_numeric_check

DEFAULT_SOLVER_CAP = 20000


class CoactionError(ValueError):
    pass


class AmbientMismatch(CoactionError):
    pass


# ---------------------------------------------------------------------------
# matrices over K


def kmatrix(K: HopfAlgebra, rows):
    """Matrix of Hopf elements from labels/strings/elements."""
    return [[K(x) if not isinstance(x, HopfElement) else x for x in row] for row in rows]


def k_identity(K: HopfAlgebra, n: int, g: HopfElement | None = None):
    g = K.one() if g is None else g
    return [[g if i == j else K.zero() for j in range(n)] for i in range(n)]


def k_mul(X, Y):
    n, m, p = len(X), len(Y), len(Y[0])
    K = X[0][0].parent
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = K.zero()
            for s in range(m):
                if not X[i][s].is_zero() and not Y[s][j].is_zero():
                    acc = acc + X[i][s] * Y[s][j]
            row.append(acc)
        out.append(row)
    return out


def k_scalar_mul(a, X):
    """Scalar matrix a times K-matrix X."""
    K = X[0][0].parent
    out = []
    for i in range(len(a)):
        row = []
        for j in range(len(X[0])):
            acc = K.zero()
            for s in range(len(X)):
                if not a[i][s].is_zero():
                    acc = acc + X[s][j] * a[i][s]
            row.append(acc)
        out.append(row)
    return out


def k_mul_scalar(X, a):
    """K-matrix X times scalar matrix a."""
    return transpose(k_scalar_mul(transpose(a), transpose(X)))


def k_map(X, fn):
    return [[fn(x) for x in row] for row in X]


def k_S(X):
    return k_map(X, lambda x: x.S())


def k_conj(X, a):
    """a X a^-1 for a scalar matrix a."""
    return k_mul_scalar(k_scalar_mul(a, X), inverse(a))


def k_str(X):
    return [[str(x) for x in row] for row in X]


def _mismatches(X, Y):
    return [
        {"i": i, "j": j, "lhs": str(X[i][j]), "rhs": str(Y[i][j])}
        for i in range(len(X)) for j in range(len(X[0])) if X[i][j] != Y[i][j]
    ]


@dataclass
class IdentityCheck:
    identity: str
    passed: bool
    witnesses: list = field(default_factory=list)

    def to_json(self):
        return {"identity": self.identity, "status": "pass" if self.passed else "fail", "witnesses": self.witnesses}


def _check(label, pairs):
    wit = []
    for X, Y in pairs:
        wit.extend(_mismatches(X, Y))
    return IdentityCheck(label, not wit, wit)


# ---------------------------------------------------------------------------
# comodule-algebra verification


@dataclass
class ComoduleReport:
    comultiplicative: IdentityCheck
    counital: IdentityCheck
    relations: IdentityCheck

    @property
    def passed(self) -> bool:
        return self.comultiplicative.passed and self.counital.passed and self.relations.passed

    def to_json(self):
        return {
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in (self.comultiplicative, self.counital, self.relations)],
        }


def _check_shapes(A: GradedPresentation, K: HopfAlgebra, Y):
    n = A.n
    if len(Y) != n or any(len(row) != n for row in Y):
        raise AmbientMismatch(f"coaction matrix must be {n}x{n}")
    for row in Y:
        for y in row:
            if y.parent is not K:
                raise AmbientMismatch("coaction entries live in a different Hopf algebra")
    if K.field != A.field:
        raise AmbientMismatch(f"A is over {A.field} but K is over {K.field}")


def verify_comodule_algebra(A: GradedPresentation, K: HopfAlgebra, Y) -> ComoduleReport:
    _check_shapes(A, K, Y)
    if not A.is_quadratic():
        raise UnsupportedError("coactions are only supported on quadratic algebras")
    n = A.n
    wit = []
    for i, j in product(range(n), repeat=2):
        lhs = Y[i][j].delta()
        rhs = {}
        for s in range(n):
            for key, c in K.tensor(Y[i][s], Y[s][j]).items():
                rhs[key] = rhs[key] + c if key in rhs else c
        rhs = {k: c for k, c in rhs.items() if not c.is_zero()}
        if lhs != rhs:
            wit.append({"i": i, "j": j, "lhs": _fmt_tensor(K, lhs), "rhs": _fmt_tensor(K, rhs)})
    comult = IdentityCheck("comodule.delta", not wit, wit)
    wit = [
        {"i": i, "j": j, "lhs": str(Y[i][j].eps()), "rhs": "1" if i == j else "0"}
        for i, j in product(range(n), repeat=2) if Y[i][j].eps() != (1 if i == j else 0)
    ]
    counit = IdentityCheck("comodule.epsilon", not wit, wit)
    wit = []
    for r in A.relations:
        for word, vec in _rho_relation(A, K, Y, r).items():
            wit.append({"relation": str(r), "word": "*".join(A.names[i] for i in word), "coefficient": str(vec)})
    rel = IdentityCheck("comodule.relations", not wit, wit)
    return ComoduleReport(comult, counit, rel)


def _fmt_tensor(K, t):
    return " + ".join(f"({c})*{K.labels[i]}@{K.labels[j]}" for (i, j), c in sorted(t.items())) or "0"


def _rho_relation(A, K, Y, r):
    """Nonzero components of rho(r) in A_2 (x) K, keyed by normal word."""
    comp = {}
    for (i, k) in product(range(A.n), repeat=2):
        el = K.zero()
        for (a, b), c in r.terms.items():
            prod = Y[i][a] * Y[k][b]
            if not prod.is_zero():
                el = el + prod * c
        if el.is_zero():
            continue
        nf = A.normal_form(A.algebra.word(i, k))
        for w, c in nf.terms.items():
            comp[w] = comp[w] + el * c if w in comp else el * c
    return {w: v for w, v in comp.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# the induced coaction on E = A^!


@dataclass
class DualCoactionData:
    A: GradedPresentation
    K: HopfAlgebra
    Y: list            # coaction matrix in the x-basis of A_1
    frobenius: FrobeniusData
    rho: dict          # degree -> K-matrix on the normal words of E_d
    Ya: list           # coaction matrix on the a-basis of E_1
    F: list
    G: list
    D: HopfElement | None = None

    @property
    def E(self) -> FDAlgebra:
        return self.frobenius.algebra

    @property
    def alpha(self):
        return self.frobenius.alpha


def frobenius_data_for(A: GradedPresentation, a=None, e_scale=None) -> FrobeniusData:
    return dual_bases_and_nakayama(finite_dim_algebra(koszul_dual(A)), a, e_scale)


def induced_dual_coaction(A, K, Y, F: FrobeniusData | None = None) -> DualCoactionData:
    if F is None:
        F = frobenius_data_for(A)
    E = F.algebra
    n = A.n
    fld = K.field
    rho = {0: [[K.one()]], 1: [list(row) for row in Y]}
    for d in range(2, E.top + 1):
        rows = []
        for w in E.slices[d]:
            prev = rho[d - 1][E.index[d - 1][w[:-1]]]
            acc = [K.zero() for _ in range(E.dim(d))]
            for m, km in enumerate(prev):
                if km.is_zero():
                    continue
                for s in range(n):
                    y = Y[w[-1]][s]
                    if y.is_zero():
                        continue
                    coeff = km * y
                    vec = E.multiply(d - 1, E.basis_vector(d - 1, m), 1, E.basis_vector(1, s))
                    for t, c in enumerate(vec):
                        if not c.is_zero():
                            acc[t] = acc[t] + coeff * c
            rows.append(acc)
        rho[d] = rows
    _assert_kills_dual_relations(E, K, Y)
    # change of basis to a, b and c
    a_mat = F.a
    Ya = k_conj(Y, a_mat)
    b_mat = F.b
    Fm = k_conj(rho[E.top - 1], b_mat)
    c_mat = F.c
    G = k_conj(Y, c_mat)
    del fld
    return DualCoactionData(A, K, Y, F, rho, Ya, Fm, G)


def _assert_kills_dual_relations(E: FDAlgebra, K, Y):
    """rho^! is well defined: it sends every relation of E into R^perp (x) K."""
    n = len(Y)
    P = E.presentation
    for r in P.relations:
        comp = {}
        for (s, t) in product(range(n), repeat=2):
            el = K.zero()
            for (i, j), c in r.terms.items():
                prod = Y[i][s] * Y[j][t]
                if not prod.is_zero():
                    el = el + prod * c
            if el.is_zero():
                continue
            for w, c in P.normal_form(P.algebra.word(s, t)).terms.items():
                comp[w] = comp[w] + el * c if w in comp else el * c
        if any(not v.is_zero() for v in comp.values()):
            raise CoactionError(f"induced coaction does not preserve the dual relation {r}")


def hcodet(data: DualCoactionData) -> HopfElement:
    """Homological codeterminant: rho^!(e) = D (x) e."""
    E = data.E
    top = data.rho[E.top]
    assert len(top) == 1 and len(top[0]) == 1, "top slice of E must be one-dimensional"
    D = top[0][0]
    K = data.K
    if not D.is_grouplike():
        raise CoactionError(f"codeterminant {D} is not grouplike")
    if D * D.S() != K.one():
        raise CoactionError("D * S(D) != 1")
    data.D = D
    return D


def dual_coaction_with_codet(A, K, Y, F=None) -> DualCoactionData:
    data = induced_dual_coaction(A, K, Y, F)
    hcodet(data)
    return data


# ---------------------------------------------------------------------------
# identities


def lemma31_report(data: DualCoactionData) -> list[IdentityCheck]:
    """Exact checks of the dual-basis identities (a)-(g)."""
    K = data.K
    n = len(data.Ya)
    D = data.D if data.D is not None else hcodet(data)
    D_inv = D.S()
    Y, Fm, G = data.Ya, data.F, data.G
    I = k_identity(K, n)
    DI, DinvI = k_identity(K, n, D), k_identity(K, n, D_inv)
    SY, SG = k_S(Y), k_S(G)
    Ft = transpose(Fm)
    out = [
        _check("lemma31.a", [(k_mul(Y, SY), I), (k_mul(SY, Y), I)]),
        _check("lemma31.b", [(k_mul(G, SG), I), (k_mul(SG, G), I)]),
        _check("lemma31.c", [(k_mul(Y, Ft), DI), (SY, k_mul(Ft, DinvI))]),
        _check("lemma31.d", [(k_mul(k_S(Fm), k_S(transpose(Y))), DinvI)]),
        _check("lemma31.e", [(k_mul(SG, k_S(Ft)), DinvI), (k_mul(k_S(Ft), DI), G)]),
        _check("lemma31.f", [(k_S(SY), k_mul(k_mul(DI, G), DinvI))]),
        _check("lemma31.g", [(G, k_conj(Y, data.alpha))]),
    ]
    return out


@dataclass
class MainTheoremReport:
    passed: bool
    D: HopfElement
    M: list
    lhs: list
    rhs: list
    witnesses: list
    sign_cancels: bool
    koszul_passed: bool
    d: int

    def to_json(self):
        return {
            "identity": "theorem01",
            "status": "pass" if self.passed else "fail",
            "D": str(self.D),
            "global_dimension": self.d,
            "koszul_check": self.koszul_passed,
            "M": [[str(x) for x in row] for row in self.M],
            "sign_cancels": self.sign_cancels,
            "witnesses": self.witnesses,
        }


def check_main_theorem(A, K, Y, d: int | None = None, F: FrobeniusData | None = None,
                       koszul_degree: int = 6) -> MainTheoremReport:
    """D^-1 S^2(y_ij) D == sum_{s,t} m_si y_st n_jt for all i, j."""
    kz = koszul_numeric_check(A, min(koszul_degree, A.cap))
    data = dual_coaction_with_codet(A, K, Y, F)
    alpha = data.alpha
    d = data.E.top if d is None else d
    M = nakayama_of_A(alpha, d)
    Ya = data.Ya
    D = data.D
    lhs = k_map(Ya, lambda y: D.S() * y.S().S() * D)
    Mt = transpose(M)
    rhs = k_conj(Ya, Mt)
    # the sign (-1)^(d+1) cancels inside the conjugation
    sign_cancels = rhs == k_conj(Ya, alpha) == k_conj(Ya, nakayama_of_A(alpha, d + 1)) and (
        rhs == k_conj(Ya, transpose(nakayama_of_A(alpha, d + 1))))
    assert sign_cancels
    wit = _mismatches(lhs, rhs)
    return MainTheoremReport(not wit and kz.passed, D, M, lhs, rhs, wit, sign_cancels, kz.passed, d)


def inner_faithful(K: HopfAlgebra, Y):
    """True iff the S-stable subalgebra generated by the entries of Y is K."""
    entries = [y for row in Y for y in row]
    dim, basis = subalgebra_closure(K, entries)
    return dim == K.dim, dim


@dataclass
class StructuralReport:
    hopf_endomorphism: bool
    codet_order: int
    codet_order_divides_dim: bool
    s2_trivial_applicable: bool
    s2_trivial_passed: bool | None
    closure_dim: int

    def to_json(self):
        return dict(self.__dict__)


def structural_checks(data: DualCoactionData) -> StructuralReport:
    """eta_D o S^2 is a Hopf endomorphism on the closure; S^2 = id under scalar alpha and D = 1."""
    K = data.K
    D = data.D if data.D is not None else hcodet(data)
    faithful, cdim = inner_faithful(K, data.Y)
    _, basis = subalgebra_closure(K, [y for row in data.Y for y in row])
    conj = conj_auto(K, D)
    s2 = mat_mul(K.antipode, K.antipode)
    eta = mat_mul(s2, conj)  # row convention: first S^2, then conjugation
    vecs = [b.vec for b in basis]
    endo = is_hopf_endomorphism(K, eta, vecs)
    order = element_order(D)
    applicable = faithful and is_scalar_matrix(data.alpha) is not None and D == K.one()
    passed = None
    if applicable:
        passed = all(b.S().S() == b for b in basis)
    return StructuralReport(endo, order, K.dim % order == 0, applicable, passed, cdim)


def change_basis(Y, P):
    """Coaction matrix after the A_1 basis change x' = P x, i.e. P Y P^-1."""
    return k_conj(Y, P)


# ---------------------------------------------------------------------------
# monomial-ansatz solver


@dataclass
class SolverResult:
    solutions: list
    patterns_tried: int
    partial: bool


def _pz(p):
    return {m: c for m, c in p.items() if not c.is_zero()}


def _padd(p, q):
    out = dict(p)
    for m, c in q.items():
        out[m] = out[m] + c if m in out else c
    return _pz(out)


def _pmulpoly(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out[m] + c1 * c2 if m in out else c1 * c2
    return _pz(out)


def _psubst(p, var, value):
    out = {}
    for m, c in p.items():
        k = m.count(var)
        rest = tuple(v for v in m if v != var)
        val = c * value**k
        out[rest] = out[rest] + val if rest in out else val
    return _pz(out)


def _solve_system(eqs, nvars, field):
    """Greedy exact solve; returns {var: Scalar} or None if inconsistent."""
    values = {}
    eqs = [e for e in eqs if e]
    while True:
        if any(set(e) == {()} for e in eqs):
            return None
        eqs = [e for e in eqs if e]
        pending = sorted({v for e in eqs for m in e for v in m})
        if not pending:
            break
        chosen = None
        for e in eqs:
            vars_ = {v for m in e for v in m}
            if len(vars_) == 1 and all(len(m) <= 1 for m in e):
                (v,) = vars_
                a = e.get((v,), field.zero)
                b = e.get((), field.zero)
                if b.is_zero():
                    return None  # forces a nonzero coefficient to vanish
                chosen = (v, -b / a)
                break
        if chosen is None:
            # a pure monomial equation c*prod(lambda) = 0 has no nonzero solution
            if any(len(e) == 1 for e in eqs):
                return None
            chosen = (pending[0], field.one)
        v, val = chosen
        values[v] = val
        eqs = [_psubst(e, v, val) for e in eqs]
    for v in range(nvars):
        values.setdefault(v, field.one)
    return values


def solve_coactions(A: GradedPresentation, K: HopfAlgebra, cap: int = DEFAULT_SOLVER_CAP) -> SolverResult:
    """All verified monomial coaction matrices (off-diagonal scalings normalised)."""
    if not A.is_quadratic():
        raise UnsupportedError("coactions are only supported on quadratic algebras")
    if not hopf_verify(K).passed:
        raise CoactionError("K fails the Hopf axioms")
    n, fld = A.n, K.field
    diag_choices = [b for b in range(K.dim) if not K.counit[b].is_zero()]
    off_choices = [None] + [b for b in range(K.dim) if K.counit[b].is_zero()]
    cells = [(i, j) for i in range(n) for j in range(n)]
    choices = [diag_choices if i == j else off_choices for i, j in cells]
    nf = {(i, k): A.normal_form(A.algebra.word(i, k)) for i, k in product(range(n), repeat=2)}
    solutions, seen, tried, partial = [], set(), 0, False
    for pattern in product(*choices):
        if tried >= cap:
            partial = True
            break
        tried += 1
        entries = {}
        nvars = 0
        for (i, j), b in zip(cells, pattern):
            if b is None:
                continue
            if i == j:
                entries[i, j] = (b, {(): K.counit[b].inverse()})
            else:
                entries[i, j] = (b, {(nvars,): fld.one})
                nvars += 1
        eqs = _coaction_equations(A, K, entries, nf)
        values = _solve_system(eqs, nvars, fld)
        if values is None:
            continue
        Y = [[K.zero() for _ in range(n)] for _ in range(n)]
        for (i, j), (b, poly) in entries.items():
            coeff = fld.zero
            for m, c in poly.items():
                term = c
                for v in m:
                    term = term * values[v]
                coeff = coeff + term
            Y[i][j] = K.basis(b) * coeff
        key = tuple(y.vec for row in Y for y in row)
        if key in seen:
            continue
        if verify_comodule_algebra(A, K, Y).passed:
            seen.add(key)
            solutions.append(Y)
    return SolverResult(solutions, tried, partial)


def _coaction_equations(A, K, entries, nf):
    """Polynomial equations in the scalings from the Delta axiom and relation preservation."""
    n = A.n
    eqs = []

    def y_terms(i, j):
        e = entries.get((i, j))
        return [] if e is None else [e]

    # Delta(y_ij) = sum_s y_is (x) y_sj, coefficientwise on basis pairs
    for i, j in product(range(n), repeat=2):
        acc = {}
        for b, poly in y_terms(i, j):
            for p, q, c in K.comult[b]:
                acc[p, q] = _padd(acc.get((p, q), {}), {m: v * c for m, v in poly.items()})
        for s in range(n):
            for b1, p1 in y_terms(i, s):
                for b2, p2 in y_terms(s, j):
                    prod = _pmulpoly(p1, p2)
                    acc[b1, b2] = _padd(acc.get((b1, b2), {}), {m: -v for m, v in prod.items()})
        eqs.extend(v for v in acc.values() if v)
    # relation preservation: components of rho(r) on normal words of A_2 vanish
    for r in A.relations:
        comp = {}
        for i, k in product(range(n), repeat=2):
            kel = {}
            for (a, b), c in r.terms.items():
                for b1, p1 in y_terms(i, a):
                    for b2, p2 in y_terms(k, b):
                        prod = _pmulpoly(p1, p2)
                        for q, d in K.mult[b1][b2].items():
                            kel[q] = _padd(kel.get(q, {}), {m: v * c * d for m, v in prod.items()})
            for w, c in nf[i, k].terms.items():
                for q, poly in kel.items():
                    comp[w, q] = _padd(comp.get((w, q), {}), {m: v * c for m, v in poly.items()})
        eqs.extend(v for v in comp.values() if v)
    return eqs
