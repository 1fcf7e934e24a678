"""
Roots of univariate polynomials inside a scalar field.

Factorisation is delegated to sympy: over QQ, over the algebraic field
QQ<exp(2*pi*i/n)> (whose primitive element is exactly z, so representations
transfer coefficient-for-coefficient), and, for the rational-function fields,
as a bivariate polynomial in (x, t) after clearing denominators.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import QQ

from .scalars import (
    Cyclotomic,
    Field,
    Rationals,
    RationalFunctions,
    Scalar,
    _pdivmod,
    _pmul,
    _trim,
)


@lru_cache(maxsize=None)
def _algebraic_domain(n: int):
    return QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / n))


def _domain(base: Field):
    if isinstance(base, Rationals):
        return QQ
    return _algebraic_domain(base.n)


def _to_mpq(q: Fraction):
    return QQ(q.numerator, q.denominator)


def _from_mpq(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def _base_to_dom(base: Field, rep):
    if isinstance(base, Rationals):
        return _to_mpq(rep)
    dom = _domain(base)
    coeffs = [_to_mpq(c) for c in reversed(rep)]
    return dom(coeffs) if any(coeffs) else dom.zero


def _dom_to_base(base: Field, v):
    if isinstance(base, Rationals):
        return _from_mpq(v)
    coeffs = [_from_mpq(c) for c in reversed(v.to_list())]
    return base._reduce(coeffs)


def roots_in_field(coeffs, field: Field) -> list[Scalar]:
    """Distinct roots in ``field`` of sum coeffs[k] x^k (coefficients low to high)."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    x = sympy.Symbol("x")
    if isinstance(field, RationalFunctions):
        return _roots_rational_functions(coeffs, field)
    dom = _domain(field)
    poly = sympy.Poly.from_dict(
        {(k,): _base_to_dom(field, c.rep) for k, c in enumerate(coeffs) if not c.is_zero()}, x, domain=dom
    )
    out = []
    for factor, _mult in poly.factor_list()[1]:
        if factor.degree() != 1:
            continue
        d = factor.rep.to_dict()
        a = Scalar(field, _dom_to_base(field, d[(1,)]))
        b = Scalar(field, _dom_to_base(field, d.get((0,), dom.zero)))
        out.append(-b / a)
    return _dedupe(out)


def _roots_rational_functions(coeffs, field: RationalFunctions):
    base = field.base
    dom = _domain(base)
    x, t = sympy.symbols("x t")
    # clear denominators: multiply by the product of the distinct denominators
    dens = []
    for c in coeffs:
        if c.rep[1] not in dens:
            dens.append(c.rep[1])
    common = (base._one(),)
    for d in dens:
        common = _pmul(base, common, d)
    terms = {}
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        num, den = c.rep
        q, r = _pdivmod(base, common, den)
        assert not _trim(base, r)
        for j, v in enumerate(_pmul(base, num, q)):
            if not base._is_zero(v):
                terms[(k, j)] = _base_to_dom(base, v)
    poly = sympy.Poly.from_dict(terms, x, t, domain=dom)
    out = []
    for factor, _mult in poly.factor_list()[1]:
        if factor.degree(x) != 1:
            continue
        a_poly, b_poly = {}, {}
        for (i, j), v in factor.rep.to_dict().items():
            (a_poly if i == 1 else b_poly)[j] = _dom_to_base(base, v)
        a = _poly_rep(base, a_poly)
        b = _poly_rep(base, b_poly)
        out.append(-Scalar(field, field._make(b, a)) if b else field.zero)
    return _dedupe(out)


def _poly_rep(base, terms):
    if not terms:
        return []
    deg = max(terms)
    return [terms.get(j, base._zero()) for j in range(deg + 1)]


def _dedupe(values):
    out = []
    for v in values:
        if v not in out:
            out.append(v)
    return out


def charpoly(m, field: Field):
    """Characteristic polynomial det(xI - m), coefficients low to high (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [field.zero] * n + [field.one]
    mk = [[field.zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        # mk <- m*mk + c_{n-k+1} I
        prod = [[sum((m[i][s] * mk[s][j] for s in range(n) if not m[i][s].is_zero()), field.zero)
                 for j in range(n)] for i in range(n)]
        c = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] = prod[i][i] + c
        mk = prod
        tr = field.zero
        for i in range(n):
            for s in range(n):
                if not m[i][s].is_zero():
                    tr = tr + m[i][s] * mk[s][i]
        coeffs[n - k] = -tr * Fraction(1, k)
    return coeffs
