"""
Noncommutative polynomials over indexed generators.

Words are tuples of 0-based generator indices; the empty tuple is the unit.
Terms are ordered deglex with x1 < x2 < ... < xn, and the *leading word* of a
polynomial is its deglex-greatest word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .expr import ExprSyntaxError, parse_expression
from .linalg import echelon, reduce_by
from .scalars import Field, FieldMismatchError, Scalar

Word = tuple


class AmbientMismatchError(ValueError):
    pass


class DegreeError(ValueError):
    pass


def deglex(word: Word):
    return (len(word), word)


@dataclass(frozen=True)
class FreeAlgebra:
    """k<x1..xn>, identified by its field and generator names."""

    field: Field
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")

    @property
    def n(self) -> int:
        return len(self.names)

    def gen(self, i: int) -> "NCPoly":
        return NCPoly(self, {(i,): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def word(self, *letters) -> "NCPoly":
        return NCPoly(self, {tuple(letters): self.field.one})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(): self.field.one})

    def words(self, d: int):
        """All words of length d in deglex order."""
        return list(product(range(self.n), repeat=d))

    def __call__(self, value) -> "NCPoly":
        if isinstance(value, NCPoly):
            return value
        if isinstance(value, str):
            return self.parse(value)
        s = self.field(value)
        return NCPoly(self, {(): s} if not s.is_zero() else {})

    def parse(self, text: str) -> "NCPoly":
        index = {name: i for i, name in enumerate(self.names)}

        def resolve(name, pos):
            if name in index:
                return self.gen(index[name])
            raise ExprSyntaxError(f"unknown generator {name!r}", pos)

        value = parse_expression(text, self.field, resolve)
        return self(value)

    def dual(self, suffix: str = "'") -> "FreeAlgebra":
        """Free algebra on the dual generators x1', ..., xn'."""
        return FreeAlgebra(self.field, tuple(name + suffix for name in self.names))

    def compatible(self, other: "FreeAlgebra") -> bool:
        return self.n == other.n and self.field == other.field


class NCPoly:
    """Finite linear combination of words; immutable."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: FreeAlgebra, terms: dict):
        self.parent = parent
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- structure ------------------------------------------------------------
    @property
    def field(self):
        return self.parent.field

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous polynomial (None for zero)."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise DegreeError("polynomial is not homogeneous")
        return ds.pop()

    def leading_word(self) -> Word:
        return max(self.terms, key=deglex)

    def leading_coefficient(self) -> Scalar:
        return self.terms[self.leading_word()]

    def coefficient(self, word) -> Scalar:
        return self.terms.get(tuple(word), self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: deglex(kv[0]), reverse=True)

    def homogeneous_part(self, d: int) -> "NCPoly":
        return NCPoly(self.parent, {w: c for w, c in self.terms.items() if len(w) == d})

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "NCPoly"):
        if not self.parent.compatible(other.parent):
            raise AmbientMismatchError(
                f"ambient mismatch: {self.parent.n} generators over {self.field} vs "
                f"{other.parent.n} over {other.field}"
            )

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            try:
                return self.parent(other)
            except FieldMismatchError as exc:
                raise AmbientMismatchError(str(exc)) from exc
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return NCPoly(self.parent, terms)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.parent, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NCPoly":
        c = self.field(c) if not isinstance(c, Scalar) else c
        return NCPoly(self.parent, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                terms[w] = terms[w] + c if w in terms else c
        return NCPoly(self.parent, terms)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.parent.compatible(other.parent) and self.terms == other.terms
        if isinstance(other, (Scalar, int, Fraction)):
            return self.terms == self.parent(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, fn) -> "NCPoly":
        return NCPoly(self.parent, {w: fn(c) for w, c in self.terms.items()})

    def rename(self, parent: FreeAlgebra) -> "NCPoly":
        """Same terms, viewed in another compatible free algebra."""
        if not parent.compatible(self.parent):
            raise AmbientMismatchError("cannot move polynomial between algebras")
        return NCPoly(parent, self.terms)

    # -- display --------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.parent.names
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(names[i] for i in w)
            if not mono:
                parts.append(str(c) if c.is_monomial_literal() else f"({c})")
                continue
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif c.is_monomial_literal():
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"NCPoly({self})"


def span_reduce(polys):
    """Reduced echelon basis of the span of homogeneous polynomials of one degree.

    Returns ``(basis, leading_words)``.  Each basis vector is monic at its
    leading word and vanishes at every other basis vector's leading word.
    """
    polys = [p for p in polys]
    degs = set()
    for p in polys:
        if not p.is_homogeneous():
            raise DegreeError("span_reduce needs homogeneous inputs")
        degs |= p.degrees()
    if len(degs) > 1:
        raise DegreeError(f"span_reduce needs one common degree, got {sorted(degs)}")
    if not polys:
        return [], set()
    parent = polys[0].parent
    for p in polys[1:]:
        p._check(polys[0])
    rows = echelon([p.terms for p in polys], order=deglex)
    basis = [NCPoly(parent, r) for r in rows]
    return basis, {b.leading_word() for b in basis}


def reduce_modulo(f: NCPoly, basis) -> NCPoly:
    """Remainder of f against an echelon basis returned by :func:`span_reduce`."""
    return NCPoly(f.parent, reduce_by(f.terms, [b.terms for b in basis], order=deglex))


def dual_pairing(a: NCPoly, f: NCPoly) -> Scalar:
    """<x*_{i1}..x*_{id}, x_{j1}..x_{jd}> = [i == j], extended bilinearly."""
    if not a.parent.compatible(f.parent):
        raise AmbientMismatchError("pairing needs the same generator count and field")
    da, df = a.degree(), f.degree()
    if da is not None and df is not None and da != df:
        raise DegreeError(f"pairing degree mismatch: {da} vs {df}")
    total = a.field.zero
    small, large = (a, f) if len(a.terms) <= len(f.terms) else (f, a)
    for w, c in small.terms.items():
        d = large.terms.get(w)
        if d is not None:
            total = total + c * d
    return total
