"""
Exact scalar fields.

Three kinds of field are supported, all of characteristic zero:

* ``Rationals()``                      -- Q
* ``Cyclotomic(n)``                    -- Q(z) with z a primitive n-th root of unity
* ``RationalFunctions(base)``          -- base(t), base being Q or a cyclotomic field

Elements are :class:`Scalar` objects holding a canonical representative, so
equality is structural.  Everything here is immutable.

>>> Q = Rationals()
>>> Q(1, 2) + Q(1, 3)
5/6
>>> K = Cyclotomic(4)
>>> K.z * K.z
-1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

INFINITE = "infinite"


class FieldMismatchError(ValueError):
    """Operands live in incompatible fields."""


class ScalarSyntaxError(ValueError):
    """A scalar literal could not be parsed or is invalid for the field."""


# ---------------------------------------------------------------------------
# integer polynomials (cyclotomic polynomials)


def _int_poly_divmod(num, den):
    # exact division of integer polynomials with monic divisor, low -> high
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    assert lead == 1
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    rem = num[: len(den) - 1]
    return out, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # z^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _int_poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


# ---------------------------------------------------------------------------
# generic dense polynomial helpers over a field given by raw-rep operations


def _trim(field, p):
    p = list(p)
    while p and field._is_zero(p[-1]):
        p.pop()
    return p


def _padd(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field._add(out[i], c)
    return _trim(field, out)


def _pneg(field, a):
    return [field._neg(c) for c in a]


def _pmul(field, a, b):
    if not a or not b:
        return []
    out = [field._zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field._is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field._add(out[i + j], field._mul(x, y))
    return _trim(field, out)


def _pscale(field, a, c):
    return _trim(field, [field._mul(x, c) for x in a])


def _pdivmod(field, a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = field._inv(b[-1])
    q = [field._zero()] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = field._mul(a[k + len(b) - 1], inv_lead)
        q[k] = c
        if not field._is_zero(c):
            for i, d in enumerate(b):
                a[k + i] = field._add(a[k + i], field._neg(field._mul(c, d)))
    return _trim(field, q), _trim(field, a[: len(b) - 1])


def _pmonic(field, a):
    if not a:
        return a
    return _pscale(field, a, field._inv(a[-1]))


def _pgcd(field, a, b):
    while b:
        a, b = b, _pdivmod(field, a, b)[1]
    return _pmonic(field, a)


# ---------------------------------------------------------------------------
# fields


class Field:
    """Base class; concrete fields implement the ``_``-prefixed raw-rep ops."""

    def __call__(self, value=0, den=None) -> "Scalar":
        if den is not None:
            return self.from_fraction(Fraction(value, den))
        if isinstance(value, Scalar):
            return self.coerce(value)
        if isinstance(value, (int, Fraction)):
            return self.from_fraction(Fraction(value))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {value!r} to a scalar")

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, self._zero())

    @property
    def one(self) -> "Scalar":
        return Scalar(self, self._one())

    def from_fraction(self, q: Fraction) -> "Scalar":
        return Scalar(self, self._from_fraction(Fraction(q)))

    def coerce(self, s: "Scalar") -> "Scalar":
        if s.field == self:
            return s
        if isinstance(s.field, Rationals):
            return self.from_fraction(s.rep)
        raise FieldMismatchError(f"cannot move {s} from {s.field} into {self}")

    def parse(self, text: str) -> "Scalar":
        from .expr import parse_scalar

        return parse_scalar(text, self)

    def contains_symbol(self, name: str) -> bool:
        return False

    # description used by the DSL and reports
    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    def describe(self):
        return "Q"

    def __str__(self):
        return "Q"

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _from_fraction(self, q):
        return q

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _fmt(self, a):
        return str(a)

    def _as_fraction(self, a):
        return a


@dataclass(frozen=True)
class Cyclotomic(Field):
    n: int
    phi: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cyclotomic index must be positive")
        object.__setattr__(self, "phi", cyclotomic_polynomial(self.n))

    @property
    def degree(self) -> int:
        return len(self.phi) - 1

    @property
    def z(self) -> "Scalar":
        return Scalar(self, self._reduce([Fraction(0), Fraction(1)]))

    def describe(self):
        return f"cyclotomic {self.n}"

    def __str__(self):
        return f"Q(z{self.n})"

    def contains_symbol(self, name):
        return name == "z"

    def _reduce(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        deg = self.degree
        phi = self.phi
        for k in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[k]
            if c:
                for i in range(deg + 1):
                    coeffs[k - deg + i] -= c * phi[i]
        coeffs = coeffs[:deg] + [Fraction(0)] * (deg - len(coeffs))
        return tuple(coeffs)

    def _zero(self):
        return (Fraction(0),) * self.degree

    def _one(self):
        return self._from_fraction(Fraction(1))

    def _from_fraction(self, q):
        return (Fraction(q),) + (Fraction(0),) * (self.degree - 1)

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def _inv(self, a):
        if self._is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[z] against phi
        Q = _Q
        r0, r1 = [Fraction(c) for c in self.phi], _trim(Q, list(a))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _pdivmod(Q, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _padd(Q, s0, _pneg(Q, _pmul(Q, q, s1)))
        # r0 is a nonzero constant since phi is irreducible
        assert len(r0) == 1
        return self._reduce(_pscale(Q, s0, 1 / r0[0]))

    def _is_zero(self, a):
        return not any(a)

    def _as_fraction(self, a):
        if any(a[1:]):
            return None
        return a[0]

    def _fmt(self, a):
        terms = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if c:
                terms.append((c, "" if k == 0 else ("z" if k == 1 else f"z^{k}")))
        return _fmt_sum(terms)


_Q = Rationals()


@dataclass(frozen=True)
class RationalFunctions(Field):
    base: Field = _Q

    def __post_init__(self):
        if not isinstance(self.base, (Rationals, Cyclotomic)):
            raise ValueError("rational functions need Q or a cyclotomic base")

    @property
    def t(self) -> "Scalar":
        b = self.base
        return Scalar(self, ((b._zero(), b._one()), (b._one(),)))

    def describe(self):
        if isinstance(self.base, Rationals):
            return "Qt"
        return f"cyclotomic_t {self.base.n}"

    def __str__(self):
        return f"{self.base}(t)"

    def contains_symbol(self, name):
        return name == "t" or self.base.contains_symbol(name)

    @property
    def z(self) -> "Scalar":
        if not isinstance(self.base, Cyclotomic):
            raise ScalarSyntaxError("z requires cyclotomic field")
        return self.coerce_base(self.base.z)

    def coerce_base(self, s: "Scalar") -> "Scalar":
        s = self.base.coerce(s)
        return Scalar(self, self._make([s.rep], [self.base._one()]))

    def coerce(self, s):
        if s.field == self:
            return s
        if s.field == self.base:
            return self.coerce_base(s)
        return super().coerce(s)

    def _make(self, num, den):
        b = self.base
        num, den = _trim(b, num), _trim(b, den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (b._one(),))
        g = _pgcd(b, num, den)
        if len(g) > 1:
            num = _pdivmod(b, num, g)[0]
            den = _pdivmod(b, den, g)[0]
        lead = b._inv(den[-1])
        return tuple(_pscale(b, num, lead)), tuple(_pscale(b, den, lead))

    def _zero(self):
        return ((), (self.base._one(),))

    def _one(self):
        return ((self.base._one(),), (self.base._one(),))

    def _from_fraction(self, q):
        b = self.base
        if q == 0:
            return self._zero()
        return ((b._from_fraction(q),), (b._one(),))

    def _add(self, a, b):
        f = self.base
        if not a[0]:
            return b
        if not b[0]:
            return a
        if a[1] == b[1]:
            return self._make(_padd(f, a[0], b[0]), a[1])
        num = _padd(f, _pmul(f, a[0], b[1]), _pmul(f, b[0], a[1]))
        return self._make(num, _pmul(f, a[1], b[1]))

    def _neg(self, a):
        return (tuple(_pneg(self.base, a[0])), a[1])

    def _mul(self, a, b):
        f = self.base
        if not a[0] or not b[0]:
            return self._zero()
        return self._make(_pmul(f, a[0], b[0]), _pmul(f, a[1], b[1]))

    def _inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero")
        return self._make(list(a[1]), list(a[0]))

    def _is_zero(self, a):
        return not a[0]

    def _as_fraction(self, a):
        if len(a[0]) > 1 or len(a[1]) > 1:
            return None
        if not a[0]:
            return Fraction(0)
        return self.base._as_fraction(a[0][0])

    def _is_constant(self, a):
        return len(a[0]) <= 1 and len(a[1]) == 1

    def _coeff_term(self, c, mono):
        """Signed product string for coefficient c (a base rep) times mono."""
        b = self.base
        q = b._as_fraction(c)
        if q is not None:
            return _fmt_sum([(q, mono)])
        cs = b._fmt(c)
        if not _is_single_term(cs):
            cs = f"({cs})"
        return f"{cs}*{mono}" if mono else cs

    def _fmt_poly(self, p):
        b = self.base
        terms = []
        for k in range(len(p) - 1, -1, -1):
            c = p[k]
            if b._is_zero(c):
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(self._coeff_term(c, mono))
        return _join_terms(terms)

    def _fmt(self, a):
        num, den = a
        if not num:
            return "0"
        b = self.base
        # monomial/monomial  ->  c*t^k with k possibly negative
        if len(den) - 1 >= 0 and _is_monomial(b, den) and _is_monomial(b, num):
            k = (len(num) - 1) - (len(den) - 1)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            return self._coeff_term(num[-1], mono)
        ns = self._fmt_poly(num)
        if len(den) == 1:
            return ns
        ds = self._fmt_poly(den)
        if len(num) > 1 or not _is_single_term(ns):
            ns = f"({ns})"
        return f"{ns}/({ds})"


def _is_monomial(field, p):
    return all(field._is_zero(c) for c in p[:-1])


def _is_single_term(s):
    return "+" not in s[1:] and " - " not in s


def _join_terms(terms):
    """Join signed term strings into a sum."""
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def _fmt_sum(terms):
    """Format [(Fraction coeff, monomial string)] as a signed sum."""
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if mono:
            body = mono if c == 1 else f"{c}*{mono}"
        else:
            body = str(c)
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """An element of one of the fields above, in canonical form."""

    __slots__ = ("field", "rep", "_hash")

    def __init__(self, field: Field, rep):
        self.field = field
        self.rep = rep
        self._hash = None

    # -- coercion -----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field == self.field:
                return self, other
            if isinstance(other.field, Rationals):
                return self, self.field.coerce(other)
            if isinstance(self.field, Rationals):
                return other.field.coerce(self), other
            raise FieldMismatchError(f"mixed fields: {self.field} and {other.field}")
        if isinstance(other, (int, Fraction)):
            return self, self.field.from_fraction(Fraction(other))
        return None, None

    def __add__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return Scalar(a.field, a.field._add(a.rep, b.rep))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.rep))

    def __sub__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return Scalar(a.field, a.field._add(a.rep, a.field._neg(b.rep)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return Scalar(a.field, a.field._mul(a.rep, b.rep))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field._inv(self.rep))

    def __truediv__(self, other):
        a, b = self._other(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.field.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.field._is_zero(self.rep)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field == self.field:
                return self.rep == other.rep
            try:
                a, b = self._other(other)
            except FieldMismatchError:
                return False
            return a.rep == b.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == self.field._from_fraction(Fraction(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            q = self.field._as_fraction(self.rep)
            self._hash = hash(q) if q is not None else hash((type(self.field), self.rep))
        return self._hash

    def as_fraction(self) -> Fraction | None:
        """The rational value, or None if not rational."""
        return self.field._as_fraction(self.rep)

    def is_constant(self) -> bool:
        f = self.field
        if isinstance(f, RationalFunctions):
            return f._is_constant(self.rep)
        return True

    def __str__(self):
        return self.field._fmt(self.rep)

    def __repr__(self):
        return str(self)

    def is_monomial_literal(self) -> bool:
        """True when str(self) is a single signed product (no top-level sum)."""
        s = str(self)
        return _is_single_term(s) and "(" not in s


# ---------------------------------------------------------------------------
# field utilities


def field_from_name(kind: str, n: int | None = None) -> Field:
    """DSL field names: Q, Qt, cyclotomic N, cyclotomic_t N."""
    if kind == "Q":
        return Rationals()
    if kind == "Qt":
        return RationalFunctions(Rationals())
    if kind == "cyclotomic":
        return Cyclotomic(n)
    if kind == "cyclotomic_t":
        return RationalFunctions(Cyclotomic(n))
    raise ValueError(f"unknown field {kind!r}")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def multiplicative_order(s: Scalar):
    """Least n with s**n == 1, or INFINITE."""
    if s.is_zero():
        raise ZeroDivisionError("order of zero is undefined")
    f = s.field
    if isinstance(f, RationalFunctions):
        if not s.is_constant():
            return INFINITE
        c = Scalar(f.base, s.rep[0][0])
        return multiplicative_order(c)
    if isinstance(f, Rationals):
        bound = 2
    else:
        # roots of unity in Q(z_n) have order dividing lcm(2, n)
        bound = f.n * 2 // gcd(f.n, 2)
    if s**bound != 1:
        return INFINITE
    for d in _divisors(bound):
        if s**d == 1:
            return d
    raise AssertionError("unreachable")
