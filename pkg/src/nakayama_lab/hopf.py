"""
Finite-dimensional Hopf algebras given by structure constants.

Linear maps K -> K are stored as row matrices: ``m[i]`` is the coefficient
vector of the image of the i-th basis element.  Tensors in K (x) K are sparse
dicts ``(i, j) -> Scalar``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .expr import ExprSyntaxError, parse_expression
from .linalg import SingularMatrixError, echelon, identity, inverse, mat_equal, mat_mul, nullspace, reduce_by
from .roots import charpoly, roots_in_field
from .scalars import Field, Rationals, Scalar, field_from_name, multiplicative_order

GROUPLIKE_SEARCH_CAP = 16


class HopfError(ValueError):
    pass


class NotGrouplikeError(HopfError):
    pass


class GrouplikeSearchError(HopfError):
    pass


# ---------------------------------------------------------------------------
# the algebra


class HopfAlgebra:
    def __init__(self, field: Field, labels, mult, unit, comult, counit, antipode,
                 grouplike_flags=None, name=None):
        self.field = field
        self.labels = list(labels)
        n = len(self.labels)
        self.mult = [[{k: c for k, c in mult[i][j].items() if not c.is_zero()} for j in range(n)] for i in range(n)]
        self.unit = list(unit)
        self.comult = [[(j, k, c) for j, k, c in terms if not c.is_zero()] for terms in comult]
        self.counit = list(counit)
        self.antipode = [list(row) for row in antipode]
        self.grouplike_flags = tuple(grouplike_flags) if grouplike_flags else ()
        self.name = name or "K"
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if not (len(self.unit) == len(self.counit) == len(self.antipode) == len(self.comult) == n):
            raise HopfError("structure constants have inconsistent sizes")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"

    # -- elements -------------------------------------------------------------
    def element(self, vec) -> "HopfElement":
        return HopfElement(self, tuple(self.field(x) for x in vec))

    def basis(self, i: int) -> "HopfElement":
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return HopfElement(self, tuple(v))

    def one(self) -> "HopfElement":
        return HopfElement(self, tuple(self.unit))

    def zero(self) -> "HopfElement":
        return HopfElement(self, tuple([self.field.zero] * self.dim))

    def __getitem__(self, label: str) -> "HopfElement":
        return self.basis(self._index[label])

    def __call__(self, value) -> "HopfElement":
        if isinstance(value, HopfElement):
            if value.parent is not self:
                raise HopfError("element of a different Hopf algebra")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.one() * self.field(value)

    def parse(self, text: str) -> "HopfElement":
        """Parse a combination of basis labels, e.g. ``g^2*x - 3*g``."""
        text = text.strip()
        if text in self._index:
            return self.basis(self._index[text])

        def resolve(name, pos):
            if name in self._index:
                return self.basis(self._index[name])
            raise ExprSyntaxError(f"unknown basis element {name!r}", pos)

        value = parse_expression(text, self.field, resolve)
        return self(value)

    # -- raw vector operations ------------------------------------------------
    def _mul(self, u, v):
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in self.mult[i][j].items():
                    out[k] = out[k] + ab * c
        return out

    def _delta(self, u):
        out = {}
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, k, c in self.comult[i]:
                out[j, k] = out[j, k] + a * c if (j, k) in out else a * c
        return {key: c for key, c in out.items() if not c.is_zero()}

    def _eps(self, u):
        total = self.field.zero
        for a, e in zip(u, self.counit):
            if not a.is_zero() and not e.is_zero():
                total = total + a * e
        return total

    def _apply(self, m, u):
        out = [self.field.zero] * len(m[0]) if m else []
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for k, c in enumerate(m[i]):
                if not c.is_zero():
                    out[k] = out[k] + a * c
        return out

    def _S(self, u):
        return self._apply(self.antipode, u)

    def tensor(self, u: "HopfElement", v: "HopfElement"):
        return {(i, j): a * b for i, a in enumerate(u.vec) for j, b in enumerate(v.vec)
                if not a.is_zero() and not b.is_zero()}

    def tensor_mul(self, s, t):
        """Product in K (x) K of sparse tensors."""
        out = {}
        for (i, j), a in s.items():
            for (k, l), b in t.items():
                ab = a * b
                for p, c in self.mult[i][k].items():
                    for q, d in self.mult[j][l].items():
                        key = (p, q)
                        val = ab * c * d
                        out[key] = out[key] + val if key in out else val
        return {key: c for key, c in out.items() if not c.is_zero()}

    # -- serialisation --------------------------------------------------------
    def to_json(self) -> dict:
        s = lambda x: str(x)  # noqa: E731
        n = self.dim
        return {
            "field": self.field.describe(),
            "dim": n,
            "basis": list(self.labels),
            "mult": [[[s(self.mult[i][j].get(k, self.field.zero)) for k in range(n)] for j in range(n)] for i in range(n)],
            "unit": [s(x) for x in self.unit],
            "comult": [[[j, k, s(c)] for j, k, c in self.comult[i]] for i in range(n)],
            "counit": [s(x) for x in self.counit],
            "antipode": [[s(x) for x in row] for row in self.antipode],
            "grouplike_flags": list(self.grouplike_flags),
        }

    @classmethod
    def from_json(cls, data: dict, field: Field | None = None, name: str | None = None) -> "HopfAlgebra":
        if field is None:
            kind = data.get("field", "Q").split()
            field = field_from_name(kind[0], int(kind[1]) if len(kind) > 1 else None)
        f = lambda x: field(x if not isinstance(x, float) else Fraction(x))  # noqa: E731
        n = data["dim"]
        labels = data.get("basis") or [f"e{i}" for i in range(n)]
        _check_shapes(data, n)
        mult = [[{k: f(c) for k, c in enumerate(data["mult"][i][j])} for j in range(n)] for i in range(n)]
        comult = [[(int(j), int(k), f(c)) for j, k, c in data["comult"][i]] for i in range(n)]
        K = cls(field, labels, mult, [f(x) for x in data["unit"]], comult, [f(x) for x in data["counit"]],
                [[f(x) for x in row] for row in data["antipode"]], data.get("grouplike_flags"), name)
        if len(labels) != n or len(K.mult) != n:
            raise HopfError("structure constants do not match dim")
        return K

    @classmethod
    def load(cls, path, field: Field | None = None, name: str | None = None) -> "HopfAlgebra":
        with open(path) as fh:
            return cls.from_json(json.load(fh), field, name)


def _check_shapes(data: dict, n: int):
    """Reject structure-constant files whose arrays do not match ``dim``."""
    def bad(what):
        raise HopfError(f"malformed structure constants: {what} has the wrong length")

    if not isinstance(n, int) or n < 1:
        raise HopfError("malformed structure constants: dim must be a positive integer")
    for key in ("unit", "counit"):
        if len(data[key]) != n:
            bad(key)
    if len(data["mult"]) != n or any(len(row) != n or any(len(v) != n for v in row) for row in data["mult"]):
        bad("mult")
    if len(data["antipode"]) != n or any(len(row) != n for row in data["antipode"]):
        bad("antipode")
    if len(data["comult"]) != n:
        bad("comult")
    for terms in data["comult"]:
        for entry in terms:
            if len(entry) != 3 or not all(0 <= int(i) < n for i in entry[:2]):
                raise HopfError("malformed structure constants: comult entry out of range")
    if "basis" in data and len(data["basis"]) != n:
        bad("basis")


class HopfElement:
    __slots__ = ("parent", "vec")

    def __init__(self, parent: HopfAlgebra, vec):
        self.parent = parent
        self.vec = tuple(vec)

    def _lift(self, other):
        if isinstance(other, HopfElement):
            if other.parent is not self.parent:
                raise HopfError("elements of different Hopf algebras")
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return self.parent.one() * self.parent.field(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return HopfElement(self.parent, (a + b for a, b in zip(self.vec, other.vec)))

    __radd__ = __add__

    def __neg__(self):
        return HopfElement(self.parent, (-a for a in self.vec))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            c = self.parent.field(other)
            return HopfElement(self.parent, (a * c for a in self.vec))
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return HopfElement(self.parent, self.parent._mul(self.vec, other.vec))

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, HopfElement):
            return self.parent is other.parent and self.vec == other.vec
        if isinstance(other, (Scalar, int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.vec)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.vec)

    def S(self) -> "HopfElement":
        return HopfElement(self.parent, self.parent._S(self.vec))

    def eps(self) -> Scalar:
        return self.parent._eps(self.vec)

    def delta(self) -> dict:
        return self.parent._delta(self.vec)

    def coefficient(self, label: str) -> Scalar:
        return self.vec[self.parent._index[label]]

    def inverse(self) -> "HopfElement":
        """Two-sided inverse by solving u*v = 1 (raises if not a unit)."""
        K = self.parent
        left = [K._mul(self.vec, K.basis(j).vec) for j in range(K.dim)]
        try:
            inv = inverse(left)
        except SingularMatrixError as exc:
            raise HopfError(f"{self} is not invertible") from exc
        v = HopfElement(K, K._apply(inv, K.unit))
        assert v * self == K.one()
        return v

    def is_grouplike(self) -> bool:
        return self.eps() == 1 and self.delta() == self.parent.tensor(self, self)

    def __str__(self):
        parts = []
        for lab, c in zip(self.parent.labels, self.vec):
            if c.is_zero():
                continue
            if lab == "1":
                parts.append(str(c) if c.is_monomial_literal() else f"({c})")
            elif c == 1:
                parts.append(lab)
            elif c == -1:
                parts.append("-" + lab)
            elif c.is_monomial_literal():
                parts.append(f"{c}*{lab}")
            else:
                parts.append(f"({c})*{lab}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"HopfElement({self})"


# ---------------------------------------------------------------------------
# axioms


@dataclass
class AxiomCheck:
    passed: bool
    witness: str | None = None


@dataclass
class HopfReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def to_json(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "checks": {k: {"passed": c.passed, "witness": c.witness} for k, c in self.checks.items()},
        }


def hopf_verify(K: HopfAlgebra) -> HopfReport:
    rep = HopfReport()
    n, fld = K.dim, K.field
    e = [K.basis(i).vec for i in range(n)]
    unit = list(K.unit)

    def first(pred, items):
        for it in items:
            if not pred(*it):
                return it
        return None

    bad = first(lambda i, j, k: K._mul(K._mul(e[i], e[j]), e[k]) == K._mul(e[i], K._mul(e[j], e[k])),
                product(range(n), repeat=3))
    rep.checks["associativity"] = AxiomCheck(bad is None, _lbl(K, bad))
    bad = first(lambda i: K._mul(unit, e[i]) == list(e[i]) == K._mul(e[i], unit), ((i,) for i in range(n)))
    rep.checks["unit"] = AxiomCheck(bad is None, _lbl(K, bad))

    def coassoc(i):
        left, right = {}, {}
        for j, k, c in K.comult[i]:
            for a, b, d in K.comult[j]:
                left[a, b, k] = left.get((a, b, k), fld.zero) + c * d
            for a, b, d in K.comult[k]:
                right[j, a, b] = right.get((j, a, b), fld.zero) + c * d
        strip = lambda t: {key: v for key, v in t.items() if not v.is_zero()}  # noqa: E731
        return strip(left) == strip(right)

    bad = first(coassoc, ((i,) for i in range(n)))
    rep.checks["coassociativity"] = AxiomCheck(bad is None, _lbl(K, bad))

    def counit(i):
        left = [fld.zero] * n
        right = [fld.zero] * n
        for j, k, c in K.comult[i]:
            left[k] = left[k] + K.counit[j] * c
            right[j] = right[j] + K.counit[k] * c
        return left == list(e[i]) == right

    bad = first(counit, ((i,) for i in range(n)))
    rep.checks["counit"] = AxiomCheck(bad is None, _lbl(K, bad))

    def delta_mult(i, j):
        return K._delta(K._mul(e[i], e[j])) == K.tensor_mul(K._delta(e[i]), K._delta(e[j]))

    bad = first(delta_mult, product(range(n), repeat=2))
    ok_unit = K._delta(unit) == K.tensor(K.one(), K.one())
    rep.checks["comult_multiplicative"] = AxiomCheck(bad is None and ok_unit, _lbl(K, bad) if bad else (None if ok_unit else "1"))
    bad = first(lambda i, j: K._eps(K._mul(e[i], e[j])) == K.counit[i] * K.counit[j], product(range(n), repeat=2))
    ok_unit = K._eps(unit) == 1
    rep.checks["counit_multiplicative"] = AxiomCheck(bad is None and ok_unit, _lbl(K, bad) if bad else (None if ok_unit else "1"))

    def antipode(i):
        left = [fld.zero] * n
        right = [fld.zero] * n
        for j, k, c in K.comult[i]:
            left = [x + c * y for x, y in zip(left, K._mul(K.antipode[j], e[k]))]
            right = [x + c * y for x, y in zip(right, K._mul(e[j], K.antipode[k]))]
        target = [K.counit[i] * u for u in unit]
        return left == target == right

    bad = first(antipode, ((i,) for i in range(n)))
    rep.checks["antipode"] = AxiomCheck(bad is None, _lbl(K, bad))
    try:
        inverse(K.antipode)
        rep.checks["antipode_invertible"] = AxiomCheck(True)
    except SingularMatrixError:
        rep.checks["antipode_invertible"] = AxiomCheck(False, "S is singular")
    return rep


def _lbl(K, idx):
    if idx is None:
        return None
    return ",".join(K.labels[i] for i in idx)


# ---------------------------------------------------------------------------
# builtins


def _structure_from_basis(field, labels, products, delta, eps, S, flags=None, name=None):
    """Assemble a HopfAlgebra from callables on basis indices."""
    n = len(labels)
    mult = [[products(i, j) for j in range(n)] for i in range(n)]
    unit = [field.one if i == 0 else field.zero for i in range(n)]
    comult = [delta(i) for i in range(n)]
    counit = [eps(i) for i in range(n)]
    antipode = [S(i) for i in range(n)]
    return HopfAlgebra(field, labels, mult, unit, comult, counit, antipode, flags, name)


def _power_label(gen, k):
    return "1" if k == 0 else gen if k == 1 else f"{gen}^{k}"


def group_algebra(field: Field, n: int | None = None, table=None, labels=None, name=None) -> HopfAlgebra:
    """k[G] for the cyclic group C_n, or for a Cayley table (identity at index 0)."""
    if table is None:
        if n is None or n < 1:
            raise HopfError("group_algebra needs a positive order")
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        labels = [_power_label("g", k) for k in range(n)]
        name = name or f"k[C{n}]"
    m = len(table)
    labels = labels or (["1"] + [f"g{k}" for k in range(1, m)])
    if any(table[0][a] != a or table[a][0] != a for a in range(m)):
        raise HopfError("index 0 must be the identity of the Cayley table")
    inv = []
    for a in range(m):
        b = [b for b in range(m) if table[a][b] == 0]
        if len(b) != 1:
            raise HopfError("Cayley table is not a group")
        inv.append(b[0])
    one = field.one
    vec = lambda k: [one if i == k else field.zero for i in range(m)]  # noqa: E731
    return _structure_from_basis(
        field, labels,
        lambda i, j: {table[i][j]: one},
        lambda i: [(i, i, one)],
        lambda i: one,
        lambda i: vec(inv[i]),
        flags=range(m), name=name or "k[G]",
    )


def product_group_algebra(field: Field, orders, gens=None) -> HopfAlgebra:
    """k[C_{n1} x ... x C_{nr}], basis labelled by monomials in named generators."""
    orders = list(orders)
    gens = gens or (["g", "h", "k"][: len(orders)] if len(orders) <= 3 else [f"g{i + 1}" for i in range(len(orders))])
    elems = list(product(*[range(o) for o in orders]))
    # order: identity first, then by total exponent (lexicographic tiebreak)
    elems.sort(key=lambda e: (sum(1 for x in e if x), e[::-1]))
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[tuple((x + y) % o for x, y, o in zip(a, b, orders))] for b in elems] for a in elems]
    labels = []
    for e in elems:
        parts = [_power_label(g, x) for g, x in zip(gens, e) if x]
        labels.append("*".join(parts) if parts else "1")
    name = "k[" + " x ".join(f"C{o}" for o in orders) + "]"
    return group_algebra(field, table=table, labels=labels, name=name)


def dual_group_algebra(field: Field, n: int) -> HopfAlgebra:
    """k^{C_n}: functions on C_n with basis of point indicators p0..p{n-1}."""
    one, zero = field.one, field.zero
    vec = lambda k: [one if i == k else zero for i in range(n)]  # noqa: E731
    return HopfAlgebra(
        field,
        [f"p{a}" for a in range(n)],
        [[{i: one} if i == j else {} for j in range(n)] for i in range(n)],
        [one] * n,
        [[(a, (c - a) % n, one) for a in range(n)] for c in range(n)],
        [one if a == 0 else zero for a in range(n)],
        [vec((-a) % n) for a in range(n)],
        name=f"k^C{n}",
    )


def taft(n: int, q: Scalar, name=None) -> HopfAlgebra:
    """Taft algebra: g^n = 1, x^n = 0, x*g = q*g*x, Delta(x) = x(x)1 + g(x)x."""
    field = q.field
    if n < 2 or multiplicative_order(q) != n:
        raise HopfError(f"taft({n}, {q}) needs q a primitive {n}-th root of unity")
    dim = n * n
    idx = lambda a, b: (a % n) + n * b  # noqa: E731 - basis element g^a x^b
    labels = []
    for b in range(n):
        for a in range(n):
            g = _power_label("g", a)
            x = _power_label("x", b)
            labels.append(g if b == 0 else x if a == 0 else f"{g}*{x}")
    qpow = [q**k for k in range(n)]

    def products(i, j):
        a, b = i % n, i // n
        c, d = j % n, j // n
        if b + d >= n:
            return {}
        return {idx(a + c, b + d): qpow[(b * c) % n]}

    mult = [[products(i, j) for j in range(dim)] for i in range(dim)]
    K0 = HopfAlgebra(field, labels, mult, [field.one] + [field.zero] * (dim - 1),
                     [[] for _ in range(dim)], [field.zero] * dim, identity(field, dim))
    g, x = K0.basis(idx(1, 0)), K0.basis(idx(0, 1))
    one = K0.one()
    dg = K0.tensor(g, g)
    dx = {**K0.tensor(x, one)}
    for key, c in K0.tensor(g, x).items():
        dx[key] = dx[key] + c if key in dx else c
    comult, antipode = [], []
    g_inv = g ** (n - 1)
    s_g, s_x = g_inv, -(g_inv * x)
    for i in range(dim):
        a, b = i % n, i // n
        t = K0.tensor(one, one)
        for _ in range(a):
            t = K0.tensor_mul(t, dg)
        for _ in range(b):
            t = K0.tensor_mul(t, dx)
        comult.append([(j, k, c) for (j, k), c in sorted(t.items())])
        # S(g^a x^b) = S(x)^b S(g)^a
        antipode.append(list((s_x**b * s_g**a).vec))
    counit = [field.one if i // n == 0 else field.zero for i in range(dim)]
    return HopfAlgebra(field, labels, mult, K0.unit, comult, counit, antipode,
                       grouplike_flags=[idx(a, 0) for a in range(n)], name=name or f"Taft({n})")


def sweedler(field: Field | None = None) -> HopfAlgebra:
    """Sweedler's 4-dimensional algebra, taft(2, -1); basis 1, g, x, g*x."""
    field = field or Rationals()
    return taft(2, field(-1), name="Sweedler")


# ---------------------------------------------------------------------------
# grouplikes, antipode powers, conjugation, closures


@dataclass
class Grouplike:
    element: HopfElement
    order: int


def _left_translation_ops(K: HopfAlgebra):
    """L_i = (e_i^* (x) id) Delta as column matrices (L_i[k][m])."""
    n = K.dim
    ops = [[[K.field.zero] * n for _ in range(n)] for _ in range(n)]
    for m in range(n):
        for j, k, c in K.comult[m]:
            ops[j][k][m] = ops[j][k][m] + c
    return ops


def _intersect(space, kernel, field, n):
    """Intersection of two subspaces given by spanning column lists."""
    if not space or not kernel:
        return []
    # solve sum a_s space_s = sum b_t kernel_t
    cols = space + [[-x for x in v] for v in kernel]
    m = [[col[r] for col in cols] for r in range(n)]
    sols = nullspace(m, len(cols), field)
    out = []
    for s in sols:
        v = [field.zero] * n
        for a, col in zip(s[: len(space)], space):
            if not a.is_zero():
                v = [x + a * y for x, y in zip(v, col)]
        out.append(v)
    rows = echelon([{i: x for i, x in enumerate(v) if not x.is_zero()} for v in out])
    return [[r.get(i, field.zero) for i in range(n)] for r in rows]


def _find_grouplikes(K: HopfAlgebra):
    n, fld = K.dim, K.field
    ops = _left_translation_ops(K)
    roots_cache = {}

    def eigen(i):
        if i not in roots_cache:
            roots_cache[i] = roots_in_field(charpoly(ops[i], fld), fld)
        return roots_cache[i]

    found = []

    def finish(space):
        for w in space if len(space) == 1 else []:
            e = K._eps(w)
            if e.is_zero():
                continue
            v = K.element([x * e.inverse() for x in w])
            if v.is_grouplike():
                found.append(v)

    def recurse(i, space):
        if not space:
            return
        if len(space) == 1 or i == n:
            if len(space) > 1:
                raise AssertionError("grouplike eigenspace did not split")
            finish(space)
            return
        for lam in eigen(i):
            shifted = [[ops[i][r][c] - (lam if r == c else fld.zero) for c in range(n)] for r in range(n)]
            recurse(i + 1, _intersect(space, nullspace(shifted, n, fld), fld, n))

    recurse(0, identity(fld, n))
    return found


def grouplikes(K: HopfAlgebra) -> list[Grouplike]:
    """All grouplike elements with their orders, ordered by basis support."""
    if K.dim <= GROUPLIKE_SEARCH_CAP:
        elems = _find_grouplikes(K)
    elif K.grouplike_flags:
        elems = [K.basis(i) for i in K.grouplike_flags if K.basis(i).is_grouplike()]
    else:
        raise GrouplikeSearchError(f"dimension {K.dim} above the search cap without grouplike flags")
    out = []
    for g in elems:
        assert g.is_grouplike()
        out.append(Grouplike(g, element_order(g)))
    out.sort(key=lambda gl: [i for i, x in enumerate(gl.element.vec) if not x.is_zero()])
    return out


def element_order(g: HopfElement, bound: int | None = None) -> int:
    K = g.parent
    bound = bound or 2 * K.dim
    p = g
    for k in range(1, bound + 1):
        if p == K.one():
            return k
        p = p * g
    raise HopfError(f"{g} has no finite order up to {bound}")


def map_power_order(m, bound: int):
    """Least k >= 1 with m^k = I (row-matrix convention)."""
    fld = m[0][0].field
    ident = identity(fld, len(m))
    p = m
    for k in range(1, bound + 1):
        if mat_equal(p, ident):
            return k
        p = mat_mul(p, m)
    return None


def s_squared(K: HopfAlgebra):
    """Matrix of S o S and its order (bounded by 4 * dim)."""
    s2 = mat_mul(K.antipode, K.antipode)
    order = map_power_order(s2, 4 * K.dim)
    if order is None:
        raise HopfError("S^2 has no finite order within 4*dim")
    return s2, order


def conj_auto(K: HopfAlgebra, g: HopfElement):
    """Matrix of a -> g^-1 a g, verified to be a Hopf automorphism."""
    if not g.is_grouplike():
        raise NotGrouplikeError(f"{g} is not grouplike")
    g_inv = g.S()
    if g * g_inv != K.one():
        raise NotGrouplikeError("g * S(g) != 1")
    m = [list((g_inv * K.basis(i) * g).vec) for i in range(K.dim)]
    assert is_hopf_endomorphism(K, m)
    return m


def is_hopf_endomorphism(K: HopfAlgebra, m, basis=None) -> bool:
    """Check that a linear map respects products, unit, Delta, epsilon and S.

    With ``basis`` (a list of vectors spanning a Hopf subalgebra) the checks
    are restricted to that subalgebra.
    """
    n = K.dim
    vecs = basis if basis is not None else [K.basis(i).vec for i in range(n)]
    f = lambda v: K._apply(m, v)  # noqa: E731
    if f(K.unit) != list(K.unit):
        return False
    for u in vecs:
        fu = f(u)
        if K._eps(fu) != K._eps(u):
            return False
        if f(K._S(u)) != K._S(fu):
            return False
        du = K._delta(u)
        image = {}
        for (j, k), c in du.items():
            for a, x in enumerate(m[j]):
                if x.is_zero():
                    continue
                for b, y in enumerate(m[k]):
                    if y.is_zero():
                        continue
                    image[a, b] = image.get((a, b), K.field.zero) + c * x * y
        image = {key: c for key, c in image.items() if not c.is_zero()}
        if image != K._delta(fu):
            return False
        for v in vecs:
            if f(K._mul(u, v)) != K._mul(fu, f(v)):
                return False
    return True


def subalgebra_closure(K: HopfAlgebra, gens):
    """Smallest subspace with 1 and ``gens`` closed under products and S."""
    fld = K.field
    to_row = lambda v: {i: x for i, x in enumerate(v) if not x.is_zero()}  # noqa: E731
    rows = echelon([to_row(K.unit)] + [to_row(g.vec if isinstance(g, HopfElement) else g) for g in gens])
    while True:
        vecs = [[r.get(i, fld.zero) for i in range(K.dim)] for r in rows]
        new = []
        for u in vecs:
            new.append(to_row(K._S(u)))
            for v in vecs:
                new.append(to_row(K._mul(u, v)))
        new = [r for r in (reduce_by(x, rows) for x in new) if r]
        if not new:
            break
        rows = echelon(rows + new)
    basis = [K.element([r.get(i, fld.zero) for i in range(K.dim)]) for r in rows]
    return len(basis), basis


def builtin(name: str, field: Field, *params) -> HopfAlgebra:
    """DSL entry: group_cyclic N, group_product N M.., dual_group N, taft N q, sweedler."""
    if name == "group_cyclic":
        return group_algebra(field, int(params[0]))
    if name == "group_product":
        return product_group_algebra(field, [int(p) for p in params])
    if name == "dual_group":
        return dual_group_algebra(field, int(params[0]))
    if name == "taft":
        q = params[1] if isinstance(params[1], Scalar) else field(params[1])
        return taft(int(params[0]), q)
    if name == "sweedler":
        return taft(2, field(-1), name="Sweedler")
    raise HopfError(f"unknown builtin Hopf algebra {name!r}")
