"""
Exact linear algebra over :mod:`scalars` fields.

Two flavours: sparse rows (``dict key -> Scalar``) reduced to a canonical
echelon form, used for spans of words and Hopf-algebra vectors; and small
dense matrices (lists of lists) for inverses and solves.
"""

from __future__ import annotations

from .scalars import Field, Scalar


class SingularMatrixError(ArithmeticError):
    pass


def echelon(rows, order=None):
    """Fully reduced echelon basis of the span of sparse ``rows``.

    Each returned row is monic at its leading key (the greatest key under
    ``order``), leading keys are distinct, and no row has a nonzero entry at
    another row's leading key.  Rows come back sorted by leading key,
    greatest first, so the result is canonical for the span.
    """
    key = order or (lambda k: k)
    basis: dict = {}  # leading key -> row
    for row in rows:
        row = {k: c for k, c in row.items() if not c.is_zero()}
        # clear every existing pivot column (pivot rows are mutually reduced,
        # so one pass suffices)
        for plead in [k for k in row if k in basis]:
            c = row.get(plead)
            if c is None:
                continue
            for k, v in basis[plead].items():
                nv = row.get(k)
                nv = -(c * v) if nv is None else nv - c * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
        if not row:
            continue
        lead = max(row, key=key)
        inv = row[lead].inverse()
        row = {k: v * inv for k, v in row.items()}
        # clear the new pivot from existing rows
        for other_lead, other in basis.items():
            c = other.get(lead)
            if c is not None:
                for k, v in row.items():
                    nv = other.get(k)
                    nv = -(c * v) if nv is None else nv - c * v
                    if nv.is_zero():
                        other.pop(k, None)
                    else:
                        other[k] = nv
        basis[lead] = row
    leads = sorted(basis, key=key, reverse=True)
    return [basis[k] for k in leads]


def reduce_by(row, basis, order=None):
    """Remainder of ``row`` modulo an echelon ``basis`` (from :func:`echelon`)."""
    key = order or (lambda k: k)
    pivots = {max(b, key=key): b for b in basis}
    row = {k: c for k, c in row.items() if not c.is_zero()}
    for lead, pivot in pivots.items():
        c = row.get(lead)
        if c is None:
            continue
        for k, v in pivot.items():
            nv = row.get(k)
            nv = -(c * v) if nv is None else nv - c * v
            if nv.is_zero():
                row.pop(k, None)
            else:
                row[k] = nv
    return row


# ---------------------------------------------------------------------------
# dense matrices


def identity(field: Field, n: int):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a, b):
    n, k, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for s in range(k):
                x = a[i][s]
                if x.is_zero():
                    continue
                term = x * b[s][j]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else a[i][0].field.zero if a[i] else None)
        out.append(row)
    return out


def mat_scale(m, c):
    return [[x * c for x in row] for row in m]


def mat_equal(a, b) -> bool:
    return len(a) == len(b) and all(
        len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b)
    )


def rank(m) -> int:
    rows = [{j: x for j, x in enumerate(row) if not x.is_zero()} for row in m]
    return len(echelon(rows))


def inverse(m):
    """Inverse of a square matrix by Gauss-Jordan; raises on singular input."""
    n = len(m)
    if n == 0:
        return []
    field = m[0][0].field
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def nullspace(m, ncols: int, field: Field):
    """Basis of {v : m v = 0} as a list of dense vectors."""
    rows = [{j: x for j, x in enumerate(row) if not x.is_zero()} for row in m]
    ech = echelon(rows, order=lambda k: -k)  # pivot on the smallest column
    pivots = {min(r): r for r in ech}
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for p, r in pivots.items():
            c = r.get(free)
            if c is not None:
                v[p] = -c
        basis.append(v)
    return basis


def to_sparse(vec):
    return {i: x for i, x in enumerate(vec) if not x.is_zero()}


def to_dense(row, n: int, field: Field):
    out = [field.zero] * n
    for k, v in row.items():
        out[k] = v
    return out


def is_scalar_matrix(m):
    """Return r if m == r*I, else None."""
    n = len(m)
    if n == 0:
        return None
    r = m[0][0]
    for i in range(n):
        for j in range(n):
            if i == j and m[i][j] != r:
                return None
            if i != j and not m[i][j].is_zero():
                return None
    return r


def format_matrix(m):
    return [[str(x) for x in row] for row in m]


def scalar_matrix(field: Field, rows) -> list[list[Scalar]]:
    """Build a matrix from ints/strings/Scalars."""
    return [[field(x) for x in row] for row in rows]
