"""Exact linear algebra over Q(q).

Dense matrices are lists of rows of :class:`~qminkowski.scalars.QFrac`.
Elimination works on sparse rows ({column: value}) because the constraint
systems built elsewhere in the package are mostly zeros.
"""
from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, QFrac

Matrix = list  # list[list[QFrac]]


class SingularMatrixError(ArithmeticError):
    pass


def _size(c: QFrac) -> int:
    return c.num.degree() + c.den.degree() + len(c.num) + len(c.den)


def _sparse(rows: Sequence[Sequence]) -> list[dict]:
    out = []
    for row in rows:
        d = {}
        for j, v in enumerate(row):
            v = QFrac.coerce(v)
            if v:
                d[j] = v
        out.append(d)
    return out


def sparse_rref(rows: list[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of sparse rows; returns (rows, pivot columns)."""
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    reduced: list[dict] = []
    for col in range(ncols):
        cand = [i for i, r in enumerate(rows) if col in r]
        if not cand:
            continue
        best = min(cand, key=lambda i: (len(rows[i]), _size(rows[i][col])))
        prow = rows.pop(best)
        inv = prow[col].inverse()
        prow = {j: v * inv for j, v in prow.items()}
        for i, r in enumerate(rows):
            f = r.get(col)
            if f is None:
                continue
            for j, v in prow.items():
                s = r.get(j, ZERO) - f * v
                if s:
                    r[j] = s
                else:
                    r.pop(j, None)
        rows = [r for r in rows if r]
        for r in reduced:
            f = r.get(col)
            if f is None:
                continue
            for j, v in prow.items():
                s = r.get(j, ZERO) - f * v
                if s:
                    r[j] = s
                else:
                    r.pop(j, None)
        reduced.append(prow)
        pivots.append(col)
    return reduced, pivots


def rank(rows: Sequence[Sequence]) -> int:
    ncols = max((len(r) for r in rows), default=0)
    return len(sparse_rref(_sparse(rows), ncols)[1])


def nullspace_sparse(rows: list[dict], ncols: int) -> list[list[QFrac]]:
    red, piv = sparse_rref(rows, ncols)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(red, piv):
            c = r.get(f)
            if c is not None:
                v[p] = -c
        basis.append(v)
    return basis


def nullspace(A: Sequence[Sequence]) -> list[list[QFrac]]:
    ncols = len(A[0]) if A else 0
    return nullspace_sparse(_sparse(A), ncols)


def solve_sparse(rows: list[dict], rhs: list, ncols: int):
    """One solution of A x = rhs (free variables set to zero), or None."""
    aug = []
    for r, b in zip(rows, rhs):
        d = dict(r)
        b = QFrac.coerce(b)
        if b:
            d[ncols] = b
        aug.append(d)
    red, piv = sparse_rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [ZERO] * ncols
    for r, p in zip(red, piv):
        x[p] = r.get(ncols, ZERO)
    return x


def solve(A: Sequence[Sequence], b: Sequence):
    ncols = len(A[0]) if A else 0
    return solve_sparse(_sparse(A), list(b), ncols)


def inverse(A: Sequence[Sequence]) -> Matrix:
    n = len(A)
    rows = _sparse(A)
    for i, r in enumerate(rows):
        r[n + i] = ONE
    red, piv = sparse_rref(rows, 2 * n)
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [[r.get(n + j, ZERO) for j in range(n)] for r in red[:n]]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    m = len(B[0])
    out = []
    for row in A:
        acc = [ZERO] * m
        for k, a in enumerate(row):
            if not a:
                continue
            for j, b in enumerate(B[k]):
                if b:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Sequence) -> list[QFrac]:
    out = []
    for row in A:
        acc = ZERO
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def kron(A: Matrix, B: Matrix) -> Matrix:
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def madd(A: Matrix, B: Matrix, scale=1) -> Matrix:
    return [[a + b * scale for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mscale(A: Matrix, s) -> Matrix:
    s = QFrac.coerce(s)
    return [[a * s for a in row] for row in A]


def is_zero_matrix(A: Matrix) -> bool:
    return all(not a for row in A for a in row)


def to_qfrac(A: Sequence[Sequence]) -> Matrix:
    return [[QFrac.coerce(a) for a in row] for row in A]
