"""Exact linear algebra over QQ, on top of sympy's DomainMatrix."""

from __future__ import annotations

from typing import Sequence

from gmpy2 import mpq
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = ["qmatrix", "rank", "nullspace", "solve", "to_rows", "column_coords"]


def _qq(c):
    return QQ.convert(mpq(c))


def qmatrix(rows: Sequence[Sequence], nrows: int | None = None, ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if nrows is None:
        nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix([[_qq(c) for c in r] for r in rows], (nrows, ncols), QQ)


def zeros(n: int, m: int) -> DomainMatrix:
    return DomainMatrix.zeros((n, m), QQ)


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return m.rank()


def nullspace(m: DomainMatrix) -> DomainMatrix:
    """Columns form a basis of the kernel (shape ``ncols x k``)."""
    n = m.shape[1]
    if m.shape[0] == 0:
        return DomainMatrix.eye(n, QQ)
    if n == 0:
        return zeros(0, 0)
    ns = m.nullspace()
    if ns.shape[0] == 0:
        return zeros(n, 0)
    return ns.transpose()


def solve(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix | None:
    """One solution of ``a x = b`` (free variables set to 0), or ``None``."""
    n = a.shape[1]
    aug = a.hstack(b)
    red, pivots = aug.rref()
    if any(p >= n for p in pivots):
        return None
    rows = red.to_list()
    x = [[QQ.zero] * b.shape[1] for _ in range(n)]
    for r, p in enumerate(pivots):
        for j in range(b.shape[1]):
            x[p][j] = rows[r][n + j]
    return DomainMatrix(x, (n, b.shape[1]), QQ)


def column_coords(basis: DomainMatrix, v: DomainMatrix) -> DomainMatrix | None:
    """Coordinates of the columns of ``v`` in the column basis ``basis``."""
    return solve(basis, v)


def to_rows(m: DomainMatrix) -> list[list[mpq]]:
    return [[mpq(c) for c in row] for row in m.to_list()]
