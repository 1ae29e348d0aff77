"""Exact Gaussian elimination over Q and F_p.

Matrices are numpy arrays in the field's dtype (see :mod:`groupoidal.fields`).
Pivots are exact, so no magnitude heuristics are needed.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fields import Field, Rationals

_INT_SAFE = 2**20


def as_matrix(M, F: Field, ncols: int | None = None) -> np.ndarray:
    A = F.array(M)
    if A.ndim == 1:
        if A.size == 0:
            return F.zeros((0, ncols or 0))
        A = A.reshape(1, -1)
    if A.size == 0 and ncols is not None:
        return F.zeros((A.shape[0], ncols))
    return A


def _dedupe_rows(A: np.ndarray) -> np.ndarray:
    seen = {}
    for row in A:
        key = tuple(row.tolist())
        if key not in seen and any(x != 0 for x in key):
            seen[key] = row
    if not seen:
        return A[:0]
    return np.array(list(seen.values()), dtype=A.dtype)


def rref(M, F: Field, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    A = as_matrix(M, F, ncols).copy()
    n = A.shape[1]
    if A.shape[0] > n:
        A = _dedupe_rows(A)
        if A.shape[0] == 0:
            return F.zeros((0, n)), []
    nrows = A.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.reduce(A[r] * F.inv(A[r, c]))
        others = np.nonzero(A[:, c] != 0)[0]
        others = others[others != r]
        if len(others):
            A[others] = F.reduce(A[others] - np.outer(A[others, c], A[r]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, F: Field) -> int:
    return len(rref(M, F)[1])


def nullspace(M, F: Field, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : M x = 0}``."""
    A = as_matrix(M, F, ncols)
    n = A.shape[1]
    R, pivots = rref(A, F)
    free = [c for c in range(n) if c not in set(pivots)]
    out = F.zeros((len(free), n))
    for k, f in enumerate(free):
        out[k, f] = F.scalar(1)
        for j, pc in enumerate(pivots):
            out[k, pc] = F.reduce(-R[j, f])
    return out


def row_basis(rows, F: Field, n: int) -> np.ndarray:
    """RREF basis of the span of ``rows``."""
    A = as_matrix(rows, F, n)
    if A.shape[0] == 0:
        return F.zeros((0, n))
    return rref(A, F)[0]


def reduce_vector(R: np.ndarray, pivots, v, F: Field) -> np.ndarray:
    """Remainder of ``v`` modulo the span of the RREF rows ``R``."""
    v = F.array(v).copy()
    for j, pc in enumerate(pivots):
        if v[pc] != 0:
            v = F.reduce(v - v[pc] * R[j])
    return v


def in_span(rows, v, F: Field) -> bool:
    R, piv = rref(as_matrix(rows, F, len(v)), F)
    return not np.any(reduce_vector(R, piv, v, F) != 0)


def span_contains(big, small, F: Field, n: int) -> bool:
    R, piv = rref(as_matrix(big, F, n), F)
    return all(not np.any(reduce_vector(R, piv, v, F) != 0) for v in as_matrix(small, F, n))


def solve(M, b, F: Field):
    """One solution ``x`` of ``M x = b`` or ``None``."""
    A = as_matrix(M, F)
    b = F.array(b).reshape(-1, 1)
    n = A.shape[1]
    aug = np.concatenate([A, b], axis=1)
    R, pivots = rref(aug, F)
    if n in pivots:
        return None
    x = F.zeros(n)
    for j, pc in enumerate(pivots):
        x[pc] = R[j, n]
    return x


def coordinates(basis, v, F: Field):
    """Coefficients ``c`` with ``c @ basis == v``, or ``None``."""
    B = as_matrix(basis, F, len(v))
    if B.shape[0] == 0:
        return F.zeros(0) if not np.any(F.array(v) != 0) else None
    return solve(B.T, v, F)


def complement_columns(R: np.ndarray, pivots, n: int) -> list[int]:
    """Standard basis columns spanning a complement of ``rowspace(R)``."""
    ps = set(pivots)
    return [c for c in range(n) if c not in ps]


def intersect(U, V, F: Field, n: int) -> np.ndarray:
    """Basis of ``span(U) ∩ span(V)``."""
    U = row_basis(U, F, n)
    V = row_basis(V, F, n)
    if U.shape[0] == 0 or V.shape[0] == 0:
        return F.zeros((0, n))
    # a @ U = b @ V  <=>  [U; -V]^T [a; b] = 0
    stacked = np.concatenate([U, F.reduce(-V)], axis=0).T
    sol = nullspace(stacked, F)
    if sol.shape[0] == 0:
        return F.zeros((0, n))
    return row_basis(matmul(sol[:, : U.shape[0]], U, F), F, n)


def _integral(A: np.ndarray) -> bool:
    return all(x.denominator == 1 and -_INT_SAFE < x.numerator < _INT_SAFE for x in A.flat)


def matmul(A, B, F: Field) -> np.ndarray:
    """Exact product; integral rational matrices take a machine-integer path."""
    if isinstance(F, Rationals) and A.size and B.size and _integral(A) and _integral(B):
        Ai = np.array([x.numerator for x in A.flat], dtype=np.int64).reshape(A.shape)
        Bi = np.array([x.numerator for x in B.flat], dtype=np.int64).reshape(B.shape)
        k = A.shape[-1]
        if k * _INT_SAFE * _INT_SAFE < 2**62:
            return F.array(Ai @ Bi)
    return F.reduce(A @ B)


def inverse(M, F: Field):
    A = as_matrix(M, F)
    n = A.shape[0]
    if A.shape != (n, n):
        return None
    R, pivots = rref(np.concatenate([A, F.eye(n)], axis=1), F)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return R[:n, n:]


def is_zero(a) -> bool:
    return not np.any(np.asarray(a) != 0)


def as_fraction_list(v) -> list:
    return [x if isinstance(x, Fraction) else int(x) for x in np.asarray(v).ravel()]


class Span:
    """Incrementally grown subspace kept in row echelon form.

    ``add`` reduces a vector against the stored rows (pivot order) and keeps
    the remainder if it is nonzero.
    """

    def __init__(self, F: Field, n: int):
        self.F = F
        self.n = n
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> np.ndarray:
        v = self.F.array(v).copy()
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != 0:
                v = self.F.reduce(v - c * row)
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        nz = np.nonzero(v != 0)[0]
        if len(nz) == 0:
            return False
        pc = int(nz[0])
        v = self.F.reduce(v * self.F.inv(v[pc]))
        k = int(np.searchsorted(self.pivots, pc))
        self.rows.insert(k, v)
        self.pivots.insert(k, pc)
        return True

    def contains(self, v) -> bool:
        return is_zero(self.reduce(v))

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return self.F.zeros((0, self.n))
        return np.array(self.rows, dtype=self.rows[0].dtype)

    def basis(self) -> np.ndarray:
        """Reduced row echelon basis."""
        return row_basis(self.matrix(), self.F, self.n)
