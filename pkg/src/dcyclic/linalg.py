"""Dense matrices over F_p backed by int64 numpy arrays."""
from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DimensionError, TooLargeError
from .field import FieldCtx

DEFAULT_CAP = 10**7


class FqMatrix:
    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: FieldCtx, entries, cols=None):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {arr.shape}")
        self.ctx = ctx
        self.entries = arr % ctx.p

    @classmethod
    def empty(cls, ctx, cols):
        return cls(ctx, np.zeros((0, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx, size):
        return cls(ctx, np.eye(size, dtype=np.int64))

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def T(self):
        return FqMatrix(self.ctx, self.entries.T)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError(f"{self.shape} @ {other.shape}")
        return FqMatrix(self.ctx, self.entries @ other.entries)

    def __eq__(self, other):
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self.entries, other.entries)

    def is_zero(self):
        return not self.entries.any()

    def tolist(self):
        return self.entries.tolist()

    def render(self):
        return "\n".join(" ".join(str(int(v)) for v in row) for row in self.entries)

    def __repr__(self):
        return f"FqMatrix[{self.ctx.p}]{self.shape}"


def _arr(m):
    return m.entries if isinstance(m, FqMatrix) else np.asarray(m, dtype=np.int64)


def rref(M: FqMatrix):
    """(RREF matrix, pivot columns) with zero rows dropped."""
    red, pivots = kernels.rref(_arr(M), M.ctx.p)
    return FqMatrix(M.ctx, red[: len(pivots)], cols=M.cols), list(pivots)


def rank(M: FqMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(kernels.rref(M.entries, M.ctx.p)[1])


def nullspace(M: FqMatrix) -> FqMatrix:
    """Basis (as rows) of {x : M x^T = 0}."""
    p = M.ctx.p
    cols = M.cols
    if M.rows == 0:
        return FqMatrix.identity(M.ctx, cols)
    red, pivots = kernels.rref(M.entries, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for r, f in enumerate(free):
        basis[r, f] = 1
        for i, pc in enumerate(pivots):
            basis[r, pc] = -red[i, f] % p
    return FqMatrix(M.ctx, basis, cols=cols)


def left_nullspace(M: FqMatrix) -> FqMatrix:
    """Basis of {y : y M = 0}."""
    return nullspace(M.T)


def vstack(ctx, mats, cols):
    arrs = [_arr(m) for m in mats if _arr(m).shape[0]]
    if not arrs:
        return FqMatrix.empty(ctx, cols)
    return FqMatrix(ctx, np.vstack(arrs))


def in_rowspace(M: FqMatrix, vec) -> bool:
    vec = np.asarray(vec, dtype=np.int64).reshape(1, -1)
    if vec.shape[1] != M.cols:
        raise DimensionError(f"vector length {vec.shape[1]} vs {M.cols} columns")
    if not (vec % M.ctx.p).any():
        return True
    return rank(vstack(M.ctx, [M, vec], M.cols)) == rank(M)


def rowspace_equal(A: FqMatrix, B: FqMatrix) -> bool:
    if A.cols != B.cols:
        return False
    ra, rb = rank(A), rank(B)
    return ra == rb and rank(vstack(A.ctx, [A, B], A.cols)) == ra


def rowspace_contains(A: FqMatrix, B: FqMatrix) -> bool:
    """Row space of B is inside the row space of A."""
    return rank(vstack(A.ctx, [A, B], A.cols)) == rank(A)


def check_cap(q, dim, cap):
    required = q**dim
    if required > cap:
        raise TooLargeError(required, cap)
    return required


def span_vectors(M: FqMatrix, cap=DEFAULT_CAP):
    """All distinct vectors of the row space as an array."""
    basis, _ = rref(M)
    check_cap(M.ctx.p, basis.rows, cap)
    return kernels.span_all(basis.entries, M.ctx.p)


def min_distance(M: FqMatrix, cap=DEFAULT_CAP):
    """Minimum weight of a nonzero row-space vector, or None for the zero space."""
    basis, _ = rref(M)
    check_cap(M.ctx.p, basis.rows, cap)
    if basis.rows == 0:
        return None
    return int(kernels.min_weight(basis.entries, M.ctx.p))
