"""Generator and parity-check matrices of the component codes, plus counting formulas.

Columns are ordered left block then right block, coefficients ascending.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .code import CodeSpec
from .errors import InvariantViolation
from .linalg import DEFAULT_CAP, FqMatrix, left_nullspace, min_distance, nullspace, rank, rref
from .poly import Poly, poly_gcd

__all__ = [
    "flatten",
    "standardize",
    "parity_check",
    "code_dimension",
    "code_counts",
    "min_distance",
    "rank",
    "nullspace",
]


def flatten(C: CodeSpec):
    """Natural generator matrices (G1, G2, G3) of the three projections."""
    return C.generator_matrices


@dataclass
class StandardizedForm:
    """Column-permuted, row-reduced generator matrix in three row bands.

    ``perm[j]`` is the original column placed at position j. Left columns are
    permuted among themselves, right columns likewise. Band sizes:
    top ``m - deg iota``, middle ``k``, bottom ``n - deg theta - k``; left
    column groups ``(m - deg iota, k, deg iota - k)``, right column groups
    ``(deg theta, k, n - deg theta - k)``.
    """

    m: int
    n: int
    k: int
    deg_iota: int
    deg_theta: int
    perm: list
    matrix: FqMatrix
    blocks: dict = field(default_factory=dict)

    @property
    def row_bands(self):
        return (self.m - self.deg_iota, self.k, self.n - self.deg_theta - self.k)

    @property
    def left_groups(self):
        return (self.m - self.deg_iota, self.k, self.deg_iota - self.k)

    @property
    def right_groups(self):
        return (self.deg_theta, self.k, self.n - self.deg_theta - self.k)


def _eliminate(rows, red, pivots):
    p_rows = rows
    for j, c in enumerate(pivots):
        f = p_rows[:, c].copy()
        p_rows = p_rows - np.outer(f, red[j])
    return p_rows


def standardize(G: FqMatrix, iota: Poly, ell: Poly, theta: Poly, m: int) -> StandardizedForm:
    ctx = G.ctx
    p = ctx.p
    n = G.cols - m
    deg_i = int(iota.degree)
    deg_t = int(theta.degree)
    k = deg_i - int(poly_gcd(iota, ell).degree)
    a_sz = m - deg_i
    d_sz = n - deg_t - k

    basis = rref(G)[0]
    B = basis.entries
    GL = FqMatrix(ctx, B[:, :m], cols=m)
    GR = FqMatrix(ctx, B[:, m:], cols=n)

    # kernel band: rows with zero right block
    Y = left_nullspace(GR)
    K, P1 = rref(FqMatrix(ctx, Y.entries @ B, cols=m + n)) if Y.rows else (FqMatrix.empty(ctx, m + n), [])
    # bottom band: rows with zero left block
    Y2 = left_nullspace(GL)
    Z, P3 = rref(FqMatrix(ctx, Y2.entries @ B, cols=m + n)) if Y2.rows else (FqMatrix.empty(ctx, m + n), [])
    if any(c >= m for c in P1) or any(c < m for c in P3):
        raise InvariantViolation("band pivots landed in the wrong block")
    if len(P1) != a_sz or len(P3) != d_sz:
        raise InvariantViolation(f"band sizes {len(P1)}, {len(P3)} differ from {a_sz}, {d_sz}")

    mid = _eliminate(B.copy(), K.entries, P1) % p
    mid = _eliminate(mid, Z.entries, P3) % p
    # identity on the right block first
    order = list(range(m, m + n)) + list(range(m))
    mid_red, piv = rref(FqMatrix(ctx, mid[:, order], cols=m + n))
    if len(piv) != k or any(c >= n for c in piv):
        raise InvariantViolation(f"middle band has rank {len(piv)} (expected {k}) or pivots outside the right block")
    inv_order = np.argsort(order)
    Mid = mid_red.entries[:, inv_order]
    P2 = [m + c for c in piv]

    rest_left = [c for c in range(m) if c not in P1]
    if k:
        _, pb = rref(FqMatrix(ctx, Mid[:, rest_left], cols=len(rest_left)))
        PB = [rest_left[c] for c in pb]
    else:
        PB = []
    if len(PB) != k:
        raise InvariantViolation("B1 block is not invertible")
    rest_left = [c for c in rest_left if c not in PB]
    rest_right = [c for c in range(m, m + n) if c not in P2 and c not in P3]
    perm = list(P1) + PB + rest_left + rest_right + P2 + list(P3)

    S = np.vstack([K.entries.reshape(-1, m + n), Mid.reshape(-1, m + n), Z.entries.reshape(-1, m + n)])[:, perm] % p
    form = StandardizedForm(m, n, k, deg_i, deg_t, perm, FqMatrix(ctx, S, cols=m + n))
    form.blocks = _extract_blocks(form)
    return form


def _extract_blocks(form: StandardizedForm):
    S = form.matrix.entries
    m = form.m
    ra, rk, rd = form.row_bands
    a, k, b = form.left_groups
    c, _, d = form.right_groups
    top, mid, bot = S[:ra], S[ra : ra + rk], S[ra + rk :]
    L, R = slice(0, m), slice(m, None)

    def ident(block, size):
        return block.shape == (size, size) and np.array_equal(block, np.eye(size, dtype=np.int64))

    checks = [
        ident(top[:, :a], a),
        not top[:, R].any(),
        not mid[:, :a].any(),
        ident(mid[:, R][:, c : c + k], k),
        not mid[:, R][:, c + k :].any(),
        not bot[:, L].any(),
        ident(bot[:, R][:, c + k :], d),
    ]
    B1 = mid[:, a : a + k]
    checks.append(rank(FqMatrix(form.matrix.ctx, B1, cols=k)) == k)
    if not all(checks):
        raise InvariantViolation(f"standardized shape check failed: {checks}")
    return {
        "A1": top[:, a : a + k],
        "A2": top[:, a + k : m],
        "B1": B1,
        "B2": mid[:, a + k : m],
        "B3": mid[:, R][:, :c],
        "M1": bot[:, R][:, :c],
        "M2": bot[:, R][:, c : c + k],
    }


def is_standard_shape(form: StandardizedForm) -> bool:
    try:
        _extract_blocks(form)
    except InvariantViolation:
        return False
    return True


def standardized_parity_check(form: StandardizedForm, signed=True) -> FqMatrix:
    """Parity-check matrix in the permuted column order.

    ``signed=False`` gives the all-plus block pattern, which is only a parity
    check in characteristic 2.
    """
    ctx = form.matrix.ctx
    p = ctx.p
    bl = form.blocks
    a, k, b = form.left_groups
    c, _, d = form.right_groups
    s = -1 if signed else 1
    A1t, A2t = bl["A1"].T, bl["A2"].T
    B1t, B2t, B3t = bl["B1"].T, bl["B2"].T, bl["B3"].T
    M1t, M2t = bl["M1"].T, bl["M2"].T
    Z = lambda r, cc: np.zeros((r, cc), dtype=np.int64)  # noqa: E731
    I = lambda r: np.eye(r, dtype=np.int64)  # noqa: E731
    H1 = np.hstack([s * A1t, I(k), Z(k, b), Z(k, c), s * B1t, B1t @ M2t])
    H2 = np.hstack([s * A2t, Z(b, k), I(b), Z(b, c), s * B2t, B2t @ M2t])
    H3 = np.hstack([Z(c, a), Z(c, k), Z(c, b), I(c), s * B3t, s * M1t + B3t @ M2t])
    return FqMatrix(ctx, np.vstack([H1, H2, H3]) % p, cols=form.m + form.n)


def unpermute(M: FqMatrix, perm) -> FqMatrix:
    out = np.zeros_like(M.entries)
    out[:, perm] = M.entries
    return FqMatrix(M.ctx, out, cols=M.cols)


def standardized_forms(C: CodeSpec):
    return tuple(standardize(C.generator_matrix(i), C.iota[i], C.ell[i], C.theta[i], C.m) for i in range(3))


def parity_check(C: CodeSpec, signed=True):
    """Parity-check matrices (H1, H2, H3) in the original column order."""
    out = []
    for form in standardized_forms(C):
        out.append(unpermute(standardized_parity_check(form, signed), form.perm))
    return tuple(out)


def dimension_formula(C: CodeSpec) -> int:
    return 3 * C.m + 3 * C.n - sum(int(C.iota[i].degree) + int(C.theta[i].degree) for i in range(3))


def code_dimension(C: CodeSpec) -> int:
    formula = dimension_formula(C)
    measured = C.dimension
    if formula != measured:
        raise InvariantViolation(f"dimension formula {formula} != rank {measured}")
    return formula


@dataclass
class CodeCounts:
    """Base-q exponents of the code cardinalities."""

    q: int
    dim_C: int
    dim_Cm: int
    dim_Cn: int
    dim_dual_m: int
    dim_dual_n: int

    @property
    def card_C(self):
        return self.q**self.dim_C

    @property
    def card_Cm(self):
        return self.q**self.dim_Cm

    @property
    def card_Cn(self):
        return self.q**self.dim_Cn

    @property
    def card_dual_m(self):
        return self.q**self.dim_dual_m

    @property
    def card_dual_n(self):
        return self.q**self.dim_dual_n


def measured_counts(C: CodeSpec) -> CodeCounts:
    """Exponents measured by ranks of projected generator and null-space matrices."""
    m, n = C.m, C.n
    dm = dn = ddm = ddn = 0
    for G in C.generator_matrices:
        dm += rank(FqMatrix(C.ctx, G.entries[:, :m], cols=m))
        dn += rank(FqMatrix(C.ctx, G.entries[:, m:], cols=n))
        N = nullspace(G)
        ddm += rank(FqMatrix(C.ctx, N.entries[:, :m], cols=m))
        ddn += rank(FqMatrix(C.ctx, N.entries[:, m:], cols=n))
    return CodeCounts(C.q, C.dimension, dm, dn, ddm, ddn)


def formula_counts(C: CodeSpec, literal=False) -> CodeCounts:
    """Exponents from degree data.

    With ``literal=True`` the left projection of the dual uses sum(deg theta),
    the uncorrected closed form; the default uses sum(deg iota), which is what
    the ranks give.
    """
    deg_i = sum(int(C.iota[i].degree) for i in range(3))
    deg_t = sum(int(C.theta[i].degree) for i in range(3))
    ks = sum(C.k(i) for i in range(3))
    return CodeCounts(
        C.q,
        dimension_formula(C),
        3 * C.m + ks - deg_i,
        3 * C.n - deg_t,
        deg_t if literal else deg_i,
        deg_t + ks,
    )


def code_counts(C: CodeSpec) -> CodeCounts:
    formula = formula_counts(C)
    measured = measured_counts(C)
    if formula != measured:
        raise InvariantViolation(f"counting formulas {formula} disagree with ranks {measured}")
    return formula


def component_parameters(C: CodeSpec, cap=DEFAULT_CAP):
    """[length, dimension, distance] of each projection; distance is None for a zero code."""
    out = []
    for G in C.generator_matrices:
        out.append((G.cols, rank(G), min_distance(G, cap)))
    return out
