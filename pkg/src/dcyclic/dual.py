"""Dual codes: closed-form generators and an independent null-space route.

For a component with generators (iota | 0), (ell | theta), g = gcd(iota, ell),
iota~ = iota/g and ell~ = ell/g, the dual is generated by

    iota_bar  = (x^m - 1) / g*
    theta_bar = (x^n - 1) g* / (iota* theta*)
    ell_bar   = rho (x^m - 1) / iota*

where rho solves, modulo iota~*,

    rho * low(ell) * x^(l-1-deg ell) * ell~*  +  theta(0) * x^(l-1-deg theta) = 0.

``low(ell)`` is the lowest nonzero coefficient of ell. The two scalars come
from undoing the monic normalisation of the reciprocals in the orthogonality
condition; dropping them (or using x^(l-deg ell)) gives a wrong rho whenever
they are not 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .code import CodeSpec, Codeword, code_canonicalize, code_new, inner, shift_T
from .errors import InvariantViolation, NotInvertibleError
from .linalg import nullspace, rowspace_equal
from .poly import Poly, exact_div, poly_gcd, poly_inv_mod, poly_mulmod, poly_reciprocal, x_pow_mod
from .rpoly import RPoly


@dataclass
class DualResult:
    iota_bar: RPoly
    ell_bar: RPoly
    theta_bar: RPoly
    rho: RPoly | None
    method: str
    code: CodeSpec


def dual_iota(C: CodeSpec) -> RPoly:
    xm1 = C.xm1
    return RPoly(C.ctx, tuple(exact_div(xm1, poly_reciprocal(C.gcd_iota_ell(i))) for i in range(3)))


def dual_theta(C: CodeSpec) -> RPoly:
    xn1 = C.xn1
    out = []
    for i in range(3):
        num = xn1 * poly_reciprocal(C.gcd_iota_ell(i))
        den = poly_reciprocal(C.iota[i]) * poly_reciprocal(C.theta[i])
        try:
            out.append(exact_div(num, den))
        except ValueError as exc:
            raise InvariantViolation(f"component v{i + 1}: theta_bar division is not exact") from exc
    return RPoly(C.ctx, tuple(out))


def _rho_component(C: CodeSpec, i: int, variant: str = "corrected"):
    """rho for one component, or None when the variant is undefined there."""
    ctx = C.ctx
    iota, ell, theta = C.iota[i], C.ell[i], C.theta[i]
    l = C.l
    if ell.is_zero():
        return Poly.zero(ctx)
    g = poly_gcd(iota, ell)
    it = exact_div(iota, g)
    if it.degree < 1:
        return Poly.zero(ctx)
    lt = exact_div(ell, g)
    mod = poly_reciprocal(it)
    deg_l, deg_t, deg_i = int(ell.degree), int(theta.degree), int(iota.degree)
    # x is a unit modulo iota~* and x^l = 1 there, so exponents live mod l
    if variant == "corrected":
        coef = poly_mulmod(x_pow_mod((l - 1 - deg_l) % l, mod), poly_reciprocal(lt).scale(ell.low), mod)
        rhs = x_pow_mod((l - 1 - deg_t) % l, mod).scale(-theta.coeff(0))
    elif variant == "unscaled":
        # rho x^(l - deg ell) ell~* + x^(l - deg theta - 1) = 0, dropping ell(0) and theta(0)
        coef = poly_mulmod(x_pow_mod((l - deg_l) % l, mod), poly_reciprocal(lt), mod)
        rhs = x_pow_mod((l - deg_t - 1) % l, mod).scale(-1)
    elif variant in ("iota_inverse", "ell_inverse"):
        rhs = x_pow_mod((l - deg_t + deg_i) % l, mod).scale(-1)
        coef = poly_reciprocal(it) if variant == "iota_inverse" else poly_reciprocal(lt)
    else:
        raise ValueError(f"unknown rho variant {variant!r}")
    try:
        inv = poly_inv_mod(coef, mod)
    except NotInvertibleError:
        if variant == "corrected":
            raise InvariantViolation(f"component v{i + 1}: ell~* is not invertible modulo iota~*") from None
        return None
    return poly_mulmod(rhs, inv, mod)


def dual_ell(C: CodeSpec, variant: str = "corrected"):
    """(ell_bar, rho). ``variant`` selects which congruence rho is solved from."""
    rhos = []
    ells = []
    for i in range(3):
        rho = _rho_component(C, i, variant)
        if rho is None:
            return None, None
        rhos.append(rho)
        ells.append(rho * exact_div(C.xm1, poly_reciprocal(C.iota[i])))
    return RPoly(C.ctx, ells), RPoly(C.ctx, rhos)


def _formula_dual(C: CodeSpec, variant="corrected") -> DualResult | None:
    ib = dual_iota(C)
    tb = dual_theta(C)
    lb, rho = dual_ell(C, variant)
    if lb is None:
        return None
    code = code_new(C.ctx, C.m, C.n, ib, lb, tb)
    return DualResult(ib, lb, tb, rho, "formula", code)


def _nullspace_dual(C: CodeSpec) -> DualResult:
    ctx, m, n = C.ctx, C.m, C.n
    words = []
    for i, G in enumerate(C.generator_matrices):
        for row in nullspace(G).entries:
            comps = np.zeros((3, m + n), dtype=np.int64)
            comps[i] = row
            words.append(Codeword.from_components(ctx, m, n, comps))
    if not words:
        words = [Codeword.zero(ctx, m, n)]
    code = code_canonicalize(ctx, m, n, words)
    return DualResult(code.iota, code.ell, code.theta, None, "nullspace", code)


def dual_code(C: CodeSpec, method: str = "formula") -> DualResult:
    if method == "formula":
        return _formula_dual(C)
    if method == "nullspace":
        return _nullspace_dual(C)
    raise ValueError(f"unknown method {method!r}")


def rho_variant_dual(C: CodeSpec, variant: str):
    """Dual built with an alternative rho, or None if that rho is undefined or invalid."""
    try:
        return _formula_dual(C, variant)
    except (InvariantViolation, ValueError):
        return None


def same_code(A: CodeSpec, B: CodeSpec) -> bool:
    """Equal as codeword sets (component row spaces coincide)."""
    if (A.q, A.m, A.n) != (B.q, B.m, B.n):
        return False
    return all(rowspace_equal(A.generator_matrix(i), B.generator_matrix(i)) for i in range(3))


@dataclass
class DualityReport:
    ok: bool
    reason: str = ""
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def verify_duality(C: CodeSpec, D: CodeSpec) -> DualityReport:
    """D is the dual of C: generators orthogonal to all shifts, and dimensions add up."""
    l = lcm(C.m, C.n)
    for h in D.generators():
        for g in C.generators():
            w = g
            for _ in range(l):
                ip = inner(h, w)
                if not ip.is_zero():
                    return DualityReport(False, "nonzero inner product", (h, w))
                w = shift_T(w)
    total = C.dimension + D.dimension
    if total != 3 * (C.m + C.n):
        return DualityReport(False, f"dimensions add to {total}, expected {3 * (C.m + C.n)}")
    return DualityReport(True)


def dual_degrees(C: CodeSpec):
    """Expected (deg iota_bar_i, deg theta_bar_i) for each component."""
    out = []
    for i in range(3):
        dg = int(C.gcd_iota_ell(i).degree)
        out.append((C.m - dg, C.n - int(C.iota[i].degree) - int(C.theta[i].degree) + dg))
    return out


def separable_dual(C: CodeSpec) -> CodeSpec:
    """<((x^m-1)/iota* | 0), (0 | (x^n-1)/theta*)> for a code with ell = 0."""
    ib = RPoly(C.ctx, tuple(exact_div(C.xm1, poly_reciprocal(C.iota[i])) for i in range(3)))
    tb = RPoly(C.ctx, tuple(exact_div(C.xn1, poly_reciprocal(C.theta[i])) for i in range(3)))
    return code_new(C.ctx, C.m, C.n, ib, RPoly.zero(C.ctx), tb)


def dual_dimension_ok(C: CodeSpec, D: CodeSpec) -> bool:
    return C.dimension + D.dimension == 3 * (C.m + C.n)


__all__ = [
    "DualResult",
    "dual_iota",
    "dual_theta",
    "dual_ell",
    "dual_code",
    "verify_duality",
    "same_code",
    "dual_degrees",
    "separable_dual",
    "rho_variant_dual",
    "DualityReport",
    "dual_dimension_ok",
]
