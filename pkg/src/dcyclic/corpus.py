"""Seeded random valid codes and the property checks run over them."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .code import (
    CodeSpec,
    Codeword,
    circ_is_zero,
    code_new,
    is_separable,
    shift_vector,
)
from .dual import (
    dual_degrees,
    dual_code,
    rho_variant_dual,
    same_code,
    separable_dual,
    verify_duality,
)
from .errors import DCyclicError
from .field import FieldCtx
from .linalg import FqMatrix, nullspace, rank
from .matrix import (
    code_counts,
    code_dimension,
    formula_counts,
    measured_counts,
    standardized_forms,
    standardized_parity_check,
    unpermute,
)
from .poly import Poly, divides, exact_div, poly_gcd, poly_mod
from .rpoly import RPoly


# -- divisors of x^k - 1 ------------------------------------------------------

def _distinct_degree(f: Poly):
    ctx = f.ctx
    q = ctx.p
    x = Poly.monomial(ctx, 1)
    out = []
    h = poly_mod(x, f)
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = _powmod(h, q, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = exact_div(f, g)
            h = poly_mod(h, f)
    if f.degree > 0:
        out.append((f.monic(), int(f.degree)))
    return out


def _powmod(a: Poly, e: int, m: Poly) -> Poly:
    result = Poly.one(a.ctx)
    base = poly_mod(a, m)
    while e:
        if e & 1:
            result = poly_mod(result * base, m)
        base = poly_mod(base * base, m)
        e >>= 1
    return result


def _equal_degree(f: Poly, d: int, rng: random.Random):
    if f.degree == d:
        return [f.monic()]
    ctx = f.ctx
    q = ctx.p
    while True:
        a = Poly(ctx, [rng.randrange(q) for _ in range(int(f.degree))])
        if a.degree < 1:
            continue
        b = _powmod(a, (q**d - 1) // 2, f) - 1
        g = poly_gcd(f, b) if not b.is_zero() else f.monic()
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(exact_div(f, g), d, rng)


@lru_cache(maxsize=None)
def xk1_factorization(p: int, k: int):
    """Monic irreducible factors of x^k - 1 over F_p with multiplicities, found by gcds."""
    ctx = FieldCtx(p)
    mult = 1
    while k % p == 0:
        k //= p
        mult *= p
    rng = random.Random(0)
    factors = []
    for g, d in _distinct_degree(Poly.x_pow_minus_1(ctx, k)):
        factors.extend(_equal_degree(g, d, rng))
    factors.sort(key=lambda f: (f.degree, f.coeffs))
    return tuple((f, mult) for f in factors)


def random_divisor(rng: random.Random, ctx: FieldCtx, k: int) -> Poly:
    out = Poly.one(ctx)
    for f, mult in xk1_factorization(ctx.p, k):
        out = out * f ** rng.randint(0, mult)
    return out


def random_code(rng: random.Random, q: int, m: int, n: int, p_separable=0.15) -> CodeSpec:
    ctx = FieldCtx(q)
    xn1 = Poly.x_pow_minus_1(ctx, n)
    separable = rng.random() < p_separable
    iotas, ells, thetas = [], [], []
    for _ in range(3):
        iota = random_divisor(rng, ctx, m)
        theta = random_divisor(rng, ctx, n)
        h = exact_div(xn1, theta)
        base = exact_div(iota, poly_gcd(iota, h))
        if separable or iota.degree < 1:
            ell = Poly.zero(ctx)
        else:
            r = Poly(ctx, [rng.randrange(q) for _ in range(int(iota.degree))])
            ell = poly_mod(base * r, iota)
        iotas.append(iota)
        ells.append(ell)
        thetas.append(theta)
    return code_new(ctx, m, n, RPoly(ctx, iotas), RPoly(ctx, ells), RPoly(ctx, thetas))


def random_corpus(cases: int, seed: int = 1, qset=(3, 5, 7), max_len: int = 8):
    rng = random.Random(seed)
    for _ in range(cases):
        q = rng.choice(list(qset))
        m = rng.randint(1, max_len)
        n = rng.randint(1, max_len)
        yield random_code(rng, q, m, n)


def random_codeword(rng: random.Random, ctx: FieldCtx, m: int, n: int) -> Codeword:
    comps = np.array([[rng.randrange(ctx.p) for _ in range(m + n)] for _ in range(3)])
    return Codeword.from_components(ctx, m, n, comps)


# -- property checks ----------------------------------------------------------

def _shift_closed(M: FqMatrix, m, n) -> bool:
    if M.rows == 0:
        return True
    shifted = np.array([shift_vector(r, m, n) for r in M.entries])
    stacked = FqMatrix(M.ctx, np.vstack([M.entries, shifted]))
    return rank(stacked) == rank(M)


def check_formula_vs_nullspace(C, dual_fn=None):
    F = dual_fn(C) if dual_fn else dual_code(C, "formula").code
    N = dual_code(C, "nullspace").code
    return same_code(F, N)


def check_verify_duality(C, dual_fn=None):
    F = dual_fn(C) if dual_fn else dual_code(C, "formula").code
    return verify_duality(C, F).ok


def check_dimension(C, dual_fn=None):
    code_dimension(C)
    return True


def check_counts(C, dual_fn=None):
    code_counts(C)
    return True


def check_dual_degrees(C, dual_fn=None):
    F = dual_fn(C) if dual_fn else dual_code(C, "formula").code
    expected = dual_degrees(C)
    got = [(int(F.iota[i].degree), int(F.theta[i].degree)) for i in range(3)]
    return got == expected


def check_standardized(C, dual_fn=None):
    for i, form in enumerate(standardized_forms(C)):
        H = unpermute(standardized_parity_check(form), form.perm)
        G = C.generator_matrix(i)
        if ((G.entries @ H.entries.T) % C.q).any():
            return False
        if rank(H) + rank(G) != C.m + C.n:
            return False
    return True


def check_double_dual(C, dual_fn=None):
    F = dual_fn(C) if dual_fn else dual_code(C, "formula").code
    FF = dual_fn(F) if dual_fn else dual_code(F, "formula").code
    return same_code(FF, C)


def check_dual_shift_closed(C, dual_fn=None):
    return all(_shift_closed(nullspace(G), C.m, C.n) for G in C.generator_matrices)


def check_iota_divides(C, dual_fn=None):
    xn1 = C.xn1
    for i in range(3):
        h = exact_div(xn1, C.theta[i])
        if not divides(C.iota[i], h * C.gcd_iota_ell(i)):
            return False
    return True


def check_separable_dual(C, dual_fn=None):
    if not is_separable(C):
        return True
    F = dual_fn(C) if dual_fn else dual_code(C, "formula").code
    return is_separable(F) and same_code(F, separable_dual(C))


def check_circ_orthogonality(C, dual_fn=None):
    F = dual_fn(C) if dual_fn else dual_code(C, "formula").code
    return all(circ_is_zero(h, g) for h in F.generators() for g in C.generators())


PROPERTIES = {
    "formula dual == nullspace dual": check_formula_vs_nullspace,
    "generators orthogonal, dimensions complementary": check_verify_duality,
    "dimension formula == rank": check_dimension,
    "cardinality exponents == ranks": check_counts,
    "dual degree identities": check_dual_degrees,
    "standardized shape and G H^T = 0": check_standardized,
    "double dual == code": check_double_dual,
    "null-space dual shift-closed": check_dual_shift_closed,
    "iota | (x^n-1)/theta * gcd(iota, ell)": check_iota_divides,
    "separable dual formula": check_separable_dual,
    "circ vanishes on generator pairs": check_circ_orthogonality,
}


def literal_dual_m_matches(C):
    return formula_counts(C, literal=True).dim_dual_m == measured_counts(C).dim_dual_m


def rho_variant_matches(C, variant):
    D = rho_variant_dual(C, variant)
    if D is None:
        return False
    return same_code(D.code, dual_code(C, "nullspace").code)


@dataclass
class CorpusReport:
    cases: int = 0
    passes: dict = field(default_factory=dict)
    failure: tuple | None = None  # (property name, code, detail)
    info: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.failure is None


def run_verify(cases: int, seed: int = 1, qset=(3, 5, 7), max_len: int = 8, dual_fn=None, info=True) -> CorpusReport:
    """Run every property over a seeded corpus; stops at the first failure."""
    report = CorpusReport(passes={name: 0 for name in PROPERTIES})
    if info:
        report.info = {"uncorrected (C^perp)_m exponent": 0, "rho unscaled form": 0, "rho iota-inverse form": 0, "rho ell-inverse form": 0, "non-separable codes": 0}
    for C in random_corpus(cases, seed, qset, max_len):
        report.cases += 1
        for name, fn in PROPERTIES.items():
            try:
                ok = fn(C, dual_fn)
                detail = ""
            except DCyclicError as exc:
                ok, detail = False, str(exc)
            if not ok:
                report.failure = (name, C, detail)
                return report
            report.passes[name] += 1
        if info:
            report.info["uncorrected (C^perp)_m exponent"] += literal_dual_m_matches(C)
            report.info["rho unscaled form"] += rho_variant_matches(C, "unscaled")
            report.info["rho iota-inverse form"] += rho_variant_matches(C, "iota_inverse")
            report.info["rho ell-inverse form"] += rho_variant_matches(C, "ell_inverse")
            report.info["non-separable codes"] += not is_separable(C)
    return report


__all__ = [
    "xk1_factorization",
    "random_divisor",
    "random_code",
    "random_corpus",
    "random_codeword",
    "PROPERTIES",
    "run_verify",
    "CorpusReport",
]
