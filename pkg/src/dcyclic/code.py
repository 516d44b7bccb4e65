"""Double cyclic codes over R: generators, shifts, membership, enumeration.

A code of length (m, n) is the R[x]-submodule of R[x]/(x^m-1) x R[x]/(x^n-1)
generated by (iota | 0) and (ell | theta). Everything is stored per idempotent
component, so each component is an ordinary double cyclic code over F_p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import lcm

import numpy as np

from .errors import DimensionError, InvalidGeneratorError
from .field import FieldCtx
from .linalg import (
    DEFAULT_CAP,
    FqMatrix,
    check_cap,
    in_rowspace,
    rank,
    span_vectors,
)
from .poly import (
    Poly,
    divides,
    exact_div,
    mod_xk_minus_1,
    omega,
    poly_divmod,
    poly_gcd,
    poly_gcd_many,
    poly_mod,
    poly_reciprocal,
    reversal,
)
from .ring import RElem
from .rpoly import RPoly


@dataclass(frozen=True)
class Codeword:
    left: tuple
    right: tuple

    @property
    def ctx(self):
        return (self.left or self.right)[0].ctx

    @property
    def m(self):
        return len(self.left)

    @property
    def n(self):
        return len(self.right)

    @classmethod
    def zero(cls, ctx, m, n):
        z = RElem.zero(ctx)
        return cls((z,) * m, (z,) * n)

    @classmethod
    def from_components(cls, ctx, m, n, comps):
        """Build from three F_p vectors of length m + n (one per idempotent)."""
        comps = np.asarray(comps, dtype=np.int64).reshape(3, m + n)
        elems = [RElem(ctx, (int(a), int(b), int(c))) for a, b, c in comps.T]
        return cls(tuple(elems[:m]), tuple(elems[m:]))

    @classmethod
    def from_polys(cls, ctx, m, n, left: RPoly, right: RPoly):
        comps = np.zeros((3, m + n), dtype=np.int64)
        for i in range(3):
            comps[i, :m] = mod_xk_minus_1(left[i], m).padded(m)
            comps[i, m:] = mod_xk_minus_1(right[i], n).padded(n)
        return cls.from_components(ctx, m, n, comps)

    def components(self):
        return np.array([[e.comps[i] for e in self.left + self.right] for i in range(3)], dtype=np.int64).reshape(3, self.m + self.n)

    def polys(self):
        ctx = self.ctx
        left = RPoly(ctx, tuple(Poly(ctx, [e.comps[i] for e in self.left]) for i in range(3)))
        right = RPoly(ctx, tuple(Poly(ctx, [e.comps[i] for e in self.right]) for i in range(3)))
        return left, right

    def is_zero(self):
        return all(e.is_zero() for e in self.left + self.right)

    def __add__(self, other):
        return Codeword(
            tuple(a + b for a, b in zip(self.left, other.left)),
            tuple(a + b for a, b in zip(self.right, other.right)),
        )

    def scale(self, r: RElem):
        return Codeword(tuple(r * a for a in self.left), tuple(r * a for a in self.right))


def shift_T(c: Codeword) -> Codeword:
    """Simultaneous cyclic shift of both blocks one place to the right."""
    left = c.left[-1:] + c.left[:-1] if c.left else c.left
    right = c.right[-1:] + c.right[:-1] if c.right else c.right
    return Codeword(left, right)


def shift_vector(vec, m, n, s=1):
    """The (m, n) shift applied s times to a flat F_p vector of length m + n."""
    vec = np.asarray(vec)
    return np.concatenate([np.roll(vec[:m], s), np.roll(vec[m:], s)])


def inner(c: Codeword, d: Codeword) -> RElem:
    if c.m != d.m or c.n != d.n:
        raise DimensionError("codewords of different lengths")
    acc = RElem.zero(c.ctx)
    for a, b in zip(c.left + c.right, d.left + d.right):
        acc = acc + a * b
    return acc


class CodeSpec:
    """A validated, normalised generator triple (iota, ell, theta).

    Invariants per component i: iota_i and theta_i are monic divisors of
    x^m - 1 and x^n - 1, deg ell_i < deg iota_i, and
    iota_i | ((x^n - 1)/theta_i) * ell_i. A zero block ideal is encoded by
    x^m - 1 (resp. x^n - 1), never by 0.
    """

    def __init__(self, ctx, m, n, iota, ell, theta):
        self.ctx = ctx
        self.m = m
        self.n = n
        self.iota = iota
        self.ell = ell
        self.theta = theta

    @property
    def q(self):
        return self.ctx.p

    @property
    def l(self):
        return lcm(self.m, self.n)

    @property
    def xm1(self):
        return Poly.x_pow_minus_1(self.ctx, self.m)

    @property
    def xn1(self):
        return Poly.x_pow_minus_1(self.ctx, self.n)

    def gcd_iota_ell(self, i):
        return poly_gcd(self.iota[i], self.ell[i])

    def k(self, i):
        return self.iota[i].degree - self.gcd_iota_ell(i).degree

    def generator_matrix(self, i) -> FqMatrix:
        return self.generator_matrices[i]

    @cached_property
    def generator_matrices(self):
        return tuple(natural_generator_matrix(self.ctx, self.m, self.n, self.iota[i], self.ell[i], self.theta[i]) for i in range(3))

    @property
    def dimension(self):
        """F_p-dimension, measured by rank."""
        return sum(rank(G) for G in self.generator_matrices)

    def generators(self):
        """The two R-generators (iota | 0) and (ell | theta) as codewords."""
        zero = RPoly.zero(self.ctx)
        return [
            Codeword.from_polys(self.ctx, self.m, self.n, self.iota, zero),
            Codeword.from_polys(self.ctx, self.m, self.n, self.ell, self.theta),
        ]

    def key(self):
        return (self.ctx.p, self.m, self.n, self.iota.comps, self.ell.comps, self.theta.comps)

    def __eq__(self, other):
        if not isinstance(other, CodeSpec):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        def fmt(r):
            return "(" + ", ".join(f.pretty() for f in r.comps) + ")"

        return f"CodeSpec(q={self.q}, m={self.m}, n={self.n}, iota={fmt(self.iota)}, ell={fmt(self.ell)}, theta={fmt(self.theta)})"


def natural_generator_matrix(ctx, m, n, iota: Poly, ell: Poly, theta: Poly) -> FqMatrix:
    """Rows x^j (iota | 0), j < m - deg iota, then x^j (ell | theta), j < n - deg theta."""
    rows = []
    for j in range(m - iota.degree):
        rows.append(iota.shift(j).padded(m) + [0] * n)
    for j in range(n - theta.degree):
        left = mod_xk_minus_1(ell.shift(j), m).padded(m)
        rows.append(left + theta.shift(j).padded(n))
    if not rows:
        return FqMatrix.empty(ctx, m + n)
    return FqMatrix(ctx, rows)


def _component_conditions(ctx, m, n, iota, ell, theta):
    """Evaluate the generator conditions for one component.

    Returns (normalised triple or None, list of (name, ok, detail)).
    """
    xm1 = Poly.x_pow_minus_1(ctx, m)
    xn1 = Poly.x_pow_minus_1(ctx, n)
    if iota.is_zero():
        iota = xm1
    if theta.is_zero():
        theta = xn1
    report = []
    ok_iota = divides(iota, xm1)
    report.append(("iota | x^m-1", ok_iota, iota.pretty()))
    ok_theta = divides(theta, xn1)
    report.append(("theta | x^n-1", ok_theta, theta.pretty()))
    if not (ok_iota and ok_theta):
        return None, report
    iota = iota.monic()
    c = ctx.inv(theta.lead)
    theta = theta.scale(c)
    ell = ell.scale(c)
    reduced = poly_mod(mod_xk_minus_1(ell, m), iota)
    report.append(("deg ell < deg iota", ell.is_zero() or ell.degree < iota.degree, "input" if ell == reduced else "reduced"))
    ell = reduced
    h = exact_div(xn1, theta)
    ok4 = divides(iota, h * ell)
    report.append(("iota | (x^n-1)/theta * ell", ok4, ""))
    g = poly_gcd(iota, ell)
    ok5 = divides(iota, h * g)
    report.append(("iota | (x^n-1)/theta * gcd(iota, ell)", ok5, ""))
    if not (ok4 and ok5):
        return None, report
    return (iota, ell, theta), report


def validate_generators(ctx, m, n, iota: RPoly, ell: RPoly, theta: RPoly):
    """Per-component condition report: list of (component, name, ok, detail)."""
    out = []
    for i in range(3):
        _, rep = _component_conditions(ctx, m, n, iota[i], ell[i], theta[i])
        out.extend((i + 1, name, ok, detail) for name, ok, detail in rep)
    return out


def code_new(ctx: FieldCtx, m: int, n: int, iota: RPoly, ell: RPoly, theta: RPoly) -> CodeSpec:
    """Validate and normalise a generator triple.

    iota and theta are made monic (ell is rescaled with theta), ell is reduced
    modulo iota, and a zero iota/theta component is read as x^m-1 / x^n-1.
    """
    if m < 1 or n < 1:
        raise ValueError("block lengths must be positive")
    out = []
    for i in range(3):
        triple, rep = _component_conditions(ctx, m, n, iota[i], ell[i], theta[i])
        if triple is None:
            name, _, detail = next(r for r in rep if not r[1])
            raise InvalidGeneratorError(i + 1, f"{name} fails", detail)
        out.append(triple)
    return CodeSpec(
        ctx,
        m,
        n,
        RPoly(ctx, (t[0] for t in out)),
        RPoly(ctx, (t[1] for t in out)),
        RPoly(ctx, (t[2] for t in out)),
    )


def zero_code(ctx, m, n) -> CodeSpec:
    z = RPoly.zero(ctx)
    return code_new(ctx, m, n, z, z, z)


def full_code(ctx, m, n) -> CodeSpec:
    one = RPoly.broadcast(Poly.one(ctx))
    return code_new(ctx, m, n, one, RPoly.zero(ctx), one)


def _check_lengths(C, c):
    if c.m != C.m or c.n != C.n:
        raise DimensionError(f"codeword has lengths ({c.m},{c.n}), code has ({C.m},{C.n})")


def code_contains(C: CodeSpec, c: Codeword) -> bool:
    _check_lengths(C, c)
    comps = c.components()
    return all(in_rowspace(C.generator_matrix(i), comps[i]) for i in range(3))


def code_enumerate(C: CodeSpec, cap=DEFAULT_CAP):
    """Yield every codeword exactly once."""
    dims = [rank(G) for G in C.generator_matrices]
    check_cap(C.q, sum(dims), cap)
    spans = [span_vectors(G, cap) for G in C.generator_matrices]
    for a, b, c in itertools.product(*spans):
        yield Codeword.from_components(C.ctx, C.m, C.n, np.stack([a, b, c]))


def enumerate_components(C: CodeSpec, cap=DEFAULT_CAP):
    """Per-component row-space vectors; the code is their Cartesian product."""
    dims = [rank(G) for G in C.generator_matrices]
    check_cap(C.q, sum(dims), cap)
    return [span_vectors(G, cap) for G in C.generator_matrices]


def _canonical_component(ctx, m, n, pairs):
    """Standard generators of the F_p double cyclic code spanned by (a | b) pairs.

    Euclid on the right blocks, carrying the left blocks along. Each step is
    unimodular, so the module is unchanged; every zero remainder leaves a
    kernel element (a | 0).
    """
    xm1 = Poly.x_pow_minus_1(ctx, m)
    xn1 = Poly.x_pow_minus_1(ctx, n)
    acc_l, acc_r = Poly.zero(ctx), xn1
    kernel = [xm1]
    for a, b in pairs:
        ul, ur = acc_l, acc_r
        wl, wr = mod_xk_minus_1(a, m), b
        while not wr.is_zero():
            quo, rem = poly_divmod(ur, wr)
            ul, ur, wl, wr = wl, wr, mod_xk_minus_1(ul - quo * wl, m), rem
        if not wl.is_zero():
            kernel.append(wl)
        acc_l, acc_r = ul, ur
    c = ctx.inv(acc_r.lead)
    theta = acc_r.scale(c)
    ell = mod_xk_minus_1(acc_l.scale(c), m)
    kernel.append(mod_xk_minus_1(exact_div(xn1, theta) * ell, m))
    iota = poly_gcd_many(kernel)
    return iota, ell, theta


def code_canonicalize(ctx: FieldCtx, m: int, n: int, spanning) -> CodeSpec:
    """Smallest double cyclic code containing every given codeword."""
    spanning = list(spanning)
    if not spanning:
        raise ValueError("need at least one codeword")
    per = [[], [], []]
    for w in spanning:
        if w.m != m or w.n != n:
            raise DimensionError(f"codeword has lengths ({w.m},{w.n}), expected ({m},{n})")
        left, right = w.polys()
        for i in range(3):
            per[i].append((left[i], right[i]))
    return _code_from_component_pairs(ctx, m, n, per)


def _code_from_component_pairs(ctx, m, n, per):
    triples = [_canonical_component(ctx, m, n, per[i]) for i in range(3)]
    return code_new(
        ctx,
        m,
        n,
        RPoly(ctx, (t[0] for t in triples)),
        RPoly(ctx, (t[1] for t in triples)),
        RPoly(ctx, (t[2] for t in triples)),
    )


def canonicalize_component_rows(ctx, m, n, rows_per_component) -> CodeSpec:
    """Same as :func:`code_canonicalize` but fed with flat F_p rows per component."""
    per = []
    for rows in rows_per_component:
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, m + n)
        per.append([(Poly(ctx, r[:m]), Poly(ctx, r[m:])) for r in rows])
    return _code_from_component_pairs(ctx, m, n, per)


def _circ_term(cpoly, dpoly, block, l, monic):
    if dpoly.is_zero() or cpoly.is_zero():
        return Poly.zero(cpoly.ctx)
    rev = poly_reciprocal(dpoly) if monic else reversal(dpoly)
    w = omega(cpoly.ctx, l // block, block)
    return mod_xk_minus_1((cpoly * w * rev).shift(l - 1 - dpoly.degree), l)


def circ(c: Codeword, d: Codeword, monic=False):
    """The pairing into R[x]/(x^l - 1), returned as three F_p polynomials.

    Uses the plain reversal x^deg(d) d(1/x) of each block, so the coefficient
    of x^(l-1-s) in component i is the F_p inner product of c with d rotated
    s places to the left (T^(-s) d, equivalently <T^s c, d>). ``monic=True`` substitutes monic reciprocals instead; that
    variant rescales the two blocks independently and loses the property.
    """
    if c.m != d.m or c.n != d.n:
        raise DimensionError("codewords of different lengths")
    m, n = c.m, c.n
    l = lcm(m, n)
    c1, c2 = c.polys()
    d1, d2 = d.polys()
    return tuple(_circ_term(c1[i], d1[i], m, l, monic) + _circ_term(c2[i], d2[i], n, l, monic) for i in range(3))


def circ_is_zero(c, d, monic=False):
    return all(f.is_zero() for f in circ(c, d, monic))


def is_separable(C: CodeSpec) -> bool:
    """C equals the product of its two block projections."""
    m = C.m
    total = 0
    split = 0
    for G in C.generator_matrices:
        total += rank(G)
        split += rank(FqMatrix(C.ctx, G.entries[:, :m], cols=m)) + rank(FqMatrix(C.ctx, G.entries[:, m:], cols=C.n))
    return total == split
