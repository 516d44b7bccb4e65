"""Polynomials over R held as three F_p polynomials, one per idempotent."""
from __future__ import annotations

from .errors import ContextMismatchError
from .field import FieldCtx
from .poly import Poly, divides, exact_div, poly_gcd, poly_reciprocal
from .ring import RElem, r_from_standard


class RPoly:
    """r(x) = r1(x) v1 + r2(x) v2 + r3(x) v3."""

    __slots__ = ("ctx", "comps")

    def __init__(self, ctx: FieldCtx, comps):
        comps = tuple(comps)
        if len(comps) != 3:
            raise ValueError("RPoly needs exactly three components")
        for f in comps:
            if f.ctx != ctx:
                raise ContextMismatchError(f"F_{ctx.p} vs F_{f.ctx.p}")
        self.ctx = ctx
        self.comps = comps

    @classmethod
    def broadcast(cls, f: Poly):
        """An F_p polynomial viewed in R[x] (same in every component)."""
        return cls(f.ctx, (f, f, f))

    @classmethod
    def zero(cls, ctx):
        z = Poly.zero(ctx)
        return cls(ctx, (z, z, z))

    def __getitem__(self, i):
        return self.comps[i]

    def __iter__(self):
        return iter(self.comps)

    def __add__(self, other):
        return RPoly(self.ctx, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return RPoly(self.ctx, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __mul__(self, other):
        if isinstance(other, RPoly):
            return RPoly(self.ctx, tuple(a * b for a, b in zip(self.comps, other.comps)))
        if isinstance(other, RElem):
            return RPoly(self.ctx, tuple(a.scale(c) for a, c in zip(self.comps, other.comps)))
        return RPoly(self.ctx, tuple(a * other for a in self.comps))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def is_zero(self):
        return all(f.is_zero() for f in self.comps)

    def coefficient(self, j) -> RElem:
        return RElem(self.ctx, tuple(f.coeff(j) for f in self.comps))

    @property
    def degree(self):
        return max(f.degree for f in self.comps)

    def to_standard(self):
        """Standard-basis coefficient triples, ascending in x."""
        top = self.degree
        if top < 0:
            return []
        return [self.coefficient(j).standard() for j in range(int(top) + 1)]

    def __repr__(self):
        return "RPoly(" + ", ".join(f.pretty() for f in self.comps) + ")"


def rpoly_from_standard(ctx: FieldCtx, coeffs) -> RPoly:
    """Build from ascending standard-basis coefficients (each an (a, b, c) triple or RElem)."""
    elems = [c if isinstance(c, RElem) else r_from_standard(ctx, *c) for c in coeffs]
    return RPoly(ctx, tuple(Poly(ctx, [e.comps[i] for e in elems]) for i in range(3)))


def rpoly_divides(a: RPoly, b: RPoly) -> bool:
    return all(divides(fa, fb) for fa, fb in zip(a.comps, b.comps))


def rpoly_exact_div(b: RPoly, a: RPoly) -> RPoly:
    """Componentwise quotient b / a; zero components of a need zero components of b."""
    out = []
    for fa, fb in zip(a.comps, b.comps):
        if fa.is_zero():
            if not fb.is_zero():
                raise ValueError("zero component cannot divide a nonzero one")
            out.append(Poly.zero(a.ctx))
        else:
            out.append(exact_div(fb, fa))
    return RPoly(a.ctx, out)


def rpoly_gcd(a: RPoly, b: RPoly) -> RPoly:
    return RPoly(a.ctx, tuple(poly_gcd(fa, fb) for fa, fb in zip(a.comps, b.comps)))


def rpoly_reciprocal(r: RPoly) -> RPoly:
    return RPoly(r.ctx, tuple(poly_reciprocal(f) for f in r.comps))
