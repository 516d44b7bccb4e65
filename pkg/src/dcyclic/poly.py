"""Dense univariate polynomials over F_p.

Coefficients are stored ascending (index i holds the coefficient of x^i) as a
tuple of residues with no trailing zeros; the zero polynomial is ``()``.
"""
from __future__ import annotations

from .errors import (
    ContextMismatchError,
    FieldDivisionError,
    NotInvertibleError,
    ParseError,
    UndefinedGcdError,
)
from .field import FieldCtx

NEG_INF = float("-inf")


def _strip(coeffs):
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        p = ctx.p
        self.ctx = ctx
        self.coeffs = _strip([int(c) % p for c in coeffs])

    @classmethod
    def _raw(cls, ctx, coeffs):
        # coeffs already reduced and stripped
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, (1,))

    @classmethod
    def const(cls, ctx, c):
        return cls(ctx, (c,))

    @classmethod
    def monomial(cls, ctx, k, c=1):
        return cls(ctx, (0,) * k + (c,))

    @classmethod
    def x_pow_minus_1(cls, ctx, k):
        """x^k - 1."""
        return cls(ctx, (ctx.p - 1,) + (0,) * (k - 1) + (1,))

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return NEG_INF

    @property
    def low(self):
        """Lowest-degree nonzero coefficient (0 for the zero polynomial)."""
        for c in self.coeffs:
            if c:
                return c
        return 0

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length):
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def is_monic(self):
        return self.lead == 1

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.ctx.inv(self.lead))

    def scale(self, c):
        p = self.ctx.p
        c %= p
        if c == 0:
            return Poly.zero(self.ctx)
        return Poly._raw(self.ctx, tuple(a * c % p for a in self.coeffs))

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return Poly._raw(self.ctx, (0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        p = self.ctx.p
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    # -- arithmetic -------------------------------------------------------
    def _same(self, other):
        if isinstance(other, int):
            return Poly.const(self.ctx, other)
        if not isinstance(other, Poly):
            return None
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"F_{self.ctx.p} vs F_{other.ctx.p}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        p = self.ctx.p
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly._raw(self.ctx, _strip(out))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return Poly._raw(self.ctx, tuple(-c % p for c in self.coeffs))

    def __sub__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._same(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.ctx)
        p = self.ctx.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly._raw(self.ctx, _strip([c % p for c in out]))

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly.one(self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.ctx, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly[{self.ctx.p}]({render_poly(self)})"

    def pretty(self, var="x"):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = var if i == 1 else f"{var}^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def poly_divmod(a: Poly, b: Poly):
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"F_{a.ctx.p} vs F_{b.ctx.p}")
    if b.is_zero():
        raise FieldDivisionError("division by the zero polynomial")
    ctx = a.ctx
    p = ctx.p
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        return Poly.zero(ctx), a
    rem = list(a.coeffs)
    inv_lead = ctx.inv(b.lead)
    bc = b.coeffs
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % p
        if c == 0:
            continue
        f = c * inv_lead % p
        quo[k - db] = f
        off = k - db
        for j in range(db + 1):
            rem[off + j] = (rem[off + j] - f * bc[j]) % p
    return Poly._raw(ctx, _strip(quo)), Poly._raw(ctx, _strip([c % p for c in rem[:db]]))


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def divides(a: Poly, b: Poly) -> bool:
    """True iff a | b in F_p[x]; the zero polynomial divides only zero."""
    if a.is_zero():
        return b.is_zero()
    return poly_divmod(b, a)[1].is_zero()


def exact_div(b: Poly, a: Poly) -> Poly:
    q, r = poly_divmod(b, a)
    if not r.is_zero():
        raise ValueError(f"{render_poly(a)} does not divide {render_poly(b)}")
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_gcd_many(polys) -> Poly:
    polys = [f for f in polys]
    g = None
    for f in polys:
        if f.is_zero():
            continue
        g = f.monic() if g is None else poly_gcd(g, f)
    if g is None:
        raise UndefinedGcdError("gcd of zero polynomials is undefined")
    return g


def poly_ext_gcd(a: Poly, b: Poly):
    """Return (g, s, t) with s*a + t*b = g, g the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero():
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = ctx.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def poly_inv_mod(a: Poly, m: Poly) -> Poly:
    if m.degree < 1:
        raise NotInvertibleError("modulus must have degree >= 1")
    g, s, _ = poly_ext_gcd(poly_mod(a, m), m)
    if g.degree != 0:
        raise NotInvertibleError(f"gcd({render_poly(a)}, {render_poly(m)}) = {render_poly(g)}")
    return poly_mod(s, m)


def reversal(r: Poly) -> Poly:
    """x^deg(r) * r(1/x), without normalisation."""
    return Poly._raw(r.ctx, _strip(list(reversed(r.coeffs))))


def poly_reciprocal(r: Poly) -> Poly:
    """Monic reciprocal: x^deg(r) r(1/x) divided by the lowest nonzero coefficient.

    The zero polynomial maps to zero.
    """
    if r.is_zero():
        return r
    return reversal(r).scale(r.ctx.inv(r.low))


def omega(ctx: FieldCtx, k: int, arg_power: int = 1) -> Poly:
    """sum_{i<k} x^(i*arg_power)."""
    if k < 1 or arg_power < 1:
        raise ValueError("k and arg_power must be positive")
    coeffs = [0] * ((k - 1) * arg_power + 1)
    for i in range(k):
        coeffs[i * arg_power] = 1
    return Poly(ctx, coeffs)


def poly_mulmod(a: Poly, b: Poly, modulus: Poly) -> Poly:
    return poly_mod(a * b, modulus)


def mod_xk_minus_1(a: Poly, k: int) -> Poly:
    """Reduce modulo x^k - 1 by folding exponents."""
    if len(a.coeffs) <= k:
        return a
    p = a.ctx.p
    out = [0] * k
    for i, c in enumerate(a.coeffs):
        out[i % k] += c
    return Poly._raw(a.ctx, _strip([c % p for c in out]))


def x_pow_mod(e: int, m: Poly) -> Poly:
    """x^e mod m for e >= 0."""
    ctx = m.ctx
    result = Poly.one(ctx) if m.degree > 0 else Poly.zero(ctx)
    base = poly_mod(Poly.monomial(ctx, 1), m)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m)
        base = poly_mulmod(base, base, m)
        e >>= 1
    return result


def render_poly(f: Poly) -> str:
    """Ascending space-separated residues; ``0`` for the zero polynomial."""
    if f.is_zero():
        return "0"
    return " ".join(str(c) for c in f.coeffs)


def parse_poly(ctx: FieldCtx, text: str, line=None) -> Poly:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty polynomial", line)
    coeffs = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad residue {tok!r}", line) from None
        if not 0 <= v < ctx.p:
            raise ParseError(f"residue {v} out of range for q={ctx.p}", line)
        coeffs.append(v)
    return Poly(ctx, coeffs)
