"""The ring F_p[v]/(v^3 - v) in idempotent coordinates.

With v1 = 1 - v^2, v2 = (v + v^2)/2, v3 = (v^2 - v)/2 every element is
r1*v1 + r2*v2 + r3*v3, and arithmetic is componentwise. The i-th coordinate
equals the evaluation of a + b*v + c*v^2 at v = 0, 1, -1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatchError, ParseError
from .field import FieldCtx, Fq


def _as_int(x):
    return x.value if isinstance(x, Fq) else int(x)


@dataclass(frozen=True)
class RElem:
    ctx: FieldCtx
    comps: tuple

    def __post_init__(self):
        p = self.ctx.p
        object.__setattr__(self, "comps", tuple(_as_int(c) % p for c in self.comps))
        if len(self.comps) != 3:
            raise ValueError("RElem needs exactly three components")

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, (0, 0, 0))

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1, 1, 1))

    @classmethod
    def idempotent(cls, ctx, i):
        comps = [0, 0, 0]
        comps[i - 1] = 1
        return cls(ctx, tuple(comps))

    @classmethod
    def v(cls, ctx):
        return r_from_standard(ctx, 0, 1, 0)

    def _check(self, other):
        if not isinstance(other, RElem):
            return None
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"F_{self.ctx.p} vs F_{other.ctx.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return r_add(self, other)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        return RElem(self.ctx, tuple((a - b) % p for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        p = self.ctx.p
        return RElem(self.ctx, tuple(-a % p for a in self.comps))

    def __mul__(self, other):
        if isinstance(other, (int, Fq)):
            c = _as_int(other)
            return RElem(self.ctx, tuple(a * c for a in self.comps))
        other = self._check(other)
        if other is None:
            return NotImplemented
        return r_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.comps)

    def is_unit(self):
        return all(self.comps)

    def standard(self):
        return r_to_standard(self)

    def __repr__(self):
        a, b, c = self.standard()
        return f"RElem({a}+{b}v+{c}v^2 mod {self.ctx.p})"


def r_from_standard(ctx: FieldCtx, a, b, c) -> RElem:
    """a + b*v + c*v^2 -> idempotent coordinates (a, a+b+c, a-b+c)."""
    a, b, c = _as_int(a), _as_int(b), _as_int(c)
    return RElem(ctx, (a, a + b + c, a - b + c))


def r_to_standard(r: RElem):
    p = r.ctx.p
    r1, r2, r3 = r.comps
    half = r.ctx.inv(2)
    a = r1
    b = (r2 - r3) * half % p
    c = ((r2 + r3) * half - r1) % p
    return a, b, c


def r_add(a: RElem, b: RElem) -> RElem:
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"F_{a.ctx.p} vs F_{b.ctx.p}")
    return RElem(a.ctx, tuple(x + y for x, y in zip(a.comps, b.comps)))


def r_mul(a: RElem, b: RElem) -> RElem:
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"F_{a.ctx.p} vs F_{b.ctx.p}")
    return RElem(a.ctx, tuple(x * y for x, y in zip(a.comps, b.comps)))


def r_project(r: RElem, i: int) -> Fq:
    if i not in (1, 2, 3):
        raise ValueError("projection index must be 1, 2 or 3")
    return Fq(r.comps[i - 1], r.ctx)


def std_mul(ctx: FieldCtx, x, y):
    """Multiply two standard-basis triples using v^3 = v directly.

    Independent of the idempotent machinery; used as a cross-check.
    """
    a1, b1, c1 = x
    a2, b2, c2 = y
    p = ctx.p
    # (a1 + b1 v + c1 v^2)(a2 + b2 v + c2 v^2) with v^3 = v, v^4 = v^2
    d0 = a1 * a2
    d1 = a1 * b2 + b1 * a2
    d2 = a1 * c2 + b1 * b2 + c1 * a2
    d3 = b1 * c2 + c1 * b2
    d4 = c1 * c2
    return d0 % p, (d1 + d3) % p, (d2 + d4) % p


def render_standard(r: RElem) -> str:
    a, b, c = r_to_standard(r)
    return f"{a},{b},{c}"


def parse_standard(ctx: FieldCtx, token: str, line=None) -> RElem:
    parts = token.split(",")
    if len(parts) != 3:
        raise ParseError(f"expected a,b,c triple, got {token!r}", line)
    vals = []
    for part in parts:
        try:
            v = int(part)
        except ValueError:
            raise ParseError(f"bad residue {part!r} in {token!r}", line) from None
        if not 0 <= v < ctx.p:
            raise ParseError(f"residue {v} out of range for q={ctx.p}", line)
        vals.append(v)
    return r_from_standard(ctx, *vals)
