"""Prime field F_p for odd primes p."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatchError, FieldDivisionError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldCtx:
    """Arithmetic context for F_p.

    Only odd primes are accepted: the idempotent basis of the ring needs 1/2.
    Residues are plain Python ints in ``[0, p)``; :class:`Fq` wraps them when
    context checking is wanted.
    """

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or not _is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime, got {self.p!r}")

    @property
    def q(self) -> int:
        return self.p

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise FieldDivisionError(f"0 has no inverse mod {self.p}")
        # extended Euclid on (a, p)
        r0, r1, s0, s1 = self.p, a, 0, 1
        while r1:
            quo = r0 // r1
            r0, r1 = r1, r0 - quo * r1
            s0, s1 = s1, s0 - quo * s1
        return s0 % self.p

    def __call__(self, value: int) -> "Fq":
        return Fq(value % self.p, self)

    def elements(self):
        return [Fq(v, self) for v in range(self.p)]


@dataclass(frozen=True)
class Fq:
    value: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.p:
            object.__setattr__(self, "value", self.value % self.ctx.p)

    def _check(self, other) -> int:
        if isinstance(other, Fq):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"F_{self.ctx.p} vs F_{other.ctx.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq((self.value + b) % self.ctx.p, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq((self.value - b) % self.ctx.p, self.ctx)

    def __rsub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq((b - self.value) % self.ctx.p, self.ctx)

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq(self.value * b % self.ctx.p, self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        return Fq(-self.value % self.ctx.p, self.ctx)

    def inverse(self) -> "Fq":
        return Fq(self.ctx.inv(self.value), self.ctx)

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return self * self.ctx.inv(b)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fq({self.value} mod {self.ctx.p})"


def fq_arith(a: Fq, b: Fq, op: str) -> Fq:
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"F_{a.ctx.p} vs F_{b.ctx.p}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def fq_inv(a: Fq) -> Fq:
    return a.inverse()
