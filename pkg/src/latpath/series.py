"""Truncated power series in ``z`` with :class:`BiPoly` coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bipoly import ONE, X, Y, ZERO, BiPoly
from .closedforms import k_catalan
from .errors import DomainError

DEFAULT_ORDER = 8


@dataclass(frozen=True)
class ZSeries:
    """``coeffs[n]`` is the coefficient of ``z^n`` for ``n = 0..order``."""

    coeffs: tuple[BiPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coeffs", tuple(BiPoly.const(c) if isinstance(c, int) else c for c in self.coeffs)
        )

    @classmethod
    def of(cls, values: Sequence, order: int) -> ZSeries:
        vals = list(values)[: order + 1]
        vals += [ZERO] * (order + 1 - len(vals))
        return cls(tuple(vals))

    @classmethod
    def constant(cls, c: BiPoly | int, order: int) -> ZSeries:
        return cls.of([c], order)

    @classmethod
    def z(cls, order: int) -> ZSeries:
        return cls.of([ZERO, ONE], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> BiPoly:
        return self.coeffs[n]

    def _lift(self, other) -> ZSeries:
        if isinstance(other, ZSeries):
            return other
        if isinstance(other, (int, BiPoly)):
            return ZSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> ZSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return ZSeries(tuple(self[i] + other[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> ZSeries:
        return ZSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> ZSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> ZSeries:
        return (-self) + other

    def __mul__(self, other) -> ZSeries:
        if isinstance(other, (int, BiPoly)):
            return ZSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, ZSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            if self[i].is_zero():
                continue
            for j in range(n + 1 - i):
                if not other[j].is_zero():
                    out[i + j] = out[i + j] + self[i] * other[j]
        return ZSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ZSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = ZSeries.constant(ONE, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> ZSeries:
        """Multiplicative inverse; defined here only for constant term 1."""
        if self[0] != ONE:
            raise DomainError(f"inverse needs constant term 1, got {self[0]}")
        inv = [ONE]
        for n in range(1, self.order + 1):
            acc = ZERO
            for i in range(1, n + 1):
                if not self[i].is_zero():
                    acc = acc + self[i] * inv[n - i]
            inv.append(-acc)
        return ZSeries(tuple(inv))

    def times_z(self) -> ZSeries:
        return ZSeries((ZERO,) + self.coeffs[:-1])


def catalan_series(k: int, order: int = DEFAULT_ORDER) -> ZSeries:
    return ZSeries(tuple(BiPoly.const(k_catalan(k, n)) for n in range(order + 1)))


def tutte_gf_rhs(k: int, order: int = DEFAULT_ORDER) -> ZSeries:
    """Expand ``1 + x z y^k / (1 - z sum_l y^l C^(k-l+1)) / (1 - x z C^k)``."""
    if order < 0:
        raise DomainError("order must be non-negative")
    C = catalan_series(k, order)
    # sum_{l=1..k} y^l C^(k-l+1), accumulated as ((y C + y^2) C + y^3) C ...
    acc = ZSeries.constant(ZERO, order)
    for l in range(1, k + 1):
        acc = (acc + Y**l) * C
    C_k = C**k
    left = (1 - acc.times_z()).inverse()
    right = (1 - (C_k * X).times_z()).inverse()
    return 1 + (left * right).times_z() * (X * Y**k)
