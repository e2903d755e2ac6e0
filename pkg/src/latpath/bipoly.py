"""Sparse bivariate polynomials in ``x, y`` with exact integer coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class BiPoly:
    """Immutable polynomial ``sum c[i, j] x^i y^j``; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            c = int(c)
            if c:
                key = (int(i), int(j))
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def _raw(cls, terms: dict) -> BiPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> tuple[int, int]:
        """Maximal x-degree and maximal y-degree (``(-1, -1)`` for zero)."""
        if not self._terms:
            return (-1, -1)
        return max(i for i, _ in self._terms), max(j for _, j in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, int):
            if other == 0:
                return BiPoly()
            return BiPoly._raw({k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = BiPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, di: int = 0, dj: int = 0) -> BiPoly:
        """Multiply by the monomial ``x^di y^dj``."""
        return BiPoly._raw({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- substitutions -----------------------------------------------------

    def eval_at(self, x: Number, y: Number) -> Number:
        """Exact evaluation; rational inputs give a ``Fraction``."""
        total: Number = 0
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def swap(self) -> BiPoly:
        """``p(y, x)``."""
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def at_x_one(self) -> BiPoly:
        """``p(1, y)`` as a polynomial in ``y`` alone."""
        out: dict[tuple[int, int], int] = {}
        for (_, j), c in self._terms.items():
            out[(0, j)] = out.get((0, j), 0) + c
        return BiPoly._raw({k: c for k, c in out.items() if c})

    def div_x_minus_one(self) -> tuple[BiPoly, BiPoly]:
        """Quotient and remainder of division by ``x - 1``.

        The remainder is ``p(1, y)``; it is zero exactly when ``x - 1`` divides ``p``.
        """
        by_j: dict[int, dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            by_j.setdefault(j, {})[i] = c
        quot: dict[tuple[int, int], int] = {}
        rem: dict[tuple[int, int], int] = {}
        for j, col in by_j.items():
            # synthetic division of sum_i col[i] x^i by (x - 1)
            carry = 0
            for i in range(max(col), 0, -1):
                carry += col.get(i, 0)
                if carry:
                    quot[(i - 1, j)] = carry
            carry += col.get(0, 0)
            if carry:
                rem[(0, j)] = carry
        return BiPoly._raw(quot), BiPoly._raw(rem)

    # -- serialisation -----------------------------------------------------

    def to_triples(self) -> list[list]:
        """``[[i, j, "coefficient"], ...]`` sorted by ``(i, j)``."""
        return [[i, j, str(c)] for (i, j), c in self.items()]

    @classmethod
    def from_triples(cls, triples: Iterable) -> BiPoly:
        return cls({(int(i), int(j)): int(c) for i, j, c in triples})

    def to_json(self) -> str:
        return json.dumps(self.to_triples())

    def render(self, names: tuple[str, str] = ("x", "y")) -> str:
        """Text form: decreasing total degree, ties by decreasing x-degree."""
        if not self._terms:
            return "0"
        order = sorted(self._terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        parts = []
        for n, (i, j) in enumerate(order):
            c = self._terms[(i, j)]
            factors = []
            for name, e in zip(names, (i, j)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if n == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BiPoly({self.render()!r})"


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)
ONE = BiPoly.const(1)
ZERO = BiPoly()


def render_univariate(coeffs: list[int], name: str = "lambda") -> str:
    """Render ``coeffs[d]`` as the coefficient of ``name^d``, highest degree first."""
    terms = {(d, 0): c for d, c in enumerate(coeffs) if c}
    return BiPoly(terms).render((name, "_"))
