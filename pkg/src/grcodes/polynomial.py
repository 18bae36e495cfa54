"""Univariate polynomials with coefficients in a :class:`FieldTower`."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field_tower import FieldError, FieldTower

# degree of the zero polynomial
NEG_INF = -math.inf


@dataclass(frozen=True, eq=False)
class Poly:
    """Coefficient encodings, low degree first, trailing zeros stripped."""

    tower: FieldTower
    coeffs: tuple[int, ...]

    def __init__(self, tower: FieldTower, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < tower.Q:
                raise FieldError(f"coefficient {c} outside F_{tower.Q}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, tower: FieldTower, degree: int, coeff: int = 1) -> "Poly":
        return cls(tower, [0] * degree + [coeff])

    @classmethod
    def x_n_minus(cls, tower: FieldTower, n: int, eta: int) -> "Poly":
        """X^n - eta."""
        return cls(tower, [tower.neg(eta)] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> list[int]:
        return [self.coeff(i) for i in range(n)]

    def _check(self, other: "Poly") -> None:
        if other.tower != self.tower:
            raise FieldError("polynomials over different towers")

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.tower == other.tower and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.tower, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        T = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(T, [T.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.tower, [self.tower.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        T = self.tower
        if self.is_zero() or other.is_zero():
            return Poly(T)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = T.add(out[i + j], T.mul(a, b))
        return Poly(T, out)

    def scale(self, c: int) -> "Poly":
        return Poly(self.tower, [self.tower.mul(c, a) for a in self.coeffs])

    def eval(self, x: int) -> int:
        T = self.tower
        acc = 0
        for c in reversed(self.coeffs):
            acc = T.add(T.mul(acc, x), c)
        return acc

    __call__ = eval

    def divmod(self, g: "Poly") -> tuple["Poly", "Poly"]:
        """Schoolbook Euclidean division: self = quotient * g + remainder."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        T = self.tower
        rem = list(self.coeffs)
        dg = len(g.coeffs) - 1
        lead_inv = T.inv(g.coeffs[-1])
        quot = [0] * max(0, len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t = T.mul(c, lead_inv)
            quot[i - dg] = t
            for j, gc in enumerate(g.coeffs):
                rem[i - dg + j] = T.sub(rem[i - dg + j], T.mul(t, gc))
        return Poly(T, quot), Poly(T, rem[:dg])

    def __mod__(self, g: "Poly") -> "Poly":
        return self.divmod(g)[1]

    def __floordiv__(self, g: "Poly") -> "Poly":
        return self.divmod(g)[0]

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"Poly(F{self.tower.Q}, [{self.to_text()}])"


def product_of_linear_factors(tower: FieldTower, roots: Sequence[int]) -> Poly:
    """The monic polynomial prod (X - r) over the given multiset of roots."""
    out = [1]
    for r in roots:
        nr = tower.neg(r)
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] = tower.add(nxt[i + 1], c)
            nxt[i] = tower.add(nxt[i], tower.mul(c, nr))
        out = nxt
    return Poly(tower, out)


def divides(g: Poly, f: Poly) -> bool:
    if g.is_zero():
        raise ZeroDivisionError("divides() needs a nonzero divisor")
    return (f % g).is_zero()


def coefficients_in_subfield(f: Poly) -> bool:
    """True iff every coefficient is fixed by x -> x^q."""
    return all(f.tower.is_base(c) for c in f.coeffs)


def poly_from_text(tower: FieldTower, text: str) -> Poly:
    return Poly(tower, [int(t) for t in text.split()])
