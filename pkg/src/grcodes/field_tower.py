"""Arithmetic in F_q and its quadratic extension F_{q^2}.

Elements are plain integers (their canonical encodings).  An element of
F_q with coordinates ``(c_0, ..., c_{h-1})`` over F_p encodes as
``sum(c_i * p**i)``; an element ``a + b*Y`` of F_{q^2} encodes as
``a + q*b`` where ``Y`` is a root of the extension modulus.  F_q therefore
sits inside F_{q^2} as the encodings ``0 .. q-1``.

All choices (moduli, primitive element, beta) are made by deterministic
"smallest encoding" rules so the same ``(p, h)`` always gives the same tower.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

MAX_EXT_ORDER = 2**32
_EXT_TABLE_LIMIT = 2**20
_ADD_TABLE_LIMIT = 256


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, h)`` with ``q == p**h``, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = prime_factors(q)
    if len(factors) != 1:
        return None
    p = factors[0]
    h = 0
    while q > 1:
        q //= p
        h += 1
    return p, h


def prime_powers_up_to(qmax: int) -> list[int]:
    return [q for q in range(2, qmax + 1) if prime_power(q) is not None]


# -- F_p[X] helpers on digit lists (low degree first) --------------------------


def _digits(x: int, p: int, h: int) -> list[int]:
    out = []
    for _ in range(h):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _polymod_fp(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial m over F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible_fp(m: list[int], p: int) -> bool:
    """Trial division of monic m by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg == 1:
        return True
    if m[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            f = _digits(low, p, d) + [1]
            if not any(_polymod_fp(m, f, p)):
                return False
    return True


class BaseField:
    """The field F_q = F_p[X]/(modulus), elements encoded as integers in [0, q)."""

    def __init__(self, p: int, h: int):
        self.p = p
        self.h = h
        self.q = p**h
        self.modulus = self._find_modulus()
        self._build_tables()

    def _find_modulus(self) -> tuple[int, ...]:
        # ascending integer order == lexicographic order with the low degree last
        for low in range(self.q):
            m = _digits(low, self.p, self.h) + [1]
            if _is_irreducible_fp(m, self.p):
                return tuple(m)
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover

    def _slow_mul(self, a: int, b: int) -> int:
        p, h = self.p, self.h
        da, db = _digits(a, p, h), _digits(b, p, h)
        prod = [0] * (2 * h - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _undigits(_polymod_fp(prod, list(self.modulus), p), p)

    def _build_tables(self) -> None:
        p, h, q = self.p, self.h, self.q
        if h == 1:
            self._neg = [(-x) % p for x in range(q)]
        else:
            self._neg = [_undigits([(-d) % p for d in _digits(x, p, h)], p) for x in range(q)]
        order = q - 1
        factors = prime_factors(order) if order > 1 else []
        gen = None
        for g in range(1, q):
            if all(self._slow_pow(g, order // f) != 1 for f in factors):
                gen = g
                break
        assert gen is not None
        self.generator = gen
        exp = [1] * order
        x = 1
        for i in range(1, order):
            x = self._slow_mul(x, gen)
            exp[i] = x
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp + exp
        self._log = log
        self._add_table = None
        self._np_add = None
        if p != 2 and h > 1 and q <= _ADD_TABLE_LIMIT:
            self._add_table = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]

    def _slow_pow(self, x: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._slow_mul(r, x)
            x = self._slow_mul(x, x)
            n >>= 1
        return r

    def _digit_add(self, a: int, b: int) -> int:
        p, h = self.p, self.h
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, h), _digits(b, p, h))], p)

    # -- scalar ops on encodings --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.h == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.q)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def log(self, a: int) -> int:
        return self._log[a]

    # -- vectorised addition for codeword enumeration --

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.h == 1:
            s = a + b
            s[s >= self.p] -= self.p
            return s
        if self.q <= 2048:
            if self._np_add is None:
                t = np.empty((self.q, self.q), dtype=np.int32)
                for x in range(self.q):
                    for y in range(self.q):
                        t[x, y] = self.add(x, y)
                self._np_add = t
            return self._np_add[a, b]
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        scale = 1
        for _ in range(self.h):
            out += ((a // scale % self.p + b // scale % self.p) % self.p) * scale
            scale *= self.p
        return out


class FieldTower:
    """The pair (F_q, F_{q^2}) with the distinguished constants omega, alpha, beta.

    Arithmetic methods take and return canonical integer encodings.  Calling
    the tower on an integer wraps it in a :class:`FieldElement`.
    """

    def __init__(self, p: int, h: int):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if h < 1:
            raise FieldError("extension degree h must be >= 1")
        if p ** (2 * h) > MAX_EXT_ORDER:
            raise FieldError(f"p^(2h) = {p}^{2 * h} exceeds the enumeration guard 2^32")
        self.p = p
        self.h = h
        self.q = p**h
        self.Q = self.q * self.q
        self.base = BaseField(p, h)
        self.base_modulus = self.base.modulus
        c0, c1 = self._find_ext_modulus()
        self.ext_modulus = (c0, c1, 1)
        self._c0, self._c1 = c0, c1
        self._exp = None
        self._log = None
        self.omega = self._find_omega()
        self.e = self.omega
        self.alpha = self.pow(self.omega, self.q - 1)
        self.beta = next(x for x in range(self.Q) if self.add(x, self.frobenius_q(x)) == 1)

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, h={self.h})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldTower) and (self.p, self.h) == (other.p, other.h)

    def __hash__(self) -> int:
        return hash((self.p, self.h))

    def __reduce__(self):
        return make_tower, (self.p, self.h)

    def __call__(self, x: int) -> "FieldElement":
        return FieldElement(self, x)

    def _find_ext_modulus(self) -> tuple[int, int]:
        F = self.base
        for c1 in range(self.q):
            for c0 in range(self.q):
                if all(F.add(F.add(F.mul(y, y), F.mul(c1, y)), c0) != 0 for y in range(self.q)):
                    return c0, c1
        raise AssertionError("no irreducible quadratic found")  # pragma: no cover

    def _find_omega(self) -> int:
        order = self.Q - 1
        factors = prime_factors(order)
        for x in range(1, self.Q):
            if all(self.pow(x, order // f) != 1 for f in factors):
                return x
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _ensure_tables(self) -> bool:
        if self._exp is not None:
            return True
        if self.Q > _EXT_TABLE_LIMIT or not hasattr(self, "omega"):
            return False
        order = self.Q - 1
        exp = [1] * order
        x = 1
        for i in range(1, order):
            x = self._struct_mul(x, self.omega)
            exp[i] = x
        log = [0] * self.Q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp + exp
        self._log = log
        return True

    # -- membership and iteration --

    def is_base(self, x: int) -> bool:
        return 0 <= x < self.q

    def elements(self) -> range:
        return range(self.Q)

    def base_elements(self) -> range:
        return range(self.q)

    def nonzero_base(self) -> range:
        return range(1, self.q)

    # -- arithmetic on encodings --

    def add(self, x: int, y: int) -> int:
        q, F = self.q, self.base
        if x < q and y < q:
            return F.add(x, y)
        return F.add(x % q, y % q) + q * F.add(x // q, y // q)

    def neg(self, x: int) -> int:
        q, F = self.q, self.base
        return F.neg(x % q) + q * F.neg(x // q)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def _struct_mul(self, x: int, y: int) -> int:
        q, F = self.q, self.base
        a, b = x % q, x // q
        c, d = y % q, y // q
        bd = F.mul(b, d)
        lo = F.sub(F.mul(a, c), F.mul(bd, self._c0))
        hi = F.sub(F.add(F.mul(a, d), F.mul(b, c)), F.mul(bd, self._c1))
        return lo + q * hi

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if x < self.q and y < self.q:
            return self.base.mul(x, y)
        if self._exp is not None or self._ensure_tables():
            return self._exp[self._log[x] + self._log[y]]
        return self._struct_mul(x, y)

    def pow(self, x: int, n: int) -> int:
        if x == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        order = self.Q - 1
        n %= order
        if self._exp is not None or self._ensure_tables():
            return self._exp[(self._log[x] * n) % order]
        r = 1
        while n:
            if n & 1:
                r = self._struct_mul(r, x)
            x = self._struct_mul(x, x)
            n >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if x < self.q:
            return self.base.inv(x)
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.Q - 1
        for f in prime_factors(self.Q - 1):
            while n % f == 0 and self.pow(x, n // f) == 1:
                n //= f
        return n

    def frobenius_q(self, x: int) -> int:
        """x -> x^q; the conjugate of a + bY is a + b*(-c1 - Y)."""
        q, F = self.q, self.base
        a, b = x % q, x // q
        if b == 0:
            return a
        return F.sub(a, F.mul(b, self._c1)) + q * F.neg(b)

    def norm(self, x: int) -> int:
        return self.mul(x, self.frobenius_q(x))

    def decompose(self, x: int) -> tuple[int, int]:
        """Coordinates (x1, x2) in F_q with x = x1 + e*x2 and e = omega."""
        q, F = self.q, self.base
        w0, w1 = self.omega % q, self.omega // q
        x2 = F.div(x // q, w1)
        x1 = F.sub(x % q, F.mul(w0, x2))
        return x1, x2

    def recompose(self, x1: int, x2: int) -> int:
        return self.add(x1, self.mul(self.e, x2))

    def hermitian_conj(self, x: int) -> int:
        """x -> x^(p^(h/2)) on F_q; only defined when h is even."""
        if self.h % 2:
            raise FieldError("hermitian conjugation needs an even extension degree h")
        if not self.is_base(x):
            raise FieldError("hermitian conjugation acts on F_q elements")
        return self.base.pow(x, self.p ** (self.h // 2))

    def sqrt_char2(self, x: int) -> int:
        """The unique square root of an F_q element when p = 2."""
        if self.p != 2:
            raise FieldError("unique square roots only in characteristic 2")
        return self.base.pow(x, self.q // 2)

    def header(self) -> str:
        base = " ".join(str(c) for c in self.base_modulus)
        ext = " ".join(str(c) for c in self.ext_modulus)
        return f"{self.p} {self.h}\n{base}\n{ext}"

    def iter_powers(self, x: int, count: int) -> Iterator[int]:
        y = 1
        for _ in range(count):
            yield y
            y = self.mul(y, x)


@lru_cache(maxsize=None)
def make_tower(p: int, h: int) -> FieldTower:
    return FieldTower(p, h)


def tower_for_order(q: int) -> FieldTower:
    pp = prime_power(q)
    if pp is None:
        raise FieldError(f"{q} is not a prime power")
    return make_tower(*pp)


class FieldElement:
    """An encoding bound to its tower, with the usual operators."""

    __slots__ = ("tower", "value")

    def __init__(self, tower: FieldTower, value: int):
        if not 0 <= value < tower.Q:
            raise FieldError(f"encoding {value} outside F_{tower.Q}")
        self.tower = tower
        self.value = int(value)

    def _other(self, y) -> int:
        if isinstance(y, FieldElement):
            if y.tower != self.tower:
                raise FieldError("operands belong to different towers")
            return y.value
        if isinstance(y, int):
            return y % self.tower.p
        return NotImplemented

    def __add__(self, y):
        return FieldElement(self.tower, self.tower.add(self.value, self._other(y)))

    __radd__ = __add__

    def __sub__(self, y):
        return FieldElement(self.tower, self.tower.sub(self.value, self._other(y)))

    def __rsub__(self, y):
        return FieldElement(self.tower, self.tower.sub(self._other(y), self.value))

    def __mul__(self, y):
        return FieldElement(self.tower, self.tower.mul(self.value, self._other(y)))

    __rmul__ = __mul__

    def __truediv__(self, y):
        return FieldElement(self.tower, self.tower.div(self.value, self._other(y)))

    def __neg__(self):
        return FieldElement(self.tower, self.tower.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.tower, self.tower.pow(self.value, n))

    def inv(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.inv(self.value))

    def frobenius(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.frobenius_q(self.value))

    def __eq__(self, y) -> bool:
        if isinstance(y, FieldElement):
            return self.tower == y.tower and self.value == y.value
        if isinstance(y, int):
            return self.value == self._other(y)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.tower.p, self.tower.h, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"F{self.tower.Q}({self.value})"
