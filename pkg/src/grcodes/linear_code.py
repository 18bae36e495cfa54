"""Linear codes over F_q held as canonical reduced-row-echelon generator matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .field_tower import FieldError, FieldTower, make_tower

DEFAULT_DISTANCE_CAP = 10**8
# codewords materialised per numpy block during enumeration
_BLOCK_WORDS = 1 << 17


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, needed: int, cap: int, what: str = "codewords"):
        super().__init__(f"{needed} {what} needed, cap is {cap}")
        self.needed = needed
        self.cap = cap


# -- linear algebra over the base field --------------------------------------


def rref(tower: FieldTower, rows: Iterable[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_q; zero rows are dropped."""
    F = tower.base
    M = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        if inv != 1:
            M[r] = [F.mul(inv, x) for x in M[r]]
        row = M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = F.neg(M[i][c])
                Mi = M[i]
                M[i] = [F.add(a, F.mul(f, b)) if b else a for a, b in zip(Mi, row)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(tower: FieldTower, rows: Iterable[Sequence[int]], ncols: int) -> int:
    return len(rref(tower, rows, ncols)[1])


def nullspace(tower: FieldTower, rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of {x : M x = 0} over F_q, one vector per free column."""
    F = tower.base
    R, pivots = rref(tower, rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return basis


def _is_nonsingular(F, cols: list[list[int]]) -> bool:
    """Gaussian elimination on a small square matrix given as a list of rows."""
    M = [list(r) for r in cols]
    n = len(M)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return False
        M[c], M[piv] = M[piv], M[c]
        inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = F.neg(F.mul(M[i][c], inv))
                M[i] = [F.add(a, F.mul(f, b)) for a, b in zip(M[i], M[c])]
    return True


# -- the code type -------------------------------------------------------------


@dataclass(frozen=True)
class LinearCode:
    tower: FieldTower
    n: int
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return self.tower.q

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def generator(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def contains(self, v: Sequence[int]) -> bool:
        F = self.tower.base
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                f = F.neg(c)
                v = [F.add(a, F.mul(f, b)) if b else a for a, b in zip(v, row)]
        return not any(v)

    def encode(self, message: Sequence[int]) -> list[int]:
        F = self.tower.base
        out = [0] * self.n
        for m, row in zip(message, self.rows):
            if m:
                out = [F.add(a, F.mul(m, b)) for a, b in zip(out, row)]
        return out


def from_rows(tower: FieldTower, n: int, rows: Iterable[Sequence[int]]) -> LinearCode:
    rows = [list(r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row of length {len(r)} in a length-{n} code")
        for x in r:
            if not tower.is_base(x):
                raise FieldError(f"entry {x} is not in F_{tower.q}")
    R, pivots = rref(tower, rows, n)
    return LinearCode(tower, n, tuple(tuple(r) for r in R), tuple(pivots))


def zero_code(tower: FieldTower, n: int) -> LinearCode:
    return from_rows(tower, n, [])


def full_code(tower: FieldTower, n: int) -> LinearCode:
    return from_rows(tower, n, [[int(i == j) for j in range(n)] for i in range(n)])


def _same_space(C: LinearCode, D: LinearCode) -> None:
    if C.tower != D.tower or C.n != D.n:
        raise ValueError("codes live in different ambient spaces")


def equals(C: LinearCode, D: LinearCode) -> bool:
    _same_space(C, D)
    return C.rows == D.rows


def dual(C: LinearCode) -> LinearCode:
    return from_rows(C.tower, C.n, nullspace(C.tower, C.rows, C.n))


def diag_scale(C: LinearCode, theta: Sequence[int]) -> LinearCode:
    """The code {(theta_1 x_1, ..., theta_n x_n) : x in C}."""
    F = C.tower.base
    if len(theta) != C.n:
        raise ValueError("multiplier vector has the wrong length")
    if any(t == 0 for t in theta):
        raise ValueError("multipliers must be nonzero")
    return from_rows(C.tower, C.n, [[F.mul(t, x) for t, x in zip(theta, r)] for r in C.rows])


def schur_square(C: LinearCode) -> LinearCode:
    F = C.tower.base
    prods = [
        [F.mul(a, b) for a, b in zip(C.rows[i], C.rows[j])]
        for i in range(C.k)
        for j in range(i, C.k)
    ]
    return from_rows(C.tower, C.n, prods)


def shift(v: Sequence[int], eta: int, F) -> list[int]:
    """(c_0, ..., c_{n-1}) -> (eta*c_{n-1}, c_0, ..., c_{n-2})."""
    return [F.mul(eta, v[-1])] + list(v[:-1])


def is_constacyclic(C: LinearCode, eta: int) -> bool:
    if eta == 0:
        raise ValueError("eta must be nonzero")
    if not C.tower.is_base(eta):
        raise FieldError("eta must lie in F_q")
    return all(C.contains(shift(r, eta, C.tower.base)) for r in C.rows)


def is_cyclic(C: LinearCode) -> bool:
    return is_constacyclic(C, 1)


def is_mds(C: LinearCode) -> bool:
    """Every k-subset of generator columns is nonsingular."""
    k, n = C.k, C.n
    if not 1 <= k <= n:
        raise ValueError("is_mds needs 1 <= k <= n")
    if k == n:
        return True
    F = C.tower.base
    cols = [[r[j] for r in C.rows] for j in range(n)]
    # an MDS code has pivots on the first k columns; quick reject otherwise
    if C.pivots != tuple(range(k)):
        return False
    # with G = [I | A], every square minor of A must be nonzero (k=1: all entries)
    A = [[r[j] for j in range(k, n)] for r in C.rows]
    if any(x == 0 for row in A for x in row):
        return False
    for subset in itertools.combinations(range(n), k):
        if not _is_nonsingular(F, [cols[j] for j in subset]):
            return False
    return True


# -- enumeration ------------------------------------------------------------------


def projective_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def _iter_projective_blocks(C: LinearCode, cap: int):
    """Yield numpy blocks covering one codeword per nonzero scalar class."""
    F = C.tower.base
    q, k, n = C.q, C.k, C.n
    needed = projective_count(q, k)
    if needed > cap:
        raise CapExceeded(needed, cap)
    G = np.array(C.rows, dtype=np.int64).reshape(k, n)
    multiples = [
        np.array([[F.mul(c, x) for x in C.rows[i]] for c in range(q)], dtype=np.int64) for i in range(k)
    ]
    for lead in range(k):
        tail = list(range(lead + 1, k))
        b = 0
        while b < len(tail) and q ** (b + 1) <= _BLOCK_WORDS:
            b += 1
        inner, outer = tail[len(tail) - b:], tail[: len(tail) - b]
        block = G[lead][None, :].copy()
        for i in inner:
            block = F.vadd(block[:, None, :], multiples[i][None, :, :]).reshape(-1, n)
        if not outer:
            yield block
            continue
        for coeffs in itertools.product(range(q), repeat=len(outer)):
            offset = np.zeros(n, dtype=np.int64)
            for c, i in zip(coeffs, outer):
                if c:
                    offset = F.vadd(offset, multiples[i][c])
            yield F.vadd(block, offset[None, :])


def min_distance(C: LinearCode, cap: int = DEFAULT_DISTANCE_CAP) -> int:
    """Exact minimum weight by enumerating one codeword per projective class."""
    if C.k < 1:
        raise ValueError("minimum distance of the zero code is undefined")
    best = C.n
    for block in _iter_projective_blocks(C, cap):
        w = int(np.count_nonzero(block, axis=1).min())
        if w < best:
            best = w
            if best == 1:
                break
    return best


def weight_distribution(C: LinearCode, cap: int = DEFAULT_DISTANCE_CAP) -> list[int]:
    counts = np.zeros(C.n + 1, dtype=np.int64)
    counts[0] = 1
    if C.k == 0:
        return counts.tolist()
    for block in _iter_projective_blocks(C, cap):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=C.n + 1) * (C.q - 1)
    counts[0] = 1
    return counts.tolist()


# -- hermitian puncture code ------------------------------------------------------


def subfield_embedding(tower: FieldTower) -> tuple[FieldTower, list[int]]:
    """For F_Q with Q = q^2, return the tower of F_q and the image of each F_q encoding in F_Q.

    The embedding sends the generator of the small base modulus to its
    enc-smallest root inside F_Q.
    """
    if tower.h % 2:
        raise FieldError(f"F_{tower.q} is not a quadratic extension")
    small = make_tower(tower.p, tower.h // 2)
    F = tower.base
    m = small.base_modulus

    def ev(x: int, coeffs) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    rho = next(x for x in range(tower.q) if ev(x, m) == 0)
    p, hs = small.p, small.h
    image = []
    for y in range(small.q):
        digits = [(y // p**i) % p for i in range(hs)]
        image.append(ev(rho, digits))
    return small, image


def hermitian_puncture_code(C: LinearCode) -> LinearCode:
    """P(C) = {x in F_q^n : sum_i x_i u_i conj(v_i) = 0 for all u, v in C} with q = sqrt(Q).

    Each F_Q constraint is split into two F_q constraints along the basis
    {1, gamma} of F_Q over F_q.
    """
    T = C.tower
    F = T.base
    small, image = subfield_embedding(T)
    back = {v: i for i, v in enumerate(image)}
    conj = T.hermitian_conj
    gamma = next(x for x in range(T.q) if conj(x) != x)
    denom_inv = F.inv(F.sub(gamma, conj(gamma)))
    constraints = []
    for u in C.rows:
        for v in C.rows:
            w = [F.mul(a, conj(b)) for a, b in zip(u, v)]
            comp1, comp2 = [], []
            for x in w:
                x2 = F.mul(F.sub(x, conj(x)), denom_inv)
                x1 = F.sub(x, F.mul(gamma, x2))
                comp1.append(back[x1])
                comp2.append(back[x2])
            constraints.append(comp1)
            constraints.append(comp2)
    return from_rows(small, C.n, nullspace(small, constraints, C.n))


# -- matrix file format -------------------------------------------------------------


class MatrixFormatError(ValueError):
    pass


def format_matrix(C: LinearCode) -> str:
    lines = [f"{C.tower.p} {C.tower.h} {C.n} {C.k}"]
    lines += [" ".join(str(x) for x in r) for r in C.rows]
    return "\n".join(lines) + "\n"


def write_matrix(C: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_matrix(C))


def parse_matrix(text: str) -> LinearCode:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        p, h, n, k = (int(t) for t in lines[0].split())
        rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise MatrixFormatError(f"malformed matrix file: {exc}") from None
    if len(rows) != k:
        raise MatrixFormatError(f"header announces {k} rows, found {len(rows)}")
    try:
        tower = make_tower(p, h)
        return from_rows(tower, n, rows)
    except (FieldError, ValueError) as exc:
        raise MatrixFormatError(str(exc)) from None


def read_matrix(path: str | Path) -> LinearCode:
    return parse_matrix(Path(path).read_text())
