"""Builders for the code families: (generalised) Reed-Solomon, cyclic and
constacyclic codes, the "GR" root-of-unity codes and their evaluation forms,
and the Segre and Glynn MDS codes.

Coordinates of length-(q+1) codes are indexed by s = 0..q, coordinate s
corresponding to the root of unity alpha^s.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

from .field_tower import FieldError, FieldTower, make_tower
from .linear_code import LinearCode, diag_scale, from_rows
from .polynomial import Poly, coefficients_in_subfield, divides, product_of_linear_factors


class ConstructionError(ValueError):
    pass


class ProjectivePoint(NamedTuple):
    x1: int
    x2: int

    @classmethod
    def normalized(cls, tower: FieldTower, x1: int, x2: int) -> "ProjectivePoint":
        F = tower.base
        if x2:
            return cls(F.div(x1, x2), 1)
        if x1 == 0:
            raise ConstructionError("(0, 0) is not a projective point")
        return cls(1, 0)


def canonical_points(tower: FieldTower) -> list[ProjectivePoint]:
    """F_q in encoding order as (a, 1), then the point at infinity (1, 0)."""
    return [ProjectivePoint(a, 1) for a in range(tower.q)] + [ProjectivePoint(1, 0)]


def roots_of_unity_points(tower: FieldTower) -> list[ProjectivePoint]:
    """Coordinate s carries decompose(omega^s), so (x1 + e*x2)^(q-1) = alpha^s."""
    out = []
    w = 1
    for _ in range(tower.q + 1):
        out.append(ProjectivePoint.normalized(tower, *tower.decompose(w)))
        w = tower.mul(w, tower.omega)
    return out


def rs_base_matrix(tower: FieldTower, k: int, points: Sequence[ProjectivePoint]) -> list[list[int]]:
    """Row j, column s holds x1(s)^j * x2(s)^(k-1-j)."""
    F = tower.base
    if not 1 <= k <= len(points):
        raise ConstructionError(f"k={k} out of range for {len(points)} points")
    normed = [ProjectivePoint.normalized(tower, *pt) for pt in points]
    if len(set(normed)) != len(normed):
        raise ConstructionError("evaluation points must be projectively distinct")
    return [[F.mul(F.pow(x1, j), F.pow(x2, k - 1 - j)) for x1, x2 in points] for j in range(k)]


def grs_code(
    tower: FieldTower,
    k: int,
    points: Sequence[ProjectivePoint] | None = None,
    theta: Sequence[int] | None = None,
) -> LinearCode:
    points = canonical_points(tower) if points is None else points
    C = from_rows(tower, len(points), rs_base_matrix(tower, k, points))
    return C if theta is None else diag_scale(C, theta)


def cyclic_code_from_generator(g: Poly, n: int, eta: int = 1) -> LinearCode:
    """The code spanned by the k = n - deg g shifts of g's coefficient vector."""
    T = g.tower
    if g.is_zero() or g.degree > n:
        raise ConstructionError("generator degree must lie in [0, n]")
    if not coefficients_in_subfield(g):
        raise ConstructionError("generator polynomial has coefficients outside F_q")
    if not divides(g, Poly.x_n_minus(T, n, eta)):
        raise ConstructionError(f"g does not divide X^{n} - {eta}")
    k = n - int(g.degree)
    rows = [[0] * a + list(g.coeffs) + [0] * (k - 1 - a) for a in range(k)]
    return from_rows(T, n, rows)


# -- GR codes: roots of unity in F_{q^2} --------------------------------------


class Case(str, enum.Enum):
    G1_ODD_ODD = "G1_ODD_ODD"
    G1_EVEN_EVEN = "G1_EVEN_EVEN"
    G2_KODD_QEVEN = "G2_KODD_QEVEN"
    G3_KEVEN_QODD = "G3_KEVEN_QODD"


@dataclass(frozen=True)
class GRCase:
    case: Case
    q: int
    k: int
    r: int
    eta: int
    lemma: str

    @property
    def uses_lemma2(self) -> bool:
        return self.lemma == "LEMMA2"


def gr_case(tower: FieldTower, k: int) -> GRCase:
    q = tower.q
    if not 1 <= k <= q:
        raise ConstructionError(f"k={k} must satisfy 1 <= k <= q={q}")
    q_odd, k_odd = q % 2 == 1, k % 2 == 1
    if q_odd and k_odd:
        case, r, lemma = Case.G1_ODD_ODD, (q - k) // 2, "LEMMA1"
    elif not q_odd and not k_odd:
        case, r, lemma = Case.G1_EVEN_EVEN, (q - k) // 2, "LEMMA2"
    elif not q_odd and k_odd:
        case, r, lemma = Case.G2_KODD_QEVEN, (q - k - 1) // 2, "LEMMA1"
    else:
        case, r, lemma = Case.G3_KEVEN_QODD, (q - k + 1) // 2, "LEMMA2"
    if case in (Case.G2_KODD_QEVEN, Case.G3_KEVEN_QODD) and k > q - 1:
        raise ConstructionError(f"k={k} needs k <= q-1 in case {case.value}")
    eta = tower.pow(tower.omega, q + 1) if case is Case.G3_KEVEN_QODD else 1
    return GRCase(case, q, k, r, eta, lemma)


def gr_roots(tower: FieldTower, case: GRCase) -> list[int]:
    """Roots of the generator polynomial; alpha^(-i) is taken as alpha^(q+1-i)."""
    q, r = tower.q, case.r
    a = lambda i: tower.pow(tower.alpha, i % (q + 1))
    if case.case in (Case.G1_ODD_ODD, Case.G1_EVEN_EVEN):
        return [a(i) for i in range(-r, r + 1)]
    if case.case is Case.G2_KODD_QEVEN:
        return [a(i) for i in range(q // 2 - r, q // 2 + r + 2)]
    return [tower.mul(tower.omega, a(i)) for i in range(-r + 1, r + 1)]


def gr_generator_poly(tower: FieldTower, k: int) -> tuple[Poly, GRCase]:
    case = gr_case(tower, k)
    g = product_of_linear_factors(tower, gr_roots(tower, case))
    n = tower.q + 1
    if g.degree != n - k:
        raise AssertionError(f"generator degree {g.degree} != {n - k}")
    if not coefficients_in_subfield(g):
        raise AssertionError(f"g for (q={tower.q}, k={k}) has coefficients outside F_q")
    if not divides(g, Poly.x_n_minus(tower, n, case.eta)):
        raise AssertionError(f"g for (q={tower.q}, k={k}) does not divide X^n - eta")
    return g, case


def gr_code(tower: FieldTower, k: int) -> tuple[LinearCode, GRCase]:
    g, case = gr_generator_poly(tower, k)
    return cyclic_code_from_generator(g, tower.q + 1, case.eta), case


# -- evaluation codes over the roots of unity ---------------------------------


def lemma1_eval(tower: FieldTower, h: Poly) -> list[int]:
    """s -> h(alpha^s) + h(alpha^s)^q."""
    out = []
    for x in tower.iter_powers(tower.alpha, tower.q + 1):
        y = h.eval(x)
        out.append(tower.add(y, tower.frobenius_q(y)))
    return out


def lemma2_eval(tower: FieldTower, h: Poly) -> list[int]:
    """s -> omega^(sq) h(alpha^s) + omega^s h(alpha^s)^q."""
    T = tower
    out = []
    for s, x in enumerate(T.iter_powers(T.alpha, T.q + 1)):
        y = h.eval(x)
        ws = T.pow(T.omega, s)
        out.append(T.add(T.mul(T.frobenius_q(ws), y), T.mul(ws, T.frobenius_q(y))))
    return out


def _checked_base(tower: FieldTower, v: list[int]) -> list[int]:
    if not all(tower.is_base(x) for x in v):
        raise AssertionError("evaluation vector left F_q")
    return v


def lemma1_code(tower: FieldTower, k: int) -> LinearCode:
    if k % 2 == 0 or not 1 <= k <= tower.q:
        raise ConstructionError("lemma1_code needs odd k with 1 <= k <= q")
    T = tower
    # constant part spanned via beta: Tr(beta) = 1 in every characteristic
    rows = [lemma1_eval(T, Poly(T, [T.beta]))]
    for i in range(1, (k - 1) // 2 + 1):
        rows.append(lemma1_eval(T, Poly.monomial(T, i)))
        rows.append(lemma1_eval(T, Poly.monomial(T, i, T.e)))
    return from_rows(T, T.q + 1, [_checked_base(T, r) for r in rows])


def lemma2_code(tower: FieldTower, k: int) -> LinearCode:
    if k % 2 == 1 or not 2 <= k <= tower.q:
        raise ConstructionError("lemma2_code needs even k with 2 <= k <= q")
    T = tower
    rows = []
    for i in range(k // 2):
        rows.append(lemma2_eval(T, Poly.monomial(T, i)))
        rows.append(lemma2_eval(T, Poly.monomial(T, i, T.e)))
    return from_rows(T, T.q + 1, [_checked_base(T, r) for r in rows])


def lemma_code(tower: FieldTower, case: GRCase) -> LinearCode:
    return lemma2_code(tower, case.k) if case.uses_lemma2 else lemma1_code(tower, case.k)


def lemma_eval(tower: FieldTower, case: GRCase, h: Poly) -> list[int]:
    return lemma2_eval(tower, h) if case.uses_lemma2 else lemma1_eval(tower, h)


def h_a_poly(tower: FieldTower, case: GRCase, g: Poly, a: int) -> Poly:
    """The polynomial whose evaluation form reproduces the a-th shift row of <g>.

    Coefficients are summed term by term with nothing cancelled by hand,
    so the degree bound is a genuine check.
    """
    T = tower
    q, k = T.q, case.k
    if not 0 <= a < k:
        raise ConstructionError(f"a={a} outside [0, {k - 1}]")
    c = g.coeffs
    alpha, beta, omega = T.alpha, T.beta, T.omega
    ap = lambda e: T.pow(alpha, e)

    def inner(i_shift: int, twist: bool = False) -> int:
        # sum_j c_j (omega^(j+a) if twist) alpha^(i_shift*(j+a))
        acc = 0
        for j, cj in enumerate(c):
            term = T.mul(cj, ap(i_shift * (j + a)))
            if twist:
                term = T.mul(term, T.pow(omega, j + a))
            acc = T.add(acc, term)
        return acc

    sum_c = 0
    for cj in c:
        sum_c = T.add(sum_c, cj)
    coeffs: dict[int, int] = {}

    def put(deg: int, val: int) -> None:
        coeffs[deg] = T.add(coeffs.get(deg, 0), val)

    if case.case is Case.G1_ODD_ODD:
        for i in range(1, (q - 1) // 2 + 1):
            put((q + 1) // 2 - i, inner(i))
        alt = 0
        for j, cj in enumerate(c):
            alt = T.add(alt, cj if (j + a) % 2 == 0 else T.neg(cj))
        put(0, T.mul(alt, beta))
        put((q + 1) // 2, T.mul(sum_c, beta))
    elif case.case is Case.G1_EVEN_EVEN:
        for i in range(1, q // 2 + 1):
            put(q // 2 - i, inner(i))
        put(q // 2, T.mul(sum_c, beta))
    elif case.case is Case.G2_KODD_QEVEN:
        for i in range(1, q // 2 + 1):
            put(q // 2 + 1 - i, inner(i + q // 2))
        put(0, T.mul(sum_c, beta))
    else:
        for i in range(1, (q + 1) // 2 + 1):
            put((q + 1) // 2 - i, inner(i, twist=True))
    top = max(coeffs)
    return Poly(T, [coeffs.get(d, 0) for d in range(top + 1)])


def h_a_degree_bound(case: GRCase) -> int:
    k = case.k
    return k // 2 - 1 if case.uses_lemma2 else (k - 1) // 2


def predicted_multipliers(tower: FieldTower, case: GRCase) -> list[int]:
    """theta_s such that diag(theta) <g> is the lemma evaluation code."""
    T = tower
    F = T.base
    n = T.q + 1
    if case.case is Case.G1_ODD_ODD:
        ratio = F.neg(1)
    elif case.case is Case.G1_EVEN_EVEN:
        # omega^(s(q+1)/2) read as nu^s with nu^2 = omega^(q+1)
        w = T.pow(T.omega, T.q + 1)
        ratio = T.sqrt_char2(w)
        if F.mul(ratio, ratio) != w:
            raise AssertionError("square root of omega^(q+1) failed")
    elif case.case is Case.G2_KODD_QEVEN:
        ratio = 1
    else:
        ratio = F.neg(T.pow(T.omega, T.q + 1))
    theta = [F.pow(ratio, s) for s in range(n)]
    if not all(T.is_base(t) and t != 0 for t in theta):
        raise AssertionError("predicted multiplier outside F_q \\ {0}")
    return theta


# -- Segre and Glynn codes ------------------------------------------------------


def _code_from_columns(tower: FieldTower, columns: list[list[int]]) -> LinearCode:
    rows = [[col[i] for col in columns] for i in range(len(columns[0]))]
    return from_rows(tower, len(columns), rows)


def segre_code(hh: int, e: int) -> LinearCode:
    """Columns (1, t, t^(2^e), t^(2^e+1)) for t in F_q, q = 2^hh, plus (0, 0, 0, 1)."""
    if hh < 1 or e < 1:
        raise ConstructionError("segre_code needs hh >= 1 and e >= 1")
    if gcd(e, hh) != 1:
        raise ConstructionError(f"gcd(e={e}, h={hh}) must be 1")
    T = make_tower(2, hh)
    F = T.base
    s = 2**e
    cols = [[1, t, F.pow(t, s), F.pow(t, s + 1)] for t in range(T.q)]
    cols.append([0, 0, 0, 1])
    return _code_from_columns(T, cols)


def glynn_eta(tower: FieldTower) -> int:
    F = tower.base
    minus_one = F.neg(1)
    return next(x for x in range(1, tower.q) if F.pow(x, 4) == minus_one)


def glynn_code() -> LinearCode:
    """Columns (1, t, t^2 + eta t^6, t^3, t^4) for t in F_9, plus (0, 0, 0, 0, 1)."""
    T = make_tower(3, 2)
    F = T.base
    eta = glynn_eta(T)
    cols = [
        [1, t, F.add(F.pow(t, 2), F.mul(eta, F.pow(t, 6))), F.pow(t, 3), F.pow(t, 4)]
        for t in range(T.q)
    ]
    cols.append([0, 0, 0, 0, 1])
    return _code_from_columns(T, cols)
