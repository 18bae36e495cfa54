import pytest

from grcodes.constructions import (
    Case,
    ConstructionError,
    ProjectivePoint,
    canonical_points,
    cyclic_code_from_generator,
    glynn_code,
    glynn_eta,
    gr_case,
    gr_code,
    gr_generator_poly,
    h_a_degree_bound,
    h_a_poly,
    lemma1_code,
    lemma2_code,
    lemma_code,
    lemma_eval,
    predicted_multipliers,
    roots_of_unity_points,
    rs_base_matrix,
    segre_code,
)
from grcodes.field_tower import make_tower
from grcodes.linear_code import (
    diag_scale,
    equals,
    from_rows,
    is_constacyclic,
    is_mds,
    min_distance,
)
from grcodes.polynomial import Poly, coefficients_in_subfield, divides

from conftest import SWEEP_QS, brute_min_distance, tower_of

T2 = make_tower(2, 1)
T3 = make_tower(3, 1)


def test_canonical_points():
    assert canonical_points(T2) == [(0, 1), (1, 1), (1, 0)]
    for q in SWEEP_QS:
        pts = canonical_points(tower_of(q))
        assert len(pts) == q + 1 == len(set(pts))
        assert pts[0] == (0, 1)


def test_rs_base_matrix_examples():
    M = rs_base_matrix(T2, 2, canonical_points(T2))
    assert M == [[1, 1, 0], [0, 1, 1]]  # row j = x1^j * x2^(1-j)
    C = from_rows(T2, 3, M)
    assert is_mds(C) and min_distance(C) == 2
    M1 = rs_base_matrix(T3, 1, canonical_points(T3))
    assert M1 == [[1, 1, 1, 1]]
    M3 = rs_base_matrix(T3, 3, canonical_points(T3))
    assert [row[-1] for row in M3] == [0, 0, 1]
    with pytest.raises(ConstructionError):
        rs_base_matrix(T3, 2, [ProjectivePoint(1, 1), ProjectivePoint(2, 2)])
    with pytest.raises(ConstructionError):
        rs_base_matrix(T3, 5, canonical_points(T3))


def test_roots_of_unity_points():
    pts = roots_of_unity_points(T3)
    assert pts[0] == (1, 0)
    assert pts[1] == (0, 1)
    assert T3.decompose(T3.pow(T3.omega, 2)) == (1, 2)
    assert pts[2] == ProjectivePoint.normalized(T3, 1, 2) == (2, 1)
    w = T3.recompose(1, 2)
    assert T3.pow(w, T3.q - 1) == T3.pow(T3.alpha, 2)
    for q in SWEEP_QS:
        T = tower_of(q)
        pts = roots_of_unity_points(T)
        assert len(set(pts)) == q + 1
        for s, (x1, x2) in enumerate(pts):
            assert T.pow(T.recompose(x1, x2), q - 1) == T.pow(T.alpha, s)


def test_cyclic_code_from_generator_examples():
    C = cyclic_code_from_generator(Poly(T3, [T3.neg(1), 1]), 4, 1)
    assert C.k == 3 and min_distance(C) == 2
    C = cyclic_code_from_generator(Poly(T2, [1, 1, 1]), 3, 1)
    assert C.rows == ((1, 1, 1),)
    C = cyclic_code_from_generator(Poly(T3, [2, 1, 2, 1]), 4, 1)
    assert equals(C, from_rows(T3, 4, [[2, 1, 2, 1]]))
    assert min_distance(C) == 4
    with pytest.raises(ConstructionError):
        cyclic_code_from_generator(Poly(T3, [1, 1, 1]), 4, 1)
    with pytest.raises(ConstructionError):
        cyclic_code_from_generator(Poly(T3, [T3.omega, 1]), 4, 1)


def test_gr_generator_examples():
    g, case = gr_generator_poly(T3, 3)
    assert case.case is Case.G1_ODD_ODD and case.r == 0
    assert g == Poly(T3, [T3.neg(1), 1])
    g, case = gr_generator_poly(T3, 1)
    assert case.r == 1 and g == Poly(T3, [2, 1, 2, 1])
    g, case = gr_generator_poly(T3, 2)
    assert case.case is Case.G3_KEVEN_QODD and case.r == 1
    assert g == Poly(T3, [2, 1, 1])
    assert case.eta == T3.pow(T3.omega, 4) == 2
    assert divides(g, Poly(T3, [1, 0, 0, 0, 1]))
    g, case = gr_generator_poly(T2, 1)
    assert case.case is Case.G2_KODD_QEVEN and case.r == 0
    assert g == Poly(T2, [1, 1, 1])


def test_gr_case_table():
    expected = {
        (3, 1): ("G1_ODD_ODD", 1, "LEMMA1"),
        (4, 2): ("G1_EVEN_EVEN", 1, "LEMMA2"),
        (2, 1): ("G2_KODD_QEVEN", 0, "LEMMA1"),
        (3, 2): ("G3_KEVEN_QODD", 1, "LEMMA2"),
        (8, 3): ("G2_KODD_QEVEN", 2, "LEMMA1"),
        (9, 4): ("G3_KEVEN_QODD", 3, "LEMMA2"),
    }
    for (q, k), (tag, r, lemma) in expected.items():
        c = gr_case(tower_of(q), k)
        assert (c.case.value, c.r, c.lemma) == (tag, r, lemma)
    with pytest.raises(ConstructionError):
        gr_case(tower_of(5), 6)
    with pytest.raises(ConstructionError):
        gr_case(tower_of(5), 0)


@pytest.mark.parametrize("q,k,d", [(2, 1, 3), (3, 2, 3), (5, 5, 2)])
def test_gr_code_examples(q, k, d):
    C, _ = gr_code(tower_of(q), k)
    assert (C.n, C.k) == (q + 1, k)
    assert min_distance(C) == brute_min_distance(C) == d
    assert is_mds(C)


def test_gr_generator_invariants(sweep_tower):
    T = sweep_tower
    q = T.q
    for k in range(1, q + 1):
        g, case = gr_generator_poly(T, k)
        assert g.degree == q + 1 - k
        assert case.r >= 0
        assert coefficients_in_subfield(g)
        assert divides(g, Poly.x_n_minus(T, q + 1, case.eta))
        C, _ = gr_code(T, k)
        assert C.k == k
        assert is_constacyclic(C, case.eta)
        if case.case is Case.G3_KEVEN_QODD:
            assert case.eta != 1
        assert is_mds(C)


def test_lemma1_examples():
    C = lemma1_code(T3, 1)
    assert C.rows == ((1, 1, 1, 1),)
    assert min_distance(C) == 4
    C = lemma1_code(T3, 3)
    assert C.k == 3 and is_mds(C) and min_distance(C) == 2
    # characteristic 2: the constant row survives
    assert lemma1_code(tower_of(4), 1).rows == ((1,) * 5,)
    with pytest.raises(ConstructionError):
        lemma1_code(T3, 2)


def test_lemma2_examples():
    C = lemma2_code(T2, 2)
    assert (C.n, C.k) == (3, 2) and is_mds(C)
    C = lemma2_code(T3, 2)
    assert C.k == 2 and brute_min_distance(C) == 3
    with pytest.raises(ConstructionError):
        lemma2_code(T3, 3)


def test_lemma_codes_dimension_and_subfield(sweep_tower):
    T = sweep_tower
    for k in range(1, T.q + 1):
        C = lemma1_code(T, k) if k % 2 else lemma2_code(T, k)
        assert C.k == k
        assert all(T.is_base(x) for r in C.rows for x in r)
        assert is_mds(C)


def test_h_a_examples():
    g, case = gr_generator_poly(T3, 1)
    theta = predicted_multipliers(T3, case)
    assert theta == [1, 2, 1, 2]
    for a in range(case.k):
        h = h_a_poly(T3, case, g, a)
        for s in range(4):
            x = T3.pow(T3.alpha, s)
            y = h.eval(x)
            c = g.coeff((s - a) % 4)
            sign = 1 if s % 2 == 0 else 2
            assert T3.add(y, T3.frobenius_q(y)) == T3.mul(sign, c)
    g, case = gr_generator_poly(T3, 2)
    for a in range(2):
        h = h_a_poly(T3, case, g, a)
        for s in range(4):
            y = h.eval(T3.pow(T3.alpha, s))
            lhs = T3.add(T3.mul(T3.pow(T3.omega, 3 * s), y), T3.mul(T3.pow(T3.omega, s), T3.frobenius_q(y)))
            c = g.coeff(s - a) if 0 <= s - a <= 2 else 0
            rhs = T3.mul(T3.mul(T3.pow(T3.omega, 4 * s), 1 if s % 2 == 0 else 2), c)
            assert lhs == rhs
    T5 = tower_of(5)
    g, case = gr_generator_poly(T5, 3)
    assert h_a_poly(T5, case, g, 0).degree <= 1
    with pytest.raises(ConstructionError):
        h_a_poly(T5, case, g, 3)


def test_h_a_identity_every_case(sweep_tower):
    T = sweep_tower
    F = T.base
    for k in range(1, T.q + 1):
        g, case = gr_generator_poly(T, k)
        theta = predicted_multipliers(T, case)
        for a in range(k):
            h = h_a_poly(T, case, g, a)
            assert h.degree <= h_a_degree_bound(case)
            row = [g.coeff((s - a) % (T.q + 1)) if (s - a) % (T.q + 1) <= T.q + 1 - k else 0 for s in range(T.q + 1)]
            assert lemma_eval(T, case, h) == [F.mul(t, x) for t, x in zip(theta, row)]


def test_predicted_multipliers_examples():
    theta = predicted_multipliers(tower_of(5), gr_case(tower_of(5), 3))
    assert theta == [1, 4, 1, 4, 1, 4]
    T4 = tower_of(4)
    assert predicted_multipliers(T4, gr_case(T4, 1)) == [1] * 5
    assert predicted_multipliers(T3, gr_case(T3, 2)) == [1] * 4
    # even/even case: theta_s = nu^s with nu^2 = omega^(q+1)
    theta = predicted_multipliers(T4, gr_case(T4, 2))
    nu = theta[1]
    assert T4.mul(nu, nu) == T4.pow(T4.omega, 5)
    assert theta == [T4.pow(nu, s) for s in range(5)]


def test_scaled_gr_code_is_lemma_code(sweep_tower):
    T = sweep_tower
    for k in range(1, T.q + 1):
        C, case = gr_code(T, k)
        assert equals(diag_scale(C, predicted_multipliers(T, case)), lemma_code(T, case))


def test_segre_examples():
    S = segre_code(3, 2)
    assert (S.n, S.k, S.q) == (9, 4, 8)
    assert is_mds(S) and min_distance(S) == 6
    assert is_mds(segre_code(3, 1))
    S = segre_code(4, 3)
    assert (S.n, S.k) == (17, 4) and is_mds(S)
    with pytest.raises(ConstructionError):
        segre_code(4, 2)


@pytest.mark.parametrize("hh,e", [(3, 1), (3, 2), (4, 3)])
def test_segre_rows_match_columns(hh, e):
    # rebuild the four generator rows independently; the extra column is (0, 0, 0, 1)
    S = segre_code(hh, e)
    F = S.tower.base
    ts = range(S.q)
    rows = [
        [1] * S.q + [0],
        list(ts) + [0],
        [F.pow(t, 2**e) for t in ts] + [0],
        [F.pow(t, 2**e + 1) for t in ts] + [1],
    ]
    assert all(S.contains(r) for r in rows)
    assert equals(S, from_rows(S.tower, S.n, rows))


def test_glynn_code():
    T = make_tower(3, 2)
    eta = glynn_eta(T)
    assert T.base.pow(eta, 4) == T.base.neg(1)
    assert sum(1 for x in range(1, 9) if T.base.pow(x, 4) == T.base.neg(1)) == 4
    G = glynn_code()
    assert (G.n, G.k, G.q) == (10, 5, 9)
    assert min_distance(G) == 6
    assert is_mds(G)
