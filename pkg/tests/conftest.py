import itertools

import numpy as np
import pytest

from grcodes.field_tower import make_tower, prime_power

SWEEP_QS = [2, 3, 4, 5, 7, 8, 9, 11, 13]


def tower_of(q):
    return make_tower(*prime_power(q))


@pytest.fixture(params=SWEEP_QS, ids=lambda q: f"q{q}")
def sweep_tower(request):
    return tower_of(request.param)


def brute_min_distance(C):
    """Pure-Python oracle: weight of every nonzero message, no projective shortcut."""
    F = C.tower.base
    best = None
    for msg in itertools.product(range(C.q), repeat=C.k):
        if not any(msg):
            continue
        word = [0] * C.n
        for m, row in zip(msg, C.rows):
            if m:
                word = [F.add(a, F.mul(m, b)) for a, b in zip(word, row)]
        w = sum(1 for x in word if x)
        best = w if best is None else min(best, w)
    return best


def brute_codewords(C):
    F = C.tower.base
    out = set()
    for msg in itertools.product(range(C.q), repeat=C.k):
        word = [0] * C.n
        for m, row in zip(msg, C.rows):
            if m:
                word = [F.add(a, F.mul(m, b)) for a, b in zip(word, row)]
        out.add(tuple(word))
    return out


def ext_tables(T):
    """numpy add/mul tables of F_{q^2} from two independent routes.

    Returns (add, mul_log, mul_struct): mul_log comes from the tower's
    discrete-log tables, mul_struct from schoolbook (a+bY)(c+dY) reduction.
    """
    q, Q = T.q, T.Q
    F = T.base
    badd = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    bmul = np.array([[F._slow_mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    bneg = np.array([F.neg(a) for a in range(q)], dtype=np.int64)
    X = np.arange(Q)[:, None]
    Y = np.arange(Q)[None, :]
    a, b, c, d = X % q, X // q, Y % q, Y // q
    add = badd[a, b * 0 + c] + q * badd[b, d]
    c0, c1 = T.ext_modulus[0], T.ext_modulus[1]
    bd = bmul[b, d]
    lo = badd[bmul[a, c], bneg[bmul[bd, c0]]]
    hi = badd[badd[bmul[a, d], bmul[b, c]], bneg[bmul[bd, c1]]]
    mul_struct = lo + q * hi
    T._ensure_tables()
    exp = np.array(T._exp, dtype=np.int64)
    log = np.array(T._log, dtype=np.int64)
    nz = (X != 0) & (Y != 0)
    mul_log = np.where(nz, exp[log[X] + log[Y]], 0)
    return add, mul_log, mul_struct
