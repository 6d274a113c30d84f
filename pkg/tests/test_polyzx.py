"""Polynomial arithmetic, divided differences and determinants."""

import itertools
import math
import random

import pytest

from kschub.polyzx import (
    MultiPoly,
    det,
    divide_exact,
    divided_difference,
    h_complete,
    h_mod,
)


def x(i, m=3, k=0):
    return MultiPoly.xvar(i, m, k)


def rand_poly(rng, m=2, k=0, terms=3, deg=2, coeff=3):
    p = MultiPoly(m, k)
    for _ in range(terms):
        e = [0] * (m + k)
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(m + k)] += 1
        c = rng.randint(-coeff, coeff)
        p = p + MultiPoly(m, k, {tuple(e): c}) if c else p
    return p


def test_basic_arithmetic():
    a = x(1) + x(2)
    b = x(1) - x(2)
    assert a * b == x(1) * x(1) - x(2) * x(2)
    assert a - a == MultiPoly(3, 0)
    assert (a - a).is_zero()
    assert MultiPoly.const(5, 2, 1) * MultiPoly.const(0, 2, 1) == MultiPoly(2, 1)


def test_widen_restrict():
    p = x(1, 2, 1) + MultiPoly.yvar(1, 2, 1)
    q = p.widen(4, 2)
    assert q.m == 4 and q.k == 2
    assert q.restrict(2, 1) == p
    # restrict sets the dropped variables to zero
    assert (x(1, 2, 0) + x(1, 2, 0) * x(2, 2, 0)).restrict(1, 0) == x(1, 1, 0)


def test_truncate_mul():
    rng = random.Random(7)
    for _ in range(10):
        a = rand_poly(rng)
        b = rand_poly(rng)
        for d in range(4):
            assert a.mul(b, cutoff=d) == (a * b).truncate(d)


def test_to_text_golden():
    p = MultiPoly(3, 2, {(2, 0, 0, 0, 1): 3, (0, 0, 1, 0, 0): -1})
    assert p.to_text() == "3*x1^2*y2 - x3"
    assert MultiPoly(2, 0).to_text() == "0"
    assert MultiPoly.const(1, 1, 0).to_text() == "1"


def test_divided_difference_unit_and_symmetric():
    one = MultiPoly.const(1, 3, 0)
    assert divided_difference(one, 1) == one
    sym = x(1) * x(2) + x(1) + x(2)
    assert divided_difference(sym, 1) == sym


def test_pi_idempotent():
    rng = random.Random(1)
    for _ in range(8):
        f = rand_poly(rng, m=3)
        g = divided_difference(f, 1)
        assert divided_difference(g, 1) == g


def test_pi_braid_and_commute():
    rng = random.Random(2)
    for _ in range(6):
        f = rand_poly(rng, m=4)

        def pi(i, g):
            return divided_difference(g, i)

        assert pi(1, pi(2, pi(1, f))) == pi(2, pi(1, pi(2, f)))
        assert pi(1, pi(3, f)) == pi(3, pi(1, f))


def test_divided_difference_truncated():
    rng = random.Random(3)
    for _ in range(6):
        f = rand_poly(rng, m=3, terms=4, deg=3)
        for d in range(4):
            assert divided_difference(f, 2, cutoff=d) == divided_difference(
                f, 2
            ).truncate(d)


def bareiss_det(matrix):
    """Fraction-free elimination; the independent determinant oracle."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    prev = MultiPoly.const(1, m[0][0].m, m[0][0].k)
    for kcol in range(n - 1):
        if m[kcol][kcol].is_zero():
            for r in range(kcol + 1, n):
                if not m[r][kcol].is_zero():
                    m[kcol], m[r] = m[r], m[kcol]
                    sign = -sign
                    break
            else:
                return MultiPoly(m[0][0].m, m[0][0].k)
        for i in range(kcol + 1, n):
            for j in range(kcol + 1, n):
                num = m[kcol][kcol] * m[i][j] - m[i][kcol] * m[kcol][j]
                m[i][j] = divide_exact(num, prev)
        prev = m[kcol][kcol]
    if sign < 0:
        return MultiPoly(m[0][0].m, m[0][0].k) - m[n - 1][n - 1]
    return m[n - 1][n - 1]


def test_det_against_bareiss():
    rng = random.Random(4)
    for n in (2, 3, 4):
        for _ in range(4):
            matrix = [
                [rand_poly(rng, m=2, terms=2, deg=1, coeff=2) for _ in range(n)]
                for _ in range(n)
            ]
            assert det(matrix) == bareiss_det(matrix)


def test_det_vandermonde():
    n = 3
    matrix = [[MultiPoly.const(1, n, 0) for _ in range(n)] for i in range(n)]
    for i in range(n):
        p = MultiPoly.const(1, n, 0)
        for j in range(n):
            matrix[i][j] = p
            p = p * x(i + 1, n, 0)
    expect = MultiPoly.const(1, n, 0)
    for i in range(n):
        for j in range(i + 1, n):
            expect = expect * (x(j + 1, n, 0) - x(i + 1, n, 0))
    assert det(matrix) == expect


def test_h_complete():
    assert h_complete(0, 2) == MultiPoly.const(1, 2, 0)
    assert h_complete(1, 2) == x(1, 2) + x(2, 2)
    assert h_complete(2, 2) == x(1, 2) * x(1, 2) + x(1, 2) * x(2, 2) + x(2, 2) * x(
        2, 2
    )
    assert h_complete(-1, 2).is_zero()


def elementary(r, n):
    p = MultiPoly(n, 0)
    for combo in itertools.combinations(range(1, n + 1), r):
        term = MultiPoly.const(1, n, 0)
        for i in combo:
            term = term * x(i, n)
        p = p + term
    return p


def test_h_mod_generating_function():
    # sum_k h_k(x/1^i) t^k equals (1-t)^i / prod(1-x_j t): convolving the
    # series with the elementary symmetric coefficients of prod(1-x_j t)
    # must reproduce the binomial coefficients of (1-t)^i.
    n, D = 3, 5
    for i in range(4):
        series = [h_mod(d, n, i) for d in range(D + 1)]
        es = [(-1) ** r * elementary(r, n) for r in range(n + 1)]
        for d in range(D + 1):
            conv = MultiPoly(n, 0)
            for r in range(min(d, n) + 1):
                conv = conv + es[r] * series[d - r]
            expect = MultiPoly.const((-1) ** d * math.comb(i, d), n, 0)
            assert conv == expect


def test_divide_exact():
    rng = random.Random(5)
    for _ in range(10):
        g = rand_poly(rng, m=2, terms=2, deg=2, coeff=2)
        f = rand_poly(rng, m=2, terms=3, deg=2, coeff=2)
        if g.is_zero():
            continue
        assert divide_exact(f * g, g) == f
