import random
from fractions import Fraction as F

import pytest

from pencil_lab.kernel.fields import NumberField, QQ
from pencil_lab.kernel.linalg import det_bareiss
from pencil_lab.kernel.unipoly import umul, ustrip
from pencil_lab.kernel.zfactor import (
    factor_over_field,
    factor_rational,
    is_irreducible_q,
    zresultant,
)


def _reassemble(unit, facs):
    out = [F(unit)]
    for g, m in facs:
        for _ in range(m):
            out = umul(out, [F(c) for c in g], QQ)
    return out


def test_factor_x4_minus_1():
    f = [F(-1), 0, 0, 0, F(1)]
    unit, facs = factor_rational(f)
    assert sorted((len(g) - 1) for g, _ in facs) == [1, 1, 2]
    assert _reassemble(unit, facs) == ustrip(f, QQ)


def test_factor_irreducible_quadratic():
    unit, facs = factor_rational([F(1), 0, F(1)])
    assert len(facs) == 1 and facs[0] == ([1, 0, 1], 1)
    assert is_irreducible_q([F(1), 0, F(1)])


def test_factor_product_of_random_cubics():
    rng = random.Random(11)
    for _ in range(6):
        a = [rng.randint(-6, 6) for _ in range(3)] + [1]
        b = [rng.randint(-6, 6) for _ in range(3)] + [1]
        prod = umul([F(c) for c in a], [F(c) for c in b], QQ)
        unit, facs = factor_rational(prod)
        assert _reassemble(unit, facs) == ustrip(prod, QQ)
        assert sum(m * (len(g) - 1) for g, m in facs) == 6


def test_factor_with_multiplicities_and_x_powers():
    # x^2 * (x-1)^3 * (x^2+1)
    f = [F(1)]
    for g, m in ((([0, 1]), 2), (([-1, 1]), 3), (([1, 0, 1]), 1)):
        for _ in range(m):
            f = umul(f, [F(c) for c in g], QQ)
    unit, facs = factor_rational(f)
    assert _reassemble(unit, facs) == ustrip(f, QQ)
    mults = sorted(m for _, m in facs)
    assert mults == [1, 2, 3]


def _sylvester_det(a, b):
    n, m = len(a) - 1, len(b) - 1
    size = n + m
    S = [[0] * size for _ in range(size)]
    for i in range(m):
        for j, c in enumerate(a[::-1]):
            S[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(b[::-1]):
            S[m + i][i + j] = c
    return det_bareiss(S)


def test_zresultant_matches_sylvester():
    rng = random.Random(2)
    for _ in range(120):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = [rng.randint(-9, 9) for _ in range(n)] + [rng.randint(1, 9)]
        b = [rng.randint(-9, 9) for _ in range(m)] + [rng.randint(1, 9)]
        assert zresultant(a, b) == _sylvester_det(a, b)


def test_trager_over_sqrt2():
    K = NumberField([F(-2), 0, F(1)])
    unit, facs = factor_over_field([K.from_int(-2), K.zero, K.one], K)
    assert len(facs) == 2
    prod = [K.one]
    for g, m in facs:
        for _ in range(m):
            prod = umul(prod, g, K)
    assert prod == [K.from_int(-2), K.zero, K.one]


def test_trager_keeps_irreducible():
    K = NumberField([F(-2), 0, F(1)])
    # y^2 - 3 stays irreducible over Q(sqrt 2)
    _, facs = factor_over_field([K.from_int(-3), K.zero, K.one], K)
    assert len(facs) == 1 and len(facs[0][0]) == 3
