import random
from fractions import Fraction as F

import pytest

from pencil_lab.kernel.fields import (
    FieldError,
    NumberField,
    PrimeField,
    QQ,
    RationalFunctionField,
)
from pencil_lab.kernel.unipoly import (
    UnivariatePolynomial,
    ueval,
    ugcd,
    ugcdex,
    umul,
    uresultant,
    usquarefree_decompose,
)


def test_prime_field_requires_prime():
    with pytest.raises(FieldError):
        PrimeField(91)
    K = PrimeField(10007)
    assert K.mul(K.from_int(10006), K.from_int(10006)) == 1


def test_number_field_ops_sqrt2():
    K = NumberField([F(-2), F(0), F(1)])
    t = K.gen
    one_plus = K.add(K.one, t)
    one_minus = K.sub(K.one, t)
    assert K.eq(K.mul(one_plus, one_minus), K.from_int(-1))
    # inverse of t is t/2
    assert K.inv(t) == K.from_coeffs([0, F(1, 2)])
    with pytest.raises(ZeroDivisionError):
        K.inv(K.zero)


def test_number_field_reducible_modulus_detected():
    K = NumberField([F(-1), F(0), F(1)])  # t^2 - 1, reducible
    with pytest.raises(FieldError):
        K.inv(K.from_coeffs([1, 1]))  # 1 + t is a zero divisor


def test_rational_function_field():
    K = RationalFunctionField("c")
    t = K.gen
    expr = K.div(K.mul(t, t), t)
    assert K.eq(expr, t)
    s = K.add(K.div(K.one, t), K.one)  # (1 + c)/c
    assert s.num == (1, 1) and s.den == (0, 1)


def test_gcd_and_gcdex():
    f = [F(-1), F(0), F(1)]  # x^2 - 1
    g = [F(-1), F(0), F(0), F(1)]  # x^3 - 1
    d = ugcd(f, g, QQ)
    assert d == [F(-1), F(1)]
    s, t, d2 = ugcdex(f, g, QQ)
    lhs = umul(s, f, QQ)
    rhs = umul(t, g, QQ)
    total = [a + b for a, b in zip(lhs + [F(0)] * 8, rhs + [F(0)] * 8)]
    assert [c for c in total if c] == d2 == d


def test_squarefree_decompose_examples():
    dec, unit = usquarefree_decompose([F(2), F(-3), F(0), F(1)], QQ)
    assert [(g, m) for g, m in dec] == [([F(2), F(1)], 1), ([F(-1), F(1)], 2)]
    dec, _ = usquarefree_decompose([F(0), F(0), F(1), F(1)], QQ)  # x^2(x+1)
    assert dec == [([F(1), F(1)], 1), ([F(0), F(1)], 2)]
    dec, _ = usquarefree_decompose([F(3), F(1)], QQ)
    assert dec == [([F(3), F(1)], 1)]


def test_resultant_matches_sylvester_convention():
    # res(x^2-1, x+2) = (-1)^... = (4-1) = 3 and swapping flips sign by parity
    f = [F(-1), F(0), F(1)]
    g = [F(2), F(1)]
    assert uresultant(f, g, QQ) == 3
    assert uresultant(g, f, QQ) == 3  # even degree product


def test_characteristic_guard_in_squarefree():
    K = PrimeField(3)
    with pytest.raises(ArithmeticError):
        usquarefree_decompose([K.from_int(1), 0, 0, 0, K.from_int(1)], K)


def test_polynomial_wrapper_degree_sentinel():
    z = UnivariatePolynomial([], QQ)
    assert z.degree == float("-inf")
    p = UnivariatePolynomial([1, 2], QQ)
    assert p.degree == 1 and p(F(3)) == 7


def test_random_gcd_multiplicativity():
    rng = random.Random(5)
    for _ in range(30):
        K = QQ if rng.random() < 0.5 else PrimeField(10007)
        conv = (lambda v: F(v)) if K is QQ else (lambda v: v % 10007)
        g = [conv(rng.randint(-9, 9)) for _ in range(rng.randint(1, 4))] + [conv(1)]
        h = [conv(rng.randint(-9, 9)) for _ in range(rng.randint(1, 4))] + [conv(1)]
        d = [conv(rng.randint(-9, 9)) for _ in range(rng.randint(1, 3))] + [conv(1)]
        lhs = ugcd(umul(g, d, K), umul(h, d, K), K)
        rhs = umul(ugcd(g, h, K), d, K)
        # both monic normalizations agree up to the monic unit
        from pencil_lab.kernel.unipoly import umonic

        assert lhs == umonic(rhs, K)
