import random
from fractions import Fraction as F

import pytest

from pencil_lab.kernel.algebraic import NOT_CONSTANT
from pencil_lab.kernel.bipoly import (
    BivariatePolynomial,
    ReduciblePolynomialError,
    div_exact,
    is_squarefree,
    poly_gcd,
    residue_constant,
    residue_values_fast,
    resultant_y,
    squarefree_decompose,
)
from pencil_lab.kernel.fields import FieldMismatchError, PrimeField, QQ
from pencil_lab.kernel.unipoly import ustrip

X = BivariatePolynomial.variable(0)
Y = BivariatePolynomial.variable(1)
ONE = BivariatePolynomial.constant(1)


def C(v):
    return BivariatePolynomial.constant(v)


def test_gcd_examples():
    assert poly_gcd(X * X - ONE, X**3 - ONE) == X - ONE
    assert poly_gcd(Y * Y - X**3, Y.scale(2)).is_constant()
    assert poly_gcd((Y * Y - ONE).scale(3), Y * Y - ONE) == Y * Y - ONE


def test_gcd_field_mismatch():
    K = PrimeField(7)
    other = BivariatePolynomial({(1, 0): 1}, K)
    with pytest.raises(FieldMismatchError):
        poly_gcd(X, other)


def test_gcd_divides_both_random():
    rng = random.Random(9)
    for _ in range(12):
        g = _rand(rng, 2)
        h = _rand(rng, 2)
        d = _rand(rng, 1)
        if g.is_zero() or h.is_zero() or d.is_zero():
            continue
        cd = poly_gcd(g * d, h * d)
        assert div_exact(g * d, cd) is not None
        assert div_exact(h * d, cd) is not None
        quot = (poly_gcd(g, h) * d).normalized()
        assert cd == quot


def _rand(rng, deg):
    terms = {}
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            c = rng.randint(-5, 5)
            if c:
                terms[(a, b)] = F(c)
    terms[(0, deg)] = F(1)
    return BivariatePolynomial(terms)


def test_resultant_examples():
    assert ustrip(resultant_y(Y - X * X, Y), QQ) == [F(0), F(0), F(1)]
    assert ustrip(resultant_y(Y - ONE, Y + ONE), QQ) == [F(2)]
    assert ustrip(resultant_y(X * Y - ONE, X), QQ) == [F(0), F(1)]


def test_resultant_vanishing_detects_common_roots():
    r = ustrip(resultant_y(Y * Y - X, Y - X), QQ)
    # common solutions x = 0, 1: both are roots
    from pencil_lab.kernel.unipoly import ueval

    assert ueval(r, F(0), QQ) == 0 and ueval(r, F(1), QQ) == 0
    assert ueval(r, F(2), QQ) != 0


def test_resultant_mod_p_reduction():
    rng = random.Random(4)
    for _ in range(25):
        g = _rand(rng, 2)
        h = _rand(rng, 2)
        if g.deg_y() == 0 and h.deg_y() == 0:
            continue
        p = 10007
        K = PrimeField(p)
        gp = g.map_field(K, K.from_fraction)
        hp = h.map_field(K, K.from_fraction)
        if gp.deg_y() != g.deg_y() or hp.deg_y() != h.deg_y():
            continue
        r = ustrip(resultant_y(g, h), QQ)
        rp = ustrip(resultant_y(gp, hp), K)
        rred = ustrip([K.from_fraction(c) for c in r], K)
        assert rred == rp


def test_squarefree_decompose_examples():
    dec = squarefree_decompose(X**3 + X * X)
    assert [(str(g), m) for g, m in dec] == [("X + 1", 1), ("X", 2)]
    dec = squarefree_decompose(Y**3 - Y.scale(3) + C(2))
    assert [(str(g), m) for g, m in dec] == [("Y + 2", 1), ("Y - 1", 2)]
    g = Y * Y - X**3
    assert squarefree_decompose(g) == [(g.normalized(), 1)]


def test_squarefree_reconstruction_property():
    rng = random.Random(13)
    for _ in range(8):
        g = _rand(rng, 2)
        h = _rand(rng, 1)
        if g.is_zero() or h.is_zero():
            continue
        f = g * h * h
        dec = squarefree_decompose(f)
        prod = ONE
        for factor, m in dec:
            prod = prod * factor**m
            assert is_squarefree(factor)
        assert prod.normalized() == f.normalized()
        mults = [m for _, m in dec]
        assert mults == sorted(mults)


def test_residue_constant_examples():
    assert residue_constant(Y**3 - Y.scale(3), Y - ONE).rational_value() == -2
    assert residue_constant(X, Y) is NOT_CONSTANT
    p = X * X + Y * Y - C(5)
    assert residue_constant(X * X + Y * Y, p).rational_value() == 5


def test_residue_on_visibly_reducible_curve():
    # distinct constants on the two lines of Y^2 - 1 expose reducibility
    with pytest.raises(ReduciblePolynomialError):
        residue_constant(Y**3 - Y.scale(3), Y * Y - ONE)


def test_residue_values_fast_agrees():
    vals = residue_values_fast(Y**3 - Y.scale(3), Y * Y - ONE)
    assert vals is not None
    poly, complete = vals
    assert complete and poly == [F(-4), F(0), F(1)]  # roots +-2


def test_div_exact_and_failure():
    q = div_exact(X**3 - ONE, X - ONE)
    assert q == X * X + X + ONE
    with pytest.raises(ArithmeticError):
        div_exact(X**3 - ONE, Y - ONE)


def test_degree_form_and_shear():
    f = X * (X - ONE) * Y + X - C(2)
    assert f.degree_form() == X * X * Y
    sheared = f.shear_x_plus_ly(2)
    assert sheared.total_degree() == f.total_degree()
    assert sheared.is_y_monic()
