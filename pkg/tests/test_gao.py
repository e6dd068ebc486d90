import random
from fractions import Fraction as F

import pytest

from pencil_lab.gao import (
    NonSquarefreeError,
    absolute_factor_count,
    absolute_irreducibility_parity_demo,
    build_pde_system,
    pencil_reducibility_candidates,
)
from pencil_lab.kernel.bipoly import BivariatePolynomial, poly_gcd
from pencil_lab.kernel.fields import NumberField, PrimeField, QQ

X = BivariatePolynomial.variable(0)
Y = BivariatePolynomial.variable(1)
ONE = BivariatePolynomial.constant(1)


def C(v):
    return BivariatePolynomial.constant(v)


def test_factor_count_examples():
    assert absolute_factor_count(X * X + Y * Y) == 2
    assert absolute_factor_count(Y * Y - X**3) == 1
    assert absolute_factor_count(X * Y) == 2


def test_count_rejects_non_squarefree():
    with pytest.raises(NonSquarefreeError):
        absolute_factor_count((X + Y) * (X + Y))


def test_small_characteristic_rejected():
    K = PrimeField(5)
    f = BivariatePolynomial({(2, 0): 1, (0, 2): 1}, K)
    from pencil_lab.gao import SmallCharacteristicError

    with pytest.raises(SmallCharacteristicError):
        absolute_factor_count(f)


def test_count_over_large_prime_field():
    K = PrimeField(10007)
    f = BivariatePolynomial({(2, 0): 1, (0, 2): 1}, K)
    assert absolute_factor_count(f) == 2


def test_self_solution_solves_system():
    f = Y * Y - X**3 + X * Y + ONE
    system = build_pde_system(f)
    vec = system.self_solution(f)
    for row in system.rows:
        acc = F(0)
        for c, v in zip(row, vec):
            acc += c * v
        assert acc == 0


def test_parity_demo():
    for u in range(1, 8):
        assert absolute_irreducibility_parity_demo(u) == (1 if u % 2 else 2)


def test_constructed_products_count_two():
    rng = random.Random(21)
    built = 0
    while built < 6:
        g = _monic_rand(rng, 2)
        h = _monic_rand(rng, 2)
        if not poly_gcd(g, h).is_constant():
            continue
        if absolute_factor_count(g) != 1 or absolute_factor_count(h) != 1:
            continue
        built += 1
        assert absolute_factor_count(g * h) == 2


def _monic_rand(rng, deg):
    terms = {(0, deg): F(1)}
    for a in range(deg + 1):
        for b in range(deg - a):
            c = rng.randint(-4, 4)
            if c:
                terms[(a, b)] = F(c)
    return BivariatePolynomial(terms)


def test_shear_invariance():
    rng = random.Random(3)
    for _ in range(5):
        f = _monic_rand(rng, 3)
        from pencil_lab.kernel.bipoly import is_squarefree

        if not is_squarefree(f):
            continue
        lam = rng.randint(1, 5)
        assert absolute_factor_count(f) == absolute_factor_count(
            f.shear_x_plus_ly(lam)
        )


def test_count_over_number_field():
    K = NumberField([F(-2), 0, F(1)])
    f = BivariatePolynomial(
        {(2, 0): K.one, (0, 2): K.neg(K.mul(K.gen, K.gen))}, K
    )  # X^2 - 2*Y^2 = (X - sqrt2 Y)(X + sqrt2 Y)
    assert absolute_factor_count(f) == 2


def test_candidates_example_one_member():
    f = X * Y + X - ONE
    rc = pencil_reducibility_candidates(f)
    assert not rc.degenerate
    assert rc.candidates.contains(F(-1))


def test_candidates_cusp_family_empty_after_verification():
    f = Y * Y - X**3
    rc = pencil_reducibility_candidates(f)
    assert not rc.degenerate
    # every candidate must fail verification: the fiber is irreducible at
    # five spread-out rational parameters (independent spot check)
    for c0 in (F(1), F(-2), F(5), F(7, 3), F(-11)):
        fiber = f - C(c0)
        assert absolute_factor_count(fiber) == 1


def test_candidates_degenerate_composite():
    f = (X * Y) ** 2 + X * Y
    rc = pencil_reducibility_candidates(f)
    assert rc.degenerate and rc.generic_count == 2


def test_candidates_common_factor_error():
    from pencil_lab.gao import CommonFactorError

    with pytest.raises(CommonFactorError):
        pencil_reducibility_candidates(X * Y, X)
