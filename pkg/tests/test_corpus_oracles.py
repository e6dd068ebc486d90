import random
from fractions import Fraction as F

import pytest

from pencil_lab.corpus import (
    CorpusItem,
    gen_constrained_quadratic,
    gen_klein,
    gen_linear_y_family,
    gen_lines_plus_constant,
    gen_monomial_hyperbolas,
    gen_quadratic_y_family,
    gen_split_tail,
    gen_structured_random,
    klein_forms,
    oracle_local_dimension,
    oracle_primefield_scan,
    standard_items,
)
from pencil_lab.intersections import INFINITE, PlanePoint, intersection_multiplicity
from pencil_lab.kernel.bipoly import BivariatePolynomial, poly_gcd
from pencil_lab.pencil import critical_data, normalize, primset, redset_refined

X = BivariatePolynomial.variable(0)
Y = BivariatePolynomial.variable(1)
ONE = BivariatePolynomial.constant(1)


def test_generator_parameter_validation():
    with pytest.raises(ValueError):
        gen_linear_y_family(2, [0, 0], 1)  # repeated roots
    with pytest.raises(ValueError):
        gen_linear_y_family(1, [0], 0)  # z collides
    with pytest.raises(ValueError):
        gen_lines_plus_constant(2, [1, -1], 0)  # zero constant
    with pytest.raises(ValueError):
        gen_quadratic_y_family(1, 1, 1, [0], [], 1)  # gamma^2-4 not a square
    with pytest.raises(ValueError):
        gen_monomial_hyperbolas(2, 4, 1, 2)  # non-coprime exponents


def test_quadratic_family_m1_gamma_condition():
    item = gen_quadratic_y_family(1, 1, F(5, 2), [0], [], 1)
    assert item.expected["redset"] == [F(-1)]


def test_structured_random_product_fact():
    for seed in (3, 5, 8):
        item = gen_structured_random(seed, kind="product")
        c0 = item.params["c0"]
        pen = normalize(item.f)
        rset, _, _ = redset_refined(pen)
        assert rset.contains(c0)


def test_structured_random_power_fact():
    for seed in (2, 7):
        item = gen_structured_random(seed, kind="power")
        c0 = item.params["c0"]
        mu = item.params["mu"]
        pen = normalize(item.f)
        ps = primset(pen)
        assert ps.contains(c0)
        key = [mp for mp, _ in ps.factors if ps.annotation_for(mp).get("mu")]
        got = {mp: ps.annotation_for(mp)["mu"] for mp in key}
        assert mu in got.values() or any(v % mu == 0 for v in got.values())


def test_klein_item_facts():
    item = gen_klein()
    H1, H2, H3 = klein_forms()
    assert item.f + item.w == item.expected["identity_v"]
    assert item.f.total_degree() == item.w.total_degree() == 60
    assert poly_gcd(item.f, item.w).is_constant()


def test_local_dimension_examples():
    assert oracle_local_dimension(X, Y) == 1
    assert oracle_local_dimension(Y - X * X, Y) == 2
    assert oracle_local_dimension((X * X).scale(-3), Y.scale(2)) == 2


def test_local_dimension_cap():
    assert oracle_local_dimension(X**5, Y * Y, cap=7) is None  # dim 10 > cap


def test_fulton_against_dimension_oracle_sample():
    rng = random.Random(42)
    done = 0
    while done < 25:
        g = _origin_rand(rng, rng.randint(1, 3))
        h = _origin_rand(rng, rng.randint(1, 3))
        if g.is_zero() or h.is_zero():
            continue
        if not poly_gcd(g, h).is_constant():
            continue
        got = intersection_multiplicity(g, h, PlanePoint.affine(0, 0))
        if got == INFINITE or got > 12:
            continue
        assert oracle_local_dimension(g, h, (0, 0), cap=14) == got
        done += 1


def _origin_rand(rng, deg):
    terms = {}
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            if (a, b) == (0, 0):
                continue
            c = rng.randint(-4, 4)
            if c:
                terms[(a, b)] = F(c)
    return BivariatePolynomial(terms)


def test_primefield_scan_examples():
    scan = oracle_primefield_scan(Y**3 - Y.scale(3), 7)
    assert scan["singular"] == {2, 5}
    scan = oracle_primefield_scan(X * Y + ONE, 5)
    assert scan["singular"] == {1}
    f = BivariatePolynomial({(5, 0): F(1), (0, 5): F(1)})
    assert oracle_primefield_scan(f, 5)["all_singular"]


def test_primefield_scan_rejects_bad_prime():
    f = (X * Y).scale(7) + ONE
    with pytest.raises(ValueError):
        oracle_primefield_scan(f, 7)


def test_scan_covered_by_candidates():
    rng = random.Random(6)
    done = 0
    while done < 6:
        terms = {(0, 2): F(1)}
        for a in range(3):
            for b in range(3 - a):
                c = rng.randint(-4, 4)
                if c:
                    terms[(a, b)] = F(c)
        f = BivariatePolynomial(terms)
        if f.total_degree() != 2:
            continue
        p = 13
        try:
            scan = oracle_primefield_scan(f, p)
        except ValueError:
            continue
        if scan["all_singular"]:
            continue
        pen = normalize(f)
        crit = critical_data(pen)
        from pencil_lab.pencil import singset

        poly = singset(pen, crit).defining_polynomial()
        from pencil_lab.kernel.zfactor import q_to_z

        ints, _ = q_to_z(list(poly.coeffs))
        for c in scan["singular"]:
            acc = 0
            for v in reversed(ints):
                acc = (acc * c + v) % p
            assert acc == 0
        done += 1


def test_standard_items_well_formed():
    items = standard_items()
    assert len(items) >= 10
    for item in items:
        assert isinstance(item, CorpusItem)
        assert "redset" in item.expected and "tau" in item.expected
