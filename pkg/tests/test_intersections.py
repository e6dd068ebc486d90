import random
from fractions import Fraction as F

import pytest

from pencil_lab.intersections import (
    INFINITE,
    PlanePoint,
    affine_total,
    branch_count,
    branch_count_at_origin,
    i_hat,
    intersection_multiplicity,
    intersection_profile,
    legacy_rank_rho,
    points_at_infinity,
    split_totals,
    tau_places_at_infinity,
)
from pencil_lab.kernel.bipoly import BivariatePolynomial, poly_gcd
from pencil_lab.kernel.fields import QQ

X = BivariatePolynomial.variable(0)
Y = BivariatePolynomial.variable(1)
ONE = BivariatePolynomial.constant(1)
ORIGIN = PlanePoint.affine(0, 0)


def C(v):
    return BivariatePolynomial.constant(v)


def test_multiplicity_examples():
    assert intersection_multiplicity(X, Y, ORIGIN) == 1
    assert intersection_multiplicity(Y - X * X, Y, ORIGIN) == 2
    assert intersection_multiplicity((X * X).scale(-3), Y.scale(2), ORIGIN) == 2


def test_multiplicity_infinite_on_shared_factor():
    assert intersection_multiplicity(Y * X, Y, ORIGIN) == INFINITE


def test_multiplicity_at_algebraic_point():
    # curves Y - X^2 and X^2 - 2 meet at (sqrt2, 2)
    from pencil_lab.kernel.algebraic import roots_of_rational_poly

    a = roots_of_rational_poly([F(-2), 0, F(1)])[1]
    two = roots_of_rational_poly([F(-2), F(1)])[0]
    P = PlanePoint(a, two)
    assert intersection_multiplicity(Y - X * X, X * X - C(2), P) == 1


def test_affine_totals():
    assert affine_total(Y * Y - X**3, Y.scale(2)) == 3
    assert affine_total(Y - ONE, Y + ONE) == 0
    assert affine_total(Y - X * X, Y + X * X) == 2
    assert affine_total(Y * Y, Y) == INFINITE


def test_split_totals_examples():
    f = Y * Y - X**3
    assert split_totals(f.deriv_x(), f.deriv_y(), f) == (2, 0)
    assert split_totals(X - ONE, Y - ONE, X * Y - ONE) == (1, 0)
    assert split_totals(X - C(2), Y - ONE, X * Y - ONE) == (0, 1)


def test_split_totals_sum_to_affine_total():
    rng = random.Random(8)
    done = 0
    while done < 8:
        g = _rand(rng, 2)
        h = _rand(rng, 2)
        f = _rand(rng, 2)
        if g.is_constant() or h.is_constant() or f.is_constant():
            continue
        if not poly_gcd(g, h).is_constant():
            continue
        total = affine_total(g, h)
        on, off = split_totals(g, h, f)
        assert on + off == total and on >= 0 and off >= 0
        done += 1


def _rand(rng, deg):
    terms = {(0, deg): F(1)}
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            if (a, b) == (0, deg):
                continue
            c = rng.randint(-4, 4)
            if c:
                terms[(a, b)] = F(c)
    return BivariatePolynomial(terms)


def test_i_hat_examples():
    ih = i_hat(Y * Y - X**3, Y.scale(2))
    assert (ih.value, len(ih.alpha), ih.beta) == (3, 0, 0)
    ih = i_hat(Y * Y, Y.scale(2))
    assert ih.infinite and ih.value == INFINITE
    ih = i_hat(X * Y - ONE, X)
    assert ih.value == 1 and ih.beta == 0
    assert ih.alpha.contains(F(0)) and len(ih.alpha) == 1


def test_legacy_rank_examples():
    assert legacy_rank_rho(Y * Y - X**3) == 0
    assert legacy_rank_rho(Y * Y) == INFINITE
    # the shift f - (-1) of X*Y - 1 contains the component X = 0 of f_Y,
    # so the shifted-intersection maximum (and with it the rank) blows up
    assert legacy_rank_rho(X * Y - ONE) == INFINITE


def test_points_at_infinity():
    pts, orbits = points_at_infinity(X * Y - ONE)
    assert len(pts) == 2
    pts, _ = points_at_infinity(Y**3 - Y.scale(3))
    assert len(pts) == 1
    # a(X) Y + X - z with m = 2: degree form X^2 Y gives two directions
    f = X * (X - ONE) * Y + X - C(2)
    pts, _ = points_at_infinity(f)
    assert len(pts) == 2


def test_branch_counts_at_origin():
    assert branch_count_at_origin(Y * Y - X**3) == 1
    assert branch_count_at_origin(Y * Y - X * X - X**3) == 2
    assert branch_count_at_origin(Y * Y - X**4) == 2
    assert branch_count_at_origin(Y * Y * Y - X * X) == 1
    assert branch_count_at_origin(X * Y) == 2
    assert branch_count_at_origin((Y - X * X) * (Y + X * X)) == 2


def test_branch_count_ordinary_multiple_point():
    # m distinct tangent lines through the origin: m branches
    f = Y * (Y - X) * (Y + X) + X**5
    assert branch_count_at_origin(f) == 3


def test_tau_examples():
    assert tau_places_at_infinity(X * Y - ONE).tau == 2
    f = X * (X - ONE) * Y + X - C(2)  # two places over one direction plus one
    assert tau_places_at_infinity(f).tau == 3
    f5 = (X - Y) * (X + Y) + ONE
    assert tau_places_at_infinity(f5).tau == 2
    assert tau_places_at_infinity(Y * Y - X**3).tau == 1


def test_tau_at_least_points_and_unibranch_equality():
    f5 = (X - Y) * (X + Y) + ONE
    data = tau_places_at_infinity(f5)
    assert data.tau >= data.count
    assert data.tau == data.count  # all places simple here


def test_branch_count_at_infinite_point():
    pts, _ = points_at_infinity(Y * Y - X**3)
    assert branch_count(Y * Y - X**3, pts[0]) == 1


def test_bezout_when_no_escape():
    rng = random.Random(19)
    done = 0
    while done < 6:
        g = _rand(rng, 2)
        h = _rand(rng, 2)
        if not poly_gcd(g, h).is_constant():
            continue
        if not poly_gcd(g.degree_form(), h.degree_form()).is_constant():
            continue
        assert affine_total(g, h) == g.total_degree() * h.total_degree()
        done += 1


def test_profile_total_matches_resultant_degree():
    g = Y * Y - X**3
    h = Y - X
    prof = intersection_profile(g, h, extras=())
    assert prof.total() == affine_total(g, h)
