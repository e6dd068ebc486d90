import random
from fractions import Fraction as F

import pytest

from pencil_lab.kernel.bipoly import BivariatePolynomial
from pencil_lab.ranks import (
    defset,
    defset_bounds,
    defset_shear_stability,
    rank_data,
    rank_report,
    rho_a,
    rho_a_at,
    rho_pi,
    zeta_and_jungian,
)

X = BivariatePolynomial.variable(0)
Y = BivariatePolynomial.variable(1)
ONE = BivariatePolynomial.constant(1)


def C(v):
    return BivariatePolynomial.constant(v)


def rats(s):
    return sorted(s.rational_members())


def test_rho_a_examples():
    assert rho_a(Y * Y - X**3) == 0
    assert rho_a(Y * Y) == 0
    for c in (F(1), F(-3), F(7, 2)):
        assert rho_a(Y * Y - C(c)) == -1


def test_rho_pi_examples():
    assert rho_pi(Y * Y - X**3) == 2
    assert rho_pi(Y**3 - Y.scale(3)) == -2
    assert rho_pi(Y * Y) == -1


def test_defset_examples():
    ds = defset(rank_data(Y * Y - X**3))
    assert rats(ds) == [F(0)]
    assert ds.annotation_for(ds.factors[0][0])["rho_a_fiber"] == 0
    ds = defset(rank_data(Y**3 - Y.scale(3)))
    assert rats(ds) == [F(-2), F(2)]
    assert all(ds.annotation_for(mp)["rho_a_fiber"] == -1 for mp, _ in ds.factors)
    ds = defset(rank_data(Y * Y))
    assert rats(ds) == [F(0)]


def test_zeta_examples():
    for f in (Y**3 - Y.scale(3), Y * Y - X**3, Y * Y, X * Y + ONE):
        z, resid = zeta_and_jungian(rank_data(f))
        assert z == -1 and resid == 0


def test_pure_y_family_fiber_ranks():
    # monic one-variable members: rank of each fiber is 1 - N + deg_Y of
    # the repeated part, and the pencil rank is 1 - N
    f = Y**4 - Y.scale(2)
    data = rank_data(f)
    N = data.N
    assert rho_pi(data, crosscheck=False) == 1 - N
    for mp, _ in defset(data).factors:
        bracket = data.bracket_degy.get(mp, 0)
        assert rho_a_at(data, mp) == 1 - N + bracket


def test_defset_bounds_and_monotonicity():
    for f in (Y * Y - X**3, Y**3 - Y.scale(3), X * Y + ONE):
        checks = defset_bounds(rank_data(f))
        assert checks["singset_minus_multset_in_defset"]
        assert checks["defset_card_le"] and checks["singset_card_le"]
        assert checks["rho_pi_ge_rho_a_off_multset"]


def test_radical_crosscheck_agreement():
    # rho_a with crosscheck exercises the direct radical-form evaluation
    for f in (Y * Y - X**3, X * Y + ONE, Y**3 - Y.scale(3) + X):
        rho_a(f, crosscheck=True)


def test_rho_pi_equals_generic_fiber_rank():
    rng = random.Random(23)
    for f in (Y * Y - X**3, X * Y + ONE):
        data = rank_data(f)
        pi = rho_pi(data, crosscheck=False)
        for _ in range(2):
            c0 = F(rng.randint(1000, 9999))
            from pencil_lab.ranks import _in_candidates, _rat_minpoly

            if _in_candidates(data, c0):
                continue
            assert rho_a_at(data, _rat_minpoly(c0)) == pi


def test_shear_stability_of_defset():
    assert defset_shear_stability(Y * Y - X**3)
    assert defset_shear_stability(Y**3 - Y.scale(3), lam=3)


def test_rank_report_fields():
    rep = rank_report(Y * Y - X**3)
    assert (rep.N, rep.rho_a, rep.rho_pi) == (3, 0, 2)
    assert rep.zeta == -1 and rep.jungian_residual == 0
    assert rep.vinf == 1
    assert rats(rep.defset) == [F(0)]


def test_irrational_defset_members_have_uniform_rank():
    # critical values of this quartic member family are irrational
    f = Y * Y - (X**4 + X + ONE)
    data = rank_data(f)
    ds = defset(data)
    z, resid = zeta_and_jungian(data)
    assert z == -1 and resid == 0
    assert any(len(mp) > 2 for mp, _ in ds.factors)
