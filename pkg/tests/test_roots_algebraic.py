import random
from fractions import Fraction as F

import pytest

from pencil_lab.kernel.algebraic import (
    AlgebraicNumber,
    AlgebraicSet,
    element_minpoly,
    nf_element_to_algebraic,
    number_field_of,
    roots_of_rational_poly,
)
from pencil_lab.kernel.fields import QQ
from pencil_lab.kernel.roots import (
    Box,
    count_roots_in_box,
    isolate_complex_roots,
    isolate_real_roots,
    refine_box,
)
from pencil_lab.kernel.unipoly import umul


def test_isolate_sqrt2():
    roots = roots_of_rational_poly([F(-2), 0, F(1)])
    assert len(roots) == 2
    vals = sorted(r.approx()[0] for r in roots)
    assert abs(vals[0] + 1.41421356) < 1e-6 and abs(vals[1] - 1.41421356) < 1e-6
    assert all(r.is_real() for r in roots)


def test_isolate_conjugate_pair():
    roots = roots_of_rational_poly([F(1), 0, F(1)])
    assert len(roots) == 2
    ims = sorted(r.approx()[1] for r in roots)
    assert abs(ims[0] + 1) < 1e-6 and abs(ims[1] - 1) < 1e-6
    # conjugate boxes, disjoint
    assert roots[0].box.intersect(roots[1].box) is None


def test_rational_fast_path():
    roots = roots_of_rational_poly([F(-3, 2), F(1)])
    assert len(roots) == 1 and roots[0].rational_value() == F(3, 2)
    assert roots[0].box.width() == 0


def test_isolate_rejects_non_squarefree():
    with pytest.raises(ValueError):
        roots_of_rational_poly([F(0), F(0), F(1)])  # x^2


def test_equality_is_equivalence_on_sample():
    polys = [[F(-2), 0, F(1)], [F(1), 0, F(1)], [F(-2), 0, F(1)]]
    sample = []
    for p in polys:
        sample.extend(roots_of_rational_poly(p))
    for a in sample:
        assert a == a
    for a in sample:
        for b in sample:
            assert (a == b) == (b == a)
    for a in sample:
        for b in sample:
            for c in sample:
                if a == b and b == c:
                    assert a == c
    # the two copies of sqrt(2) data must merge pairwise
    eq_pairs = sum(1 for a in sample for b in sample if a == b)
    assert eq_pairs == len(sample) + 4  # reflexive plus two cross pairs


def test_refinement_keeps_certified_count():
    poly = [F(1), F(1), F(0), F(0), F(0), F(0), F(1)]  # x^6 + x + 1
    boxes = isolate_complex_roots(poly)
    assert len(boxes) == 6
    for b in boxes[:2]:
        small = refine_box(poly, b, F(1, 10**6))
        assert small.width() <= F(1, 10**6)
        assert count_roots_in_box(poly, _pad_box(small)) == 1


def _pad_box(b):
    eps = F(1, 10**9)
    return Box(b.re_lo - eps, b.re_hi + eps, b.im_lo - eps, b.im_hi + eps)


def test_count_in_custom_boxes():
    poly = [F(1), 0, F(1)]  # roots at +-i
    assert count_roots_in_box(poly, Box(-1, 1, F(1, 2), 2)) == 1
    assert count_roots_in_box(poly, Box(-1, 1, -2, -F(1, 2))) == 1
    assert count_roots_in_box(poly, Box(-3, 3, -3, 3)) == 2


def test_real_isolation_with_rational_roots_mixed():
    # (x - 1/2)(x^2 - 2) has a rational root between the irrational ones
    from pencil_lab.kernel.unipoly import ueval

    f = umul([F(-1, 2), F(1)], [F(-2), 0, F(1)], QQ)
    ivs = isolate_real_roots(f)
    assert len(ivs) == 3
    for lo, hi in ivs:
        if lo == hi:
            assert ueval(f, lo, QQ) == 0
        else:
            assert ueval(f, lo, QQ) * ueval(f, hi, QQ) < 0
    # the middle interval holds the rational root
    mid = sorted(ivs)[1]
    assert mid[0] <= F(1, 2) <= mid[1]


def test_algebraic_set_union_difference():
    s1 = AlgebraicSet.from_defining_poly([F(-2), 0, F(1)])
    s2 = AlgebraicSet.from_rationals([F(1), F(-2)])
    u = s1.union(s2)
    assert len(u) == 4
    assert u.contains(F(1)) and not u.contains(F(3))
    assert s1.is_subset_of(u)
    assert u.difference(s2).same_set(s1)
    assert sorted(s2.rational_members()) == [F(-2), F(1)]


def test_number_field_bridge_roundtrip():
    a = roots_of_rational_poly([F(-2), 0, F(1)])[1]  # +sqrt(2)
    K = number_field_of(a)
    half = K.from_coeffs([0, F(1, 2)])
    val = nf_element_to_algebraic(K, half, a)
    assert abs(val.approx()[0] - 0.7071067811) < 1e-6
    assert val.minpoly == (-1, 0, 2)
    assert element_minpoly(K, half) == [-1, 0, 2]


def test_minpoly_of_rational_element():
    a = roots_of_rational_poly([F(-2), 0, F(1)])[1]
    K = number_field_of(a)
    sq = K.mul(K.gen, K.gen)
    val = nf_element_to_algebraic(K, sq, a)
    assert val.rational_value() == 2
