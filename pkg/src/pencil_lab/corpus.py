"""Built-in example corpus: constructed families with known invariants,
structured random instances with ground truth by construction, and
brute-force oracles for differential testing.
"""

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .kernel.bipoly import BivariatePolynomial
from .kernel.fields import QQ, PrimeField


def _X(field=QQ):
    return BivariatePolynomial.variable(0, field)


def _Y(field=QQ):
    return BivariatePolynomial.variable(1, field)


def _C(v, field=QQ):
    return BivariatePolynomial.constant(v, field)


@dataclass
class CorpusItem:
    identifier: str
    f: BivariatePolynomial
    w: BivariatePolynomial = None
    params: dict = dc_field(default_factory=dict)
    expected: dict = dc_field(default_factory=dict)

    def __repr__(self):
        return "CorpusItem(%s)" % self.identifier


def _a_poly(a_list):
    out = _C(1)
    X = _X()
    for ai in a_list:
        out = out * (X - _C(ai))
    return out


def gen_linear_y_family(m, a_list, z):
    """f = a(X)*Y + X - z with a = prod (X - a_i), distinct a_i, z not in a.

    Reducible members sit exactly at {a_i - z}; the curve has m + 1 places
    at infinity (a simple point and an ordinary m-fold point).
    """
    a_list = [Fraction(v) for v in a_list]
    z = Fraction(z)
    if len(set(a_list)) != m or len(a_list) != m:
        raise ValueError("need m pairwise distinct roots")
    if z in a_list:
        raise ValueError("z must avoid the roots of a")
    f = _a_poly(a_list) * _Y() + _X() - _C(z)
    return CorpusItem(
        identifier="linear-y m=%d" % m,
        f=f,
        params={"m": m, "a": a_list, "z": z},
        expected={
            "redset": sorted(ai - z for ai in a_list),
            "fiber_exponents": {str(ai - z): (1, 1) for ai in a_list},
            "tau": m + 1,
            "composite": False,
        },
    )


def gen_quadratic_y_family(m, mu, gamma, a_list, b_tail, z):
    """f = a(X)*Y^2 + gamma*b(X)*Y + X - z with b_i = a_i exactly for i <= mu.

    Reducible members are {a_i - z : i <= mu}; tau = m + 2 (a double point
    with distinct tangents plus an ordinary m-fold point).
    """
    a_list = [Fraction(v) for v in a_list]
    b_list = a_list[:mu] + [Fraction(v) for v in b_tail]
    gamma = Fraction(gamma)
    z = Fraction(z)
    if not (1 <= mu <= m) or len(a_list) != m or len(b_list) != m:
        raise ValueError("need 1 <= mu <= m and matching lists")
    if len(set(a_list)) != m or len(set(b_list)) != m:
        raise ValueError("roots must be pairwise distinct")
    if set(b_list[mu:]) & set(a_list):
        raise ValueError("tail of b must avoid the roots of a")
    if z in a_list[:mu]:
        raise ValueError("z must avoid a_1..a_mu")
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    if m == 1:
        # gamma restricted so that Z^2 + gamma*Z + 1 splits with distinct
        # rational roots
        disc = gamma * gamma - 4
        from math import isqrt

        num, den = disc.numerator, disc.denominator
        ok = num > 0 and isqrt(num * den) ** 2 == num * den
        if not ok:
            raise ValueError("for m=1, gamma^2 - 4 must be a positive square")
    f = (
        _a_poly(a_list) * _Y() * _Y()
        + (_a_poly(b_list) * _Y()).scale(gamma)
        + _X()
        - _C(z)
    )
    return CorpusItem(
        identifier="quadratic-y m=%d mu=%d" % (m, mu),
        f=f,
        params={"m": m, "mu": mu, "gamma": gamma, "a": a_list, "b": b_list, "z": z},
        expected={
            "redset": sorted(ai - z for ai in a_list[:mu]),
            "tau": m + 2,
            "composite": False,
        },
    )


def gen_constrained_quadratic(m, a_list, z, seed=0):
    """f = a(X)*Y^2 + b(X)*Y + X - z with b built by rejection sampling so
    that no member of the pencil factors; tau = m + 2."""
    if m < 2:
        raise ValueError("need m >= 2")
    a_list = [Fraction(v) for v in a_list]
    if len(a_list) != m or len(set(a_list)) != m:
        raise ValueError("need m pairwise distinct roots")
    z = Fraction(z)
    a = _a_poly(a_list)
    arows = a.y_major()[0]
    alpha = list(reversed([c for c in arows]))  # monic: alpha[0] = 1
    # alpha_j = coefficient of X^(m-j); cofactor coefficients alpha_{i,j}
    cof = {}
    X = _X()
    for i, ai in enumerate(a_list, start=1):
        arow = (
            _a_poly([v for v in a_list if v != ai]).y_major()[0]
        )
        rev = list(reversed(arow))
        cof[i] = rev  # cof[i][j] = alpha_{i,j}, j = 0..m-1, alpha_{i,0} = 1
    rng = random.Random(seed)
    for _ in range(4000):
        beta1 = Fraction(rng.randint(-9, 9))
        beta2 = Fraction(rng.randint(-9, 9))
        betam = Fraction(rng.randint(-9, 9))
        coeffs = {1: beta1, 2: beta2, m: betam}
        if m == 2:
            coeffs = {1: beta1, 2: beta2 + betam}  # indices collide at m = 2
        b = {m: Fraction(1)}
        for j, c in coeffs.items():
            b[m - j] = b.get(m - j, Fraction(0)) + c
        bpoly = BivariatePolynomial({(e, 0): c for e, c in b.items() if c}, QQ)
        if any(sum(c * ai**e for e, c in b.items()) == 0 for ai in a_list):
            continue
        b1 = coeffs.get(1, Fraction(0))
        b2 = coeffs.get(2, Fraction(0))
        if m > 3:
            if b1 == alpha[1]:
                continue
            if any(
                b2 == b1 * cof[i][1] - cof[i][1] ** 2 + cof[i][2]
                for i in range(1, m + 1)
            ):
                continue
        elif m == 3:
            if b1 == alpha[1]:
                continue
            if any(
                b2 == b1 * cof[i][1] - cof[i][1] ** 2 + cof[i][2] + 1
                for i in range(1, m + 1)
            ):
                continue
        else:  # m == 2
            if b1 == 1 + alpha[1]:
                continue
            if any(
                b2 == b1 * cof[i][1] - cof[i][1] ** 2 - cof[i][1] - a_list[i - 1]
                for i in range(1, m + 1)
            ):
                continue
        f = _a_poly(a_list) * _Y() * _Y() + bpoly * _Y() + _X() - _C(z)
        return CorpusItem(
            identifier="constrained-quadratic m=%d" % m,
            f=f,
            params={"m": m, "a": a_list, "b": dict(b), "z": z},
            expected={"redset": [], "tau": m + 2, "composite": False},
        )
    raise ArithmeticError("rejection sampling failed to satisfy constraints")


def gen_split_tail(m, a_list, z):
    """f = a(X)*Y^2 + Y + X^(m+1) - z: empty redset, tau = m + 1."""
    a_list = [Fraction(v) for v in a_list]
    if len(a_list) != m or len(set(a_list)) != m:
        raise ValueError("need m pairwise distinct roots")
    z = Fraction(z)
    f = _a_poly(a_list) * _Y() * _Y() + _Y() + _X() ** (m + 1) - _C(z)
    return CorpusItem(
        identifier="split-tail m=%d" % m,
        f=f,
        params={"m": m, "a": a_list, "z": z},
        expected={"redset": [], "tau": m + 1, "composite": False},
    )


def gen_lines_plus_constant(m, a_list, z):
    """f = prod (X - a_i*Y) + z with z != 0: redset = {z}, tau = m."""
    if m < 2:
        raise ValueError("need m >= 2")
    a_list = [Fraction(v) for v in a_list]
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    if len(a_list) != m or len(set(a_list)) != m:
        raise ValueError("need m pairwise distinct slopes")
    X, Y = _X(), _Y()
    f = _C(1)
    for ai in a_list:
        f = f * (X - Y.scale(ai))
    f = f + _C(z)
    return CorpusItem(
        identifier="lines-plus-constant m=%d" % m,
        f=f,
        params={"m": m, "a": a_list, "z": z},
        expected={
            "redset": [z],
            "fiber_exponents": {str(z): tuple([1] * m)},
            "tau": m,
            "composite": False,
        },
    )


def klein_forms():
    """The three icosahedral invariant combinations with f + w = 1728*H3^5."""
    X, Y = _X(), _Y()
    X5, Y5 = X**5, Y**5
    X10, Y10 = X5 * X5, Y5 * Y5
    H1 = (
        X10 * X10 * X10
        + Y10 * Y10 * Y10
        - (X10 * Y10 * (X10 + Y10)).scale(10005)
        + (X5 * Y5 * (X10 * X10 - Y10 * Y10)).scale(522)
    )
    H2 = -(X10 * X10 + Y10 * Y10 + (X10 * Y10).scale(494)) + (
        X5 * Y5 * (X10 - Y10)
    ).scale(228)
    H3 = X * Y * (X10 - Y10 + (X5 * Y5).scale(11))
    return H1, H2, H3


def gen_klein():
    """The icosahedral pencil H1^2 - c*H2^3 with three proper-power fibers."""
    H1, H2, H3 = klein_forms()
    f = H1 * H1
    w = H2 * H2 * H2
    return CorpusItem(
        identifier="klein-icosahedral",
        f=f,
        w=w,
        params={},
        expected={
            "identity_v": (H3**5).scale(1728),
            "primset_plus": [Fraction(-1), Fraction(0), "inf"],
            "mu_values": {"0": 2, "-1": 5, "inf": 3},
            "mu_pattern": [2, 3, 5],
            "primset_plus_card_le": 4,
        },
    )


def gen_monomial_hyperbolas(a1, a2, a1p, a2p):
    """f = X^a1 Y^a2 - 1 and f' = X^a1' Y^a2' - 1 with coprime exponents."""
    from math import gcd

    if gcd(a1, a2) != 1 or gcd(a1p, a2p) != 1:
        raise ValueError("exponent pairs must be coprime")
    f = BivariatePolynomial({(a1, a2): Fraction(1), (0, 0): Fraction(-1)}, QQ)
    fp = BivariatePolynomial({(a1p, a2p): Fraction(1), (0, 0): Fraction(-1)}, QQ)
    return CorpusItem(
        identifier="hyperbolas (%d,%d | %d,%d)" % (a1, a2, a1p, a2p),
        f=f,
        w=None,
        params={"pair": (a1, a2), "pair2": (a1p, a2p), "fprime": fp},
        expected={
            "redset": [Fraction(-1)],
            "redset2": [Fraction(-1)],
            "refset_equal": sorted((a1, a2)) == sorted((a1p, a2p)),
        },
    )


def gen_structured_random(seed, degree_bound=4, kind=None):
    """Random instance with construction-known facts.

    kinds: 'product' plants a reducible member at c0; 'power' plants a
    proper-power member at c0; 'smooth' is an unconstrained dense member
    checked only against the pipeline's own invariants.
    """
    rng = random.Random(seed)
    kind = kind or rng.choice(["product", "power", "smooth"])
    if kind == "product":
        g = _random_poly(rng, max(1, degree_bound // 2), monic_y=True)
        h = _random_poly(rng, max(1, degree_bound - g.total_degree()), monic_y=True)
        c0 = Fraction(rng.randint(-8, 8))
        f = g * h + _C(c0)
        return CorpusItem(
            identifier="random-product seed=%s" % seed,
            f=f,
            params={"seed": seed, "kind": kind, "factors": (g, h), "c0": c0},
            expected={"redset_contains": [c0]},
        )
    if kind == "power":
        mu = rng.choice([2, 3])
        h = _random_poly(rng, max(1, degree_bound // mu), monic_y=True)
        u = Fraction(rng.choice([1, 2, 3]))
        c0 = Fraction(rng.randint(-8, 8))
        f = (h**mu).scale(u) + _C(c0)
        return CorpusItem(
            identifier="random-power seed=%s" % seed,
            f=f,
            params={"seed": seed, "kind": kind, "mu": mu, "base": h, "c0": c0},
            expected={"primset_contains": {str(c0): mu}},
        )
    f = _random_poly(rng, degree_bound, monic_y=True, density=0.7)
    return CorpusItem(
        identifier="random-smooth seed=%s" % seed,
        f=f,
        params={"seed": seed, "kind": "smooth"},
        expected={},
    )


def _random_poly(rng, deg, monic_y=False, density=0.6):
    terms = {}
    if monic_y:
        terms[(0, deg)] = Fraction(1)
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            if (a, b) == (0, deg):
                continue
            if rng.random() < density:
                c = rng.randint(-5, 5)
                if c:
                    terms[(a, b)] = Fraction(c)
    out = BivariatePolynomial(terms, QQ)
    if out.total_degree() < deg:
        terms[(deg, 0)] = Fraction(1)
        out = BivariatePolynomial(terms, QQ)
    return out


def standard_items():
    """The golden corpus driven by the verification suites."""
    items = []
    items.append(gen_linear_y_family(0, [], 0))
    items.append(gen_linear_y_family(1, [0], 1))
    items.append(gen_linear_y_family(2, [0, 1], 2))
    items.append(gen_linear_y_family(3, [0, 1, -1], 2))
    items.append(gen_quadratic_y_family(2, 1, 1, [0, 1], [3], 2))
    items.append(gen_quadratic_y_family(2, 2, 1, [0, 1], [], 2))
    items.append(gen_constrained_quadratic(2, [0, 1], 0, seed=3))
    items.append(gen_split_tail(1, [0], 0))
    items.append(gen_split_tail(2, [0, 1], 1))
    items.append(gen_lines_plus_constant(2, [1, -1], 1))
    items.append(gen_lines_plus_constant(3, [0, 1, -1], 2))
    return items


# ---------------------------------------------------------------------------
# oracles


def oracle_local_dimension(g, h, point=(0, 0), cap=40):
    """dim of the local ring modulo (g, h) at an affine point, by linear
    algebra on monomials; returns the dimension, or None past the cap."""
    x0, y0 = Fraction(point[0]), Fraction(point[1])
    K = g.field
    X, Y = _X(K), _Y(K)
    tg = g.substituted(X + _C(x0, K), Y + _C(y0, K))
    th = h.substituted(X + _C(x0, K), Y + _C(y0, K))
    prev = None
    D = 1
    while True:
        dim = _local_dim_at_level(tg, th, D)
        if dim is not None and dim == prev:
            return dim
        if dim is not None and dim > cap:
            return None
        prev = dim
        D += 1
        if D > 3 * cap + 6:
            return None


def _local_dim_at_level(g, h, D):
    """dim k[x,y] / ((g,h) + m^(D+1)) restricted to degree <= D."""
    K = g.field
    if not K.is_zero(g.eval_at(K.zero, K.zero)) or not K.is_zero(
        h.eval_at(K.zero, K.zero)
    ):
        return 0
    monos = [(a, b) for a in range(D + 1) for b in range(D + 1 - a)]
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for (a, b) in monos:
        for p in (g, h):
            row = [Fraction(0)] * len(monos)
            for (i, j), c in p.terms.items():
                e = (a + i, b + j)
                if e[0] + e[1] <= D:
                    row[index[e]] += c
            rows.append(row)
    r = _rank_q(rows)
    return len(monos) - r


def _rank_q(rows):
    from .kernel.linalg import rank_exact_int
    from math import gcd as _g

    introws = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // _g(den, c.denominator)
        introws.append([int(c * den) for c in row])
    return rank_exact_int(introws)


def oracle_primefield_scan(f, p):
    """Brute-force fiber classification of f - c over GF(p).

    Returns {"all_singular": bool, "singular": set, "multiple": set} with
    parameter values as integers mod p.  Rejects p when the coefficients
    do not reduce faithfully (leading term vanishing).
    """
    if p > 101:
        raise ValueError("scan limited to p <= 101")
    K = PrimeField(p)
    fp = f.map_field(K, K.from_fraction)
    if fp.total_degree() != f.total_degree():
        raise ValueError("bad prime: leading form degenerates mod %d" % p)
    fx = fp.deriv_x()
    fy = fp.deriv_y()
    if fx.is_zero() and fy.is_zero():
        return {
            "all_singular": True,
            "singular": set(range(p)),
            "multiple": set(),
        }
    singular = set()
    for x in range(p):
        fcol = fp.subst_x(x)
        fxcol = fx.subst_x(x)
        fycol = fy.subst_x(x)
        for y in range(p):
            from .kernel.unipoly import ueval

            if ueval(fxcol, y, K) == 0 and ueval(fycol, y, K) == 0:
                singular.add(ueval(fcol, y, K))
    multiple = set()
    for c in range(p):
        fiber = fp - _C(c, K)
        gx, gy = fiber.deriv_x(), fiber.deriv_y()
        gco = fiber
        for d in (gx, gy):
            if not d.is_zero():
                from .kernel.bipoly import poly_gcd

                gco = poly_gcd(gco, d)
        if not gco.is_constant():
            multiple.add(c)
    return {"all_singular": False, "singular": singular, "multiple": multiple}
