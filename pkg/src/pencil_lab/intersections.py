"""Plane-curve intersection numbers, deficiency data, and branch counts.

Totals use the classical fact that for Y-monic curves without common
factor the X-degree of Res_Y equals the total affine intersection number,
with per-fiber orders giving per-point multiplicities once a shear has
separated x-coordinates.  A direct Fulton-style recursion provides the
per-point multiplicity at explicitly given points, and Newton polygon
iteration counts branches for the places at infinity.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .kernel.algebraic import (
    AlgebraicNumber,
    AlgebraicSet,
    NOT_CONSTANT,
    box_poly_eval,
    nf_element_to_algebraic,
    number_field_of,
    roots_of_rational_poly,
    sort_algebraic,
    extend_number_field,
)
from .kernel.bipoly import (
    BivariatePolynomial,
    div_exact,
    poly_gcd,
    pure_variable_divisor,
    resultant_y,
    residue_values,
    squarefree_decompose,
)
from .kernel.fields import QQ, NumberField
from .kernel.unipoly import (
    ueval,
    uexactdiv,
    ugcd,
    uderiv,
    uinterpolate,
    umonic,
    ustrip,
)
from .kernel.zfactor import factor_rational, factor_over_field, z_to_q

INFINITE = float("inf")


class ShearInstabilityError(ArithmeticError):
    """Two independent shears disagreed; indicates a kernel defect."""


class DepthBoundExceeded(ArithmeticError):
    """Newton polygon recursion exceeded its configured depth."""

    def __init__(self, partial):
        super().__init__("branch recursion exceeded its depth bound")
        self.partial = partial


@dataclass
class PlanePoint:
    """Affine point with algebraic coordinates, or a point at infinity."""

    x: AlgebraicNumber = None
    y: AlgebraicNumber = None
    at_infinity: bool = False
    triple: tuple = None  # normalized (X, Y, 0) when at infinity
    slope: object = None  # t for the infinite point (t : 1 : 0); None = (1:0:0)

    @classmethod
    def affine(cls, x, y):
        if isinstance(x, (int, Fraction)):
            x = AlgebraicNumber.from_rational(x)
        if isinstance(y, (int, Fraction)):
            y = AlgebraicNumber.from_rational(y)
        return cls(x, y, False, None, None)

    @classmethod
    def infinite(cls, slope):
        """Point at infinity (slope : 1 : 0); slope None encodes (1 : 0 : 0).

        The stored triple has its first nonzero coordinate equal to 1.
        """
        one = AlgebraicNumber.from_rational(1)
        zero = AlgebraicNumber.from_rational(0)
        if slope is None:
            return cls(None, None, True, (one, zero, zero), None)
        if isinstance(slope, (int, Fraction)):
            slope = AlgebraicNumber.from_rational(slope)
        if slope.is_rational() and slope.rational_value() == 0:
            return cls(None, None, True, (zero, one, zero), slope)
        inv = _alg_inverse(slope)
        return cls(None, None, True, (one, inv, zero), slope)

    def __repr__(self):
        if self.at_infinity:
            return "PlanePoint(%r : %r : 0)" % (self.triple[0], self.triple[1])
        return "PlanePoint(%r, %r)" % (self.x, self.y)


def _alg_inverse(a):
    if a.is_rational():
        return AlgebraicNumber.from_rational(1 / a.rational_value())
    mp = list(a.minpoly)
    mp.reverse()
    if mp[-1] < 0:
        mp = [-c for c in mp]
    cur = a
    while True:
        b = cur.box
        # invert the box when it is bounded away from zero
        pts = []
        ok = True
        for re in (b.re_lo, b.re_hi):
            for im in (b.im_lo, b.im_hi):
                n = re * re + im * im
                if n == 0:
                    ok = False
                    break
                pts.append((re / n, -im / n))
            if not ok:
                break
        if ok and not (b.re_lo <= 0 <= b.re_hi and b.im_lo <= 0 <= b.im_hi):
            from .kernel.roots import Box

            res = [p[0] for p in pts]
            ims = [p[1] for p in pts]
            guess = Box(min(res), max(res), min(ims), max(ims))
            from .kernel.roots import count_roots_in_box, BoundaryRootError

            try:
                if count_roots_in_box(z_to_q(mp), guess) == 1:
                    return AlgebraicNumber(mp, guess)
            except BoundaryRootError:
                pass
        cur = cur.refined(cur.box.width() / 4 if cur.box.width() else Fraction(1, 4))


@dataclass
class ProfileGroup:
    """One Galois orbit of common zeros: orbit_size conjugate points, each
    of multiplicity mult, with coordinates and extra values in field K."""

    x_minpoly: tuple
    orbit_size: int
    mult: int
    K: object
    x0: object
    y0: object
    values: tuple


@dataclass
class IntersectionProfile:
    """Common zeros of one pair, grouped by conjugacy, with multiplicity."""

    groups: list  # ProfileGroup
    shear: int
    infinite: bool = False

    def total(self):
        if self.infinite:
            return INFINITE
        return sum(g.orbit_size * g.mult for g in self.groups)


def y_monicizing_shear(polys):
    """Smallest natural lam making every poly Y-monic under X -> X+lam*Y."""
    lam = 0
    while True:
        ok = True
        for g in polys:
            if g.is_zero() or g.is_constant():
                continue
            d = g.total_degree()
            dform = g.degree_form()
            val = dform.eval_at(g.field.from_int(lam), g.field.one)
            if g.field.is_zero(val):
                ok = False
                break
        if ok:
            return lam
        lam += 1


def _sheared(polys, lam):
    return [g.shear_x_plus_ly(lam) for g in polys]


def affine_total(g, h):
    """I(g, h; A): total affine intersection count, or infinity."""
    if g.is_zero() or h.is_zero():
        raise ArithmeticError("intersection of the zero polynomial")
    if g.is_constant() or h.is_constant():
        return 0
    if not poly_gcd(g, h).is_constant():
        return INFINITE
    vals = []
    lam = 0
    tried = 0
    while len(vals) < 2 and tried < 60:
        tried += 1
        gs, hs = _sheared([g, h], lam)
        lam += 1
        if not (gs.is_y_monic() and hs.is_y_monic()):
            continue
        R = ustrip(resultant_y(gs, hs), g.field)
        vals.append(len(R) - 1)
    if len(vals) < 2:
        raise ShearInstabilityError("no Y-monicizing shear found")
    if vals[0] != vals[1]:
        raise ShearInstabilityError("affine totals disagree: %r" % (vals,))
    return vals[0]


def intersection_profile(g, h, extras=(), max_tries=60):
    """Separated profile of the common zeros of (g, h) over Q.

    Shears until every x-fiber of the sheared pair carries exactly one
    common point; per-point multiplicity is then the order of Res_Y at
    that x.  Each group describes one Galois orbit: the x-minimal
    polynomial, the multiplicity, the working number field K = Q[x]/(m),
    x0 and y0 as K-elements, and the values of the extra polynomials.
    """
    if g.is_constant() or h.is_constant():
        if (g.is_zero() and not h.is_constant()) or (
            h.is_zero() and not g.is_constant()
        ):
            return IntersectionProfile([], 0, True)
        return IntersectionProfile([], 0, False)
    if not poly_gcd(g, h).is_constant():
        return IntersectionProfile([], 0, True)
    lam = y_monicizing_shear([g, h])
    for attempt in range(max_tries):
        gs, hs = _sheared([g, h], lam)
        es = _sheared(list(extras), lam)
        if not (gs.is_y_monic() and hs.is_y_monic()):
            lam += 1
            continue
        groups = _profile_once(gs, hs, es, allow_fallback=attempt >= 6)
        if groups is not None:
            return IntersectionProfile(groups, lam)
        lam += 1
    raise ShearInstabilityError("could not separate intersection fibers")


def _profile_once(gs, hs, extras, allow_fallback=False):
    K0 = gs.field
    R = ustrip(resultant_y(gs, hs), K0)
    if len(R) - 1 == 0:
        return []
    unit, facs = factor_rational(R)
    groups = []
    for mp, e in facs:
        if len(mp) == 2:
            K = QQ
            x0 = Fraction(-mp[0], mp[1])
            gy = ustrip(gs.subst_x(x0), QQ)
            hy = ustrip(hs.subst_x(x0), QQ)
        else:
            K = NumberField(umonic(z_to_q(list(mp)), QQ), "x")
            x0 = K.gen
            gy = _subst_x_nf(gs, K, x0)
            hy = _subst_x_nf(hs, K, x0)
        d = ugcd(gy, hy, K)
        if len(d) - 1 == 1:
            y0 = K.div(K.neg(d[0]), d[1])
            vals = tuple(_value_at(ex, K, x0, y0) for ex in extras)
            groups.append(
                ProfileGroup(tuple(mp), len(mp) - 1, e, K, x0, y0, vals)
            )
            continue
        if not allow_fallback:
            return None  # several points over one x-fiber; try another shear
        groups.extend(
            _fiber_fallback(gs, hs, extras, tuple(mp), e, K, x0, d)
        )
    return groups


def _value_at(ex, K, x0, y0):
    if K is QQ:
        return ueval(ustrip(ex.subst_x(x0), QQ), y0, QQ)
    return ueval(_subst_x_nf(ex, K, x0), y0, K)


def _fiber_fallback(gs, hs, extras, mp, e, K, x0, d):
    """Per-point recursion for fibers holding several (or singular) points.

    Splits the fiber gcd over K and computes each point's multiplicity by
    the local recursion; the resultant order e must be recovered as the
    weighted sum, which certifies the decomposition.
    """
    out = []
    total = 0
    _, dfacs = factor_over_field(d, K)
    for dfac, _m in dfacs:
        if len(dfac) == 2:
            K2 = K
            x2, y2 = x0, K.div(K.neg(dfac[0]), dfac[1])
        elif K is QQ:
            K2 = NumberField(umonic(dfac, QQ), "y")
            x2, y2 = K2.from_fraction(x0), K2.gen
        else:
            K2, alpha2, tau2 = extend_number_field(K, dfac)
            x2, y2 = alpha2, tau2
        mult = _fulton_at(gs, hs, K2, x2, y2)
        orbit = (K2.degree if K2 is not QQ else 1)
        vals = tuple(_value_at(ex, K2, x2, y2) for ex in extras)
        out.append(ProfileGroup(mp, orbit, mult, K2, x2, y2, vals))
        total += mult * (len(dfac) - 1)
    if total != e:
        raise ShearInstabilityError(
            "fiber multiplicities %d disagree with the resultant order %d"
            % (total, e)
        )
    return out


def _fulton_at(gs, hs, K, x2, y2):
    """Local multiplicity of (gs, hs) at the point (x2, y2) over K."""
    G = gs if gs.field == K else gs.map_field(K, K.from_fraction)
    H = hs if hs.field == K else hs.map_field(K, K.from_fraction)
    X = BivariatePolynomial.variable(0, K, gs.vars)
    Y = BivariatePolynomial.variable(1, K, gs.vars)
    tx = X + BivariatePolynomial.constant(x2, K, gs.vars)
    ty = Y + BivariatePolynomial.constant(y2, K, gs.vars)
    return _fulton(G.substituted(tx, ty), H.substituted(tx, ty))


def _subst_x_nf(P, K, x0):
    rows = P.y_major()
    out = []
    for r in rows:
        out.append(ueval([K.from_fraction(c) for c in r], x0, K))
    return ustrip(out, K)


def split_totals(g, h, f):
    """(I(g,h;f), I(g,h;A minus f)): on-curve and off-curve totals."""
    prof = intersection_profile(g, h, extras=(f,))
    if prof.infinite:
        return INFINITE, INFINITE
    on = off = 0
    for grp in prof.groups:
        value = grp.values[0]
        is_on = (value == 0) if grp.K is QQ else grp.K.is_zero(value)
        if is_on:
            on += grp.mult * grp.orbit_size
        else:
            off += grp.mult * grp.orbit_size
    return on, off


# ---------------------------------------------------------------------------
# the shifted-intersection maximum and its deficiency data


@dataclass
class IHatData:
    value: object  # int or INFINITE
    alpha: AlgebraicSet
    beta: object
    infinite: bool = False


def i_hat(g, h):
    """max over constants mu of I(g, h - mu; A), with alpha and beta.

    Infinite exactly when some constant shift of h shares a factor with g;
    when h is itself constant that degenerate shift is excluded (else the
    maximum would be vacuously infinite).
    """
    if g.is_zero() or h.is_zero():
        raise ArithmeticError("i_hat of zero polynomial")
    if g.is_constant():
        return IHatData(0, AlgebraicSet.empty(), 0)
    if h.is_constant():
        # exclude the single shift mu = h; every other shift meets g nowhere
        return IHatData(0, AlgebraicSet.empty(), 0)
    shared = residue_values(h, g)
    if shared is not None:
        return IHatData(INFINITE, AlgebraicSet.empty(), INFINITE, True)
    results = []
    lam = 0
    tried = 0
    while len(results) < 2 and tried < 60:
        tried += 1
        gs, hs = _sheared([g, h], lam)
        lam += 1
        if not (gs.is_y_monic() and hs.is_y_monic()):
            continue
        R = _res_shifted(gs, hs)
        results.append((_ihat_from_res(R), R))
    if len(results) < 2:
        raise ShearInstabilityError("no Y-monicizing shear found")
    if results[0][0][0] != results[1][0][0]:
        raise ShearInstabilityError("shifted totals disagree")
    (value, lead), R = results[0]
    alpha = AlgebraicSet.empty()
    beta = 0
    if len(lead) > 1:
        aset = AlgebraicSet.from_defining_poly(lead)
        for mp, boxes in aset.factors:
            deficiency = value - _degx_at(R, mp)
            if deficiency > 0:
                alpha = alpha.union(
                    AlgebraicSet([(mp, boxes)], {mp: {"deficiency": deficiency}})
                )
                if mp != (0, 1):
                    beta += (len(mp) - 1) * deficiency
    return IHatData(value, alpha, beta)


def _res_shifted(gs, hs):
    """R(X, T) = Res_Y(gs, hs - T) as {(xexp, texp): Fraction}."""
    n = hs.deg_y()
    pts = []
    t0 = 0
    while len(pts) < n + 1:
        tv = Fraction(t0)
        t0 = -t0 + (1 if t0 <= 0 else 0)
        shifted = hs - BivariatePolynomial.constant(tv, hs.field, hs.vars)
        pts.append((tv, ustrip(resultant_y(gs, shifted), QQ)))
    maxlen = max(len(v) for _, v in pts)
    terms = {}
    for i in range(maxlen):
        vals = [(t, v[i] if i < len(v) else Fraction(0)) for t, v in pts]
        ci = uinterpolate(vals, QQ)
        for j, c in enumerate(ci):
            if c:
                terms[(i, j)] = c
    return terms


def _ihat_from_res(R):
    dmax = max((i for (i, _) in R), default=0)
    lead = {}
    for (i, j), c in R.items():
        if i == dmax:
            lead[j] = c
    leadpoly = ustrip([lead.get(j, Fraction(0)) for j in range(max(lead) + 1)], QQ)
    return dmax, leadpoly


def _degx_at(R, mp):
    """deg_X of R(X, c) for c a root of the irreducible mp."""
    if len(mp) == 2:
        c0 = Fraction(-mp[0], mp[1])
        degs = {}
        for (i, j), c in R.items():
            degs[i] = degs.get(i, Fraction(0)) + c * c0**j
        return max((i for i, v in degs.items() if v != 0), default=0)
    K = NumberField(umonic(z_to_q(list(mp)), QQ), "c")
    degs = {}
    for (i, j), c in R.items():
        term = K.mul(K.from_fraction(c), _kpow(K, K.gen, j))
        degs[i] = K.add(degs.get(i, K.zero), term)
    return max((i for i, v in degs.items() if not K.is_zero(v)), default=0)


def _kpow(K, x, e):
    out = K.one
    for _ in range(e):
        out = K.mul(out, x)
    return out


def legacy_rank_rho(f):
    """I(f_X, f_Y; off the curve) + beta(f_Y, f); infinity propagates."""
    if f.is_constant():
        raise ArithmeticError("rank of a constant")
    fx, fy = f.deriv_x(), f.deriv_y()
    ih = i_hat(fy, f)
    if ih.infinite:
        return INFINITE
    if fx.is_zero() or fy.is_zero():
        # the ideal (f_X, f_Y) is principal; its zero set is a curve, and
        # every point of that curve contributes infinitely unless empty
        other = fy if fx.is_zero() else fx
        if other.is_constant():
            off = 0
        else:
            return INFINITE
    else:
        if not poly_gcd(fx, fy).is_constant():
            return INFINITE
        _, off = split_totals(fx, fy, f)
    return off + ih.beta


# ---------------------------------------------------------------------------
# infinity: points, branches, places


@dataclass
class InfinityData:
    points: list  # PlanePoint
    branch_counts: list
    tau: int
    count: int  # |V_inf|


def points_at_infinity(f):
    """Distinct points of the projective closure on the line at infinity."""
    if f.is_constant():
        raise ArithmeticError("points at infinity of a constant")
    dform = f.degree_form()
    d = f.total_degree()
    # roots of the binary form: t -> (t : 1 : 0) plus possibly (1 : 0 : 0)
    p = [Fraction(0)] * (d + 1)
    for (a, b), c in dform.terms.items():
        p[a] = c
    p = ustrip(p, QQ)
    out = []
    orbits = []
    has_x_dir = len(p) - 1 < d  # coefficient of X^d vanishes
    if has_x_dir:
        out.append(PlanePoint.infinite(None))
        orbits.append((None, [None]))
    sq = _squarefree_q(p)
    if len(sq) > 1:
        _, facs = factor_rational(sq)
        for mp, _ in facs:
            roots = roots_of_rational_poly(z_to_q(list(mp)))
            orbits.append((tuple(mp), roots))
            for r in roots:
                out.append(PlanePoint.infinite(r))
    return out, orbits


def _squarefree_q(p):
    g = ugcd(p, uderiv(p, QQ), QQ)
    return uexactdiv(p, g, QQ) if len(g) > 1 else list(p)


def homogenize(f):
    """Terms dict {(i, j, k)} of Z^d * f(X/Z, Y/Z) with d = deg f."""
    d = f.total_degree()
    return {(a, b, d - a - b): c for (a, b), c in f.terms.items()}


def chart_at_infinite_point(f, slope, K=None):
    """Local polynomial at a point at infinity, vanishing at the origin.

    slope None: point (1:0:0), chart (u, v) = (Y/X, Z/X) -> F(1, u?, v).
    slope s: point (s:1:0), chart (u, v) = (Z/Y, X/Y - s) -> F(v+s, 1, u).
    Returned with variables (u, v) as (X, Y) of a BivariatePolynomial.
    """
    H = homogenize(f)
    if slope is None:
        # F(1, Y, X): u = Z/X as new X, v = Y/X as new Y
        terms = {}
        for (a, b, ccc), c in H.items():
            terms[(ccc, b)] = terms.get((ccc, b), Fraction(0)) + c
        return BivariatePolynomial({e: v for e, v in terms.items() if v}, QQ)
    # F(v + s, 1, u): new X = u, new Y = v
    field = QQ if slope == 0 or (hasattr(slope, "is_rational") and slope.is_rational()) else None
    if hasattr(slope, "is_rational"):
        s_rat = slope.rational_value() if slope.is_rational() else None
    else:
        s_rat = Fraction(slope)
    if s_rat is not None:
        K = QQ
        out = BivariatePolynomial.zero(QQ)
        X = BivariatePolynomial.variable(0, QQ)
        Y = BivariatePolynomial.variable(1, QQ)
        vs = Y + BivariatePolynomial.constant(s_rat, QQ)
        for (a, b, ccc), c in H.items():
            out = out + (vs**a * X**ccc).scale(c)
        return out
    K = K or number_field_of(slope, "s")
    s = K.gen
    out = BivariatePolynomial.zero(K)
    X = BivariatePolynomial.variable(0, K)
    Y = BivariatePolynomial.variable(1, K)
    vs = Y + BivariatePolynomial.constant(s, K)
    for (a, b, ccc), c in H.items():
        out = out + (vs**a * X**ccc).scale(K.from_fraction(c))
    return out


def branch_count_at_origin(g, depth_bound=None):
    """Number of local branches of g = 0 at the origin (over the closure)."""
    K = g.field
    if depth_bound is None:
        depth_bound = 2 * max(1, g.total_degree()) ** 2
    if not K.is_zero(g.eval_at(K.zero, K.zero)):
        return 0
    return _branches(g, depth_bound)


def _branches(g, depth):
    if depth < 0:
        raise DepthBoundExceeded(g)
    K = g.field
    count = 0
    # axis components (one branch each for a reduced curve)
    if g.terms and all(a >= 1 for (a, b) in g.terms):
        shift = min(a for (a, b) in g.terms)
        g = BivariatePolynomial(
            {(a - shift, b): c for (a, b), c in g.terms.items()}, K, g.vars
        )
        count += 1
    if g.terms and all(b >= 1 for (a, b) in g.terms):
        shift = min(b for (a, b) in g.terms)
        g = BivariatePolynomial(
            {(a, b - shift): c for (a, b), c in g.terms.items()}, K, g.vars
        )
        count += 1
    if g.is_constant() or not K.is_zero(g.eval_at(K.zero, K.zero)):
        return count
    for p, q, edge_terms in _newton_edges(g):
        phi = _edge_poly(edge_terms, p, K)
        from .kernel.unipoly import usquarefree_decompose

        layers, _unit = usquarefree_decompose(phi, K)
        for layer, mult in layers:
            if mult == 1:
                count += len(layer) - 1
                continue
            _, facs = factor_over_field(layer, K)
            for mfac, _m in facs:
                if len(mfac) == 2:
                    tau = K.neg(K.div(mfac[0], mfac[1]))
                    gg = _edge_transform(g, p, q, tau, K)
                    count += _branches(gg, depth - 1)
                else:
                    if K is QQ or K == QQ:
                        K2 = NumberField(umonic(mfac, QQ), "a")
                        tau2 = K2.gen
                        g2 = g.map_field(K2, K2.from_fraction)
                    else:
                        K2, alpha2, tau2 = extend_number_field(K, mfac)
                        g2 = g.map_field(
                            K2, lambda c: _reexpress(K, K2, alpha2, c)
                        )
                    gg = _edge_transform(g2, p, q, tau2, K2)
                    count += (len(mfac) - 1) * _branches(gg, depth - 1)
    return count


def _reexpress(K, K2, alpha2, c):
    """Map an element of K = Q(alpha) into K2 via the image of alpha."""
    out = K2.zero
    power = K2.one
    for coef in c:
        out = K2.add(out, K2.mul(K2.from_fraction(coef), power))
        power = K2.mul(power, alpha2)
    return out


def _newton_edges(g):
    """Lower Newton polygon edges with primitive normals (p, q) > 0."""
    pts = sorted(g.terms.keys())
    # lower-left staircase hull between the Y-axis and X-axis intercepts
    hull = []
    best = {}
    for (i, j) in pts:
        if i not in best or j < best[i]:
            best[i] = j
    cand = sorted(best.items())  # (i, j) with minimal j per i
    # convex lower hull
    for pt in cand:
        while len(hull) >= 2 and _turn(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    edges = []
    for (i1, j1), (i2, j2) in zip(hull, hull[1:]):
        if j1 <= j2:
            continue  # only strictly descending edges face the origin
        from math import gcd as intgcd

        gg = intgcd(j1 - j2, i2 - i1)
        p = (j1 - j2) // gg
        q = (i2 - i1) // gg
        N = p * i1 + q * j1
        edge_terms = {
            (a, b): c for (a, b), c in g.terms.items() if p * a + q * b == N
        }
        edges.append((p, q, edge_terms))
    return edges


def _turn(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _edge_poly(edge_terms, p, K):
    jmin = min(b for _, b in edge_terms)
    phi = {}
    for (a, b), c in edge_terms.items():
        phi[(b - jmin) // p] = c
    out = [K.zero] * (max(phi) + 1)
    for k, c in phi.items():
        out[k] = c
    return ustrip(out, K)


def _edge_transform(g, p, q, tau, K):
    """Substitute X -> x^p, Y -> x^q (tau + y), divide out the x-power."""
    terms = {}
    # (tau + y)^j expansions cached
    from math import comb

    taupow = {0: K.one}

    def tp(e):
        if e not in taupow:
            taupow[e] = K.mul(taupow[e - 1], tau)
        return taupow[e]

    for (a, b), c in g.terms.items():
        base_x = p * a + q * b
        for t in range(b + 1):
            coef = K.mul(c, K.mul(K.from_int(comb(b, t)), tp(b - t)))
            e = (base_x, t)
            cur = K.add(terms.get(e, K.zero), coef)
            if K.is_zero(cur):
                terms.pop(e, None)
            else:
                terms[e] = cur
    if not terms:
        return BivariatePolynomial.zero(K, g.vars)
    nmin = min(a for a, _ in terms)
    return BivariatePolynomial(
        {(a - nmin, b): c for (a, b), c in terms.items()}, K, g.vars
    )


def branch_count(f, point, depth_bound=None):
    """Branches of the curve f = 0 at a plane point (affine or infinite)."""
    if point.at_infinity:
        sl = point.slope
        if sl is not None and sl.is_rational():
            local = chart_at_infinite_point(f, sl.rational_value())
        else:
            local = chart_at_infinite_point(f, sl)
        return branch_count_at_origin(local, depth_bound)
    # affine: translate the point to the origin over its field
    x, y = point.x, point.y
    if x.is_rational() and y.is_rational():
        X = BivariatePolynomial.variable(0, f.field, f.vars)
        Y = BivariatePolynomial.variable(1, f.field, f.vars)
        gx = X + BivariatePolynomial.constant(x.rational_value(), f.field, f.vars)
        gy = Y + BivariatePolynomial.constant(y.rational_value(), f.field, f.vars)
        return branch_count_at_origin(f.substituted(gx, gy), depth_bound)
    K, x0, y0 = _joint_field(x, y)
    F = f.map_field(K, K.from_fraction)
    X = BivariatePolynomial.variable(0, K, f.vars)
    Y = BivariatePolynomial.variable(1, K, f.vars)
    gx = X + BivariatePolynomial.constant(x0, K, f.vars)
    gy = Y + BivariatePolynomial.constant(y0, K, f.vars)
    return branch_count_at_origin(F.substituted(gx, gy), depth_bound)


def _joint_field(x, y):
    """A number field holding a conjugate pair of the given coordinates."""
    if x.is_rational():
        K = number_field_of(y)
        return K, K.from_fraction(x.rational_value()), K.gen
    if y.is_rational():
        K = number_field_of(x)
        return K, K.gen, K.from_fraction(y.rational_value())
    Kx = number_field_of(x)
    # factor y's minimal polynomial over Q(x); pick the factor that
    # annihilates (x, y) by joint interval refinement until unique
    my = [Kx.from_fraction(Fraction(c)) for c in y.minpoly]
    _, facs = factor_over_field(my, Kx)
    mfac = _select_factor([m for m, _ in facs], x, y)
    if len(mfac) == 2:
        return Kx, Kx.gen, Kx.neg(Kx.div(mfac[0], mfac[1]))
    K2, alpha2, tau2 = extend_number_field(Kx, mfac)
    return K2, alpha2, tau2


def _select_factor(factors, x, y):
    """The unique factor (coefficients in Q(x)) vanishing at (x, y)."""
    a, b = x, y
    live = list(factors)
    for _ in range(200):
        if len(live) == 1:
            return live[0]
        keep = []
        for mfac in live:
            boxes = []
            cur = _const_box(1)
            for ci in mfac:
                cb = box_poly_eval(list(ci), a.box)
                boxes.append(_boxmul(cb, cur))
                cur = _boxmul(cur, b.box)
            tot = boxes[0]
            for bb in boxes[1:]:
                tot = _boxadd(tot, bb)
            if tot.re_lo <= 0 <= tot.re_hi and tot.im_lo <= 0 <= tot.im_hi:
                keep.append(mfac)
        if keep:
            live = keep
        a = a.refined(a.box.width() / 4 if a.box.width() else Fraction(1, 8))
        b = b.refined(b.box.width() / 4 if b.box.width() else Fraction(1, 8))
    raise ArithmeticError("factor selection did not converge")


def _const_box(q):
    from .kernel.roots import Box

    q = Fraction(q)
    return Box(q, q, 0, 0)


def _boxadd(a, b):
    from .kernel.algebraic import _box_add

    return _box_add(a, b)


def _boxmul(a, b):
    from .kernel.algebraic import _box_mul

    return _box_mul(a, b)


def tau_places_at_infinity(f, depth_bound=None):
    """Total number of places of the curve f = 0 on the line at infinity."""
    if f.is_constant():
        raise ArithmeticError("tau of a constant")
    pts, orbits = points_at_infinity(f)
    data = InfinityData(points=pts, branch_counts=[], tau=0, count=len(pts))
    for mp, roots in orbits:
        if mp is None:
            local = chart_at_infinite_point(f, None)
            b = branch_count_at_origin(local, depth_bound)
            data.branch_counts.append(b)
            data.tau += b
            continue
        rep = roots[0]
        if rep.is_rational():
            local = chart_at_infinite_point(f, rep.rational_value())
        else:
            local = chart_at_infinite_point(f, rep)
        b = branch_count_at_origin(local, depth_bound)
        for _ in roots:
            data.branch_counts.append(b)
        data.tau += b * len(roots)
    return data


# ---------------------------------------------------------------------------
# Fulton's recursion at explicit points


def intersection_multiplicity(g, h, point):
    """I(g, h; Q) by the bilinearity/reduction recursion at an affine Q."""
    if point.at_infinity:
        raise ArithmeticError("affine points only")
    x, y = point.x, point.y
    if x.is_rational() and y.is_rational():
        K = g.field
        x0 = K.from_fraction(x.rational_value())
        y0 = K.from_fraction(y.rational_value())
        G, H = g, h
    else:
        K, x0, y0 = _joint_field(x, y)
        G = g.map_field(K, K.from_fraction)
        H = h.map_field(K, K.from_fraction)
    X = BivariatePolynomial.variable(0, K, g.vars)
    Y = BivariatePolynomial.variable(1, K, g.vars)
    G = G.substituted(X + BivariatePolynomial.constant(x0, K, g.vars),
                      Y + BivariatePolynomial.constant(y0, K, g.vars))
    H = H.substituted(X + BivariatePolynomial.constant(x0, K, g.vars),
                      Y + BivariatePolynomial.constant(y0, K, g.vars))
    com = poly_gcd(G, H)
    if not com.is_constant() and K.is_zero(com.eval_at(K.zero, K.zero)):
        return INFINITE
    return _fulton(G, H)


def _fulton(g, h):
    """Multiplicity at the origin; inputs share no factor through it.

    Iterative version of the classical reduction (every case is a tail
    call, and reduction chains can be long).  All computations run on
    jets truncated past the local Bezout bound deg(g)*deg(h), which the
    multiplicity cannot exceed; each step renormalizes by a unit to keep
    coefficients small.
    """
    K = g.field
    bound = max(1, g.total_degree()) * max(1, h.total_degree())
    M = bound + 2

    def trunc(p):
        if p.total_degree() <= M:
            return p
        return BivariatePolynomial(
            {e: c for e, c in p.terms.items() if e[0] + e[1] <= M}, K, p.vars
        )

    g = trunc(g).normalized()
    h = trunc(h).normalized()
    total = 0
    while True:
        if total > bound:
            raise ArithmeticError("local multiplicity exceeded its bound")
        if g.is_zero() or h.is_zero():
            return INFINITE
        if not K.is_zero(g.eval_at(K.zero, K.zero)) or not K.is_zero(
            h.eval_at(K.zero, K.zero)
        ):
            return total
        # pure-variable shortcuts: I(g, u(X)) = ord_X(u) * ord_Y g(0, Y)
        if h.deg_y() == 0:
            k = _ord(ustrip(h.y_major()[0], K), K)
            oy = _ord(ustrip(g.subst_x(K.zero), K), K)
            return INFINITE if oy is None else total + k * oy
        if h.deg_x() == 0:
            k = _ord(ustrip(h.x_major()[0], K), K)
            ox = _ord(ustrip(g.subst_y(K.zero), K), K)
            return INFINITE if ox is None else total + k * ox
        if g.deg_y() == 0 or g.deg_x() == 0:
            g, h = h, g
            continue
        gx = ustrip(g.subst_y(K.zero), K)  # g(X, 0)
        hx = ustrip(h.subst_y(K.zero), K)
        r = _ord(gx, K)
        s = _ord(hx, K)
        Yv = BivariatePolynomial.variable(1, K, g.vars)
        if r is None and s is None:
            return INFINITE
        if r is None:  # Y divides g
            g = div_exact(g, Yv)
            total += s
            continue
        if s is None:  # Y divides h
            h = div_exact(h, Yv)
            total += r
            continue
        if r > s:
            g, h = h, g
            gx, hx = hx, gx
            r, s = s, r
        # kill the lowest X-power of h(X,0) using g
        c = K.div(hx[s], gx[r])
        Xv = BivariatePolynomial.variable(0, K, g.vars)
        h = trunc(h - (Xv ** (s - r)).scale(c) * g).normalized()


def _ord(poly_list, K):
    for i, c in enumerate(poly_list):
        if not K.is_zero(c):
            return i
    return None
