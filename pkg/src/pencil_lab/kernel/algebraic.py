"""Algebraic numbers over Q: exact representation and decidable equality.

An AlgebraicNumber is an irreducible primitive integer minimal polynomial
together with a rational-cornered box isolating exactly one complex root.
AlgebraicSet is the canonical finite-set-of-roots representation used for
every set-valued invariant: a squarefree rational defining polynomial kept
in factored form, each factor carrying its isolated root boxes.
"""

from fractions import Fraction

from .fields import QQ, NumberField
from .roots import Box, cauchy_root_bound, isolate_complex_roots, refine_box
from .unipoly import UnivariatePolynomial, ueval, uinterpolate, umul, ustrip
from .zfactor import factor_rational, q_to_z, z_to_q, zresultant


class NotConstant:
    """Marker: the reduced image of a polynomial is not algebraic over Q."""

    def __repr__(self):
        return "NotConstant"


NOT_CONSTANT = NotConstant()


def _box_add(a, b):
    return Box(a.re_lo + b.re_lo, a.re_hi + b.re_hi, a.im_lo + b.im_lo, a.im_hi + b.im_hi)


def _box_mul(a, b):
    res = []
    ims = []
    for ar, ai in ((a.re_lo, a.im_lo), (a.re_lo, a.im_hi), (a.re_hi, a.im_lo), (a.re_hi, a.im_hi)):
        for br, bi in ((b.re_lo, b.im_lo), (b.re_lo, b.im_hi), (b.re_hi, b.im_lo), (b.re_hi, b.im_hi)):
            res.append(ar * br - ai * bi)
            ims.append(ar * bi + ai * br)
    return Box(min(res), max(res), min(ims), max(ims))


def _box_const(q):
    q = Fraction(q)
    return Box(q, q, 0, 0)


def box_poly_eval(coeffs, box):
    """Interval evaluation of a Q-coefficient polynomial on a complex box."""
    acc = _box_const(0)
    for c in reversed(coeffs):
        acc = _box_add(_box_mul(acc, box), _box_const(c))
    return acc


class AlgebraicNumber:
    """A root of an irreducible integer polynomial, pinned down by a box."""

    __slots__ = ("minpoly", "box", "_rat")

    def __init__(self, minpoly, box):
        mp = tuple(int(c) for c in minpoly)
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        self.minpoly = mp
        self.box = box
        self._rat = Fraction(-mp[0], mp[1]) if len(mp) == 2 else None

    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), _box_const(q))

    @property
    def degree(self):
        return len(self.minpoly) - 1

    def is_rational(self):
        return self._rat is not None

    def rational_value(self):
        return self._rat

    def is_real(self):
        if self._rat is not None:
            return True
        return self.box.im_lo == self.box.im_hi == 0

    def conjugate(self):
        if self.is_real():
            return self
        return AlgebraicNumber(self.minpoly, self.box.conjugate())

    def neg(self):
        mp = [(-1) ** i * c for i, c in enumerate(self.minpoly)]
        if mp[-1] < 0:
            mp = [-c for c in mp]
        b = self.box
        return AlgebraicNumber(mp, Box(-b.re_hi, -b.re_lo, -b.im_hi, -b.im_lo))

    def refined(self, width):
        if self._rat is not None:
            return self
        box = refine_box(z_to_q(self.minpoly), self.box, width)
        return AlgebraicNumber(self.minpoly, box)

    def _sep_bound(self):
        # rational lower bound for the root separation of the minimal
        # polynomial (Mahler-type, deliberately crude)
        n = self.degree
        if n < 2:
            return Fraction(1)
        s2 = sum(c * c for c in self.minpoly)
        return Fraction(1, n ** ((n + 3) // 2) * s2 ** (n - 1))

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        if self._rat is not None or other._rat is not None:
            return self._rat == other._rat
        if self.minpoly != other.minpoly:
            return False
        a, b = self, other
        if a.box.as_tuple() == b.box.as_tuple():
            return True
        sep = self._sep_bound()
        while True:
            if a.box.intersect(b.box) is None:
                return False
            if _box_inside(a.box, b.box) or _box_inside(b.box, a.box):
                return True
            if a.box.width() < sep / 4 and b.box.width() < sep / 4:
                # boxes overlap and are far below the separation bound
                return True
            w = max(a.box.width(), b.box.width()) / 2
            a = a.refined(w)
            b = b.refined(w)

    def __hash__(self):
        # weak but consistent: numbers equal per __eq__ share a minpoly
        return hash(self.minpoly)

    def approx(self, digits=12):
        """Float (re, im) approximation for display purposes."""
        width = Fraction(1, 10**digits)
        a = self.refined(width)
        mx, my = a.box.mid()
        return float(mx), float(my)

    def __repr__(self):
        if self._rat is not None:
            return "AlgebraicNumber(%s)" % self._rat
        re, im = self.approx(6)
        return "AlgebraicNumber(~%.6g%+.6gj, deg %d)" % (re, im, self.degree)

    def sort_tuple(self):
        a = self.refined(Fraction(1, 1 << 20))
        mx, my = a.box.mid()
        return (self.degree, self.minpoly, mx, my)


def _box_inside(inner, outer):
    return (
        outer.re_lo <= inner.re_lo
        and inner.re_hi <= outer.re_hi
        and outer.im_lo <= inner.im_lo
        and inner.im_hi <= outer.im_hi
    )


def roots_of_rational_poly(coeffs):
    """All complex roots of a squarefree Q-polynomial as AlgebraicNumbers."""
    coeffs = ustrip([Fraction(c) for c in coeffs], QQ)
    if len(coeffs) <= 1:
        return []
    _, facs = factor_rational(coeffs)
    for _, mult in facs:
        if mult > 1:
            raise ValueError("input polynomial is not squarefree")
    out = []
    for irr, _ in facs:
        if len(irr) == 2:
            out.append(AlgebraicNumber.from_rational(Fraction(-irr[0], irr[1])))
            continue
        for box in isolate_complex_roots(z_to_q(irr)):
            out.append(AlgebraicNumber(irr, box))
    return sort_algebraic(out)


def sort_algebraic(nums):
    return sorted(nums, key=lambda a: a.sort_tuple())


class AlgebraicSet:
    """Finite set of algebraic numbers with one squarefree defining poly.

    Kept in factored form: a list of (irreducible integer minpoly, boxes),
    where boxes stay None until a member-level view is requested (root
    isolation of large minimal polynomials is costly and most set algebra
    only needs the factored defining polynomial).  Per-orbit annotations
    attach shared data to all conjugate members of one irreducible factor.
    """

    def __init__(self, factors=None, annotations=None):
        self.factors = [
            (tuple(mp), boxes) for mp, boxes in (factors or [])
        ]  # [(minpoly tuple, [Box, ...] | None)]
        self.annotations = dict(annotations or {})  # minpoly -> dict

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def from_defining_poly(cls, coeffs, annotations=None):
        coeffs = ustrip([Fraction(c) for c in coeffs], QQ)
        if len(coeffs) <= 1:
            return cls(annotations=annotations)
        _, facs = factor_rational(coeffs)
        factors = [(tuple(irr), None) for irr, _ in facs]
        factors.sort(key=lambda t: (len(t[0]), t[0]))
        return cls(factors, annotations)

    def _boxes_for(self, index):
        mp, boxes = self.factors[index]
        if boxes is None:
            if len(mp) == 2:
                boxes = [_box_const(Fraction(-mp[0], mp[1]))]
            else:
                boxes = isolate_complex_roots(z_to_q(list(mp)))
            self.factors[index] = (mp, boxes)
        return boxes

    @classmethod
    def from_rationals(cls, values, annotations=None):
        factors = []
        for q in sorted(set(Fraction(v) for v in values)):
            factors.append(((-q.numerator, q.denominator), [_box_const(q)]))
        factors.sort(key=lambda t: (len(t[0]), t[0]))
        return cls(factors, annotations)

    def defining_polynomial(self):
        poly = [Fraction(1)]
        for mp, _ in self.factors:
            poly = umul(poly, z_to_q(mp), QQ)
        return UnivariatePolynomial(poly, QQ)

    def members(self):
        out = []
        for i, (mp, _) in enumerate(self.factors):
            for b in self._boxes_for(i):
                out.append(AlgebraicNumber(mp, b))
        return sort_algebraic(out)

    def rational_members(self):
        return sorted(
            Fraction(-mp[0], mp[1]) for mp, _ in self.factors if len(mp) == 2
        )

    def cardinality(self):
        return sum(len(mp) - 1 for mp, _ in self.factors)

    def __len__(self):
        return self.cardinality()

    def is_empty(self):
        return not self.factors

    def contains(self, value):
        if isinstance(value, (int, Fraction)):
            value = AlgebraicNumber.from_rational(value)
        for i, (mp, _) in enumerate(self.factors):
            if mp == value.minpoly:
                if value.is_rational():
                    return True  # a rational minpoly has its single root
                for b in self._boxes_for(i):
                    if AlgebraicNumber(mp, b) == value:
                        return True
        return False

    def union(self, other):
        seen = {}
        for mp, boxes in list(self.factors) + list(other.factors):
            seen.setdefault(mp, boxes)
        ann = dict(other.annotations)
        ann.update(self.annotations)
        factors = sorted(seen.items(), key=lambda t: (len(t[0]), t[0]))
        return AlgebraicSet(factors, ann)

    def difference(self, other):
        keep = [
            (mp, boxes) for mp, boxes in self.factors
            if mp not in dict(other.factors)
        ]
        return AlgebraicSet(
            keep, {k: v for k, v in self.annotations.items() if k in dict(keep)}
        )

    def is_subset_of(self, other):
        omap = dict(other.factors)
        return all(mp in omap for mp, _ in self.factors)

    def same_set(self, other):
        return dict(self.factors).keys() == dict(other.factors).keys()

    def restrict_rational(self):
        keep = [(mp, boxes) for mp, boxes in self.factors if len(mp) == 2]
        return AlgebraicSet(keep, {mp: self.annotations.get(mp, {}) for mp, _ in keep})

    def annotate(self, minpoly, **kv):
        self.annotations.setdefault(tuple(minpoly), {}).update(kv)

    def annotation_for(self, minpoly):
        return self.annotations.get(tuple(minpoly), {})

    def __repr__(self):
        if not self.factors:
            return "AlgebraicSet({})"
        return "AlgebraicSet({%s})" % ", ".join(repr(m) for m in self.members())


# ---------------------------------------------------------------------------
# bridge between number fields and algebraic numbers


def number_field_of(alg, name="t"):
    """The field Q[t]/(minpoly) containing the given algebraic number."""
    mp = z_to_q(list(alg.minpoly))
    lc = mp[-1]
    return NumberField([c / lc for c in mp], name)


def element_minpoly(K, elt):
    """Minimal polynomial over Q of an element of a number field.

    Computed from the characteristic polynomial Res_t(m(t), x - e(t)),
    reduced to its squarefree part and factored; the unique irreducible
    factor with e as a root is found by degree/divisibility filtering.
    """
    charpoly = _char_poly(K, elt)
    _, facs = factor_rational(charpoly)
    if len(facs) == 1:
        return list(facs[0][0])
    # the characteristic polynomial is a power of the minimal polynomial
    for irr, _ in facs:
        if _annihilates(K, irr, elt):
            return list(irr)
    raise ArithmeticError("no factor annihilates the element")


def char_poly(K, elt):
    """Res_t(m(t), x - e(t)): the full characteristic polynomial over Q."""
    return _char_poly(K, elt)


def _char_poly(K, elt):
    """Res_t(m(t), x - e(t)) as a Q-coefficient polynomial in x."""
    m = list(K.minpoly)
    d = K.degree
    pts = []
    x = 0
    while len(pts) < d + 1:
        shifted = [Fraction(x) - elt[0]] + [-c for c in elt[1:]]
        pts.append((Fraction(x), _resq(m, shifted)))
        x = -x + (1 if x <= 0 else 0)
    return uinterpolate(pts, QQ)


def _resq(a, b):
    az, ua = q_to_z(a)
    bz, ub = q_to_z(b)
    if not bz:
        return Fraction(0) if len(az) > 1 else Fraction(1)
    r = zresultant(az, bz)
    return ua ** (len(bz) - 1) * ub ** (len(az) - 1) * Fraction(r)


def _annihilates(K, intpoly, elt):
    acc = K.zero
    power = K.one
    for c in intpoly:
        acc = K.add(acc, K.mul(K.from_int(c), power))
        power = K.mul(power, elt)
    return K.is_zero(acc)


def nf_element_to_algebraic(K, elt, alpha):
    """Identify an element of K = Q(alpha) as an AlgebraicNumber.

    `alpha` fixes the embedding.  The element's box is obtained by interval
    evaluation at alpha, refined until it is consistent with exactly one
    root of the element's minimal polynomial.
    """
    rat = K.rational_value(elt)
    if rat is not None:
        return AlgebraicNumber.from_rational(rat)
    mp = element_minpoly(K, elt)
    candidates = isolate_complex_roots(z_to_q(mp))
    a = alpha
    while True:
        val_box = box_poly_eval(list(elt), a.box)
        hits = [b for b in candidates if b.intersect(val_box) is not None]
        if len(hits) == 1:
            return AlgebraicNumber(mp, hits[0])
        a = a.refined(a.box.width() / 4 if a.box.width() else Fraction(1, 4))
        candidates = [
            refine_box(z_to_q(mp), b, b.width() / 4 if b.width() else Fraction(1))
            for b in candidates
        ]


def algebraic_to_nf(alg, name="t"):
    """Return (K, generator element, alpha) for computations in Q(alg)."""
    K = number_field_of(alg, name)
    return K, K.gen, alg


def extend_number_field(K, mtau, name="t"):
    """Adjoin to K = Q(alpha) a root tau of an irreducible K-polynomial.

    Returns (K2, alpha_in_K2, tau_in_K2): a single number field Q(gamma)
    with gamma = tau + k*alpha a primitive element found by resultants.
    Only the abstract field structure is produced (no embedding choice),
    which is all that conjugation-invariant counting needs.
    """
    d = len(mtau) - 1
    if K.degree == 1 or d == 0:
        raise ValueError("degenerate extension")
    A = list(K.minpoly)
    for k in _small_integers():
        # R(x) = Res_s(A(s), mtau(x - k*s) with alpha -> s)
        R = _joined_charpoly(K, mtau, k)
        sq = _is_squarefree_q(R)
        if not sq:
            continue
        _, facs = factor_rational(R)
        for irr, _ in facs:
            K2 = NumberField(z_to_q(irr), name)
            alpha2 = _solve_alpha(K, K2, mtau, k)
            if alpha2 is None:
                continue
            tau2 = K2.sub(K2.gen, K2.mul(K2.from_int(k), alpha2))
            return K2, alpha2, tau2
    raise ArithmeticError("no primitive element found")


def _small_integers():
    yield 1
    k = 2
    while k < 60:
        yield -k + 1
        yield k
        k += 1


def _joined_charpoly(K, mtau, k):
    """Res_s(A(s), sum_i mtau_i(s) (x - k s)^i) in Q[x]."""
    A = list(K.minpoly)
    d = len(mtau) - 1
    deg = K.degree * d
    pts = []
    x = 0
    while len(pts) < deg + 1:
        # build poly in s: sum_i mtau_i(s) * (x - k*s)^i
        poly_s = []
        base = [Fraction(x), Fraction(-k)]
        power = [Fraction(1)]
        for i, ci in enumerate(mtau):
            term = umul(list(ci), power, QQ)
            poly_s = _uadd(poly_s, term)
            power = umul(power, base, QQ)
        pts.append((Fraction(x), _resq(A, poly_s)))
        x = -x + (1 if x <= 0 else 0)
    return uinterpolate(pts, QQ)


def _uadd(a, b):
    from .unipoly import uadd

    return uadd(a, b, QQ)


def _is_squarefree_q(f):
    from .unipoly import uderiv, ugcd

    return len(ugcd(f, uderiv(f, QQ), QQ)) <= 1


def _solve_alpha(K, K2, mtau, k):
    """Root of gcd(A(s), mtau(gamma - k*s)) in K2; None unless linear."""
    from .unipoly import ugcd

    A = [K2.from_fraction(c) for c in K.minpoly]
    # mtau coefficients are K-elements (polys in alpha); substitute s for
    # alpha symbolically: build the bivariate as poly in s over K2[gamma]
    gamma = K2.gen
    base = [gamma, K2.neg(K2.from_int(k))]  # gamma - k*s as poly in s
    poly_s = []
    power = [K2.one]
    for ci in mtau:
        ci_s = [K2.from_fraction(c) for c in ci]  # alpha-coeff vector -> s-poly
        term = umul(ci_s, power, K2)
        poly_s = _kadd(poly_s, term, K2)
        power = umul(power, base, K2)
    g = ugcd(A, poly_s, K2)
    if len(g) != 2:
        return None
    return K2.neg(K2.div(g[0], g[1]))


def _kadd(a, b, K):
    from .unipoly import uadd

    return uadd(a, b, K)
