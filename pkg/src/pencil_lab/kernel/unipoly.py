"""Dense univariate polynomial arithmetic over a pluggable field.

Polynomials are lists of field elements, lowest degree first, with no
trailing zeros (the zero polynomial is the empty list).  The functional
core mirrors the usual dense-polynomial toolkits; `UnivariatePolynomial`
is a thin immutable wrapper used at module boundaries.
"""

from fractions import Fraction

from .fields import QQ, FieldMismatchError


def ustrip(f, K):
    while f and K.is_zero(f[-1]):
        f = f[:-1]
    return list(f)


def udeg(f):
    return len(f) - 1


def uconst(c, K):
    return [] if K.is_zero(c) else [c]


def uadd(f, g, K):
    n = max(len(f), len(g))
    out = [K.zero] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return ustrip(out, K)


def usub(f, g, K):
    n = max(len(f), len(g))
    out = [K.zero] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = K.sub(out[i], c)
    return ustrip(out, K)


def uneg(f, K):
    return [K.neg(c) for c in f]


def umul(f, g, K):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return ustrip(out, K)


def uscale(f, c, K):
    if K.is_zero(c):
        return []
    return ustrip([K.mul(a, c) for a in f], K)


def ushift(f, k, K):
    """Multiply by x^k."""
    if not f:
        return []
    return [K.zero] * k + list(f)


def upow(f, e, K):
    out = [K.one]
    base = list(f)
    while e:
        if e & 1:
            out = umul(out, base, K)
        e >>= 1
        if e:
            base = umul(base, base, K)
    return out


def udivmod(f, g, K):
    f = ustrip(f, K)
    g = ustrip(g, K)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = udeg(g)
    inv_lc = K.inv(g[-1])
    q = [K.zero] * max(0, len(f) - dg)
    r = list(f)
    while len(r) - 1 >= dg and r:
        if K.is_zero(r[-1]):
            r.pop()
            continue
        c = K.mul(r[-1], inv_lc)
        k = len(r) - 1 - dg
        q[k] = c
        for j in range(dg + 1):
            r[k + j] = K.sub(r[k + j], K.mul(c, g[j]))
        r.pop()
    return ustrip(q, K), ustrip(r, K)


def urem(f, g, K):
    return udivmod(f, g, K)[1]


def uexactdiv(f, g, K):
    q, r = udivmod(f, g, K)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def umonic(f, K):
    f = ustrip(f, K)
    if not f:
        return f
    return uscale(f, K.inv(f[-1]), K)


def ugcd(f, g, K):
    """Monic gcd via the Euclidean algorithm over the field."""
    a, b = ustrip(f, K), ustrip(g, K)
    while b:
        a, b = b, urem(a, b, K)
    return umonic(a, K)


def ugcdex(f, g, K):
    """Extended gcd: returns (s, t, d) with s*f + t*g = d, d monic."""
    a, b = ustrip(f, K), ustrip(g, K)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while b:
        q, r = udivmod(a, b, K)
        a, b = b, r
        s0, s1 = s1, usub(s0, umul(q, s1, K), K)
        t0, t1 = t1, usub(t0, umul(q, t1, K), K)
    if not a:
        return [], [], []
    c = K.inv(a[-1])
    return uscale(s0, c, K), uscale(t0, c, K), uscale(a, c, K)


def uderiv(f, K):
    return ustrip(
        [K.mul(K.from_int(i), c) for i, c in enumerate(f)][1:] if len(f) > 1 else [],
        K,
    )


def ueval(f, x, K):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def ucompose(f, g, K):
    """f(g(x)) by Horner."""
    acc = []
    for c in reversed(f):
        acc = uadd(umul(acc, g, K), uconst(c, K), K)
    return acc


def utaylor_shift(f, a, K):
    """f(x + a)."""
    return ucompose(f, [a, K.one], K)


def usquarefree_part(f, K):
    f = ustrip(f, K)
    if udeg(f) < 1:
        return umonic(f, K)
    return umonic(uexactdiv(f, ugcd(f, uderiv(f, K), K), K), K)


def usquarefree_decompose(f, K):
    """Yun's algorithm: returns ([(factor, multiplicity), ...], unit).

    Factors are monic, pairwise coprime, squarefree, multiplicities
    strictly increasing.  Requires characteristic 0 or > deg(f).
    """
    f = ustrip(f, K)
    if not f:
        raise ArithmeticError("squarefree decomposition of zero polynomial")
    if K.characteristic and udeg(f) >= K.characteristic:
        raise ArithmeticError(
            "characteristic %d too small for degree %d" % (K.characteristic, udeg(f))
        )
    unit = f[-1]
    f = umonic(f, K)
    if udeg(f) == 0:
        return [], unit
    df = uderiv(f, K)
    a = ugcd(f, df, K)
    b = uexactdiv(f, a, K)
    c = usub(uexactdiv(df, a, K), uderiv(b, K), K)
    out = []
    i = 1
    while udeg(b) > 0:
        g = ugcd(b, c, K)
        if udeg(g) > 0:
            out.append((g, i))
        b = uexactdiv(b, g, K)
        c = usub(uexactdiv(c, g, K), uderiv(b, K), K)
        i += 1
    return out, unit


def uresultant(f, g, K):
    """Resultant with the Sylvester convention det S(f, g), f-rows on top."""
    f = ustrip(f, K)
    g = ustrip(g, K)
    if not f or not g:
        if not f and not g:
            return K.zero
        if not f:
            return K.zero if udeg(g) > 0 else K.one
        return K.zero if udeg(f) > 0 else K.one
    res = K.one
    sign = 1
    a, b = f, g
    while udeg(b) > 0:
        r = urem(a, b, K)
        if not r:
            return K.zero
        da, db, dr = udeg(a), udeg(b), udeg(r)
        if (da * db) % 2:
            sign = -sign
        res = K.mul(res, _kpow(b[-1], da - dr, K))
        a, b = b, r
    res = K.mul(res, _kpow(b[0], udeg(a), K))
    if sign < 0:
        res = K.neg(res)
    return res


def _kpow(c, e, K):
    out = K.one
    for _ in range(e):
        out = K.mul(out, c)
    return out


def uinterpolate(points, K):
    """Newton interpolation through [(x, y), ...] with distinct x."""
    xs = [p[0] for p in points]
    coeffs = []
    divided = [p[1] for p in points]
    for j in range(len(points)):
        coeffs.append(divided[0])
        divided = [
            K.div(K.sub(divided[i + 1], divided[i]), K.sub(xs[i + j + 1], xs[i]))
            for i in range(len(divided) - 1)
        ]
    poly = []
    for j in reversed(range(len(coeffs))):
        poly = uadd(umul(poly, [K.neg(xs[j]), K.one], K), uconst(coeffs[j], K), K)
    return poly


def umap(f, src, dst, conv):
    """Map coefficients through conv: element of src -> element of dst."""
    return ustrip([conv(c) for c in f], dst)


class UnivariatePolynomial:
    """Immutable dense univariate polynomial over a coefficient field."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        if field is QQ:
            coeffs = [Fraction(c) for c in coeffs]
        self.coeffs = tuple(ustrip(list(coeffs), field))
        self.field = field

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                "mixed fields %r and %r" % (self.field, other.field)
            )

    def __add__(self, other):
        self._check(other)
        return UnivariatePolynomial(
            uadd(list(self.coeffs), list(other.coeffs), self.field), self.field
        )

    def __sub__(self, other):
        self._check(other)
        return UnivariatePolynomial(
            usub(list(self.coeffs), list(other.coeffs), self.field), self.field
        )

    def __mul__(self, other):
        self._check(other)
        return UnivariatePolynomial(
            umul(list(self.coeffs), list(other.coeffs), self.field), self.field
        )

    def __neg__(self):
        return UnivariatePolynomial(uneg(list(self.coeffs), self.field), self.field)

    def __eq__(self, other):
        return (
            isinstance(other, UnivariatePolynomial)
            and self.field == other.field
            and len(self.coeffs) == len(other.coeffs)
            and all(
                self.field.eq(a, b) for a, b in zip(self.coeffs, other.coeffs)
            )
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __call__(self, x):
        return ueval(list(self.coeffs), x, self.field)

    def monic(self):
        return UnivariatePolynomial(umonic(list(self.coeffs), self.field), self.field)

    def derivative(self):
        return UnivariatePolynomial(uderiv(list(self.coeffs), self.field), self.field)

    def __repr__(self):
        return "UnivariatePolynomial(%r, %r)" % (list(self.coeffs), self.field)
