"""Sparse bivariate polynomials over a pluggable coefficient field.

Terms are a dict from exponent pairs (a, b) for X^a Y^b to nonzero field
elements.  GCDs over Q run Brown's modular algorithm (evaluation and
interpolation per prime, CRT, trial division); other fields fall back to a
primitive PRS.  Resultants with respect to Y go through evaluation and
interpolation on the X-line with degree-drop points skipped.
"""

from fractions import Fraction
from math import gcd as intgcd

from .fields import QQ, FieldMismatchError
from .unipoly import (
    ueval,
    ugcd,
    uderiv,
    udivmod,
    uexactdiv,
    uinterpolate,
    umul,
    uresultant,
    ustrip,
)
from .zfactor import q_to_z, z_to_q, zresultant, zstrip


class BivariatePolynomial:
    """Exact sparse polynomial in two variables over a coefficient field."""

    __slots__ = ("terms", "field", "vars")

    def __init__(self, terms, field=QQ, vars=("X", "Y")):
        clean = {}
        for (a, b), c in terms.items():
            if field is QQ:
                c = Fraction(c)
            if not field.is_zero(c):
                clean[(int(a), int(b))] = c
        self.terms = clean
        self.field = field
        self.vars = tuple(vars)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field=QQ, vars=("X", "Y")):
        return cls({}, field, vars)

    @classmethod
    def constant(cls, c, field=QQ, vars=("X", "Y")):
        return cls({(0, 0): c}, field, vars)

    @classmethod
    def variable(cls, which, field=QQ, vars=("X", "Y")):
        if which == 0 or which == vars[0]:
            return cls({(1, 0): field.one}, field, vars)
        return cls({(0, 1): field.one}, field, vars)

    @classmethod
    def from_y_major(cls, rows, field=QQ, vars=("X", "Y")):
        """rows[j] = dense X-coefficient list of the Y^j coefficient."""
        terms = {}
        for j, row in enumerate(rows):
            for i, c in enumerate(row):
                if not field.is_zero(c):
                    terms[(i, j)] = c
        return cls(terms, field, vars)

    # -- basics ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(e == (0, 0) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0, 0), self.field.zero)

    def total_degree(self):
        return max((a + b for a, b in self.terms), default=-1)

    def deg_x(self):
        return max((a for a, _ in self.terms), default=-1)

    def deg_y(self):
        return max((b for _, b in self.terms), default=-1)

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                "mixed fields %r and %r" % (self.field, other.field)
            )

    def __add__(self, other):
        self._check(other)
        K = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = K.add(out.get(e, K.zero), c)
            if K.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return BivariatePolynomial(out, K, self.vars)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        K = self.field
        return BivariatePolynomial(
            {e: K.neg(c) for e, c in self.terms.items()}, K, self.vars
        )

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return self.scale(other)
        self._check(other)
        K = self.field
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                s = K.add(out.get(e, K.zero), K.mul(c1, c2))
                if K.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return BivariatePolynomial(out, K, self.vars)

    def scale(self, c):
        K = self.field
        if K.is_zero(c):
            return BivariatePolynomial.zero(K, self.vars)
        return BivariatePolynomial(
            {e: K.mul(v, c) for e, v in self.terms.items()}, K, self.vars
        )

    def __pow__(self, n):
        out = BivariatePolynomial.constant(self.field.one, self.field, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        if self.field != other.field or set(self.terms) != set(other.terms):
            return False
        return all(self.field.eq(c, other.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.keys())))

    # -- views -------------------------------------------------------------

    def y_major(self):
        """List over Y-degree of dense X-coefficient lists."""
        K = self.field
        ny = self.deg_y()
        nx = self.deg_x()
        rows = [[K.zero] * (nx + 1) for _ in range(ny + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        return [ustrip(r, K) for r in rows]

    def x_major(self):
        K = self.field
        swapped = BivariatePolynomial(
            {(b, a): c for (a, b), c in self.terms.items()}, K, self.vars
        )
        return swapped.y_major()

    def lead_y_coeff(self):
        """Coefficient of Y^deg_y as a dense X-list."""
        rows = self.y_major()
        return rows[-1] if rows else []

    def deriv_x(self):
        K = self.field
        out = {}
        for (a, b), c in self.terms.items():
            if a:
                out[(a - 1, b)] = K.mul(c, K.from_int(a))
        return BivariatePolynomial(out, K, self.vars)

    def deriv_y(self):
        K = self.field
        out = {}
        for (a, b), c in self.terms.items():
            if b:
                out[(a, b - 1)] = K.mul(c, K.from_int(b))
        return BivariatePolynomial(out, K, self.vars)

    def subst_x(self, value):
        """Substitute X = value (field element); dense Y-list result."""
        K = self.field
        rows = self.y_major()
        return ustrip([ueval(r, value, K) for r in rows], K)

    def subst_y(self, value):
        K = self.field
        cols = self.x_major()
        return ustrip([ueval(r, value, K) for r in cols], K)

    def eval_at(self, x0, y0):
        return ueval(self.subst_x(x0), y0, self.field)

    def substituted(self, gx, gy):
        """Substitute X -> gx, Y -> gy (BivariatePolynomials)."""
        K = self.field
        # Horner in Y over polynomials in X
        rows = self.y_major()
        xpows = {}

        def xpow(i):
            if i not in xpows:
                xpows[i] = gx ** i
            return xpows[i]

        acc = BivariatePolynomial.zero(K, self.vars)
        for row in reversed(rows):
            acc = acc * gy
            rowpoly = BivariatePolynomial.zero(K, self.vars)
            for i, c in enumerate(row):
                if not K.is_zero(c):
                    rowpoly = rowpoly + xpow(i).scale(c)
            acc = acc + rowpoly
        return acc

    def shear_x_plus_ly(self, lam):
        """X -> X + lam*Y, Y -> Y."""
        if lam == 0:
            return self
        K = self.field
        gx = BivariatePolynomial(
            {(1, 0): K.one, (0, 1): K.from_int(lam)}, K, self.vars
        )
        gy = BivariatePolynomial.variable(1, K, self.vars)
        return self.substituted(gx, gy)

    def swap_vars(self):
        return BivariatePolynomial(
            {(b, a): c for (a, b), c in self.terms.items()},
            self.field,
            (self.vars[1], self.vars[0]),
        )

    def degree_form(self):
        """Sum of the highest-total-degree terms."""
        d = self.total_degree()
        return BivariatePolynomial(
            {e: c for e, c in self.terms.items() if e[0] + e[1] == d},
            self.field,
            self.vars,
        )

    def map_field(self, newfield, conv):
        return BivariatePolynomial(
            {e: conv(c) for e, c in self.terms.items()}, newfield, self.vars
        )

    def is_y_monic(self):
        """Constant nonzero Y^N coefficient with N the total degree."""
        d = self.total_degree()
        if d < 1:
            return False
        lead = self.terms.get((0, d))
        return lead is not None and all(
            a == 0 for (a, b) in self.terms if b == d
        )

    def lex_lead_coeff(self):
        """Coefficient of the lex-leading term (Y before X)."""
        if not self.terms:
            return self.field.zero
        e = max(self.terms, key=lambda t: (t[1], t[0]))
        return self.terms[e]

    def normalized(self):
        """Canonical associate: over Q, integer-primitive with positive
        lex-leading coefficient; over other fields, lex-leading coeff 1."""
        if self.is_zero():
            return self
        K = self.field
        if K is QQ or K == QQ:
            den = 1
            num = 0
            for c in self.terms.values():
                den = den * c.denominator // intgcd(den, c.denominator)
            scaled = {e: c * den for e, c in self.terms.items()}
            for c in scaled.values():
                num = intgcd(num, int(c))
            lead = max(scaled, key=lambda t: (t[1], t[0]))
            if scaled[lead] < 0:
                num = -num
            return BivariatePolynomial(
                {e: Fraction(int(c), num) for e, c in scaled.items()}, K, self.vars
            )
        return self.scale(K.inv(self.lex_lead_coeff()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b) in sorted(self.terms, key=lambda e: (-(e[0] + e[1]), -e[1])):
            c = self.terms[(a, b)]
            mono = []
            if a:
                mono.append("%s^%d" % (self.vars[0], a) if a > 1 else self.vars[0])
            if b:
                mono.append("%s^%d" % (self.vars[1], b) if b > 1 else self.vars[1])
            cs = str(c)
            if mono and cs == "1":
                cs = ""
            elif mono and cs == "-1":
                cs = "-"
            bits.append(cs + ("*" if cs not in ("", "-") and mono else "") + "*".join(mono))
        return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# division


def div_exact(A, B):
    """Exact division A / B in K[X][Y]; raises on inexactness."""
    A._check(B)
    K = A.field
    if B.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if A.is_zero():
        return A
    arows = A.y_major()
    brows = B.y_major()
    db = len(brows) - 1
    blead = brows[-1]
    qrows = [[] for _ in range(len(arows) - db)]
    cur = [list(r) for r in arows]
    for k in range(len(arows) - 1, db - 1, -1):
        top = ustrip(cur[k], K)
        if not top:
            qrows[k - db] = []
            continue
        q, r = udivmod(top, blead, K)
        if r:
            raise ArithmeticError("inexact bivariate division")
        qrows[k - db] = q
        for j in range(db + 1):
            sub = umul(q, brows[j], K)
            row = cur[k - db + j]
            for i, c in enumerate(sub):
                while len(row) <= i:
                    row.append(K.zero)
                row[i] = K.sub(row[i], c)
    for k in range(db):
        if ustrip(cur[k], K):
            raise ArithmeticError("inexact bivariate division (remainder)")
    return BivariatePolynomial.from_y_major(qrows, K, A.vars)


def divides(B, A):
    try:
        div_exact(A, B)
        return True
    except ArithmeticError:
        return False


# ---------------------------------------------------------------------------
# contents


def content_y(A):
    """gcd in K[X] of the Y-coefficients (dense X-list, monic)."""
    K = A.field
    rows = A.y_major()
    g = []
    for r in rows:
        if r:
            g = ugcd(g, r, K) if g else list(r)
        if len(ustrip(g, K)) == 1:
            break
    from .unipoly import umonic

    return umonic(g, K)


def primitive_part_y(A):
    K = A.field
    c = content_y(A)
    if not c or len(c) == 1:
        return A, c
    rows = A.y_major()
    qrows = [uexactdiv(r, c, K) if r else [] for r in rows]
    return BivariatePolynomial.from_y_major(qrows, K, A.vars), c


def mul_by_xpoly(A, c):
    """Multiply by a dense X-coefficient list."""
    K = A.field
    rows = A.y_major()
    return BivariatePolynomial.from_y_major(
        [umul(r, c, K) if r else [] for r in rows], K, A.vars
    )


# ---------------------------------------------------------------------------
# gcd


def poly_gcd(A, B):
    """GCD of bivariate polynomials, canonically normalized.

    Over Q a modular evaluate/interpolate/CRT algorithm does the work;
    other fields use a primitive PRS.
    """
    A._check(B)
    K = A.field
    if A.is_zero() and B.is_zero():
        raise ArithmeticError("gcd(0, 0) undefined")
    if A.is_zero():
        return B.normalized()
    if B.is_zero():
        return A.normalized()
    if A.is_constant() or B.is_constant():
        return BivariatePolynomial.constant(K.one, K, A.vars)
    if A.deg_y() == 0 and B.deg_y() == 0:
        g = ugcd(A.y_major()[0], B.y_major()[0], K)
        return BivariatePolynomial.from_y_major([g], K, A.vars).normalized()
    if A.deg_y() == 0 or B.deg_y() == 0:
        xonly, other = (A, B) if A.deg_y() == 0 else (B, A)
        g = ugcd(xonly.y_major()[0], content_y(other), K)
        return BivariatePolynomial.from_y_major([g], K, A.vars).normalized()
    if K is QQ or K == QQ:
        return _gcd_modular_q(A, B).normalized()
    return _gcd_prs(A, B).normalized()


def _gcd_prs(A, B):
    K = A.field
    Ap, ca = primitive_part_y(A)
    Bp, cb = primitive_part_y(B)
    cg = ugcd(ca, cb, K) if ca and cb else []
    if A.deg_y() < B.deg_y():
        Ap, Bp = Bp, Ap
    while not Bp.is_zero():
        R = _pseudo_rem_y(Ap, Bp)
        Ap = Bp
        if R.is_zero():
            Bp = R
        else:
            Bp, _ = primitive_part_y(R)
    G, _ = primitive_part_y(Ap)
    if cg and len(cg) > 1:
        G = mul_by_xpoly(G, cg)
    return G


def _pseudo_rem_y(A, B):
    K = A.field
    arows = A.y_major()
    brows = B.y_major()
    db = len(brows) - 1
    blead = brows[-1]
    cur = [list(r) for r in arows]
    steps = len(arows) - len(brows) + 1
    for _ in range(max(0, steps)):
        while cur and not ustrip(cur[-1], K):
            cur.pop()
        if len(cur) - 1 < db:
            break
        top = ustrip(cur[-1], K)
        cur = [umul(r, blead, K) for r in cur]
        k = len(cur) - 1 - db
        for j in range(db + 1):
            sub = umul(top, brows[j], K)
            row = cur[k + j]
            for i, c in enumerate(sub):
                while len(row) <= i:
                    row.append(K.zero)
                row[i] = K.sub(row[i], c)
        cur.pop()
    while cur and not ustrip(cur[-1], K):
        cur.pop()
    return BivariatePolynomial.from_y_major([ustrip(r, K) for r in cur], K, A.vars)


def _gcd_primes():
    from .linalg import iter_primes_desc

    return iter_primes_desc()


def _to_int_bipoly(A):
    """Clear denominators: dict of int coefficients plus unit Fraction."""
    den = 1
    for c in A.terms.values():
        den = den * c.denominator // intgcd(den, c.denominator)
    terms = {e: int(c * den) for e, c in A.terms.items()}
    g = 0
    for v in terms.values():
        g = intgcd(g, abs(v))
    if g:
        lead = max(terms, key=lambda t: (t[1], t[0]))
        if terms[lead] < 0:
            g = -g
        terms = {e: v // g for e, v in terms.items()}
    return terms, Fraction(g, den)


def _zz_content_y(terms):
    """Content in Z[X] of an integer bivariate dict, as an int list."""
    rows = {}
    for (a, b), c in terms.items():
        rows.setdefault(b, {})[a] = c
    from .zfactor import zgcd_poly

    g = []
    for b in rows:
        row = rows[b]
        dense = [0] * (max(row) + 1)
        for a, c in row.items():
            dense[a] = c
        g = zgcd_poly(g, dense) if g else zstrip(dense)
        if g == [1]:
            break
    return g or [1]


def _zz_div_content(terms, cont):
    if cont == [1]:
        return terms
    from .unipoly import udivmod

    rows = {}
    for (a, b), c in terms.items():
        rows.setdefault(b, {})[a] = c
    out = {}
    cq = z_to_q(cont)
    for b, row in rows.items():
        dense = [Fraction(0)] * (max(row) + 1)
        for a, c in row.items():
            dense[a] = Fraction(c)
        q, r = udivmod(dense, cq, QQ)
        assert not r
        for a, c in enumerate(q):
            if c:
                out[(a, b)] = int(c)
    return out


def _gcd_modular_q(A, B):
    """Brown's modular bivariate gcd over Q."""
    from .zfactor import zgcd_poly

    ta, ua = _to_int_bipoly(A)
    tb, ub = _to_int_bipoly(B)
    ca = _zz_content_y(ta)
    cb = _zz_content_y(tb)
    ta = _zz_div_content(ta, ca)
    tb = _zz_div_content(tb, cb)
    cg = zgcd_poly(ca, cb)
    G = _gcd_modular_zz_primitive(ta, tb, A.vars)
    if cg != [1]:
        rows = G.y_major()
        G = BivariatePolynomial.from_y_major(
            [umul(r, z_to_q(cg), QQ) if r else [] for r in rows], QQ, A.vars
        )
    return G


def _lead_y_xpoly(terms):
    dy = max(b for _, b in terms)
    row = {a: c for (a, b), c in terms.items() if b == dy}
    dense = [0] * (max(row) + 1)
    for a, c in row.items():
        dense[a] = c
    return dense


def _gcd_modular_zz_primitive(ta, tb, vars):
    from .zfactor import zgcd_poly, zeval

    la = _lead_y_xpoly(ta)
    lb = _lead_y_xpoly(tb)
    gamma = zgcd_poly(la, lb)
    degx_bound = min(
        max(a for a, _ in ta), max(a for a, _ in tb)
    ) + len(gamma)
    npts = degx_bound + 1
    dy_bound = min(max(b for _, b in ta), max(b for _, b in tb))

    M = None  # CRT modulus
    H = None  # dict mod M, symmetric-lifted at the end
    best_dy = dy_bound + 1
    attempt = 0
    for p in _gcd_primes():
        if la[-1] % p == 0 or lb[-1] % p == 0:
            continue
        # fresh evaluation points per attempt: a cluster of unlucky points
        # at the start of the line must not survive trial division forever
        res = _gcd_one_prime(
            ta, tb, gamma, p, npts, best_dy, start=attempt * (npts + 13)
        )
        attempt += 1
        if res is None:
            continue
        dy, Hp = res
        if dy == 0:
            return BivariatePolynomial.constant(Fraction(1), QQ, vars)
        if dy < best_dy:
            best_dy = dy
            M, H = p, Hp
        elif dy == best_dy and M is not None:
            H = _crt_dicts(H, M, Hp, p)
            M *= p
        # attempt termination
        if M is not None:
            cand = {e: _sym(c, M) for e, c in H.items()}
            cand = _zz_div_content(cand, _zz_content_y(cand))
            Gq = BivariatePolynomial(
                {e: Fraction(c) for e, c in cand.items() if c}, QQ, vars
            )
            if not Gq.is_zero() and _divides_zz(cand, ta) and _divides_zz(cand, tb):
                return Gq
    raise ArithmeticError("modular gcd did not stabilize; prime pool exhausted")


def _sym(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _crt_dicts(H, M, Hp, p):
    inv = pow(M % p, -1, p)
    out = {}
    for e in set(H) | set(Hp):
        a = H.get(e, 0) % M
        b = Hp.get(e, 0) % p
        t = (b - a) % p * inv % p
        out[e] = a + M * t
    return out


def _divides_zz(g, f):
    Gq = BivariatePolynomial({e: Fraction(c) for e, c in g.items() if c}, QQ)
    Fq = BivariatePolynomial({e: Fraction(c) for e, c in f.items() if c}, QQ)
    if Gq.is_zero():
        return False
    return divides(Gq, Fq)


def _gcd_one_prime(ta, tb, gamma, p, npts, dy_cap, start=0):
    """One-prime image of gamma * monic_gcd, or None if p looks unlucky."""
    from .zfactor import _gf_gcd, _gf_monic, zeval

    arows = _ymajor_int(ta)
    brows = _ymajor_int(tb)
    gmod = [c % p for c in gamma]
    points = []
    values = []
    dy_min = None
    x0 = start
    attempts = 0
    while len(points) < npts:
        attempts += 1
        if attempts > 40 * npts + 100:
            return None
        x0 += 1
        x = x0 % p
        ga = ustrip([zeval(r, x) % p for r in arows], GFP(p))
        gb = ustrip([zeval(r, x) % p for r in brows], GFP(p))
        if len(ga) != len(arows) or len(gb) != len(brows):
            continue  # leading coefficient vanished
        g = _gf_gcd(ga, gb, p)
        dy = len(g) - 1
        if dy > dy_cap:
            continue
        if dy_min is None or dy < dy_min:
            dy_min = dy
            points, values = [], []
        elif dy > dy_min:
            continue
        if dy_min == 0:
            return 0, {}
        scale = zeval(gmod, x) % p
        g = [c * scale % p for c in _gf_monic(g, p)]
        points.append(x)
        values.append(g)
    # interpolate each Y-coefficient over the points
    K = GFP(p)
    H = {}
    for j in range(dy_min + 1):
        pts = [(xi, (values[i][j] if j < len(values[i]) else 0)) for i, xi in enumerate(points)]
        coeffs = uinterpolate(pts, K)
        for i, c in enumerate(coeffs):
            if c % p:
                H[(i, j)] = c % p
    return dy_min, H


_GFP_CACHE = {}


def GFP(p):
    from .fields import PrimeField

    if p not in _GFP_CACHE:
        _GFP_CACHE[p] = PrimeField(p)
    return _GFP_CACHE[p]


def _ymajor_int(terms):
    dy = max(b for _, b in terms)
    rows = [dict() for _ in range(dy + 1)]
    for (a, b), c in terms.items():
        rows[b][a] = c
    out = []
    for row in rows:
        if row:
            dense = [0] * (max(row) + 1)
            for a, c in row.items():
                dense[a] = c
        else:
            dense = []
        out.append(dense)
    return out


# ---------------------------------------------------------------------------
# resultants


def resultant_y(A, B):
    """Resultant with respect to Y, a univariate polynomial in X.

    Sylvester convention with the rows of A above those of B.  Computed by
    evaluation/interpolation on X, skipping points where either leading
    Y-coefficient vanishes.
    """
    A._check(B)
    K = A.field
    na, nb = A.deg_y(), B.deg_y()
    if na < 0 or nb < 0:
        return []
    if na == 0 and nb == 0:
        raise ArithmeticError("resultant_y needs a positive Y-degree")
    if na == 0:
        return _upow_list(A.y_major()[0], nb, K)
    if nb == 0:
        return _upow_list(B.y_major()[0], na, K)
    bound = A.deg_x() * nb + B.deg_x() * na
    la = A.lead_y_coeff()
    lb = B.lead_y_coeff()
    pts = []
    x = 0
    tried = 0
    while len(pts) < bound + 1:
        xv = K.from_int(x)
        tried += 1
        if tried > 40 * (bound + 2) + 100:
            raise ArithmeticError("resultant interpolation ran out of points")
        x = -x + (1 if x <= 0 else 0)
        if K.is_zero(ueval(la, xv, K)) or K.is_zero(ueval(lb, xv, K)):
            continue
        fa = A.subst_x(xv)
        fb = B.subst_x(xv)
        if K is QQ or K == QQ:
            from .zfactor import resultant_q

            pts.append((xv, resultant_q(fa, fb)))
        else:
            pts.append((xv, uresultant(fa, fb, K)))
    return uinterpolate(pts, K)


def _upow_list(f, e, K):
    out = [K.one]
    for _ in range(e):
        out = umul(out, f, K)
    return out


def resultant_y_bivar(A, B, tvar="T"):
    """Resultant in Y of polynomials whose coefficients involve X and T.

    A and B are given as dicts {(xexp, texp, yexp): Fraction}; returns a
    BivariatePolynomial in (X, T) over Q.  Used for eliminations where a
    pencil parameter T rides along; computed by interpolating T.
    """
    degt = max((t for (_, t, _) in A | B), default=0)

    def tslice(terms, t0):
        out = {}
        for (a, t, b), c in terms.items():
            cc = c * t0**t
            if cc:
                out[(a, b)] = out.get((a, b), Fraction(0)) + cc
        return {e: c for e, c in out.items() if c}

    na = max(b for (_, _, b) in A)
    nb = max(b for (_, _, b) in B)
    degt_bound = degt * (na + nb)
    pts = []
    t0 = 0
    while len(pts) < degt_bound + 1:
        Ai = BivariatePolynomial(tslice(A, Fraction(t0)), QQ)
        Bi = BivariatePolynomial(tslice(B, Fraction(t0)), QQ)
        if Ai.deg_y() == na and Bi.deg_y() == nb:
            r = resultant_y(Ai, Bi)
            pts.append((Fraction(t0), r))
        t0 = -t0 + (1 if t0 <= 0 else 0)
    # interpolate in T with polynomial values: do it coefficientwise
    maxlen = max(len(v) for _, v in pts)
    terms = {}
    for i in range(maxlen):
        vals = [(t, v[i] if i < len(v) else Fraction(0)) for t, v in pts]
        ci = uinterpolate(vals, QQ)
        for j, c in enumerate(ci):
            if c:
                terms[(i, j)] = c
    return BivariatePolynomial(terms, QQ, ("X", tvar))


# ---------------------------------------------------------------------------
# squarefree structure


def squarefree_decompose(F, main="y"):
    """Yun decomposition of a bivariate polynomial over a char-0 field.

    Returns (unit BivariatePolynomial-free normalization info, layers) as
    ([(factor, multiplicity), ...]) with factors normalized, pairwise
    coprime and squarefree, multiplicities strictly increasing; the
    product of factor^mult differs from F by a constant of the field.
    Pure-X factors (invisible to d/dY) are handled through the Y-content.
    """
    if F.is_zero():
        raise ArithmeticError("squarefree decomposition of zero polynomial")
    K = F.field
    if K.characteristic and F.total_degree() >= K.characteristic:
        raise ArithmeticError("characteristic too small for squarefree split")
    if main == "x":
        pairs = squarefree_decompose(F.swap_vars(), "y")
        return [(f.swap_vars(), m) for f, m in pairs]
    if F.deg_y() == 0:
        from .unipoly import usquarefree_decompose

        rows = F.y_major()
        dec, _unit = usquarefree_decompose(rows[0], K)
        return [
            (BivariatePolynomial.from_y_major([g], K, F.vars).normalized(), m)
            for g, m in dec
        ]
    prim, cont = primitive_part_y(F)
    out = {}
    if cont and len(cont) > 1:
        from .unipoly import usquarefree_decompose

        dec, _u = usquarefree_decompose(cont, K)
        for g, m in dec:
            out[m] = out.get(m, BivariatePolynomial.constant(K.one, K, F.vars)) * \
                BivariatePolynomial.from_y_major([g], K, F.vars)
    # Yun on the Y-primitive part
    d = prim.deriv_y()
    a = poly_gcd(prim, d)
    b = div_exact(prim, a)
    c = BivariatePolynomial(
        (div_exact(d, a) - b.deriv_y()).terms, K, F.vars
    )
    i = 1
    while b.total_degree() > 0:
        g = poly_gcd(b, c)
        if g.total_degree() > 0:
            out[i] = out.get(i, BivariatePolynomial.constant(K.one, K, F.vars)) * g
        b = div_exact(b, g)
        c = div_exact(c, g) - b.deriv_y()
        i += 1
    layers = [(out[m].normalized(), m) for m in sorted(out)]
    return [(f, m) for f, m in layers if f.total_degree() > 0]


def squarefree_part(F):
    return _prod(
        [f for f, _ in squarefree_decompose(F)],
        F.field,
        F.vars,
    )


def _prod(polys, K, vars):
    out = BivariatePolynomial.constant(K.one, K, vars)
    for p in polys:
        out = out * p
    return out


def is_squarefree(F):
    """Char-0 test: gcd(F, F_X, F_Y) is constant."""
    gx, gy = F.deriv_x(), F.deriv_y()
    if gx.is_zero() and gy.is_zero():
        return F.is_constant() and not F.is_zero()
    g = F
    for d in (gx, gy):
        if not d.is_zero():
            g = poly_gcd(g, d)
    return g.is_constant()


# ---------------------------------------------------------------------------
# residues along components


def pure_variable_divisor(rows_terms, which):
    """Maximal divisor depending only on the given variable.

    Input is a BivariatePolynomial; returns a dense coefficient list over
    that variable (the gcd of the coefficient slices)."""
    P = rows_terms
    K = P.field
    rows = P.y_major() if which == 0 else P.x_major()
    g = []
    for r in rows:
        if r:
            g = ugcd(g, r, K) if g else list(r)
        if len(ustrip(g, K)) == 1:
            break
    return g


class ReduciblePolynomialError(ArithmeticError):
    pass


def residue_constant(f, p):
    """Constant value of f along the irreducible curve p = 0, if any.

    When the image of f in the quotient by (p) is algebraic over Q this
    returns an AlgebraicNumber (minimal polynomial read off the pure-T
    divisor of Res_Y(p, T - f), or Res_X when p has no Y); when the image
    is transcendental, returns NOT_CONSTANT.  Raises when the value
    structure exposes p as reducible.
    """
    from .algebraic import NOT_CONSTANT, roots_of_rational_poly
    from .zfactor import factor_rational

    vals = residue_values(f, p)
    if vals is None:
        return NOT_CONSTANT
    poly, complete = vals
    if not complete:
        return NOT_CONSTANT
    sq = _squarefree_univ(poly)
    _, facs = factor_rational(sq)
    if len(facs) > 1:
        raise ReduciblePolynomialError(
            "distinct constants on components: %r is reducible" % (p,)
        )
    return roots_of_rational_poly(sq)[0]


def _squarefree_univ(poly):
    g = ugcd(poly, uderiv(poly, QQ), QQ)
    return uexactdiv(poly, g, QQ) if len(g) > 1 else list(poly)


def residue_values_fast(f, p, w=None):
    """Single-line residue extraction for curves all of whose components
    carry a constant value of f (resp. f/w) or lie inside w = 0.

    Evaluates X at one rational point, interpolates the T-resultant there,
    and cross-checks a second point; callers verify extracted values with
    witness gcds.  Returns (monic value polynomial in T, complete flag) or
    None when the structural assumption visibly fails.
    """
    from .zfactor import resultant_q

    K = f.field
    if not (K is QQ or K == QQ):
        raise ArithmeticError("fast residues require rational coefficients")
    main_is_y = p.deg_y() > 0
    A = p if main_is_y else p.swap_vars()
    F = f if main_is_y else f.swap_vars()
    W = (w if main_is_y else w.swap_vars()) if w is not None else None
    dyp = A.deg_y()
    la = A.lead_y_coeff()
    results = []
    x0 = 0
    tried = 0
    while len(results) < 2 and tried < 200:
        tried += 1
        x0 += 1
        xv = Fraction(x0)
        if ueval(la, xv, QQ) == 0:
            continue
        pa = A.subst_x(xv)
        fa = F.subst_x(xv)
        wa = W.subst_x(xv) if W is not None else [Fraction(1)]
        # interpolate v(T) = Res_Y(pa, T*wa - fa) through dyp + 1 T-points
        pts = []
        t0 = 0
        bad = False
        while len(pts) < dyp + 1:
            tv = Fraction(t0)
            t0 = -t0 + (1 if t0 <= 0 else 0)
            from .unipoly import usub, uscale

            gb = usub(uscale(wa, tv, QQ), fa, QQ)
            if not gb:
                bad = True
                break
            pts.append((tv, resultant_q(pa, gb) if gb else Fraction(0)))
            if abs(t0) > 40 * dyp + 50:
                bad = True
                break
        if bad:
            continue
        v = uinterpolate(pts, QQ)
        v = ustrip(v, QQ)
        if not v:
            continue
        from .unipoly import umonic

        results.append(umonic(v, QQ))
    if len(results) < 2 or results[0] != results[1]:
        return None
    v = results[0]
    if len(v) <= 1:
        return None
    return v, len(v) - 1 == dyp


def residue_values(f, p, w=None):
    """Values of f (or f/w) on the components of p where it is constant.

    Returns (value polynomial in T over Q, complete: bool) where the value
    polynomial's roots are the constants attained on components, counted
    via the pure-T divisor of Res_Y(p, T*w - f); `complete` is True when
    every component of p carries a constant (the T-degree accounts for the
    full deg_Y p).  Returns None when no component carries a constant.
    """
    K = f.field
    if p.is_constant():
        raise ArithmeticError("residue along a constant polynomial")
    main_is_y = p.deg_y() > 0
    A = p if main_is_y else p.swap_vars()
    F = f if main_is_y else f.swap_vars()
    W = (w if main_is_y else w.swap_vars()) if w is not None else None
    # r(X, T) = Res_Y(p, T*w - f); on a component with f/w = kappa the
    # factor (T - kappa)^(deg_Y of the component) divides r
    terms_a = {(a, 0, b): c for (a, b), c in A.terms.items()}
    terms_b = {}
    for (a, b), c in F.terms.items():
        terms_b[(a, 0, b)] = terms_b.get((a, 0, b), K.zero) - c
    if W is None:
        terms_b[(0, 1, 0)] = terms_b.get((0, 1, 0), 0) + 1
    else:
        for (a, b), c in W.terms.items():
            terms_b[(a, 1, b)] = terms_b.get((a, 1, b), K.zero) + c
    terms_b = {e: c for e, c in terms_b.items() if c}
    R = resultant_y_bivar(terms_a, terms_b)
    if R.is_zero():
        return None
    # maximal pure-T divisor: gcd of the X-slices
    v = pure_variable_divisor(R, 1)
    v = ustrip(v, QQ)
    if len(v) <= 1:
        return None
    complete = len(v) - 1 == A.deg_y()
    return v, complete
