"""Certified real and complex root isolation with rational box corners.

Real roots: Descartes' rule on Moebius-transformed polynomials, bisection
until each interval holds one sign variation.  Complex roots: exact
winding-number counts along rectangle boundaries (quadrant walk with all
sign decisions made on rational points), then quadtree subdivision.
"""

from fractions import Fraction

from .fields import QQ
from .unipoly import (
    ucompose,
    uderiv,
    ueval,
    ugcd,
    uexactdiv,
    umul,
    uscale,
    ustrip,
    utaylor_shift,
)


def _sign(x):
    return (x > 0) - (x < 0)


def cauchy_root_bound(f):
    """Power-of-two Fraction bounding the modulus of every root of f."""
    f = ustrip([Fraction(c) for c in f], QQ)
    if len(f) <= 1:
        return Fraction(1)
    lc = abs(f[-1])
    m = max(abs(c) for c in f[:-1])
    bound = 1 + m / lc
    b = Fraction(1)
    while b < bound:
        b *= 2
    return b


def _variations(f):
    count = 0
    prev = 0
    for c in f:
        s = _sign(c)
        if s and prev and s != prev:
            count += 1
        if s:
            prev = s
    return count


def _descartes_01(f):
    """Sign variations bounding roots of f in the open interval (0, 1)."""
    n = len(f) - 1
    rev = list(reversed(f))  # x^n f(1/x)
    return _variations(utaylor_shift(rev, Fraction(1), QQ))


def _shrink(f, a, b):
    """Polynomial with the roots of f in (a,b) mapped to (0,1)."""
    g = utaylor_shift(f, a, QQ)
    w = b - a
    return ustrip([c * w**i for i, c in enumerate(g)], QQ)


def _int_var01(p):
    """Variations of (1+x)^n p(1/(1+x)) for an integer coefficient list."""
    rev = p[::-1]
    n = len(rev) - 1
    # Taylor shift by 1 on integers (Horner-style prefix sums)
    work = list(rev)
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            work[j] += work[j + 1]
    count = 0
    prev = 0
    for c in work:
        s = (c > 0) - (c < 0)
        if s and prev and s != prev:
            count += 1
        if s:
            prev = s
    return count


def _int_content_reduce(p):
    g = 0
    for c in p:
        g = _gcdi(g, abs(c))
    return [c // g for c in p] if g > 1 else p


def _gcdi(a, b):
    from math import gcd

    return gcd(a, b)


def _int_compose_affine(p, s, t):
    """p(s*x + t) for integer coefficients and integral s, t."""
    s = int(s)
    t = int(t)
    out = [0]
    for c in reversed(p):
        new = [0] * (len(out) + 1)
        for i, v in enumerate(out):
            if v:
                new[i] += v * t
                new[i + 1] += v * s
        new[0] += c
        while len(new) > 1 and new[-1] == 0:
            new.pop()
        out = new
    return out


def isolate_real_roots(f):
    """Isolating intervals for the real roots of a squarefree Q-polynomial.

    Returns a sorted list of (lo, hi) Fractions; lo == hi marks an exact
    rational root, open intervals (lo, hi) hold exactly one root each and
    have nonzero endpoint values.  The bisection runs on integer
    polynomials (Descartes' rule on [0,1]-renormalized transforms).
    """
    orig = ustrip([Fraction(c) for c in f], QQ)
    if len(orig) <= 1:
        return []
    if len(orig) == 2:  # rational root, exactly
        r = -orig[0] / orig[1]
        return [(r, r)]
    out = []
    f = list(orig)
    if f[0] == 0:
        out.append((Fraction(0), Fraction(0)))
        while f[0] == 0:
            f = f[1:]
    B = cauchy_root_bound(f)
    # integer polynomial with the roots of f in (-B, B) mapped to (0, 1)
    den = 1
    for c in f:
        den = den * c.denominator // _gcdi(den, c.denominator)
    fz = [int(c * den) for c in f]
    n = len(fz) - 1
    base = _int_content_reduce(_int_compose_affine(fz, 2 * B, -B))
    stack = [(base, -B, B)]
    opens = []
    while stack:
        p, a, b = stack.pop()
        v = _int_var01(p)
        if v == 0:
            continue
        if v == 1:
            opens.append((a, b))
            continue
        m = (a + b) / 2
        # left half: 2^n p(x/2); right half: shift of the left by 1
        left = [c << (n - i) for i, c in enumerate(p)]
        right = list(left)
        for i in range(n):
            for j in range(n - 1, i - 1, -1):
                right[j] += right[j + 1]
        if right[0] == 0:  # p(1/2) == 0: exact midpoint root
            out.append((m, m))
        stack.append((_int_content_reduce(left), a, m))
        stack.append((_int_content_reduce(right), m, b))
    # open intervals may have an exact root of the input as an endpoint
    # (midpoint hits, or 0 after x-power stripping); nudge those endpoints
    # inward past nothing but the interior root
    for a, b in opens:
        hit = None
        if ueval(orig, a, QQ) == 0:
            a, hit = _nudge(orig, a, b)
        if hit is None and ueval(orig, b, QQ) == 0:
            b, hit = _nudge(orig, b, a)
        out.append((hit, hit) if hit is not None else (min(a, b), max(a, b)))
    out.sort(key=lambda iv: iv[0])
    return out


def _nudge(f, frm, to):
    """Move an exact-root endpoint toward `to`, keeping the interior root.

    Returns (new endpoint, None), or (_, root) when the nudge lands exactly
    on the interval's unique interior root."""
    w = to - frm
    while True:
        w = w / 2
        c = frm + w
        if ueval(f, c, QQ) == 0:
            return c, c
        lo, hi = (c, to) if c <= to else (to, c)
        if _descartes_01(_shrink(f, lo, hi)) == 1:
            return c, None


def refine_interval(f, iv, width):
    """Shrink an isolating interval of f below the given width by bisection."""
    lo, hi = iv
    if lo == hi:
        return iv
    slo = _sign(ueval(f, lo, QQ))
    while hi - lo > width:
        m = (lo + hi) / 2
        vm = ueval(f, m, QQ)
        if vm == 0:
            return (m, m)
        if _sign(vm) == slo:
            lo = m
        else:
            hi = m
    return (lo, hi)


def count_real_roots_in(f, lo, hi):
    """Number of distinct real roots of squarefree f in the closed [lo, hi]."""
    seq = _sturm_chain(f)
    extra = 0
    if ueval(f, lo, QQ) == 0:
        extra += 1
    return _sturm_var(seq, lo) - _sturm_var(seq, hi) + extra


def _sturm_chain(f):
    from .unipoly import udivmod, uneg

    chain = [ustrip([Fraction(c) for c in f], QQ)]
    chain.append(uderiv(chain[0], QQ))
    while chain[-1]:
        r = udivmod(chain[-2], chain[-1], QQ)[1]
        if not r:
            break
        chain.append(uneg(r, QQ))
    return chain


def _sturm_var(chain, x):
    vals = [_sign(ueval(g, x, QQ)) for g in chain]
    vals = [v for v in vals if v]
    return sum(1 for a, b in zip(vals, vals[1:]) if a != b)


# ---------------------------------------------------------------------------
# complex boxes


class Box:
    """Axis-aligned rectangle with rational corners; may be degenerate."""

    __slots__ = ("re_lo", "re_hi", "im_lo", "im_hi")

    def __init__(self, re_lo, re_hi, im_lo, im_hi):
        self.re_lo = Fraction(re_lo)
        self.re_hi = Fraction(re_hi)
        self.im_lo = Fraction(im_lo)
        self.im_hi = Fraction(im_hi)

    def mid(self):
        return ((self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2)

    def width(self):
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def intersect(self, other):
        rl = max(self.re_lo, other.re_lo)
        rh = min(self.re_hi, other.re_hi)
        il = max(self.im_lo, other.im_lo)
        ih = min(self.im_hi, other.im_hi)
        if rl > rh or il > ih:
            return None
        return Box(rl, rh, il, ih)

    def conjugate(self):
        return Box(self.re_lo, self.re_hi, -self.im_hi, -self.im_lo)

    def contains_point(self, re, im):
        return (
            self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi
        )

    def as_tuple(self):
        return (self.re_lo, self.re_hi, self.im_lo, self.im_hi)

    def __repr__(self):
        t = self.as_tuple()
        return "Box(%s, %s, %s, %s)" % tuple(str(x) for x in t)

    def __eq__(self, other):
        return isinstance(other, Box) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())


def _edge_parts(f, kind, c0):
    """Real/imaginary parts of f along a boundary line as polynomials in t.

    kind 'h': z = t + i*c0 (horizontal); kind 'v': z = c0 + i*t (vertical).
    """
    A, B = [], []
    for c in reversed(f):
        if kind == "h":
            # (A + iB)(t + i c0) = (A*t - c0*B) + i(B*t + c0*A)
            A2 = [Fraction(0)] + A
            B2 = [Fraction(0)] + B
            A_new = _psub(A2, uscale(B, c0, QQ))
            B_new = _padd(B2, uscale(A, c0, QQ))
        else:
            # (A + iB)(c0 + i t) = (c0*A - B*t) + i(c0*B + A*t)
            A_new = _psub(uscale(A, c0, QQ), [Fraction(0)] + B)
            B_new = _padd(uscale(B, c0, QQ), [Fraction(0)] + A)
        A = _padd(A_new, [Fraction(c)])
        B = B_new
    return ustrip(A, QQ), ustrip(B, QQ)


def _padd(a, b):
    from .unipoly import uadd

    return uadd(a, b, QQ)


def _psub(a, b):
    from .unipoly import usub

    return usub(a, b, QQ)


class BoundaryRootError(Exception):
    """A root lies on (or too close to) the rectangle boundary."""


def count_roots_in_box(f, box):
    """Number of roots of squarefree f strictly inside the box.

    Raises BoundaryRootError when a root sits on the boundary; callers
    jiggle the box and retry.
    """
    f = ustrip([Fraction(c) for c in f], QQ)
    if len(f) <= 1:
        return 0
    x1, x2, y1, y2 = box.re_lo, box.re_hi, box.im_lo, box.im_hi
    if x1 >= x2 or y1 >= y2:
        raise BoundaryRootError("degenerate box")
    edges = [
        ("h", y1, x1, x2, False),
        ("v", x2, y1, y2, False),
        ("h", y2, x1, x2, True),
        ("v", x1, y1, y2, True),
    ]
    quadrants = []
    for kind, c0, t0, t1, reverse in edges:
        A, B = _edge_parts(f, kind, c0)
        quadrants.extend(_edge_quadrants(A, B, t0, t1, reverse))
    total = 0
    m = len(quadrants)
    for i in range(m):
        d = (quadrants[(i + 1) % m] - quadrants[i]) % 4
        if d == 1:
            total += 1
        elif d == 3:
            total -= 1
        elif d == 2:
            raise BoundaryRootError("opposite quadrant jump")
    if total % 4:
        raise BoundaryRootError("non-integral winding")
    return abs(total) // 4


def _edge_quadrants(A, B, t0, t1, reverse):
    """Quadrant samples along one edge, ordered in the traversal direction."""
    if not A and not B:
        raise BoundaryRootError("f vanishes along an edge")
    g = ugcd(A, B, QQ) if A and B else []
    if len(g) > 1:
        if count_real_roots_in(_sqfree(g), t0, t1):
            raise BoundaryRootError("common Re/Im root on edge")
    for poly in (A, B):
        if poly and ueval(poly, t0, QQ) == 0 and _both_zero(A, B, t0):
            raise BoundaryRootError("corner root")
        if poly and ueval(poly, t1, QQ) == 0 and _both_zero(A, B, t1):
            raise BoundaryRootError("corner root")
    events = []
    for poly in (A, B):
        if len(poly) > 1:
            sq = _sqfree(poly)
            root_at_t0 = ueval(sq, t0, QQ) == 0
            root_at_t1 = ueval(sq, t1, QQ) == 0
            for iv in isolate_real_roots(sq):
                lo, hi = iv
                # isolating interval holds one root; skip if that root is an
                # endpoint of the edge (corner transitions handle it)
                if root_at_t0 and lo <= t0 <= hi:
                    continue
                if root_at_t1 and lo <= t1 <= hi:
                    continue
                while not (hi < t0 or lo > t1 or (t0 < lo and hi < t1)):
                    lo, hi = refine_interval(sq, (lo, hi), (hi - lo) / 4)
                    if lo == hi:
                        break
                if hi < t0 or lo > t1 or not (t0 < lo and hi < t1):
                    continue
                events.append([sq, lo, hi])
    # refine events until pairwise strictly disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(events)):
            for j in range(i + 1, len(events)):
                a, b = events[i], events[j]
                if a[1] <= b[2] and b[1] <= a[2]:
                    if a[0] is not b[0] and a[1] == a[2] == b[1] == b[2]:
                        raise BoundaryRootError("coincident Re/Im roots on edge")
                    for e in (a, b):
                        if e[1] != e[2]:
                            e[1], e[2] = refine_interval(
                                e[0], (e[1], e[2]), (e[2] - e[1]) / 4
                            )
                    changed = True
    bounds = [t0]
    for lo, hi in sorted((e[1], e[2]) for e in events):
        bounds.append(lo)
        bounds.append(hi)
    bounds.append(t1)
    samples = []
    for i in range(0, len(bounds), 2):
        a, b = bounds[i], bounds[i + 1]
        if a < b:
            samples.append((a + b) / 2)
    quads = []
    for s in samples:
        sa = _sign(ueval(A, s, QQ)) if A else 0
        sb = _sign(ueval(B, s, QQ)) if B else 0
        if sa == 0 or sb == 0:
            raise BoundaryRootError("sample hit an axis crossing")
        quads.append(_quadrant(sa, sb))
    if reverse:
        quads.reverse()
    return quads


def _both_zero(A, B, t):
    return ueval(A, t, QQ) == 0 and ueval(B, t, QQ) == 0


def _quadrant(sa, sb):
    if sa > 0 and sb > 0:
        return 0
    if sa < 0 and sb > 0:
        return 1
    if sa < 0 and sb < 0:
        return 2
    return 3


def _sqfree(f):
    g = ugcd(f, uderiv(f, QQ), QQ)
    if len(g) <= 1:
        return f
    return uexactdiv(f, g, QQ)


_JIGGLES = [
    Fraction(0),
    Fraction(1, 17),
    Fraction(-1, 19),
    Fraction(1, 23),
    Fraction(-2, 29),
    Fraction(3, 31),
    Fraction(-3, 37),
    Fraction(5, 41),
]


def isolate_complex_roots(f):
    """Isolate all complex roots of a squarefree Q-polynomial.

    Returns a list of Boxes, one per root: degenerate-height boxes on the
    real axis for real roots, conjugate pairs of boxes otherwise.  Boxes
    are pairwise disjoint apart from shared root-free split lines.
    """
    f = ustrip([Fraction(c) for c in f], QQ)
    n = len(f) - 1
    if n <= 0:
        return []
    real_ivs = isolate_real_roots(f)
    boxes = []
    for lo, hi in real_ivs:
        iv = (lo, hi)
        if lo != hi:
            iv = refine_interval(f, iv, (hi - lo) / 2)
        boxes.append(Box(iv[0], iv[1], 0, 0))
    n_pairs, parity = divmod(n - len(real_ivs), 2)
    assert parity == 0, "nonreal roots must come in conjugate pairs"
    if n_pairs == 0:
        return boxes
    big = _upper_halfplane_box(f, n_pairs)
    work = [(big, n_pairs)]
    while work:
        box, count = work.pop()
        if count == 1:
            boxes.append(box)
            boxes.append(box.conjugate())
            continue
        for child, c in _split_counted(f, box):
            if c:
                work.append((child, c))
    return boxes


def _upper_halfplane_box(f, n_pairs):
    """A certified box holding every root with positive imaginary part."""
    B = cauchy_root_bound(f)
    delta = B
    for _ in range(4 * (len(f) + 8) ** 2):
        delta = delta * Fraction(29, 64)
        for j in _JIGGLES:
            lo = delta * (1 + j)
            if lo <= 0:
                continue
            big = Box(-B - Fraction(1, 3), B + Fraction(1, 7), lo, B + Fraction(1, 11))
            try:
                if count_roots_in_box(f, big) == n_pairs:
                    return big
                break
            except BoundaryRootError:
                continue
    raise BoundaryRootError("failed to bound nonreal roots away from the real axis")


def _split_counted(f, box):
    """Split a certified box along root-free jiggled lines; counts add up."""
    mx, my = box.mid()
    w = box.re_hi - box.re_lo
    h = box.im_hi - box.im_lo
    for jx in _JIGGLES:
        for jy in _JIGGLES:
            sx = mx + jx * w / 4
            sy = my + jy * h / 4
            children = [
                Box(box.re_lo, sx, box.im_lo, sy),
                Box(sx, box.re_hi, box.im_lo, sy),
                Box(box.re_lo, sx, sy, box.im_hi),
                Box(sx, box.re_hi, sy, box.im_hi),
            ]
            try:
                return [(c, count_roots_in_box(f, c)) for c in children]
            except BoundaryRootError:
                continue
    raise BoundaryRootError("could not split box %r" % (box,))


def refine_box(f, box, width):
    """Shrink an isolating box of squarefree f below the given width."""
    if box.im_lo == box.im_hi == 0:
        iv = refine_interval(f, (box.re_lo, box.re_hi), width)
        return Box(iv[0], iv[1], 0, 0)
    cur = box
    while cur.width() > width:
        for child, c in _split_counted(f, cur):
            if c == 1:
                cur = child
                break
        else:
            break
    return cur
