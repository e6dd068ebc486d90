"""Univariate factorization over Z/Q, GF(p), and number fields.

The rational path is classical: squarefree reduction (Yun), modular
factorization (distinct-degree plus Cantor-Zassenhaus splitting), Hensel
lifting to a Landau-Mignotte bound, then subset recombination.  Number
fields go through Trager's squarefree-norm reduction to the rational
case.
"""

import random
from fractions import Fraction
from math import gcd, isqrt

from .fields import QQ, NumberField, PrimeField
from .unipoly import (
    ucompose,
    uderiv,
    udivmod,
    uexactdiv,
    ugcd,
    umonic,
    umul,
    uresultant,
    usquarefree_decompose,
    ustrip,
)

# ---------------------------------------------------------------------------
# integer polynomial helpers (tuples/lists of ints, lowest degree first)


def zstrip(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def zcontent(f):
    g = 0
    for c in f:
        g = gcd(g, abs(c))
    return g


def zprimitive(f):
    f = zstrip(f)
    if not f:
        return [], 0
    c = zcontent(f)
    if f[-1] < 0:
        c = -c
    return [v // c for v in f], c


def zmul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def zderiv(f):
    return [i * c for i, c in enumerate(f)][1:]


def zeval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def zprem(A, B):
    """Pseudo-remainder lc(B)^(dA-dB+1) * A mod B over Z."""
    A = list(A)
    dB = len(B) - 1
    lB = B[-1]
    steps = len(A) - len(B) + 1
    if steps <= 0:
        return zstrip(A)
    for _ in range(steps):
        if not A:
            break
        dA = len(A) - 1
        if dA < dB:
            A = [c * lB for c in A]
            continue
        top = A[-1]
        A = [c * lB for c in A]
        k = dA - dB
        for j in range(dB + 1):
            A[k + j] -= top * B[j]
        A = zstrip(A)
    return zstrip(A)


def _gf_resultant(a, b, p):
    """Resultant of two GF(p) polynomials by the Euclidean recurrence."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return 0
    res = 1
    sign = 1
    while len(b) > 1:
        r = _gf_rem(a, b, p)
        if not r:
            return 0
        da, db, dr = len(a) - 1, len(b) - 1, len(r) - 1
        if (da * db) % 2:
            sign = -sign
        res = res * pow(b[-1], da - dr, p) % p
        a, b = b, r
    res = res * pow(b[0], len(a) - 1, p) % p
    return res * sign % p


def zresultant(A, B):
    """Resultant over Z, computed modulo primes with a Hadamard bound."""
    from .linalg import iter_primes_desc
    from math import isqrt

    A, B = zstrip(A), zstrip(B)
    if not A or not B:
        return 0
    n, m = len(A) - 1, len(B) - 1
    if n == 0:
        return A[0] ** m
    if m == 0:
        return B[0] ** n
    norm_a = isqrt(sum(c * c for c in A)) + 1
    norm_b = isqrt(sum(c * c for c in B)) + 1
    bound = 2 * norm_a**m * norm_b**n
    M = 1
    res = 0
    for p in iter_primes_desc():
        if A[-1] % p == 0 or B[-1] % p == 0:
            continue
        rp = _gf_resultant(A, B, p)
        if M == 1:
            M, res = p, rp
        else:
            inv = pow(M % p, -1, p)
            t = (rp - res) % p * inv % p
            res += M * t
            M *= p
        if M > bound:
            res %= M
            return res - M if 2 * res > M else res
    raise ArithmeticError("resultant prime pool exhausted")


def zgcd_poly(f, g):
    """Primitive gcd over Z (positive leading coefficient)."""
    f, cf = zprimitive(f)
    g, cg = zprimitive(g)
    c = gcd(abs(cf), abs(cg))
    if not f:
        return [v * c for v in g] if c != 1 else list(g)
    if not g:
        return [v * c for v in f] if c != 1 else list(f)
    a = [Fraction(v) for v in f]
    b = [Fraction(v) for v in g]
    d = ugcd(a, b, QQ)
    d, _ = zprimitive([x.numerator * _lcm_den(d) // x.denominator for x in d])
    if c != 1:
        d = [v * c for v in d]
    return d


def _lcm_den(f):
    den = 1
    for x in f:
        den = den * x.denominator // gcd(den, x.denominator)
    return den


def q_to_z(f):
    """Clear denominators of a Fraction list; returns (int list, unit Fraction)
    with f == unit * intpoly and intpoly primitive."""
    f = [Fraction(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return [], Fraction(0)
    den = _lcm_den(f)
    ints = [int(c * den) for c in f]
    prim, cont = zprimitive(ints)
    return prim, Fraction(cont, den)


def z_to_q(f):
    return [Fraction(c) for c in f]


# ---------------------------------------------------------------------------
# GF(p) factorization


def _gf_norm(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _gf_norm(out, p)


def _gf_rem(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    while len(f) - 1 >= dg and f:
        if f[-1] % p == 0:
            f.pop()
            continue
        c = f[-1] * inv % p
        k = len(f) - 1 - dg
        for j in range(dg + 1):
            f[k + j] = (f[k + j] - c * g[j]) % p
        f.pop()
    return _gf_norm(f, p)


def _gf_gcd(f, g, p):
    a, b = _gf_norm(f, p), _gf_norm(g, p)
    while b:
        a, b = b, _gf_rem(a, b, p)
    return _gf_monic(a, p)


def _gf_powmod(f, e, g, p):
    out = [1]
    base = _gf_rem(f, g, p)
    while e:
        if e & 1:
            out = _gf_rem(_gf_mul(out, base, p), g, p)
        e >>= 1
        if e:
            base = _gf_rem(_gf_mul(base, base, p), g, p)
    return out


def gf_factor_squarefree(f, p, rng):
    """Factor a monic squarefree polynomial over GF(p) into monic irreducibles."""
    f = _gf_monic(_gf_norm(f, p), p)
    n = len(f) - 1
    if n <= 1:
        return [f] if n == 1 else []
    out = []
    # distinct degree
    h = [0, 1]
    v = list(f)
    d = 0
    pieces = []
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_powmod(h, p, v, p)
        g = _gf_gcd(_gf_norm([(a - b) % p for a, b in _pad(h, [0, 1])], p), v, p)
        if len(g) > 1:
            pieces.append((g, d))
            v = _gf_exactdiv(v, g, p)
            h = _gf_rem(h, v, p)
    if len(v) > 1:
        pieces.append((v, len(v) - 1))
    # equal degree
    for g, d in pieces:
        out.extend(_gf_split_equal_degree(g, d, p, rng))
    out.sort(key=lambda q: (len(q), q))
    return out


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _gf_exactdiv(f, g, p):
    q = []
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    for _ in range(len(f) - dg):
        c = f[-1] * inv % p
        q.append(c)
        k = len(f) - 1 - dg
        for j in range(dg + 1):
            f[k + j] = (f[k + j] - c * g[j]) % p
        f.pop()
    q.reverse()
    return _gf_norm(q, p)


def _gf_split_equal_degree(g, d, p, rng):
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _gf_norm(a, p)
        if len(a) < 2:
            continue
        if p == 2:
            # trace map splitting
            b = list(a)
            t = list(a)
            for _ in range(d - 1):
                b = _gf_rem(_gf_mul(b, b, p), g, p)
                t = _gf_norm([(x + y) % p for x, y in _pad(t, b)], p)
            h = _gf_gcd(t, g, p)
        else:
            b = _gf_powmod(a, (p**d - 1) // 2, g, p)
            h = _gf_gcd(_gf_norm([(x - y) % p for x, y in _pad(b, [1])], p), g, p)
        if 0 < len(h) - 1 < n:
            rest = _gf_exactdiv(g, h, p)
            return _gf_split_equal_degree(h, d, p, rng) + _gf_split_equal_degree(
                rest, d, p, rng
            )


# ---------------------------------------------------------------------------
# Hensel lifting


def _zp_norm(f, m):
    f = [c % m for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _zp_mul(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    return _zp_norm(out, m)


def _zp_divmod_monicish(f, h, m):
    """divmod by h with lc(h) invertible mod m."""
    f = list(_zp_norm(f, m))
    dh = len(h) - 1
    inv = pow(h[-1], -1, m)
    q = [0] * max(0, len(f) - dh)
    while len(f) - 1 >= dh and f:
        if f[-1] % m == 0:
            f.pop()
            continue
        c = f[-1] * inv % m
        k = len(f) - 1 - dh
        q[k] = c
        for j in range(dh + 1):
            f[k + j] = (f[k + j] - c * h[j]) % m
        f.pop()
    return _zp_norm(q, m), _zp_norm(f, m)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step: from mod m to mod m^2 (GvzG 15.10)."""
    m2 = m * m
    e = _zp_norm([a - b for a, b in _pad(list(f), zmul(g, h))], m2)
    q, r = _zp_divmod_monicish(_zp_mul(s, e, m2), h, m2)
    g1 = _zp_norm(
        [a + b for a, b in _pad(list(g), [x + y for x, y in _pad(_zp_mul(t, e, m2), _zp_mul(q, g, m2))])],
        m2,
    )
    h1 = _zp_norm([a + b for a, b in _pad(list(h), r)], m2)
    b = _zp_norm(
        [a + c - (1 if i == 0 else 0) for i, (a, c) in enumerate(_pad(_zp_mul(s, g1, m2), _zp_mul(t, h1, m2)))],
        m2,
    )
    c, d = _zp_divmod_monicish(_zp_mul(s, b, m2), h1, m2)
    s1 = _zp_norm([x - y for x, y in _pad(list(s), d)], m2)
    t1 = _zp_norm(
        [x - y for x, y in _pad(list(t), [u + v for u, v in _pad(_zp_mul(t, b, m2), _zp_mul(c, g1, m2))])],
        m2,
    )
    return g1, h1, s1, t1


def _hensel_pair(f, g, h, p, k):
    """Lift f = g*h (mod p) to mod p^k; lc(h) = 1 required, lc(f)=lc(g) mod p."""
    # Bezout: s*g + t*h = 1 mod p
    Kp = PrimeField(p)
    s, t, d = _bezout_mod(g, h, p)
    assert len(d) == 1
    m = p
    G, H, S, T = list(g), list(h), s, t
    while m < p**k:
        G, H, S, T = _hensel_step(m, f, G, H, S, T)
        m = m * m
    mk = p**k
    return _zp_norm(G, mk), _zp_norm(H, mk)


def _bezout_mod(g, h, p):
    a, b = _gf_norm(g, p), _gf_norm(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while b:
        q, r = _zp_divmod_monicish(a, b, p)
        a, b = b, r
        s0, s1 = s1, _gf_norm([x - y for x, y in _pad(s0, _gf_mul(q, s1, p))], p)
        t0, t1 = t1, _gf_norm([x - y for x, y in _pad(t0, _gf_mul(q, t1, p))], p)
    inv = pow(a[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0], [1]


def _hensel_multifactor(f, factors, p, k):
    """Lift f = lc * prod(factors) (mod p) to mod p^k, factors monic."""
    if len(factors) == 1:
        mk = p**k
        return [_zp_norm([c * pow(f[-1], -1, mk) % mk for c in f], mk)]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    gl = [f[-1] % p]
    for q in left:
        gl = _gf_mul(gl, q, p)
    hr = [1]
    for q in right:
        hr = _gf_mul(hr, q, p)
    G, H = _hensel_pair(f, gl, hr, p, k)
    return _hensel_multifactor(G, left, p, k) + _hensel_multifactor(H, right, p, k)


# ---------------------------------------------------------------------------
# factorization over Q


_PRIME_POOL = [
    1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061,
    1063, 1069, 1087, 1091, 1093, 1097, 1103, 1109, 1117, 1123,
    2003, 2011, 2017, 2027, 2029, 2039, 2053, 2063, 2069, 2081,
]


def _symmetric(c, m):
    c %= m
    return c - m if 2 * c > m else c


def factor_squarefree_z(f, rng=None):
    """Factor a primitive squarefree integer polynomial into irreducibles.

    Returns primitive integer factors with positive leading coefficient,
    sorted by (degree, coefficients).
    """
    rng = rng or random.Random(0x5EED)
    f = zstrip(f)
    n = len(f) - 1
    if n <= 0:
        return []
    if n == 1:
        g, _ = zprimitive(f)
        return [g]
    best = None
    tried = 0
    for p in _PRIME_POOL:
        if f[-1] % p == 0:
            continue
        fp = _gf_monic(_gf_norm(f, p), p)
        if len(fp) - 1 != n:
            continue
        if len(_gf_gcd(fp, _gf_norm(zderiv(f), p), p)) != 1:
            continue
        facs = gf_factor_squarefree(fp, p, random.Random(rng.randrange(1 << 30)))
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if tried >= 3 or len(facs) == 1:
            break
    if best is None:
        raise ArithmeticError("no good prime found for factorization")
    p, facs = best
    if len(facs) == 1:
        g, _ = zprimitive(f)
        return [g]
    # Landau-Mignotte bound on factor coefficients of f (and its cofactors)
    maxnorm = max(abs(c) for c in f)
    bound = (isqrt(n + 1) + 1) * (1 << n) * maxnorm * abs(f[-1])
    k = 1
    while p**k <= 2 * bound:
        k += 1
    lifted = _hensel_multifactor(f, facs, p, k)
    mk = p**k
    lifted = [_gf_monic_mod(g, mk) for g in lifted]
    return _recombine(f, lifted, mk)


def _gf_monic_mod(g, m):
    inv = pow(g[-1], -1, m)
    return _zp_norm([c * inv % m for c in g], m)


def _recombine(f, modular, m):
    result = []
    idx = list(range(len(modular)))
    s = 1
    from itertools import combinations

    while 2 * s <= len(idx):
        found = True
        while found:
            found = False
            for subset in combinations(idx, s):
                g = [f[-1] % m]
                for i in subset:
                    g = _zp_mul(g, modular[i], m)
                g = [_symmetric(c, m) for c in g]
                g, _ = zprimitive(g)
                if not g:
                    continue
                if not _ztrial_div(f, g):
                    continue
                q = _zexact(f, g)
                result.append(g)
                f = q
                idx = [i for i in idx if i not in subset]
                found = True
                break
        s += 1
    if len(f) > 1:
        g, _ = zprimitive(f)
        result.append(g)
    result.sort(key=lambda q: (len(q), q))
    return result


def _ztrial_div(f, g):
    if not g or len(g) > len(f):
        return False
    if g[0] != 0 and f[0] % g[0] != 0:
        return False
    if f[-1] % g[-1] != 0:
        return False
    q, r = udivmod(z_to_q(f), z_to_q(g), QQ)
    return not r and all(x.denominator == 1 for x in q)


def _zexact(f, g):
    q, r = udivmod(z_to_q(f), z_to_q(g), QQ)
    assert not r
    return [int(x) for x in q]


def factor_rational(f):
    """Complete factorization over Q of a Fraction-coefficient list.

    Returns (unit: Fraction, [(primitive integer irreducible, multiplicity)]).
    Factor product times unit reconstructs the input exactly.
    """
    f = ustrip([Fraction(c) for c in f], QQ)
    if not f:
        raise ArithmeticError("factorization of zero polynomial")
    prim, unit = q_to_z(f)
    if len(prim) == 1:
        return Fraction(unit * prim[0]), []
    out = []
    # pull out powers of x
    shift = 0
    while prim[0] == 0:
        shift += 1
        prim = prim[1:]
    if shift:
        out.append(([0, 1], shift))
    sqf, _ = usquarefree_decompose(z_to_q(prim), QQ)
    for g, mult in sqf:
        gz, _ = q_to_z(g)
        for irr in factor_squarefree_z(gz):
            out.append((irr, mult))
    lc_prod = Fraction(1)
    for g, mult in out:
        lc_prod *= Fraction(g[-1]) ** mult
    return f[-1] / lc_prod, out


def is_irreducible_q(f):
    f = ustrip([Fraction(c) for c in f], QQ)
    if len(f) - 1 < 1:
        return False
    _, facs = factor_rational(f)
    return len(facs) == 1 and facs[0][1] == 1 and len(facs[0][0]) == len(f)


# ---------------------------------------------------------------------------
# Trager: factorization over a number field


def factor_over_field(f, K):
    """Factor f over field K (QQ or NumberField).

    Returns (unit element of K, [(monic factor coeff list, multiplicity)]).
    """
    if K is QQ or isinstance(K, type(QQ)):
        unit, facs = factor_rational(f)
        out = []
        for g, mult in facs:
            gq = z_to_q(g)
            unit *= Fraction(g[-1]) ** mult
            out.append((umonic(gq, QQ), mult))
        return unit, out
    if not isinstance(K, NumberField):
        raise ArithmeticError("factorization not supported over %r" % K)
    f = ustrip(list(f), K)
    if not f:
        raise ArithmeticError("factorization of zero polynomial")
    unit = f[-1]
    f = umonic(f, K)
    out = []
    sqf, _ = usquarefree_decompose(f, K)
    for g, mult in sqf:
        for irr in _trager_squarefree(g, K):
            out.append((irr, mult))
    return unit, out


def _trager_squarefree(f, K):
    """Factor monic squarefree f over number field K via squarefree norms."""
    n = len(f) - 1
    if n <= 1:
        return [f] if n == 1 else []
    d = K.degree
    m = [Fraction(c) for c in K.minpoly]
    for s in _shift_candidates():
        # g(y) = f(y - s*alpha); norm N(y) = Res_t(m(t), g with alpha -> t)
        shifted = _nf_shift(f, K, -s)
        N = _norm_poly(shifted, m, K)
        Nsf = ugcd(N, uderiv(N, QQ), QQ)
        if len(Nsf) == 1:
            _, nfacs = factor_rational(N)
            if len(nfacs) == 1:
                return [f]
            out = []
            for gz, _mult in nfacs:
                gq = z_to_q(gz)
                # bring factor back: gcd_K(f, factor(y + s*alpha))
                cand = _nf_shift(umap_to_K(gq, K), K, s)
                h = ugcd(f, cand, K)
                if len(h) > 1:
                    out.append(h)
            out.sort(key=lambda q: len(q))
            return out
    raise ArithmeticError("no squarefree norm shift found")


def umap_to_K(f, K):
    return [K.from_fraction(c) for c in f]


def _shift_candidates():
    yield 0
    k = 1
    while k < 50:
        yield k
        yield -k
        k += 1


def _nf_shift(f, K, s):
    """f(y + s*alpha) over number field K."""
    if s == 0:
        return list(f)
    salpha = K.from_coeffs([Fraction(0), Fraction(s)]) if K.degree > 1 else K.from_fraction(
        Fraction(s) * K.gen[0]
    )
    return ucompose(f, [salpha, K.one], K)


def _norm_poly(f, m, K):
    """Res_t(m(t), f(y) with alpha -> t) as a Q-coefficient polynomial in y."""
    n = len(f) - 1
    d = len(m) - 1
    # evaluate in y at enough rational points and interpolate
    npts = n * d + 1
    pts = []
    x = 0
    while len(pts) < npts:
        # evaluate f at y=x: element of K -> poly in t
        val = [Fraction(0)] * d
        ypow = K.one
        acc = K.zero
        for c in f:
            acc = K.add(acc, K.mul(c, ypow))
            ypow = K.mul(ypow, K.from_int(x))
        tpoly = list(acc)
        r = _resultant_q(m, tpoly)
        pts.append((Fraction(x), r))
        x = -x + (1 if x <= 0 else 0)
    from .unipoly import uinterpolate

    return uinterpolate(pts, QQ)


def resultant_q(a, b):
    """Exact resultant of Fraction-coefficient polynomials (via Z PRS)."""
    return _resultant_q(a, b)


def _resultant_q(a, b):
    az, ua = q_to_z(a)
    bz, ub = q_to_z(b)
    if not bz:
        return Fraction(0) if len(az) > 1 else Fraction(1)
    r = zresultant(az, bz)
    return ua ** (len(bz) - 1) * ub ** (len(az) - 1) * r
