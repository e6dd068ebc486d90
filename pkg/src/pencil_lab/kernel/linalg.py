"""Exact rank computations for integer and field matrices.

Integer ranks run modulo 29-bit primes with numpy elimination; exactness
is certified either by a Bareiss run (small matrices) or by a Hadamard
bound argument across enough primes (rank r is certain once some r-minor
is a unit mod one prime and every (r+1)-minor vanishes modulo a set of
primes whose product exceeds the minor bound).
"""

from fractions import Fraction
from math import isqrt

import numpy as np

def _prime_pool(count, start=(1 << 29) - 1):
    from .fields import _is_prime

    out = []
    c = start
    while len(out) < count:
        if _is_prime(c):
            out.append(c)
        c -= 2
    return out


_RANK_PRIMES = _prime_pool(120)


def iter_primes_desc():
    """29-bit primes, descending, unbounded (extends past the cache)."""
    from .fields import _is_prime

    for p in _RANK_PRIMES:
        yield p
    c = _RANK_PRIMES[-1] - 2
    while c > (1 << 28):
        if _is_prime(c):
            yield c
        c -= 2
    raise ArithmeticError("prime supply exhausted below 2^28")


def rank_mod_p(mat, p):
    """Rank of an integer matrix modulo p via vectorized elimination."""
    A = np.array(mat, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        col = A[r + 1:, c].copy()
        mask = col != 0
        if mask.any():
            A[r + 1:][mask] = (A[r + 1:][mask] - col[mask, None] * A[r][None, :]) % p
        r += 1
    return r


def bareiss_rank(mat):
    """Exact integer rank by fraction-free elimination."""
    A = [list(map(int, row)) for row in mat]
    rows = len(A)
    if not rows:
        return 0
    cols = len(A[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        for i in range(r + 1, rows):
            ai = A[i]
            ar = A[r]
            aic = ai[c]
            for j in range(c, cols):
                ai[j] = (pv * ai[j] - aic * ar[j]) // prev
        prev = pv
        r += 1
        if r == rows:
            break
    return r


def det_bareiss(mat):
    """Exact determinant of a square integer matrix."""
    A = [list(map(int, row)) for row in mat]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = None
        for i in range(c, n):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        pv = A[c][c]
        for i in range(c + 1, n):
            ai = A[i]
            ar = A[c]
            aic = ai[c]
            for j in range(c, n):
                ai[j] = (pv * ai[j] - aic * ar[j]) // prev
        prev = pv
    return sign * A[n - 1][n - 1]


def _hadamard_bound(mat, size):
    """Bound on the absolute value of any size x size minor."""
    norms = sorted(
        (isqrt(sum(v * v for v in row)) + 1 for row in mat), reverse=True
    )
    b = 1
    for v in norms[:size]:
        b *= max(v, 1)
    return b


def rank_exact_int(mat):
    """Certified rank of an integer matrix."""
    rows = len(mat)
    if rows == 0:
        return 0
    cols = len(mat[0])
    if not any(any(row) for row in mat):
        return 0
    if rows * cols <= 3600:
        return bareiss_rank(mat)
    best = 0
    agree = []
    bound = 2 * _hadamard_bound(mat, min(rows, cols))
    prod = 1
    for p in _RANK_PRIMES:
        r = rank_mod_p(mat, p)
        if r > best:
            best = r
            agree = [p]
            prod = p
        elif r == best:
            agree.append(p)
            prod *= p
        if prod > bound:
            # every (best+1)-minor vanishes mod a product exceeding its
            # possible magnitude, so the exact rank is best
            return best
    raise ArithmeticError("rank certification ran out of primes")


def echelon_pivots_fraction(mat):
    """(rank, pivot rows, pivot cols) of a Fraction/int matrix."""
    A = [[Fraction(v) for v in row] for row in mat]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    order = list(range(rows))
    prow = []
    pcol = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            order[r], order[piv] = order[piv], order[r]
        prow.append(order[r])
        pcol.append(c)
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(r + 1, rows):
            if A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r, prow, pcol


def rank_over_field(mat, K):
    """Rank of a matrix with entries in an arbitrary exact field."""
    A = [list(row) for row in mat]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if not K.is_zero(A[i][c]):
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        inv = K.inv(A[r][c])
        A[r] = [K.mul(v, inv) for v in A[r]]
        for i in range(r + 1, rows):
            if not K.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r
