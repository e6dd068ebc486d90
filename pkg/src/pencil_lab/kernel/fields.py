"""Coefficient fields for the polynomial kernel.

Every field object exposes the same small protocol (zero/one, ring ops,
exact division, equality) so that polynomial code can stay generic.
Supported kinds: the rationals, prime fields GF(p), number fields
Q[t]/(m(t)), and rational function fields Q(t).
"""

from fractions import Fraction
from math import gcd


class FieldError(ArithmeticError):
    pass


class FieldMismatchError(FieldError):
    """Operands live over different coefficient fields."""


class Rationals:
    kind = "rationals"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def inv(self, b):
        return self.div(self.one, b)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = Rationals()


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin, valid for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    kind = "prime"

    def __init__(self, p):
        if not (2 <= p < 2**31 and _is_prime(p)):
            raise FieldError("modulus %r is not a prime below 2^31" % (p,))
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q):
        q = Fraction(q)
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError("denominator vanishes mod %d" % self.p)
        return q.numerator * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return a * pow(b, -1, self.p) % self.p

    def inv(self, b):
        return self.div(1, b)

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class NumberField:
    """Q[t]/(m(t)) with m monic irreducible over Q.

    Elements are tuples of Fractions of length deg(m), lowest power first.
    Irreducibility of the supplied modulus is the caller's responsibility;
    `div` raises on any zero divisor it meets, which would expose a
    reducible modulus.
    """

    kind = "number"
    characteristic = 0

    def __init__(self, minpoly, name="t"):
        m = [Fraction(c) for c in minpoly]
        while m and m[-1] == 0:
            m.pop()
        if len(m) < 2:
            raise FieldError("number field modulus must have degree >= 1")
        lc = m[-1]
        self.minpoly = tuple(c / lc for c in m)
        self.degree = len(self.minpoly) - 1
        self.name = name
        self.zero = (Fraction(0),) * self.degree
        self.one = tuple(
            Fraction(1) if i == 0 else Fraction(0) for i in range(self.degree)
        )
        self.gen = tuple(
            Fraction(1) if i == 1 else Fraction(0) for i in range(self.degree)
        ) if self.degree > 1 else tuple([-self.minpoly[0]])

    def from_int(self, n):
        return tuple(
            Fraction(n) if i == 0 else Fraction(0) for i in range(self.degree)
        )

    def from_fraction(self, q):
        return tuple(
            Fraction(q) if i == 0 else Fraction(0) for i in range(self.degree)
        )

    def from_coeffs(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        if len(c) > self.degree:
            c = self._reduce(c)
        c += [Fraction(0)] * (self.degree - len(c))
        return tuple(c)

    def _reduce(self, c):
        m = self.minpoly
        d = self.degree
        c = list(c)
        for i in range(len(c) - 1, d - 1, -1):
            top = c[i]
            if top:
                for j in range(d):
                    c[i - d + j] -= top * m[j]
            c.pop()
        return c

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        c = self._reduce(prod)
        c += [Fraction(0)] * (d - len(c))
        return tuple(c)

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def eq(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def inv(self, b):
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero in %r" % self)
        # extended Euclid of b against the modulus in Q[t]
        r0 = list(self.minpoly)
        r1 = [Fraction(x) for x in b]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [Fraction(1)]
        while True:
            if not r1:
                raise FieldError(
                    "zero divisor found: modulus of %r is reducible" % self
                )
            if len(r1) == 1:
                inv_l = 1 / r1[0]
                return self.from_coeffs([x * inv_l for x in s1])
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def rational_value(self, a):
        """Return the element as a Fraction if it is rational, else None."""
        if all(x == 0 for x in a[1:]):
            return a[0]
        return None

    def __repr__(self):
        return "QQ(%s)" % self.name

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.minpoly == self.minpoly

    def __hash__(self):
        return hash(("NF", self.minpoly))


def _qdivmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] / lb
        q[len(a) - 1 - db] = c
        for j in range(db + 1):
            a[len(a) - 1 - db + j] -= c * b[j]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _qsub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


class RatFunc:
    """A reduced fraction of integer-primitive polynomials in one symbol."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __repr__(self):
        return "RatFunc(%r / %r)" % (self.num, self.den)

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))


def _zprim(c):
    """Integer primitive normalization of a Q-coefficient list."""
    c = [Fraction(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return ()
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if ints[-1] < 0:
        g = -g
    return tuple(v // g for v in ints)


def _zmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _zadd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _zgcd_poly(a, b):
    """gcd of integer polynomial tuples, primitive, via rational Euclid."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    while fb:
        _, r = _qdivmod(fa, fb)
        fa, fb = fb, r
    return _zprim(fa)


class RationalFunctionField:
    """Q(t): fractions of integer polynomials, kept reduced."""

    kind = "ratfunc"
    characteristic = 0

    def __init__(self, name="t"):
        self.name = name
        self.zero = RatFunc((), (1,))
        self.one = RatFunc((1,), (1,))
        self.gen = RatFunc((0, 1), (1,))

    def from_int(self, n):
        return RatFunc((n,), (1,)) if n else self.zero

    def from_fraction(self, q):
        q = Fraction(q)
        if q == 0:
            return self.zero
        return RatFunc((q.numerator,), (q.denominator,))

    def from_poly(self, coeffs):
        return self._make(_zprim_keep(coeffs), (1,))

    def _make(self, num, den):
        if not num:
            return self.zero
        g = _zgcd_poly(num, den)
        if len(g) > 1 or g[0] != 1:
            num = _zexactdiv(num, g)
            den = _zexactdiv(den, g)
        # normalize sign/content jointly so den has positive content lead
        cn = _content_sign(num)
        cd = _content_sign(den)
        from math import gcd as _g

        c = _g(cn if cn > 0 else -cn, cd if cd > 0 else -cd)
        if cd < 0:
            c = -c
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
        return RatFunc(num, den)

    def add(self, a, b):
        num = _zadd(_zmul(a.num, b.den), _zmul(b.num, a.den))
        return self._make(num, _zmul(a.den, b.den))

    def sub(self, a, b):
        num = _zadd(_zmul(a.num, b.den), tuple(-v for v in _zmul(b.num, a.den)))
        return self._make(num, _zmul(a.den, b.den))

    def neg(self, a):
        return RatFunc(tuple(-v for v in a.num), a.den)

    def mul(self, a, b):
        return self._make(_zmul(a.num, b.num), _zmul(a.den, b.den))

    def div(self, a, b):
        if not b.num:
            raise ZeroDivisionError("division by zero in %r" % self)
        return self._make(_zmul(a.num, b.den), _zmul(a.den, b.num))

    def inv(self, b):
        return self.div(self.one, b)

    def is_zero(self, a):
        return not a.num

    def eq(self, a, b):
        return a.num == b.num and a.den == b.den

    def __repr__(self):
        return "QQ(%s)_func" % self.name

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.name == self.name

    def __hash__(self):
        return hash(("RF", self.name))


def _zprim_keep(coeffs):
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return ()
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    return tuple(int(x * den) for x in c)


def _zexactdiv(a, b):
    q, r = _qdivmod([Fraction(x) for x in a], [Fraction(x) for x in b])
    assert not r
    return tuple(int(x) for x in q)


def _content_sign(c):
    g = 0
    for v in c:
        g = gcd(g, abs(v))
    if not c:
        return 1
    return g if c[-1] > 0 else -g
