"""Absolute irreducibility and factor counts for bivariate polynomials.

The decision procedure is linear algebra only: for squarefree f with both
partial degrees positive, the pairs (g, h) with deg_X g <= m-1,
deg_Y g <= n, deg_X h <= m, deg_Y h <= n-1 satisfying

    f*g_Y - g*f_Y = f*h_X - h*f_X

form a vector space whose dimension equals the number of absolutely
irreducible factors of f (Ruppert's differential form, with Gao's degree
bounds that make the count exact).  The same system over Q(c) for a
pencil f - c*w yields, through a witness minor of the generic solve, a
finite sound superset of the parameters where extra factors can appear.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd as intgcd

from .kernel.algebraic import AlgebraicSet
from .kernel.bipoly import BivariatePolynomial, is_squarefree, poly_gcd
from .kernel.fields import QQ, NumberField, PrimeField
from .kernel.linalg import (
    bareiss_rank,
    det_bareiss,
    echelon_pivots_fraction,
    rank_exact_int,
    rank_over_field,
)
from .kernel.unipoly import uinterpolate, ustrip
from .kernel.zfactor import q_to_z


class NonSquarefreeError(ArithmeticError):
    pass


class SmallCharacteristicError(ArithmeticError):
    pass


class CommonFactorError(ArithmeticError):
    pass


@dataclass
class PdeSystem:
    """The differential linear system attached to one squarefree f."""

    m: int
    n: int
    g_unknowns: list
    h_unknowns: list
    rows: list  # one list of field elements per monomial equation

    @property
    def unknown_count(self):
        return len(self.g_unknowns) + len(self.h_unknowns)

    def self_solution(self, f):
        """(f_X, f_Y) as a coefficient vector; always solves the system."""
        K = f.field
        fx = f.deriv_x().terms
        fy = f.deriv_y().terms
        vec = [fx.get(e, K.zero) for e in self.g_unknowns]
        vec += [fy.get(e, K.zero) for e in self.h_unknowns]
        return vec


def build_pde_system(f):
    """Assemble the system for squarefree f with deg_X, deg_Y >= 1."""
    K = f.field
    m, n = f.deg_x(), f.deg_y()
    g_unknowns = [(i, j) for i in range(m) for j in range(n + 1)]
    h_unknowns = [(i, j) for i in range(m + 1) for j in range(n)]
    row_index = {}
    rows = []
    ncols = len(g_unknowns) + len(h_unknowns)

    def row_for(mon):
        if mon not in row_index:
            row_index[mon] = len(rows)
            rows.append([K.zero] * ncols)
        return rows[row_index[mon]]

    for col, (i, j) in enumerate(g_unknowns):
        # f*g_Y - g*f_Y contributes c*(j - q) X^(i+p) Y^(j+q-1)
        for (p, q), c in f.terms.items():
            w = j - q
            if w:
                row = row_for((i + p, j + q - 1))
                row[col] = K.add(row[col], K.mul(c, K.from_int(w)))
    off = len(g_unknowns)
    for col, (i, j) in enumerate(h_unknowns):
        # h*f_X - f*h_X contributes c*(p - i) X^(i+p-1) Y^(j+q)
        for (p, q), c in f.terms.items():
            w = p - i
            if w:
                row = row_for((i + p - 1, j + q))
                row[off + col] = K.add(row[off + col], K.mul(c, K.from_int(w)))
    return PdeSystem(m, n, g_unknowns, h_unknowns, rows)


def _univariate_distinct_roots(f):
    """Number of distinct roots over the closure of a univariate in X or Y."""
    K = f.field
    from .kernel.unipoly import uderiv, ugcd

    coeffs = f.y_major()[0] if f.deg_y() == 0 else f.x_major()[0]
    g = ugcd(coeffs, uderiv(coeffs, K), K)
    return (len(coeffs) - 1) - (len(g) - 1)


def absolute_factor_count(f):
    """Number of absolutely irreducible factors of squarefree f."""
    K = f.field
    d = f.total_degree()
    if d < 1:
        raise ArithmeticError("factor count needs a nonconstant polynomial")
    if isinstance(K, PrimeField) and K.p <= 2 * d * d:
        raise SmallCharacteristicError(
            "characteristic %d too small for degree %d" % (K.p, d)
        )
    if not is_squarefree(f):
        raise NonSquarefreeError("factor count needs a squarefree input")
    if f.deg_x() == 0 or f.deg_y() == 0:
        return _univariate_distinct_roots(f)
    if f == f.degree_form():
        # squarefree binary form: d distinct linear factors over the closure
        return d
    system = build_pde_system(f)
    return system.unknown_count - _system_rank(system, K)


def _system_rank(system, K):
    if K is QQ or K == QQ:
        introws = _int_rows(system.rows)
        return rank_exact_int(introws)
    if isinstance(K, PrimeField):
        from .kernel.linalg import rank_mod_p

        return rank_mod_p([[c % K.p for c in row] for row in system.rows], K.p)
    return rank_over_field(system.rows, K)


def _int_rows(rows):
    out = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // intgcd(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def absolute_irreducibility_parity_demo(u):
    """Factor count of X^2 + Y^u: 1 when u is odd, 2 when u is even."""
    if u < 1:
        raise ValueError("exponent must be positive")
    f = BivariatePolynomial({(2, 0): Fraction(1), (0, u): Fraction(1)}, QQ)
    return absolute_factor_count(f)


@dataclass
class ReducibilityCandidates:
    """Sound finite superset of parameters with absolutely reducible or
    non-squarefree fibers, unless the pencil itself is degenerate."""

    candidates: AlgebraicSet
    provenance: dict = dc_field(default_factory=dict)
    degenerate: bool = False
    generic_count: int = 1


def _shear_until_biprojective(f, w):
    """Shear so both partial degrees of the generic member are >= 1.

    Tries X -> X + lam*Y; for effectively univariate input (which that
    shear cannot fix) the variables are swapped first.
    """
    bound = f.total_degree() + (w.total_degree() if w is not None else 0) + 2
    for swapped in (False, True):
        base_f = f.swap_vars() if swapped else f
        base_w = (w.swap_vars() if swapped else w) if w is not None else None
        for lam in range(bound + 1):
            fs = base_f.shear_x_plus_ly(lam)
            ws = base_w.shear_x_plus_ly(lam) if base_w is not None else None
            mx = max(fs.deg_x(), ws.deg_x() if ws is not None else -1)
            my = max(fs.deg_y(), ws.deg_y() if ws is not None else -1)
            if mx >= 1 and my >= 1:
                return fs, ws, (lam, swapped)
    raise ArithmeticError("cannot reach positive partial degrees")


def pencil_reducibility_candidates(f, w=None):
    """Candidate parameters where f - c*w can factor over the closure.

    Builds the differential system for the generic member over Q(c) with
    entries linear in c, certifies the generic solution dimension from
    specializations, and returns the vanishing locus of a generic-rank
    witness minor united with the degree-drop values.  Every parameter
    with an absolutely reducible (or non-squarefree) squarefree-normalized
    fiber of generic degree shape is in the set; non-squarefree fibers at
    dropped degrees are the multiple-set candidates, which the caller
    unites in.  Sets the degenerate flag when the generic member itself
    is absolutely reducible.
    """
    K = f.field
    if not (K is QQ or K == QQ):
        raise ArithmeticError("pencil candidates require rational coefficients")
    if w is not None and w.is_constant():
        w = None
    if w is not None:
        if not poly_gcd(f, w).is_constant():
            raise CommonFactorError("f and w share a factor")
        if f.total_degree() < w.total_degree():
            raise ArithmeticError("need deg f >= deg w")
    provenance = {}
    fs, ws, (lam, swapped) = _shear_until_biprojective(f, w)
    if lam or swapped:
        provenance["shear"] = (lam, "swapped" if swapped else "")
    # support of the generic fiber
    support = dict(fs.terms)
    wterms = ws.terms if ws is not None else {(0, 0): Fraction(1)}
    for e, c in wterms.items():
        support.setdefault(e, Fraction(0))
    mg = max(a for a, _ in support)
    ng = max(b for _, b in support)
    drop_values = []
    for axis in (0, 1):
        lead = [e for e in support if e[axis] == (mg if axis == 0 else ng)]
        cands = None
        ok = True
        for e in lead:
            fe = fs.terms.get(e, Fraction(0))
            we = wterms.get(e, Fraction(0))
            if we == 0:
                if fe != 0:
                    ok = False
                    break
                continue
            c0 = fe / we
            if cands is None:
                cands = c0
            elif cands != c0:
                ok = False
                break
        if ok and cands is not None:
            drop_values.append(cands)
            provenance.setdefault("degree_drop", []).append(str(cands))
    # generic PDE system: entries are linear polynomials a + b*c
    M0, M1, ncols = _parametric_system(fs, ws, mg, ng)
    nrows = len(M0)
    forbidden = set(drop_values)
    gen_dim, good_c0 = _generic_dimension(M0, M1, ncols, forbidden)
    if gen_dim > 1:
        return ReducibilityCandidates(
            AlgebraicSet.empty(), provenance, True, gen_dim
        )
    # witness minor at the certified-good specialization
    rank = ncols - 1
    spec = [
        [M0[i][j] + good_c0 * M1[i][j] for j in range(ncols)] for i in range(nrows)
    ]
    r, prow, pcol = echelon_pivots_fraction(spec)
    assert r == rank
    pts = []
    t0 = 0
    while len(pts) < rank + 1:
        tv = Fraction(t0)
        t0 = -t0 + (1 if t0 <= 0 else 0)
        sub = [
            [M0[i][j] + tv * M1[i][j] for j in pcol] for i in prow
        ]
        pts.append((tv, Fraction(det_bareiss(_clear_rows(sub)))))
    D = ustrip(uinterpolate(pts, QQ), QQ)
    if not D:
        raise ArithmeticError("witness minor vanished identically")
    cands = AlgebraicSet.from_defining_poly(D)
    provenance["witness_minor_degree"] = len(D) - 1
    for v in drop_values:
        cands = cands.union(AlgebraicSet.from_rationals([v]))
    return ReducibilityCandidates(cands, provenance, False, 1)


def _clear_rows(rows):
    out = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // intgcd(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def _parametric_system(fs, ws, mg, ng):
    """Integer matrices (M0, M1) with system = M0 + c*M1 for f - c*w."""
    g_unknowns = [(i, j) for i in range(mg) for j in range(ng + 1)]
    h_unknowns = [(i, j) for i in range(mg + 1) for j in range(ng)]
    ncols = len(g_unknowns) + len(h_unknowns)
    row_index = {}
    R0, R1 = [], []

    def rows_for(mon):
        if mon not in row_index:
            row_index[mon] = len(R0)
            R0.append([Fraction(0)] * ncols)
            R1.append([Fraction(0)] * ncols)
        i = row_index[mon]
        return R0[i], R1[i]

    wterms = ws.terms if ws is not None else {(0, 0): Fraction(1)}

    def add(src, sign_into_R1, col, p, q, c, w):
        row0, row1 = rows_for((p, q))
        if sign_into_R1:
            row1[col] -= c * w
        else:
            row0[col] += c * w

    for col, (i, j) in enumerate(g_unknowns):
        for (p, q), c in fs.terms.items():
            if j - q:
                add(None, False, col, i + p, j + q - 1, c, j - q)
        for (p, q), c in wterms.items():
            if j - q:
                add(None, True, col, i + p, j + q - 1, c, j - q)
    off = len(g_unknowns)
    for col, (i, j) in enumerate(h_unknowns):
        for (p, q), c in fs.terms.items():
            if p - i:
                add(None, False, off + col, i + p - 1, j + q, c, p - i)
        for (p, q), c in wterms.items():
            if p - i:
                add(None, True, off + col, i + p - 1, j + q, c, p - i)
    # clear denominators jointly to keep integer matrices
    den = 1
    for row in R0 + R1:
        for v in row:
            den = den * v.denominator // intgcd(den, v.denominator)
    M0 = [[int(v * den) for v in row] for row in R0]
    M1 = [[int(v * den) for v in row] for row in R1]
    return M0, M1, ncols


def _generic_dimension(M0, M1, ncols, forbidden):
    """Certified generic solution dimension of (M0 + c*M1) x = 0.

    A specialization with dimension 1 certifies generic dimension 1 (the
    pencil's own derivative pair is always a solution, so the generic
    dimension is at least 1).  Otherwise dimensions exceeding 1 at
    ncols + 1 distinct points certify generic degeneracy, since every
    (ncols-1)-minor is a polynomial in c of degree below the number of
    points.
    """
    tested = 0
    c0 = Fraction(0)
    dims = []
    while tested <= ncols + 1:
        while c0 in forbidden:
            c0 += 1
        spec = [
            [M0[i][j] + c0 * M1[i][j] for j in range(ncols)]
            for i in range(len(M0))
        ]
        r = rank_exact_int(_clear_rows(spec))
        dim = ncols - r
        if dim == 1:
            return 1, c0
        dims.append(dim)
        tested += 1
        c0 += 1
    return min(dims), None
