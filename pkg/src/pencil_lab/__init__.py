"""pencil-lab: exact invariants of pencils of plane algebraic curves.

For a pencil f - c*w = 0 over the rationals this package computes, over
the algebraic closure, the finite parameter sets where members become
singular, reducible, non-reduced, or proper powers; the refined
multiplicity structure of each special member; the algebraic rank and
pencil rank with the deficiency set; and the Zeuthen-Segre check that
ties them together.  Everything is exact: big rationals, certified
algebraic numbers, and linear-algebra reducibility tests.
"""

from .kernel.algebraic import AlgebraicNumber, AlgebraicSet
from .kernel.bipoly import (
    BivariatePolynomial,
    div_exact,
    is_squarefree,
    poly_gcd,
    residue_constant,
    resultant_y,
    squarefree_decompose,
)
from .kernel.fields import (
    NumberField,
    PrimeField,
    QQ,
    RationalFunctionField,
    Rationals,
)
from .kernel.unipoly import UnivariatePolynomial
from .kernel.zfactor import factor_rational
from .gao import (
    PdeSystem,
    ReducibilityCandidates,
    absolute_factor_count,
    absolute_irreducibility_parity_demo,
    pencil_reducibility_candidates,
)
from .intersections import (
    INFINITE,
    InfinityData,
    IntersectionProfile,
    PlanePoint,
    affine_total,
    branch_count,
    i_hat,
    intersection_multiplicity,
    legacy_rank_rho,
    points_at_infinity,
    split_totals,
    tau_places_at_infinity,
)
from .parser import parse_polynomial, unparse
from .pencil import (
    PencilInput,
    RefinedFiber,
    SetReport,
    analyze_sets,
    is_composite,
    multset,
    normalize,
    primset,
    redset_refined,
    refset_equal,
    singset,
    uniset,
)
from .ranks import (
    RankReport,
    defset,
    defset_bounds,
    rank_report,
    rho_a,
    rho_pi,
    zeta_and_jungian,
)

__version__ = "0.1.0"
