"""Tangent cones of monomial curves and the multiplicity bound for their
non-complete-intersection cases."""

from .config import EffortCaps
from .errors import (
    CapExceeded,
    DegreeTooSmall,
    EffortCapExceeded,
    InputError,
    MonocurveError,
    NotExtremal,
    NotNumerical,
    NotQuadratic,
)
from .extremal import (
    AnalysisReport,
    bound,
    check_extremal_consequences,
    extremal_betti_formula,
    extremal_family,
    koszul_witness,
    lemma_min_product,
    min_relation_degree_bound,
    quadratic_gap_check,
    verify_theorem,
)
from .monomideal import BettiTable, MonomialIdeal, betti_koszul, betti_lcm, box_count, colon, hilbert
from .semigroup import (
    NumericalSemigroup,
    apery_set,
    canonicalize,
    contains,
    enumerate_semigroups,
    frobenius,
    parse_semigroup,
)
from .tangentcone import (
    GradedIdeal,
    classify,
    graded_invariants,
    is_cohen_macaulay,
    leading_ideal,
    minimal_generator_degrees,
    tangent_cone,
)
from .toric import BinomialIdeal, critical_degree, defining_ideal, power_witness

__version__ = "0.1.0"
