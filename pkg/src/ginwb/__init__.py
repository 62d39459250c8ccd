"""Generic initial ideals of degree-11 space curves.

Borel-fixed monomial ideals and their rewriting trees, gin enumeration,
Gröbner kernels of parameterized rational curves, surface and linkage
arithmetic, and a codimension audit with a JSON report front end.
"""

from .monomial import (
    MonomialIdeal,
    borel_closure,
    colength,
    cone_genus,
    is_borel_fixed,
    is_saturated,
    parse_ideal,
    point_cohomology,
    regularity,
)
from .trees import GeneratorTree, RewriteHistory, rewrite, tree_of
from .enumeration import (
    ConstraintSet,
    enumerate_curve_gins,
    enumerate_hyperplane_gins_p3,
    enumerate_hyperplane_gins_p4,
    gplusi_bound,
    rtb_strata,
)
from .groebner import PolyRing, TermOrder, groebner_basis, is_groebner, is_reduced, reduce_basis
from .curves import implicitize, solve_syzygy_constraints, syzygy_splitting_type
from .surfaces import divisor_stats, koszul_chi, liaison_bounds, liaison_residual_chi, solve_classes
from .audit import AuditReport, CaseRecord, run_audit
from .report import ReportDocument

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "CaseRecord",
    "ConstraintSet",
    "GeneratorTree",
    "MonomialIdeal",
    "PolyRing",
    "ReportDocument",
    "RewriteHistory",
    "TermOrder",
    "borel_closure",
    "colength",
    "cone_genus",
    "divisor_stats",
    "enumerate_curve_gins",
    "enumerate_hyperplane_gins_p3",
    "enumerate_hyperplane_gins_p4",
    "gplusi_bound",
    "groebner_basis",
    "implicitize",
    "is_borel_fixed",
    "is_groebner",
    "is_reduced",
    "is_saturated",
    "koszul_chi",
    "liaison_bounds",
    "liaison_residual_chi",
    "parse_ideal",
    "point_cohomology",
    "reduce_basis",
    "regularity",
    "rewrite",
    "rtb_strata",
    "run_audit",
    "solve_classes",
    "solve_syzygy_constraints",
    "syzygy_splitting_type",
    "tree_of",
]
