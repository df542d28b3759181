"""Exact-arithmetic toolkit for Hirzebruch surfaces and hyper-bitangency.

Four layers:

``lattice``
    the Picard lattice of ``F_e`` with its pairing, positivity predicates,
    section counts, volumes and genus formulas;
``germs``
    local invariants of plane-curve germs over the rationals (multiplicity
    sequences, delta invariants, local intersection numbers);
``bounds``
    the case analysis bounding the set of rational curves meeting a
    three-component normal-crossing curve in at most two points;
``verifier``
    a desk-scale exact verifier that enumerates and checks hyper-bitangent
    curves for explicit configurations.
"""

from .bounds import (
    BoundEntry,
    BoundReport,
    EmptinessVerdict,
    PlaneCaseReferral,
    ThreeComponentConfig,
    classify_hyp_systems,
    emptiness_criterion,
    exceptional_set_bound,
    f1_beta_zero_referral,
    hyp_c1_f1_bound,
    n_count,
)
from .germs import (
    INFINITE_INTERSECTION,
    MultiplicitySequence,
    PlaneCurveGerm,
    ResolutionNode,
    delta_invariant,
    delta_lower_bound,
    fz_admissible_set,
    is_unibranch,
    l_index,
    local_intersection,
    mn_point_invariance_check,
    mult_at,
    multiplicity_sequence,
    parse_germ_poly,
    resolution_chain,
    resultant_intersection_oracle,
    strong_triangle_check,
)
from .lattice import DivisorClass, SurfaceModel
from .verifier import (
    ComparisonRecord,
    ExplicitConfig,
    ExplicitCurve,
    compute_N,
    enumerate_candidates,
    exceptional_section,
    is_hyper_bitangent,
    make_curve,
    negative_section,
    verify_bound,
)

__all__ = [
    "BoundEntry",
    "BoundReport",
    "ComparisonRecord",
    "DivisorClass",
    "EmptinessVerdict",
    "ExplicitConfig",
    "ExplicitCurve",
    "INFINITE_INTERSECTION",
    "MultiplicitySequence",
    "PlaneCaseReferral",
    "PlaneCurveGerm",
    "ResolutionNode",
    "SurfaceModel",
    "ThreeComponentConfig",
    "classify_hyp_systems",
    "compute_N",
    "delta_invariant",
    "delta_lower_bound",
    "emptiness_criterion",
    "enumerate_candidates",
    "exceptional_section",
    "exceptional_set_bound",
    "f1_beta_zero_referral",
    "fz_admissible_set",
    "hyp_c1_f1_bound",
    "is_hyper_bitangent",
    "is_unibranch",
    "l_index",
    "local_intersection",
    "make_curve",
    "mn_point_invariance_check",
    "mult_at",
    "multiplicity_sequence",
    "n_count",
    "negative_section",
    "parse_germ_poly",
    "resolution_chain",
    "resultant_intersection_oracle",
    "strong_triangle_check",
    "verify_bound",
]

__version__ = "0.1.0"
