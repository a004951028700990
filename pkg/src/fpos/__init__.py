"""Exact arithmetic for relative complete intersections in projective bundles.

Given a rank-r, degree-d vector bundle on a smooth curve and c relative
hypersurfaces of fibrewise degrees k_i twisted by base divisors of degrees
y_i, this package computes the numerical invariants of their intersection
with exact rational arithmetic, decides slope positivity of the tautological
sheaf and its powers, locates the class of X in the nef / positivity /
pseudoeffective cone chain, and performs the degree-of-contact arithmetic
behind Chow-stability statements.  Every closed-form formula has an
independent oracle and the randomized sweep cross-checks them all.
"""

from .chowring import (
    AmbientData,
    CompleteIntersectionSpec,
    HomogeneousClass,
    class_of_ci,
    degree,
    fiber_class,
    hyperplane_class,
    multiply,
    unit_class,
    zero_class,
)
from .cones import (
    ConeChainReport,
    ConeSpec,
    HNData,
    b_cone,
    cone_chain_report,
    in_cone,
    membership_equivalence_check,
    nef_cone,
    pseff_cone,
    virtual_slopes,
)
from .errors import InconsistencyError
from .instances import Instance, load_instance, parse_instance
from .positivity import (
    DegenerateMarginError,
    ExactPolynomial,
    PositivityMargin,
    TheoremReport,
    asymptotic_classification,
    asymptotic_threshold,
    canonical_class,
    f_positive_at,
    fiber_degree,
    margin_polynomial,
    margin_twisted,
    slope_condition,
    slope_inequality_check,
    top_self_intersection,
    verify_theorem,
)
from .pushforward import (
    SubsetTerm,
    binom0,
    deg_pushforward,
    deg_sym,
    hilbert_rank_oracle,
    rank_fiber,
    subset_terms,
)
from .stability import (
    ContactDatum,
    InstabilityReport,
    PropagationReport,
    StabilityVerdict,
    WeightedFiltration,
    bezout_contact,
    hm_bound,
    hm_slope,
    instability_report,
    is_semistable,
    propagation_check,
)
from .sweep import SweepReport, check_instance, run_sweep

__version__ = "0.1.0"
