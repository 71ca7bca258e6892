"""Deciding nonvanishing of Schubert class products on Grassmannians.

Three independent engines -- an exhaustive Littlewood-Richardson oracle, the
recursive Horn inequality criterion, and a randomized finite-field tangent
probe -- plus the auxiliary certificates: Harder-Narasimhan slope analyses,
kernel filtrations, width-bounded saturation checks, and finite-field point
counts of zero-dimensional problems.
"""

from .core import (
    InequalityLHS,
    Partition,
    ProblemTuple,
    RectangleOverflow,
    SchubertIndex,
    all_indices,
    codim,
    compose_positions,
    dim_difference_identity,
    dual_index,
    dual_problem,
    expected_dim,
    horn_lhs,
    index_to_partition,
    parse_index,
    parse_partition,
    parse_problem,
    partition_to_index,
)
from .lr import (
    CohomClass,
    LRCountRequest,
    RectangleMismatch,
    WidthOverflow,
    intersection_number,
    is_nonzero_product,
    lr_coefficient,
    product,
    saturation_check,
    schubert_class,
    unit,
)
from .horn import (
    DepthExceeded,
    HornVerdict,
    NonvanishingTable,
    build_table,
    enumerate_inequalities,
    horn_decide,
)
from .probe import (
    CERTIFIED_NONZERO,
    INCONCLUSIVE,
    FiltrationCertificate,
    FlagBasis,
    GenericityFailure,
    HomSpace,
    PrimeField,
    Subspace,
    build_filtration,
    certify_nonzero,
    generic_kernel_element,
    hom_space,
    induced_flags,
    random_flag,
    random_flags,
    schubert_position,
    verify_filtration,
)
from .parabolic import (
    CandidatesExhausted,
    HNCertificate,
    ParabolicData,
    PointCheckFailed,
    SemistableVerdict,
    SlopeReport,
    hn_certificate,
    is_semistable,
    slope,
    weights_from_problem,
)
from .pointcount import (
    EnumeratedGrassmannian,
    SizeExceeded,
    count_solutions,
    enumerate_grassmannian,
    sample_counts,
)

__all__ = [name for name in dir() if not name.startswith("_")]
