"""liegeo: exact computations with metric Lie algebras.

Rational structure constants, exact Levi-Civita geometry, totally geodesic
subalgebra verdicts with reproducible witnesses, filiform normal forms, and a
deterministic (float-assisted, exactly re-verified) search layer.
"""

from .algebra import (
    InternalInvariantError,
    JacobiReport,
    LieAlgebra,
    Subalgebra,
    Subspace,
    abelianization_surjectivity_check,
    bracket,
    center,
    change_basis,
    derived_algebra,
    direct_sum,
    generated_subalgebra,
    is_abelian,
    is_ideal,
    is_nilpotent,
    lower_central_series,
    quotient,
    verify_jacobi,
)
from .geometry import (
    GeodesicReport,
    Metric,
    MetricLieAlgebra,
    TGReport,
    construct_geodesic_metric,
    geodesic_defect,
    gram_schmidt_adapted,
    inner,
    is_bi_invariant,
    is_geodesic,
    is_invariant_complement,
    is_totally_geodesic,
    killing_metric,
    levi_civita,
    orthogonal_complement,
    phi_map,
    project,
    psi_map,
)
from .filiform import (
    FourDimNormalForm,
    VergneBasis,
    cd2f_construction,
    dim6_example,
    filiform_LC,
    geodesic_cone_4d,
    has_maximal_nilpotency,
    heis3,
    heis6_2center,
    heis_condition_b,
    irreg6_example,
    is_filiform,
    is_standard_filiform,
    lc_rescaling_map,
    normalize_4d,
    regularity_verdict,
    sl2,
    so3,
    solv_exp,
    solv_rot,
    standard_filiform,
    tg_2d_subalgebras_4d,
    twisted_l4,
    vergne_basis,
)
from .search import (
    NumericGeodesic,
    SearchBudget,
    audit_dimension_bounds,
    find_geodesic_numeric,
    search_tg_subalgebras,
    verify_found_subalgebra_properties,
)
from .fileio import AlgebraFile, ParseError, Report, emit, parse, serialize_algebra

__version__ = "0.1.0"
