"""The codimension-two construction and the subalgebra search.

The standard filiform algebra carries an inner product with a codimension-two
totally geodesic subalgebra; the search layer rediscovers it from scratch and
audits the half-dimension bounds along the way.  Searches only ever accept
exactly verified subalgebras; empty results are evidence, not proofs.

Run:  python demos/05_codim2_and_search.py
"""

from liegeo import (
    Metric,
    MetricLieAlgebra,
    SearchBudget,
    audit_dimension_bounds,
    cd2f_construction,
    dim6_example,
    find_geodesic_numeric,
    is_invariant_complement,
    search_tg_subalgebras,
    sl2,
    standard_filiform,
    verify_found_subalgebra_properties,
)
from liegeo.sampling import random_spd_gram, rng_from


def main():
    n = 7
    c = cd2f_construction(n)
    print("codim-2 construction at n = %d:" % n)
    print("  E_2 =", c.basis[1])
    print("  h has dim", c.subalgebra.dim, "| complement invariant:",
          is_invariant_complement(c.mg, c.subalgebra))
    props = verify_found_subalgebra_properties(c.mg, c.subalgebra)
    print("  [Z1,Z2] central in h:", props.bracket_z1z2_central_in_h,
          "| closure meets h inside its centre:", props.closure_meets_h_inside_center)

    budget = SearchBudget(seed=11, max_candidates=2000)
    found = search_tg_subalgebras(c.mg, n - 2, budget)
    print("  search at k = n-2 rediscovers it:",
          any(h.rows == c.subalgebra.rows for h in found))

    audit = audit_dimension_bounds(
        MetricLieAlgebra(standard_filiform(6), Metric.standard(6)), budget
    )
    print("audit of L_6 standard:")
    print(audit.summary())

    # the rigid 6-dim fixture: nothing of dimension 3 shows up
    rng = rng_from(3)
    mg6 = MetricLieAlgebra(dim6_example(), random_spd_gram(rng, 6))
    empty = search_tg_subalgebras(mg6, 3, SearchBudget(seed=5, max_candidates=4000))
    print("rigid 6-dim fixture, random metric, k = 3:", len(empty), "found",
          "(evidence of absence, not a proof)")

    # numeric geodesic existence on a dense metric
    mg = MetricLieAlgebra(sl2(), random_spd_gram(rng, 3))
    ng = find_geodesic_numeric(mg, SearchBudget(seed=5))
    print("sl2 random metric: residual %.2e, converged %s, exact reconstruction %s"
          % (ng.residual, ng.converged, ng.exact_confirmed))


if __name__ == "__main__":
    main()
