"""Seeded property sweeps for the structural invariants the package promises.

These are smaller, faster cousins of the verification-suite criteria; the
full sample counts live in liegeo.verification.
"""

import random

from liegeo.algebra import (
    Subalgebra,
    center,
    derived_algebra,
    generated_subalgebra,
    is_ideal,
    is_nilpotent,
    lower_central_series,
)
from liegeo.filiform import (
    dim6_example,
    heis3,
    heis6_2center,
    irreg6_example,
    sl2,
    so3,
    solv_exp,
    solv_rot,
    standard_filiform,
    subspace_has_max_nilpotency_element,
    twisted_l4,
    vergne_basis,
)
from liegeo.geometry import (
    MetricLieAlgebra,
    geodesic_defect,
    gram_schmidt_adapted,
    is_geodesic,
    is_invariant_complement,
    is_totally_geodesic,
    levi_civita,
    orthogonal_complement,
)
from liegeo.linalg import is_zero_vec, unit_vec, vsub
from liegeo.sampling import random_central_subspace, random_spd_gram, random_vector
from liegeo.search import SearchBudget, search_tg_subalgebras


CATALOG = [
    heis3(),
    standard_filiform(4),
    standard_filiform(5),
    standard_filiform(6),
    dim6_example(),
    heis6_2center(),
    twisted_l4(),
    so3(),
    sl2(),
    solv_rot(),
    solv_exp(),
]


def test_bracket_antisymmetry():
    rng = random.Random(1)
    for g in CATALOG:
        for _ in range(10):
            x, y = random_vector(rng, g.dim), random_vector(rng, g.dim)
            assert g.bracket(x, y) == tuple(-c for c in g.bracket(y, x))


def test_series_terms_are_nested_ideals():
    for g in CATALOG:
        series = lower_central_series(g)
        for prev, nxt in zip(series, series[1:]):
            assert prev.contains_subspace(nxt)
            assert is_ideal(g, nxt)


def test_no_proper_subalgebra_surjects_on_abelianization():
    rng = random.Random(2)
    for g in CATALOG:
        if not is_nilpotent(g)[0]:
            continue
        d = derived_algebra(g)
        for _ in range(15):
            k = rng.randint(1, g.dim - 1)
            vs = [random_vector(rng, g.dim, 2) for _ in range(k)]
            a = generated_subalgebra(g, vs)
            if a.dim == g.dim:
                continue  # not proper
            assert a.sum(d).dim < g.dim


def test_torsion_free_and_compat_sampled():
    rng = random.Random(3)
    for g in CATALOG[:6]:
        mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
        for _ in range(3):
            x, y, z = (random_vector(rng, g.dim, 2) for _ in range(3))
            assert vsub(levi_civita(mg, x, y), levi_civita(mg, y, x)) == g.bracket(x, y)
            assert mg.inner(levi_civita(mg, x, y), z) + mg.inner(y, levi_civita(mg, x, z)) == 0


def test_invariant_complement_implies_tg():
    rng = random.Random(4)
    checked = 0
    for g in CATALOG:
        for _ in range(8):
            mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
            z = center(g)
            if z.dim == 0:
                continue
            h = Subalgebra(g, random_central_subspace(rng, z, 1).rows, check=False)
            if is_invariant_complement(mg, h):
                assert is_totally_geodesic(mg, h).ok
                checked += 1
    assert checked > 0


def test_central_and_perp_derived_are_tg():
    rng = random.Random(5)
    for g in CATALOG:
        z = center(g)
        for _ in range(5):
            mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
            if z.dim:
                hz = Subalgebra(g, z.rows, check=False)
                assert is_totally_geodesic(mg, hz).ok
            comp = orthogonal_complement(mg, derived_algebra(g))
            if comp.dim:
                hv = Subalgebra(g, (comp.rows[0],), check=False)
                assert is_totally_geodesic(mg, hv).ok


def test_two_step_fixtures_geodesics_are_perp_or_central():
    # on the Heisenberg algebra and the 2-dim-centre 6-dim fixture, every
    # geodesic under sampled metrics is orthogonal to the derived algebra or
    # lies in the centre
    rng = random.Random(6)
    for g in (heis3(), heis6_2center()):
        d = derived_algebra(g)
        z = center(g)
        for _ in range(50):
            mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
            for _ in range(40):
                y = random_vector(rng, g.dim, 2)
                if not is_geodesic(mg, y).ok:
                    continue
                perp = all(mg.inner(y, r) == 0 for r in d.rows)
                assert perp or z.contains(y)
            # and structured probes: basis vectors and pair sums
            for i in range(g.dim):
                y = unit_vec(g.dim, i)
                if is_geodesic(mg, y).ok:
                    perp = all(mg.inner(y, r) == 0 for r in d.rows)
                    assert perp or z.contains(y)


def test_defect_vanishes_iff_geodesic():
    rng = random.Random(7)
    for g in CATALOG[:7]:
        mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
        for _ in range(10):
            y = random_vector(rng, g.dim, 2)
            assert is_geodesic(mg, y).ok == is_zero_vec(geodesic_defect(mg, y))


def test_regular_entries_keep_first_direction_in_complement():
    # for regular filiform entries under random metrics, every subalgebra of
    # dimension >= 2 the search finds is orthogonal to the first adapted
    # basis direction (1-dim geodesic lines may contain it)
    rng = random.Random(8)
    for g in (standard_filiform(4), standard_filiform(5), twisted_l4()):
        vb = vergne_basis(g)
        assert vb.alpha == 0
        for t in range(3):
            mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
            adapted = gram_schmidt_adapted(mg, vb.vectors)
            e1 = adapted[0]
            for k in range(2, g.dim // 2 + 1):
                for h in search_tg_subalgebras(mg, k, SearchBudget(seed=t, max_candidates=300)):
                    for row in h.rows:
                        assert mg.inner(e1, row) == 0


def test_found_subalgebras_avoid_max_nilpotency_elements():
    rng = random.Random(9)
    fixtures = [standard_filiform(5), standard_filiform(6), dim6_example(), irreg6_example().algebra]
    for g in fixtures:
        for t in range(2):
            mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
            for k in range(2, g.dim // 2 + 1):
                for h in search_tg_subalgebras(mg, k, SearchBudget(seed=t, max_candidates=300)):
                    assert not subspace_has_max_nilpotency_element(g, h)


def test_search_results_always_pass_exact_check():
    rng = random.Random(10)
    for g in (standard_filiform(5), dim6_example()):
        mg = MetricLieAlgebra(g, random_spd_gram(rng, g.dim))
        for k in (1, 2):
            for h in search_tg_subalgebras(mg, k, SearchBudget(seed=11, max_candidates=300)):
                assert h.dim == k
                assert is_totally_geodesic(mg, h).ok
