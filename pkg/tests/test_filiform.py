import random
from fractions import Fraction

import pytest

from liegeo.algebra import LieAlgebra, Subalgebra, Subspace, change_basis
from liegeo.filiform import (
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
    random_unimodular,
    regularity_verdict,
    so3,
    solv_exp,
    standard_filiform,
    tg_2d_subalgebras_4d,
    twisted_l4,
    vergne_basis,
    apply_linear_map,
)
from liegeo.geometry import Metric, MetricLieAlgebra, is_geodesic, is_totally_geodesic
from liegeo.linalg import identity, is_zero_vec, unit_vec, vec, vsub
from liegeo.sampling import random_spd_gram


def e(n, i):
    return unit_vec(n, i - 1)


def test_catalog_constructors():
    assert standard_filiform(3)._table == heis3()._table
    lc = filiform_LC((1, 1, 1))
    assert lc._table == standard_filiform(5)._table
    lc2 = filiform_LC((2, 3, 4))
    assert lc2.bracket(e(5, 1), e(5, 3)) == tuple(3 * x for x in e(5, 4))
    with pytest.raises(ValueError):
        filiform_LC((1, 0, 2))
    with pytest.raises(ValueError):
        standard_filiform(2)


def test_is_filiform():
    rep = is_filiform(standard_filiform(6))
    assert rep.ok and rep.witness == e(6, 1)
    assert not is_filiform(LieAlgebra(4, {})).ok
    rep6 = is_filiform(dim6_example())
    assert rep6.ok and rep6.witness == e(6, 1)
    assert not is_filiform(heis6_2center()).ok  # 2-step, dim 6
    with pytest.raises(ValueError):
        is_filiform(so3())


def test_is_filiform_survives_basis_changes():
    rng = random.Random(2)
    for g in (standard_filiform(5), dim6_example(), irreg6_example().algebra, twisted_l4()):
        for _ in range(10):
            g2 = change_basis(g, random_unimodular(rng, g.dim))
            assert is_filiform(g2).ok


def test_vergne_basis_standard_is_identity():
    for n in (3, 4, 5, 6, 7):
        vb = vergne_basis(standard_filiform(n))
        assert vb.vectors == identity(n)
        assert vb.alpha == 0 and vb.regular_for_this_basis


def test_vergne_basis_twisted_l4():
    vb = vergne_basis(twisted_l4())
    assert vb.vectors == (e(4, 1), vsub(e(4, 2), e(4, 1)), e(4, 3), e(4, 4))
    assert vb.alpha == 0


def test_vergne_basis_irreg6():
    vb = vergne_basis(irreg6_example().algebra)
    assert vb.alpha == 1
    assert not vb.regular_for_this_basis


def test_vergne_random_changes_exact():
    rng = random.Random(9)
    for g in (standard_filiform(6), dim6_example(), irreg6_example().algebra):
        for _ in range(5):
            g2 = change_basis(g, random_unimodular(rng, g.dim))
            vb = vergne_basis(g2)  # construction verifies all relations exactly
            if g.dim % 2 == 1:
                assert vb.alpha == 0


def test_has_maximal_nilpotency():
    g = standard_filiform(6)
    vb = vergne_basis(g)
    assert has_maximal_nilpotency(g, vb, e(6, 1))
    assert not has_maximal_nilpotency(g, vb, e(6, 2))
    data = irreg6_example()
    vb6 = vergne_basis(data.algebra)
    assert not has_maximal_nilpotency(data.algebra, vb6, vsub(e(6, 1), e(6, 2)))
    with pytest.raises(ValueError):
        has_maximal_nilpotency(standard_filiform(4), vergne_basis(standard_filiform(4)), e(4, 1))


def test_regularity_verdict():
    verdict, alpha, _ = regularity_verdict(twisted_l4())
    assert verdict == "regular" and alpha == 0
    verdict6, alpha6, tries = regularity_verdict(irreg6_example().algebra, attempts=5, seed=1)
    assert verdict6 == "irregular relative to computed basis"
    assert alpha6 == 1 and tries == 5


def test_lc_rescaling_map_values():
    phi = lc_rescaling_map((2, 3, 4))
    diag = [phi[i][i] for i in range(5)]
    assert diag == [1, 1, 2, Fraction(3, 2), Fraction(8, 3)]
    assert lc_rescaling_map((1, 1, 1)) == identity(5)


def test_lc_rescaling_preserves_tg():
    coeffs = (2, 3, 4)
    lc, ln = filiform_LC(coeffs), standard_filiform(5)
    phi = lc_rescaling_map(coeffs)
    mg_c = MetricLieAlgebra(lc, Metric.standard(5))
    mg_n = MetricLieAlgebra(ln, Metric.standard(5))
    h = Subalgebra(lc, (e(5, 2), e(5, 4)))
    assert is_totally_geodesic(mg_c, h).ok
    image = apply_linear_map(phi, h)
    him = Subalgebra(ln, image.rows)
    assert is_totally_geodesic(mg_n, him).ok
    assert Subspace(5, him.rows) == Subspace(5, (e(5, 2), e(5, 4)))


def test_cd2f_small_cases():
    c5 = cd2f_construction(5)
    assert c5.basis[1] == vec([0, 1, 0, 1, 0])  # E2 = X2 + X4
    assert c5.basis[2] == e(5, 3) and c5.basis[3] == e(5, 4)
    assert Subspace(5, c5.subalgebra.rows) == Subspace(
        5, [vsub(c5.basis[1], c5.basis[3]), c5.basis[2], c5.basis[4]]
    )
    c4 = cd2f_construction(4)
    assert Subspace(4, c4.subalgebra.rows) == Subspace(4, [e(4, 2), e(4, 4)])
    with pytest.raises(ValueError):
        cd2f_construction(2)


def test_cd2f_all_dims():
    for n in range(3, 13):
        c = cd2f_construction(n)  # verifies TG + ladder identity internally
        assert c.subalgebra.dim == n - 2
        for y in c.subalgebra.rows:
            assert is_zero_vec(c.mg.algebra.bracket(c.z2, y))


def test_dim6_and_irreg6_fixtures():
    g = dim6_example()
    assert g.verify_jacobi().ok
    data = irreg6_example()
    assert data.algebra.verify_jacobi().ok
    assert is_totally_geodesic(data.mg, data.subalgebra).ok
    # closure of the complement meets h in span(E5, E6), which is not central in h
    assert data.a_cap_h == Subspace(6, [e(6, 5), e(6, 6)])
    from liegeo.search import _center_of_subalgebra

    zh = _center_of_subalgebra(data.algebra, data.subalgebra)
    assert not zh.contains_subspace(data.a_cap_h)


def test_normalize_4d_standard():
    nf = normalize_4d(MetricLieAlgebra(standard_filiform(4), Metric.standard(4)))
    assert (nf.alpha, nf.beta, nf.gamma) == (1, 0, 1)
    assert nf.norms_sq == (1, 1, 1, 1)


def test_normalize_4d_scaled_metric():
    gram = [[1, 0, 0, 0], [0, 4, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    nf = normalize_4d(MetricLieAlgebra(standard_filiform(4), Metric(gram)))
    assert nf.gamma == 1  # unchanged
    assert nf.alpha == Fraction(1, 2)  # rescaled, still positive
    assert nf.alpha > 0 and nf.gamma > 0


def test_normalize_4d_beta_one():
    g = LieAlgebra(4, {(1, 2): {3: 1, 4: 1}, (1, 3): {4: 1}})
    nf = normalize_4d(MetricLieAlgebra(g, Metric.standard(4)))
    assert (nf.alpha, nf.beta, nf.gamma) == (1, 1, 1)
    assert tg_2d_subalgebras_4d(nf) == []


def test_normalize_4d_preconditions():
    with pytest.raises(ValueError):
        normalize_4d(MetricLieAlgebra(heis3(), Metric.standard(3)))
    with pytest.raises(ValueError):
        normalize_4d(MetricLieAlgebra(LieAlgebra(4, {}), Metric.standard(4)))


def test_cone_and_subalgebras():
    nf = normalize_4d(MetricLieAlgebra(standard_filiform(4), Metric.standard(4)))
    cone = geodesic_cone_4d(nf)
    # cone is y(x + z) = 0 for (alpha, beta, gamma) = (1, 0, 1)
    assert cone(1, 0, 5) and cone(2, 3, -2) and not cone(1, 1, 1)
    subs = tg_2d_subalgebras_4d(nf)
    expected = {
        Subspace(4, (e(4, 2), e(4, 4))),
        Subspace(4, (vsub(e(4, 2), e(4, 4)), e(4, 3))),
    }
    assert {Subspace(4, s.rows) for s in subs} == expected


def test_cone_agrees_with_exact_geodesic():
    rng = random.Random(77)
    mg = MetricLieAlgebra(standard_filiform(4), random_spd_gram(rng, 4))
    nf = normalize_4d(mg)
    cone = geodesic_cone_4d(nf)
    for _ in range(200):
        x, y, z = (rng.randint(-3, 3) for _ in range(3))
        if (x, y, z) == (0, 0, 0):
            x = 1
        assert cone(x, y, z) == is_geodesic(mg, nf.vector(x, y, z)).ok


def test_is_standard_filiform():
    for n in (3, 4, 5, 6):
        assert is_standard_filiform(standard_filiform(n))
    assert is_standard_filiform(twisted_l4())  # isomorphic to L_4
    assert not is_standard_filiform(dim6_example())
    assert not is_standard_filiform(irreg6_example().algebra)
    with pytest.raises(ValueError):
        is_standard_filiform(heis6_2center())  # not filiform


def test_heis_condition_b():
    assert heis_condition_b(heis3()).ok
    assert heis_condition_b(heis6_2center()).ok
    assert not heis_condition_b(standard_filiform(4)).ok  # 3-step
    with pytest.raises(ValueError):
        heis_condition_b(solv_exp())
