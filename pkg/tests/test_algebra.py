import random
from fractions import Fraction

import pytest

from liegeo.algebra import (
    LieAlgebra,
    Subalgebra,
    Subspace,
    abelianization_surjectivity_check,
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
)
from liegeo.filiform import dim6_example, heis3, irreg6_example, random_unimodular, standard_filiform
from liegeo.linalg import identity, is_zero_vec, rank, unit_vec, vadd, vec, zero_vec


def e(n, i):
    """1-based standard basis vector."""
    return unit_vec(n, i - 1)


def independent_jacobi_residuals(g):
    """Oracle: cyclic sums over all basis triples, written independently of
    verify_jacobi's loop."""
    bad = []
    n = g.dim
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                s = zero_vec(n)
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    s = vadd(s, g.bracket(g.basis_bracket(a, b), e(n, c)))
                if not is_zero_vec(s):
                    bad.append((i, j, k))
    return bad


def test_bracket_standard_filiform():
    g = standard_filiform(4)
    assert g.bracket(e(4, 1), e(4, 2)) == e(4, 3)
    assert g.bracket(e(4, 2), e(4, 1)) == tuple(-x for x in e(4, 3))
    v = vec([1, 2, 0, 0])
    assert g.bracket(v, v) == zero_vec(4)


def test_bracket_dim6_relation():
    g = dim6_example()
    assert g.bracket(e(6, 2), e(6, 3)) == tuple(-x for x in e(6, 6))


def test_bracket_dimension_mismatch():
    g = standard_filiform(4)
    with pytest.raises(ValueError):
        g.bracket(e(3, 1), e(4, 1))


def test_jacobi_passes_on_catalog():
    for g in (standard_filiform(5), dim6_example(), irreg6_example().algebra, heis3()):
        assert g.verify_jacobi().ok
        assert independent_jacobi_residuals(g) == []


def test_jacobi_broken_fixture():
    # L_4 with [X_2,X_3] = X_3 injected violates Jacobi at (1, 2, 3)
    g = LieAlgebra(
        4,
        {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {3: 1}},
        check=False,
    )
    rep = g.verify_jacobi()
    assert not rep.ok
    assert rep.triple == (1, 2, 3)
    assert independent_jacobi_residuals(g)


def test_jacobi_checked_at_construction():
    with pytest.raises(ValueError):
        LieAlgebra(4, {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {3: 1}})


def test_center_and_series():
    g = standard_filiform(4)
    assert center(g).rows == (e(4, 4),)
    dims = [s.dim for s in lower_central_series(g)]
    assert dims == [4, 2, 1, 0]
    nilp, cls = is_nilpotent(g)
    assert nilp and cls == 3
    for n in (3, 5, 6):
        gn = standard_filiform(n)
        assert center(gn).rows == (e(n, n),)
        assert is_nilpotent(gn) == (True, n - 1)


def test_derived_algebra():
    g = standard_filiform(4)
    assert derived_algebra(g) == Subspace(4, (e(4, 3), e(4, 4)))
    abelian = LieAlgebra(3, {})
    assert derived_algebra(abelian).dim == 0


def test_ad_rank():
    g = heis3()
    assert rank(g.ad(e(3, 1))) == 1


def test_is_ideal_and_abelian():
    g = standard_filiform(5)
    tail = Subspace(5, [e(5, i) for i in range(2, 6)])
    assert is_ideal(g, tail)
    assert is_abelian(g, tail)
    head = Subspace(5, [e(5, 1), e(5, 2)])
    assert not is_ideal(g, head)


def test_generated_subalgebra():
    g = standard_filiform(5)
    assert generated_subalgebra(g, [e(5, 1), e(5, 2)]).dim == 5
    assert generated_subalgebra(g, [vec([1, 2, 0, 0, "1/2"])]).dim == 1
    data = irreg6_example()
    ga = data.algebra
    # E_1, E_3, E_4 close up to a 5-dimensional subalgebra
    span = generated_subalgebra(ga, [data.basis[0], data.basis[2], data.basis[3]])
    expect = Subspace(6, [data.basis[i] for i in (0, 2, 3, 4, 5)])
    assert Subspace(6, span.rows) == expect


def test_generated_idempotent_monotone():
    rng = random.Random(3)
    g = dim6_example()
    for _ in range(10):
        vs = [vec([rng.randint(-2, 2) for _ in range(6)]) for _ in range(2)]
        h = generated_subalgebra(g, vs)
        again = generated_subalgebra(g, h.rows)
        assert Subspace(6, again.rows) == Subspace(6, h.rows)
        bigger = generated_subalgebra(g, vs + [e(6, 1)])
        assert bigger.contains_subspace(h)


def test_quotient_recovers_l3():
    g = standard_filiform(4)
    q, proj = quotient(g, Subspace(4, [e(4, 4)]))
    assert q.dim == 3
    assert q._table == heis3()._table
    with pytest.raises(ValueError):
        quotient(g, Subspace(4, [e(4, 1)]))  # not an ideal


def test_change_basis_roundtrip():
    # rows of inverse(m), read in the new coordinates, are the old basis
    from liegeo.linalg import inverse

    rng = random.Random(11)
    g = dim6_example()
    for _ in range(5):
        m = random_unimodular(rng, 6)
        g2 = change_basis(g, m)
        back = change_basis(g2, inverse(m))
        assert back._table == g._table


def test_change_basis_identity():
    g = standard_filiform(4)
    assert change_basis(g, identity(4))._table == g._table


def test_direct_sum_center():
    g = direct_sum(heis3(), LieAlgebra(1, {}))
    assert g.dim == 4
    assert center(g).dim == 2


def test_abelianization_surjectivity():
    g = standard_filiform(5)
    a = generated_subalgebra(g, [e(5, 1), e(5, 2)])
    assert abelianization_surjectivity_check(g, a)
    tail = Subalgebra(g, [e(5, i) for i in range(2, 6)])
    assert not abelianization_surjectivity_check(g, tail)
    g6 = dim6_example()
    sub = Subalgebra(g6, [e(6, 1)] + [e(6, i) for i in range(3, 7)])
    assert not abelianization_surjectivity_check(g6, sub)
    with pytest.raises(ValueError):
        from liegeo.filiform import so3

        abelianization_surjectivity_check(so3(), Subalgebra(so3(), [e(3, 1)]))


def test_subalgebra_closure_enforced():
    g = standard_filiform(4)
    with pytest.raises(ValueError):
        Subalgebra(g, (e(4, 1), e(4, 2)))  # [X1,X2] = X3 escapes


def test_subspace_canonical_equality_and_ops():
    s1 = Subspace(3, [vec([1, 1, 0]), vec([0, 0, 1])])
    s2 = Subspace(3, [vec([2, 2, 2]), vec([0, 0, -1])])
    assert s1 == s2 and hash(s1) == hash(s2)
    assert s1.contains(vec([3, 3, 7]))
    assert not s1.contains(vec([1, 0, 0]))
    inter = s1.intersect(Subspace(3, [vec([0, 0, 1]), vec([1, 0, 0])]))
    assert inter == Subspace(3, [vec([0, 0, 1])])
    assert s1.sum(Subspace(3, [vec([1, 0, 0])])).dim == 3
    assert s1.coordinates_of(vec([2, 2, 5])) == (Fraction(2), Fraction(5))
