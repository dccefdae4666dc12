import random
from fractions import Fraction

import pytest

from liegeo.linalg import (
    det,
    frac,
    identity,
    inverse,
    mat,
    matmul,
    matvec,
    nullspace,
    primitive,
    rank,
    rref,
    solve,
    squarefree_decompose,
    vec,
)


def test_frac_parsing():
    assert frac("3/6") == Fraction(1, 2)
    assert frac(-2) == Fraction(-2)
    with pytest.raises(TypeError):
        frac(0.5)


def test_rref_is_canonical():
    a = mat([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    b = mat([[1, 2, 3], [0, 2, 2], [1, 3, 4]])
    assert rref(a) == rref(b)
    rows, pivots = rref(a)
    assert pivots == (0, 1)
    for r, p in zip(rows, pivots):
        assert r[p] == 1


def test_rref_span_invariance_random():
    rng = random.Random(7)
    for _ in range(50):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(m)] for _ in range(n)]
        red1, _ = rref(rows)
        # random row operations must not change the canonical form
        work = [list(r) for r in rows]
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                c = Fraction(rng.randint(-3, 3))
                work[i] = [a + c * b for a, b in zip(work[i], work[j])]
        red2, _ = rref(work)
        assert red1 == red2


def test_solve_and_inverse():
    a = mat([[2, 1], [1, 3]])
    x = solve(a, vec([5, 10]))
    assert matvec(a, x) == vec([5, 10])
    ainv = inverse(a)
    assert matmul(a, ainv) == identity(2)
    assert det(a) == 5
    assert solve(mat([[1, 1], [1, 1]]), vec([0, 1])) is None


def test_inverse_singular_raises():
    with pytest.raises(ValueError):
        inverse(mat([[1, 2], [2, 4]]))
    assert det(mat([[1, 2], [2, 4]])) == 0


def test_nullspace_orthogonality():
    a = mat([[1, 2, 3], [0, 1, 1]])
    ns = nullspace(a)
    assert len(ns) == 1
    for v in ns:
        assert matvec(a, v) == vec([0, 0])
    assert rank(a) == 2


def test_primitive():
    assert primitive(vec(["1/2", "-1/3", 0])) == vec([3, -2, 0])
    assert primitive(vec([-2, -4])) == vec([1, 2])


def test_squarefree_decompose():
    for q in [Fraction(4), Fraction(18), Fraction(1, 4), Fraction(12, 25), Fraction(7)]:
        s, r = squarefree_decompose(q)
        assert s * r * r == q
        assert r > 0 and s >= 1
    assert squarefree_decompose(Fraction(4))[0] == 1
    assert squarefree_decompose(Fraction(18))[0] == 2
