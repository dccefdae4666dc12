"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.  Everything
here is pure and exact; no floats enter.  Row reduction uses plain Gaussian
elimination with leading-1 normalization, which is fast enough for the
dimensions this package works at (n <= 12 or so).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

F0 = Fraction(0)
F1 = Fraction(1)

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[tuple[Fraction, ...], ...]


def frac(x) -> Fraction:
    """Coerce ints, strings like '-3/7', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("refusing to coerce float to exact rational: %r" % (x,))
    return Fraction(x)


def vec(entries) -> Vector:
    return tuple(frac(x) for x in entries)


def mat(rows) -> Matrix:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vector:
    return (F0,) * n


def unit_vec(n: int, i: int) -> Vector:
    """Standard basis vector, 0-indexed."""
    return tuple(F1 if k == i else F0 for k in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit_vec(n, i) for i in range(n))


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def vadd(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> Vector:
    if c == 0:
        return zero_vec(len(v))
    return tuple(c * a for a in v)


def vdot(u, v) -> Fraction:
    s = F0
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def matvec(m, v) -> Vector:
    return tuple(vdot(row, v) for row in m)


def matmul(a, b) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(vdot(ra, cb) for cb in bt) for ra in a)


def transpose(m) -> Matrix:
    return tuple(zip(*m)) if m else ()


def rref(rows):
    """Reduced row echelon form with leading 1s.

    Returns (rows, pivots) with zero rows dropped; the result is the canonical
    representative of the row space, so equality of outputs is equality of
    spans.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    if nrows == 0:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        if inv != 1:
            work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(m) -> int:
    return len(rref(m)[0])


def nullspace(m, ncols=None):
    """Canonical basis of the right kernel {v : m v = 0}, as rows."""
    if not m:
        if ncols is None:
            raise ValueError("nullspace of empty matrix needs ncols")
        return identity(ncols)
    n = len(m[0])
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [F0] * n
        v[free] = F1
        for r, p in enumerate(pivots):
            v[p] = -red[r][free]
        basis.append(tuple(v))
    return tuple(basis)


def solve(a, b):
    """Solve a x = b; returns one solution or None if inconsistent.

    Free variables, if any, are set to zero (deterministic particular
    solution).
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug)
    x = [F0] * n
    for r, p in enumerate(pivots):
        if p == n:
            return None  # a pivot in the constant column: inconsistent
        x[p] = red[r][n]
    return tuple(x)


def inverse(m) -> Matrix:
    n = len(m)
    aug = [list(row) + list(unit_vec(n, i)) for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if len(red) < n or any(p != i for i, p in enumerate(pivots[:n])):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def det(m) -> Fraction:
    n = len(m)
    work = [list(r) for r in m]
    d = F1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            return F0
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            d = -d
        d *= work[c][c]
        inv = 1 / work[c][c]
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return d


def primitive(v) -> Vector:
    """Scale a nonzero rational vector to coprime integers, first nonzero > 0."""
    if is_zero_vec(v):
        return tuple(v)
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(Fraction(x) for x in ints)


def squarefree_decompose(q: Fraction):
    """Write positive rational q as s * r**2 with s a squarefree-ish integer.

    Factoring uses trial division with a modest bound; an unfactored large
    cofactor is left in s (still exact, just possibly not fully squarefree).
    """
    if q <= 0:
        raise ValueError("expected positive rational")
    p, d = q.numerator, q.denominator

    def int_sf(m):
        s, r = 1, 1
        f = 2
        while f * f <= m and f <= 100000:
            if m % f == 0:
                e = 0
                while m % f == 0:
                    m //= f
                    e += 1
                r *= f ** (e // 2)
                if e % 2:
                    s *= f
            f += 1 if f == 2 else 2
        if m > 1:
            root = isqrt(m)
            if root * root == m:
                r *= root
            else:
                s *= m
        return s, r

    sp, rp = int_sf(p)
    sd, rd = int_sf(d)
    # q = (sp/sd) * (rp/rd)^2 = (sp*sd) * (rp/(rd*sd))^2
    return sp * sd, Fraction(rp, rd * sd)


def to_float_matrix(m):
    import numpy as np

    return np.array([[float(x) for x in row] for row in m], dtype=float)


def to_float_vector(v):
    import numpy as np

    return np.array([float(x) for x in v], dtype=float)
