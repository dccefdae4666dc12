"""Filiform nilpotent Lie algebras: witnesses, normal forms, and the catalog.

A nilpotent algebra of dimension n is filiform when some X has
ad(X)^(n-2) != 0.  Such algebras admit an adapted basis with
[X_1, X_i] = X_{i+1}, degree-graded brackets away from the antidiagonal, and
a single antidiagonal constant alpha ([X_i, X_{n-i+1}] = (-1)^i alpha X_n);
`vergne_basis` constructs one and verifies every relation exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (
    InternalInvariantError,
    LieAlgebra,
    Subalgebra,
    Subspace,
    center,
    change_basis,
    derived_algebra,
    generated_subalgebra,
    is_abelian,
    is_nilpotent,
)
from .geometry import (
    Metric,
    MetricLieAlgebra,
    is_totally_geodesic,
    orthogonal_complement,
)
from .linalg import (
    F0,
    F1,
    frac,
    identity,
    inverse,
    is_zero_vec,
    mat,
    matmul,
    matvec,
    primitive,
    rank,
    squarefree_decompose,
    transpose,
    unit_vec,
    vadd,
    vscale,
    vsub,
    zero_vec,
)

# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def standard_filiform(n: int) -> LieAlgebra:
    """L_n: the only nonzero relations are [X_1, X_i] = X_{i+1}."""
    if n < 3:
        raise ValueError("standard filiform algebras start at dimension 3")
    brackets = {(1, i): {i + 1: F1} for i in range(2, n)}
    return LieAlgebra(n, brackets, name="L%d" % n, check=False)


def filiform_LC(coeffs) -> LieAlgebra:
    """L_C: [X_1, X_i] = c_i X_{i+1} for a list of nonzero c_2..c_{n-1}."""
    cs = [frac(c) for c in coeffs]
    if any(c == 0 for c in cs):
        raise ValueError("all rescaling coefficients must be nonzero")
    n = len(cs) + 2
    if n < 3:
        raise ValueError("need at least one coefficient")
    brackets = {(1, i): {i + 1: cs[i - 2]} for i in range(2, n)}
    return LieAlgebra(n, brackets, name="LC", check=False)


def heis3() -> LieAlgebra:
    """Heisenberg algebra: [X_1, X_2] = X_3 (equals L_3)."""
    return LieAlgebra(3, {(1, 2): {3: F1}}, name="heis3", check=False)


def dim6_example() -> LieAlgebra:
    """6-dim filiform with [X_1,X_i] = X_{i+1} (i=2..5) and [X_2,X_3] = -X_6."""
    brackets = {(1, i): {i + 1: F1} for i in range(2, 6)}
    brackets[(2, 3)] = {6: -F1}
    return LieAlgebra(6, brackets, name="dim6")


def heis6_2center() -> LieAlgebra:
    """2-step algebra with 2-dim centre: [X_1,X_2]=-[X_3,X_4]=Y_1,
    [X_1,X_3]=[X_2,X_4]=Y_2 on basis (X_1..X_4, Y_1, Y_2)."""
    brackets = {
        (1, 2): {5: F1},
        (3, 4): {5: -F1},
        (1, 3): {6: F1},
        (2, 4): {6: F1},
    }
    return LieAlgebra(6, brackets, name="heis6_2center")


def so3() -> LieAlgebra:
    brackets = {(1, 2): {3: F1}, (2, 3): {1: F1}, (1, 3): {2: -F1}}
    return LieAlgebra(3, brackets, name="so3")


def sl2() -> LieAlgebra:
    """Basis (E, F, H): [E,F] = H, [H,E] = 2E, [H,F] = -2F."""
    brackets = {(1, 2): {3: F1}, (1, 3): {1: -2}, (2, 3): {2: 2}}
    return LieAlgebra(3, brackets, name="sl2")


def solv_rot() -> LieAlgebra:
    """Solvable [X,Y] = Z, [X,Z] = -Y on basis (X, Y, Z)."""
    brackets = {(1, 2): {3: F1}, (1, 3): {2: -F1}}
    return LieAlgebra(3, brackets, name="solv_rot")


def solv_exp() -> LieAlgebra:
    """Solvable unimodular [X,Y] = Y, [X,Z] = -Z on basis (X, Y, Z)."""
    brackets = {(1, 2): {2: F1}, (1, 3): {3: -F1}}
    return LieAlgebra(3, brackets, name="solv_exp")


def twisted_l4() -> LieAlgebra:
    """4-dim filiform presented with a nonzero antidiagonal constant:
    [X_1,X_2] = X_3, [X_1,X_3] = X_4, [X_2,X_3] = X_4.  Isomorphic to L_4."""
    brackets = {(1, 2): {3: F1}, (1, 3): {4: F1}, (2, 3): {4: F1}}
    return LieAlgebra(4, brackets, name="twisted_l4")


@dataclass(frozen=True)
class Irreg6Data:
    algebra: LieAlgebra
    basis: tuple  # E_1..E_6 in X-coordinates
    subalgebra: Subalgebra
    metric: Metric
    mg: MetricLieAlgebra
    complement_invariant: bool
    a_cap_h: Subspace  # intersection of <<h-perp>> with h


def irreg6_example() -> Irreg6Data:
    """The irregular 6-dim filiform fixture with its adapted metric.

    Relations [X_1,X_i] = X_{i+1}, [X_2,X_5] = X_6, [X_3,X_4] = -X_6; the
    inner product declares E_1 = X_1 - X_2, E_i = X_i orthonormal, and
    h = span(E_2, E_5, E_6) is totally geodesic of codimension 3.  The
    closure a of h-perp meets h outside the centre of h.
    """
    brackets = {(1, i): {i + 1: F1} for i in range(2, 6)}
    brackets[(2, 5)] = {6: F1}
    brackets[(3, 4)] = {6: -F1}
    g = LieAlgebra(6, brackets, name="irreg6")
    e = [list(unit_vec(6, i)) for i in range(6)]
    e[0][1] = -F1  # E_1 = X_1 - X_2
    basis = mat(e)
    gram = inverse(matmul(transpose(basis), basis))
    metric = Metric(gram)
    mg = MetricLieAlgebra(g, metric)
    h = Subalgebra(g, (basis[1], basis[4], basis[5]))
    report = is_totally_geodesic(mg, h)
    if not report.ok:
        raise InternalInvariantError("irreg6 subalgebra failed the exact TG check")
    comp = orthogonal_complement(mg, h)
    a = generated_subalgebra(g, comp.rows)
    a_cap_h = a.intersect(h)
    return Irreg6Data(g, basis, h, metric, mg, report.complement_invariant, a_cap_h)


CATALOG_FILIFORM = (
    "L3",
    "L4",
    "L5",
    "L6",
    "L7",
    "LC(2,3,4)",
    "LC(1,1/2,3,2)",
    "dim6",
    "irreg6",
    "twisted_l4",
)


def catalog_filiform_entries():
    """The filiform fixtures exercised by the verification suite."""
    entries = []
    for n in range(3, 8):
        entries.append(standard_filiform(n))
    entries.append(filiform_LC((2, 3, 4)))
    entries.append(filiform_LC((1, Fraction(1, 2), 3, 2)))
    entries.append(dim6_example())
    entries.append(irreg6_example().algebra)
    entries.append(twisted_l4())
    return entries


# ---------------------------------------------------------------------------
# maximal nilpotency witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiliformReport:
    ok: bool
    witness: Optional[tuple] = None


def _ad_power_nonzero(g: LieAlgebra, x, power: int):
    """ad(x)^power, or None as soon as a power vanishes."""
    a = g.ad(x)
    m = a
    if all(is_zero_vec(r) for r in m):
        return None if power >= 1 else m
    for _ in range(power - 1):
        m = matmul(a, m)
        if all(is_zero_vec(r) for r in m):
            return None
    return m


def _witness_candidates(n: int):
    """Deterministic sweep that provably meets the maximal-nilpotency locus.

    Basis vectors first, then lines X_1 + t X_j, then moment-curve vectors
    (1, t, t^2, ...): the bad locus lies in a union of at most two
    hyperplanes, and a nonzero polynomial of degree <= 2n-2 cannot vanish at
    2n points of the moment curve.
    """
    for i in range(n):
        yield unit_vec(n, i)
    for j in range(1, n):
        for t in range(1, n + 1):
            v = list(unit_vec(n, 0))
            v[j] = Fraction(t)
            yield tuple(v)
    for t in range(1, 2 * n + 1):
        yield tuple(Fraction(t) ** k for k in range(n))


def is_filiform(g: LieAlgebra) -> FiliformReport:
    """Whether some X has ad(X)^(n-2) != 0; returns the first witness found."""
    nilp, _ = is_nilpotent(g)
    if not nilp:
        raise ValueError("filiform test requires a nilpotent algebra")
    n = g.dim
    if n < 2:
        return FiliformReport(False)
    power = n - 2
    if power == 0:
        return FiliformReport(True, unit_vec(n, 0))
    for x in _witness_candidates(n):
        if _ad_power_nonzero(g, x, power) is not None:
            return FiliformReport(True, x)
    return FiliformReport(False)


# ---------------------------------------------------------------------------
# adapted normal-form basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VergneBasis:
    """Adapted basis with [X_1,X_i] = X_{i+1} and graded brackets.

    ``vectors`` are the basis elements in the algebra's original coordinates;
    ``alpha`` is the antidiagonal constant; ``regular_for_this_basis`` records
    alpha == 0.  ``coords`` maps original coordinates to basis coordinates.
    """

    algebra: LieAlgebra
    vectors: tuple
    alpha: Fraction
    regular_for_this_basis: bool
    _coord_matrix: tuple

    def coordinates_of(self, v):
        return matvec(self._coord_matrix, v)


def vergne_basis(g: LieAlgebra) -> VergneBasis:
    """Construct and exactly verify an adapted filiform basis.

    Chain construction: X_1 a maximal-nilpotency witness, X_2 a basis vector
    with ad(X_1)^(n-2) X_2 != 0, X_{i+1} = [X_1, X_i]; then X_2 is corrected
    by a multiple of X_1 so that [X_2, X_3] has degree >= 5.  Every normal
    form relation is then checked exactly; a failure is an internal error.
    """
    rep = is_filiform(g)
    if not rep.ok:
        raise ValueError("algebra is not filiform")
    n = g.dim
    x1 = rep.witness
    if n == 2:
        vectors = (x1, unit_vec(n, 0) if x1 != unit_vec(n, 0) else unit_vec(n, 1))
        return _finish_vergne(g, list(vectors))
    p = _ad_power_nonzero(g, x1, n - 2)
    x2 = None
    cols = transpose(p)
    for j in range(n):
        if not is_zero_vec(cols[j]):
            x2 = unit_vec(n, j)
            break
    if x2 is None:
        raise InternalInvariantError("witness matrix has no nonzero column")

    def build_chain(second):
        chain = [x1, second]
        for _ in range(n - 2):
            chain.append(g.bracket(x1, chain[-1]))
        return chain

    chain = build_chain(x2)
    if n >= 4:
        coord = _coords_matrix(chain)
        c = matvec(coord, g.bracket(chain[1], chain[2]))
        b = c[3]  # coefficient of X_4 in [X_2, X_3]
        if b:
            chain = build_chain(vsub(x2, vscale(b, x1)))
    return _finish_vergne(g, chain)


def _coords_matrix(rows):
    try:
        return transpose(inverse(mat(rows)))
    except ValueError:
        raise InternalInvariantError("adapted chain failed to be a basis") from None


def _finish_vergne(g: LieAlgebra, chain) -> VergneBasis:
    n = g.dim
    coord = _coords_matrix(chain)
    coords = lambda v: matvec(coord, v)
    alpha = F0
    if n % 2 == 0 and n >= 4:
        alpha = coords(g.bracket(chain[1], chain[n - 2]))[n - 1]
    # exact verification of every normal-form relation
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = coords(g.bracket(chain[i - 1], chain[j - 1]))
            if i == 1:
                expected = unit_vec(n, j) if j < n else zero_vec(n)
                if c != expected:
                    raise InternalInvariantError(
                        "chain relation [X_1, X_%d] failed" % j
                    )
            elif i + j == n + 1:
                expected = vscale((-F1) ** i * alpha, unit_vec(n, n - 1))
                if c != expected:
                    raise InternalInvariantError(
                        "antidiagonal relation failed at (%d, %d)" % (i, j)
                    )
            else:
                cutoff = min(i + j - 1, n)
                if any(c[k] for k in range(cutoff)):
                    raise InternalInvariantError(
                        "bracket [X_%d, X_%d] has degree < %d" % (i, j, i + j)
                    )
    return VergneBasis(g, tuple(chain), alpha, alpha == 0, coord)


def has_maximal_nilpotency(g: LieAlgebra, vb: VergneBasis, x) -> bool:
    """a_1 != 0 and alpha a_2 != -a_1 in adapted coordinates (dim >= 5).

    Cross-checked against rank(ad(x)^(n-2)) == 1; disagreement is an
    internal error.
    """
    n = g.dim
    if n < 5:
        raise ValueError("the coefficient criterion requires dimension >= 5")
    a = vb.coordinates_of(x)
    verdict = a[0] != 0 and vb.alpha * a[1] != -a[0]
    p = _ad_power_nonzero(g, x, n - 2)
    by_rank = p is not None and rank(p) == 1
    if p is not None and rank(p) > 1:
        raise InternalInvariantError("ad power rank exceeds 1 in a filiform algebra")
    if verdict != by_rank:
        raise InternalInvariantError("coefficient criterion disagrees with rank check")
    return verdict


def subspace_has_max_nilpotency_element(g: LieAlgebra, w: Subspace) -> bool:
    """Sweep-decide whether a subspace meets the maximal-nilpotency locus.

    Same moment-curve argument as the global witness search, applied inside
    the subspace coordinates.
    """
    n = g.dim
    k = w.dim
    if k == 0:
        return False
    power = max(n - 2, 1)
    for cand in _witness_candidates(k):
        v = zero_vec(n)
        for c, row in zip(cand, w.rows):
            if c:
                v = vadd(v, vscale(c, row))
        if not is_zero_vec(v) and _ad_power_nonzero(g, v, power) is not None:
            return True
    return False


def regularity_verdict(g: LieAlgebra, attempts: int = 25, seed: int = 0):
    """('regular' | 'irregular relative to computed basis', alpha, tries).

    alpha == 0 in some basis means regular; for even dimension >= 6 with a
    nonzero computed alpha only a bounded seeded basis-change retry is
    attempted (no general decision procedure is available).
    """
    vb = vergne_basis(g)
    if vb.alpha == 0:
        return "regular", vb.alpha, 0
    rng = random.Random(seed)
    for t in range(1, attempts + 1):
        m = random_unimodular(rng, g.dim)
        vb2 = vergne_basis(change_basis(g, m))
        if vb2.alpha == 0:
            return "regular", vb2.alpha, t
    return "irregular relative to computed basis", vb.alpha, attempts


def random_unimodular(rng: random.Random, n: int, ops: Optional[int] = None):
    """Random product of elementary row operations (det +-1, small entries)."""
    m = [list(r) for r in identity(n)]
    for _ in range(ops if ops is not None else 2 * n):
        kind = rng.random()
        if kind < 0.75:
            i, j = rng.sample(range(n), 2)
            c = Fraction(rng.randint(-2, 2), rng.choice((1, 1, 2)))
            if c:
                m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif kind < 0.9:
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
        else:
            i = rng.randrange(n)
            m[i] = [-a for a in m[i]]
    return mat(m)


# ---------------------------------------------------------------------------
# rescaling map L_C -> L_n
# ---------------------------------------------------------------------------


def lc_rescaling_map(coeffs):
    """Diagonal map sending (L_C, standard) TG subalgebras to (L_n, standard).

    f_2 = 1 and f_i f_{i+1} = c_i; the map fixes X_1 and scales X_i by f_i.
    Returns the diagonal matrix (rows = images of basis vectors).
    """
    cs = [frac(c) for c in coeffs]
    if any(c == 0 for c in cs):
        raise ValueError("all rescaling coefficients must be nonzero")
    n = len(cs) + 2
    f = [None, F1, F1]  # 1-based; f[1] unused sentinel for X_1, f[2] = 1
    for i in range(2, n):
        f.append(cs[i - 2] / f[i])
    diag = [F1] + f[2:]
    return tuple(
        tuple(diag[i] if i == j else F0 for j in range(n)) for i in range(n)
    )


def apply_linear_map(m, subspace: Subspace) -> Subspace:
    return Subspace(len(m), [matvec(m, r) for r in subspace.rows])


# ---------------------------------------------------------------------------
# codimension-two totally geodesic construction on L_n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Codim2Construction:
    basis: tuple  # E_1..E_n in X-coordinates
    subalgebra: Subalgebra
    metric: Metric
    mg: MetricLieAlgebra
    z1: tuple
    z2: tuple


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    out = 1
    for t in range(b):
        out = out * (a - t) // (t + 1)
    return out


def cd2f_construction(n: int) -> Codim2Construction:
    """Inner product on L_n with a codimension-two totally geodesic subalgebra.

    E_1 = X_1, E_n = X_n, E_i = sum_j C(n-1-i-j, j) X_{i+2j}; the metric
    declares E orthonormal.  Then [E_1, E_i] = E_{i+1} + E_{i+3} + ... and
    h = span(Y_2,...,Y_{n-2}, Y_n) with Y_i = E_i or E_i - E_{n-1}
    (according to the parity of n - i) is totally geodesic.
    """
    if n < 3:
        raise ValueError("construction requires dimension >= 3")
    g = standard_filiform(n)
    e = [None] * (n + 1)  # 1-based
    e[1] = unit_vec(n, 0)
    e[n] = unit_vec(n, n - 1)
    for i in range(2, n):
        v = [F0] * n
        for j in range((n - 1 - i) // 2 + 1):
            v[i + 2 * j - 1] += Fraction(_binom(n - 1 - i - j, j))
        e[i] = tuple(v)
    basis = tuple(e[1:])
    gram = inverse(matmul(transpose(basis), basis))
    metric = Metric(gram)
    mg = MetricLieAlgebra(g, metric)

    # bracket identity, verified exactly
    for i in range(2, n + 1):
        expected = zero_vec(n)
        for m in range(i + 1, n + 1, 2):
            expected = vadd(expected, e[m])
        if g.bracket(e[1], e[i]) != expected:
            raise InternalInvariantError("ladder bracket identity failed at i=%d" % i)

    indices = list(range(2, n - 1)) + [n]
    rows = []
    for i in indices:
        rows.append(e[i] if (n - i) % 2 == 0 else vsub(e[i], e[n - 1]))
    h = Subalgebra(g, rows)
    if h.dim != n - 2:
        raise InternalInvariantError("constructed subalgebra has wrong dimension")
    report = is_totally_geodesic(mg, h)
    if not report.ok:
        raise InternalInvariantError("construction failed the exact TG check")
    z2 = zero_vec(n)
    for j in range(1, n - 1, 2):
        z2 = vadd(z2, e[n - j])
    return Codim2Construction(basis, h, metric, mg, e[1], z2)


# ---------------------------------------------------------------------------
# 4-dimensional normal form and its geodesic cone
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FourDimNormalForm:
    """Orthogonal normal-form basis for a 4-dim nilpotent metric algebra.

    The basis (B_1..B_4) is pairwise Gram-orthogonal with recorded squared
    norms; each norm is reduced to its squarefree integer part, so the basis
    has equal norms whenever that is rationally possible.  The constants fold
    the norms so that the orthonormal-frame formulas hold verbatim in this
    basis: the geodesic cone in span(B_2,B_3,B_4) is
    alpha*xy + beta*xz + gamma*yz = 0 and the 2-dim totally geodesic
    subalgebras (when beta = 0) are span(B_2,B_4) and
    span(gamma B_2 - alpha B_4, B_3).
    """

    mg: MetricLieAlgebra
    basis: tuple
    norms_sq: tuple
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def cone_value(self, x, y, z) -> Fraction:
        x, y, z = frac(x), frac(y), frac(z)
        return self.alpha * x * y + self.beta * x * z + self.gamma * y * z

    def vector(self, x, y, z):
        out = zero_vec(4)
        for c, b in zip((frac(x), frac(y), frac(z)), self.basis[1:]):
            if c:
                out = vadd(out, vscale(c, b))
        return out


def _squarefree_rescale(v, norm_sq):
    s, r = squarefree_decompose(norm_sq)
    return vscale(1 / r, v), Fraction(s)


def normalize_4d(mg: MetricLieAlgebra) -> FourDimNormalForm:
    """Normal form [B_1,B_2] = a B_3 + b B_4, [B_1,B_3] = c B_4 with folded
    constants alpha, gamma > 0; all relations verified exactly."""
    g = mg.algebra
    if g.dim != 4:
        raise ValueError("normal form requires dimension 4")
    nilp, _ = is_nilpotent(g)
    if not nilp:
        raise ValueError("normal form requires a nilpotent algebra")
    d = derived_algebra(g)
    if d.dim != 2:
        raise ValueError("normal form requires a 2-dimensional derived algebra")
    z = center(g).intersect(d)
    if z.dim != 1:
        raise InternalInvariantError("centre within the derived algebra is not a line")
    b4 = primitive(z.rows[0])
    d_perp_b4 = d.intersect(orthogonal_complement(mg, Subspace(4, (b4,))))
    if d_perp_b4.dim != 1:
        raise InternalInvariantError("orthocomplement of the centre in [g,g] is not a line")
    b3 = primitive(d_perp_b4.rows[0])
    comp = orthogonal_complement(mg, d)
    # kernel of v -> [v, B_3] inside the complement of the derived algebra
    k1 = g.bracket(comp.rows[0], b3)
    k2 = g.bracket(comp.rows[1], b3)
    kernel = [
        (s, t)
        for s, t in _line_kernel(k1, k2)
    ]
    if len(kernel) != 1:
        raise InternalInvariantError("kernel of the bracket-with-B3 map is not a line")
    s, t = kernel[0]
    b2 = primitive(vadd(vscale(s, comp.rows[0]), vscale(t, comp.rows[1])))
    b1_space = comp.intersect(orthogonal_complement(mg, Subspace(4, (b2,))))
    if b1_space.dim != 1:
        raise InternalInvariantError("orthocomplement of B2 in [g,g]-perp is not a line")
    b1 = primitive(b1_space.rows[0])

    b1, n1 = _squarefree_rescale(b1, mg.inner(b1, b1))
    b2, n2 = _squarefree_rescale(b2, mg.inner(b2, b2))
    b3, n3 = _squarefree_rescale(b3, mg.inner(b3, b3))
    b4, n4 = _squarefree_rescale(b4, mg.inner(b4, b4))

    coord = transpose(inverse(mat((b1, b2, b3, b4))))
    c12 = matvec(coord, g.bracket(b1, b2))
    c13 = matvec(coord, g.bracket(b1, b3))
    if c12[0] or c12[1] or c13[0] or c13[1] or c13[2]:
        raise InternalInvariantError("normal form brackets have unexpected support")
    a, b, c = c12[2], c12[3], c13[3]
    if a == 0 or c == 0:
        raise InternalInvariantError("normal form constants a, c must be nonzero")
    if a < 0:
        b3, a, c = vscale(-F1, b3), -a, -c
    if c < 0:
        b4, c, b = vscale(-F1, b4), -c, -b
    # remaining brackets must vanish
    for u, v in ((b1, b4), (b2, b3), (b2, b4), (b3, b4)):
        if not is_zero_vec(g.bracket(u, v)):
            raise InternalInvariantError("unexpected nonzero bracket in normal form")
    return FourDimNormalForm(
        mg, (b1, b2, b3, b4), (n1, n2, n3, n4), a * n3, b * n4, c * n4
    )


def _line_kernel(w1, w2):
    """Solutions (s, t), up to scale, of s*w1 + t*w2 = 0 (w1, w2 vectors)."""
    rows = [(a, b) for a, b in zip(w1, w2)]
    from .linalg import nullspace

    ker = nullspace(rows, ncols=2)
    return [tuple(v) for v in ker]


def geodesic_cone_4d(nf: FourDimNormalForm):
    """Predicate deciding geodesy of x B_2 + y B_3 + z B_4 via the cone equation."""

    def predicate(x, y, z) -> bool:
        return nf.cone_value(x, y, z) == 0

    return predicate


def tg_2d_subalgebras_4d(nf: FourDimNormalForm):
    """The 2-dim totally geodesic subalgebras of the normal form.

    Empty when beta != 0; otherwise exactly span(B_2, B_4) and
    span(gamma B_2 - alpha B_4, B_3), both re-verified exactly.
    """
    if nf.beta != 0:
        return []
    g = nf.mg.algebra
    b1, b2, b3, b4 = nf.basis
    first = Subalgebra(g, (b2, b4))
    second = Subalgebra(
        g, (vsub(vscale(nf.gamma, b2), vscale(nf.alpha, b4)), b3)
    )
    for h in (first, second):
        if not is_totally_geodesic(nf.mg, h).ok:
            raise InternalInvariantError("stated 2-dim subalgebra failed the TG check")
    return [first, second]


# ---------------------------------------------------------------------------
# recognizing the standard filiform algebra
# ---------------------------------------------------------------------------


def is_standard_filiform(g: LieAlgebra) -> bool:
    """Whether g is isomorphic to L_n: filiform with an abelian
    codimension-one ideal.

    Every codimension-one subspace containing [g,g] is an ideal; abelianness
    over that pencil is a rank condition on one 2-column system, solved
    exactly.
    """
    rep = is_filiform(g)
    if not rep.ok:
        raise ValueError("standard-form test requires a filiform algebra")
    n = g.dim
    d = derived_algebra(g)
    if d.dim != n - 2:
        raise InternalInvariantError("filiform derived algebra has wrong dimension")
    if not is_abelian(g, d):
        return False
    pivset = set(d.pivots)
    free = [c for c in range(n) if c not in pivset]
    v1, v2 = unit_vec(n, free[0]), unit_vec(n, free[1])
    rows = []
    for dr in d.rows:
        w1 = g.bracket(v1, dr)
        w2 = g.bracket(v2, dr)
        for k in range(n):
            if w1[k] or w2[k]:
                rows.append((w1[k], w2[k]))
    return rank(rows) <= 1 if rows else True


# ---------------------------------------------------------------------------
# 2-step surjectivity condition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HeisConditionReport:
    ok: bool
    tested: int
    witness: Optional[tuple] = None  # X outside the centre with ad(X) not onto [g,g]


def heis_condition_b(g: LieAlgebra, samples: int = 64, seed: int = 0) -> HeisConditionReport:
    """Sampling-based check that g is 2-step and every ad(X), X outside the
    centre, surjects onto [g,g].

    The universal quantifier is semi-algebraic; this sweeps basis vectors,
    pairwise sums/differences, and seeded random vectors.
    """
    nilp, cls = is_nilpotent(g)
    if not nilp:
        raise ValueError("condition applies to nilpotent algebras")
    if cls != 2:
        return HeisConditionReport(False, 0)
    d = derived_algebra(g)
    z = center(g)
    n = g.dim
    rng = random.Random(seed)

    def candidates():
        for i in range(n):
            yield unit_vec(n, i)
        for i in range(n):
            for j in range(i + 1, n):
                yield vadd(unit_vec(n, i), unit_vec(n, j))
                yield vsub(unit_vec(n, i), unit_vec(n, j))
        for _ in range(samples):
            yield tuple(Fraction(rng.randint(-5, 5)) for _ in range(n))

    tested = 0
    for x in candidates():
        if is_zero_vec(x) or z.contains(x):
            continue
        tested += 1
        if rank(g.ad(x)) != d.dim:
            return HeisConditionReport(False, tested, x)
    return HeisConditionReport(True, tested)
