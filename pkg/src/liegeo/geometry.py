"""Inner products, the Levi-Civita connection, and totally geodesic subalgebras.

All verdicts are exact.  Orthogonal (never orthonormal) bases are used
throughout: the geodesic and totally-geodesic conditions are invariant under
rescaling individual basis vectors, so square roots never enter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import InternalInvariantError, LieAlgebra, Subalgebra, Subspace
from .linalg import (
    F0,
    identity,
    inverse,
    is_zero_vec,
    mat,
    matmul,
    matvec,
    nullspace,
    primitive,
    transpose,
    unit_vec,
    vadd,
    vdot,
    vscale,
    vsub,
    zero_vec,
)


class Metric:
    """Symmetric positive-definite rational Gram matrix."""

    __slots__ = ("gram", "_inv")

    def __init__(self, gram):
        gram = mat(gram)
        n = len(gram)
        if any(len(r) != n for r in gram):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if not _positive_definite(gram):
            raise ValueError("Gram matrix must be positive definite")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "_inv", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Metric is immutable")

    @classmethod
    def standard(cls, n: int) -> "Metric":
        return cls(identity(n))

    @property
    def dim(self):
        return len(self.gram)

    @property
    def inv(self):
        if self._inv is None:
            object.__setattr__(self, "_inv", inverse(self.gram))
        return self._inv

    def inner(self, x, y) -> Fraction:
        s = F0
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                for j, yj in enumerate(y):
                    if yj and row[j]:
                        s += xi * row[j] * yj
        return s

    def __eq__(self, other):
        return isinstance(other, Metric) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return "Metric(dim %d)" % self.dim


def _positive_definite(gram) -> bool:
    """Exact check: symmetric Gaussian elimination keeps positive pivots
    (equivalently all leading principal minors are > 0)."""
    n = len(gram)
    work = [list(r) for r in gram]
    for k in range(n):
        piv = work[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, n):
            f = work[i][k] / piv
            if f:
                for j in range(k, n):
                    work[i][j] -= f * work[k][j]
    return True


@dataclass(frozen=True)
class GeodesicReport:
    ok: bool
    defect: tuple  # f(y) = metric dual of X -> <[X,y],y>; equals nabla_y y
    residual_sq: Fraction  # <f(y), f(y)>


@dataclass(frozen=True)
class TGReport:
    ok: bool
    witness: Optional[tuple] = None  # (x, y, z, value) with x in comp, y,z in h
    complement_invariant: bool = False


class MetricLieAlgebra:
    """A Lie algebra together with an inner product on its coordinate space."""

    __slots__ = ("algebra", "metric")

    def __init__(self, algebra: LieAlgebra, metric: Metric):
        if algebra.dim != metric.dim:
            raise ValueError("algebra and metric dimensions differ")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "metric", metric)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("MetricLieAlgebra is immutable")

    @property
    def dim(self):
        return self.algebra.dim

    def inner(self, x, y) -> Fraction:
        return self.metric.inner(x, y)

    def __repr__(self):
        return "MetricLieAlgebra(%r)" % (self.algebra,)


def inner(mg: MetricLieAlgebra, x, y) -> Fraction:
    return mg.inner(x, y)


def orthogonal_complement(mg: MetricLieAlgebra, w: Subspace) -> Subspace:
    """{v : <r, v> = 0 for all rows r of w}, computed as ker(w . Gram)."""
    if w.dim == 0:
        return Subspace.full(mg.dim)
    system = matmul(w.rows, mg.metric.gram)
    return Subspace(mg.dim, nullspace(system, ncols=mg.dim))


def project(mg: MetricLieAlgebra, w: Subspace, x):
    """Orthogonal projection of x onto w."""
    if w.dim == 0:
        return zero_vec(mg.dim)
    wg = matmul(w.rows, mg.metric.gram)
    gramian = matmul(wg, transpose(w.rows))
    rhs = matvec(wg, x)
    coeffs = matvec(inverse(gramian), rhs)
    out = zero_vec(mg.dim)
    for c, row in zip(coeffs, w.rows):
        if c:
            out = vadd(out, vscale(c, row))
    return out


def levi_civita(mg: MetricLieAlgebra, x, y):
    """The unique v with 2<v,z> = <[x,y],z> + <[z,x],y> + <[z,y],x> for all z."""
    g = mg.algebra
    n = g.dim
    gram = mg.metric.gram
    gy = matvec(gram, y)
    gx = matvec(gram, x)
    adx = g.ad(x)
    ady = g.ad(y)
    # <[e_k, x], y> = -(ad x)^T (G y) evaluated at k, and symmetrically.
    r = matvec(gram, g.bracket(x, y))
    r = vsub(r, matvec(transpose(adx), gy))
    r = vsub(r, matvec(transpose(ady), gx))
    return tuple(c / 2 for c in matvec(mg.metric.inv, r))


def alpha_functional(mg: MetricLieAlgebra, y):
    """The covector k -> <[e_k, y], y>; its metric dual is the geodesic defect."""
    g = mg.algebra
    n = g.dim
    gy = matvec(mg.metric.gram, y)
    out = [F0] * n
    for (i, j), row in g._table.items():
        # [e_i, y] picks up y_j * row, [e_j, y] picks up -y_i * row
        dot = F0
        for k, v in enumerate(row):
            if v and gy[k]:
                dot += v * gy[k]
        if dot:
            if y[j - 1]:
                out[i - 1] += y[j - 1] * dot
            if y[i - 1]:
                out[j - 1] -= y[i - 1] * dot
    return tuple(out)


def geodesic_defect(mg: MetricLieAlgebra, y):
    """f(y): metric dual of X -> <[X,y],y>.  f(y) = 0 iff y is geodesic,
    and <f(y), y> = 0 identically."""
    return matvec(mg.metric.inv, alpha_functional(mg, y))


def is_geodesic(mg: MetricLieAlgebra, y) -> GeodesicReport:
    """Exact geodesic verdict via nabla_y y and via the dual functional.

    The two computations must agree; disagreement is an internal error.
    nabla_y y collapses to -G^{-1} ad(y)^T G y because [y, y] = 0, which is
    evaluated through per-basis brackets, independently of the structure-table
    contraction behind the dual functional.
    """
    if is_zero_vec(y):
        raise ValueError("geodesic test requires a nonzero vector")
    a = alpha_functional(mg, y)
    defect = matvec(mg.metric.inv, a)
    g = mg.algebra
    n = g.dim
    gy = matvec(mg.metric.gram, y)
    w = tuple(-vdot(g.bracket(y, unit_vec(n, k)), gy) for k in range(n))
    nabla = matvec(mg.metric.inv, w)
    if nabla != defect:
        raise InternalInvariantError("nabla_y y disagrees with the dual of alpha_y")
    ok_direct = is_zero_vec(a)
    ok_defect = is_zero_vec(defect)
    if ok_direct != ok_defect:
        raise InternalInvariantError("geodesic criteria disagree")
    # <f, f> = f^T G f = f . a since f = G^{-1} a
    return GeodesicReport(ok_defect, defect, vdot(defect, a))


def is_invariant_complement(mg: MetricLieAlgebra, h: Subalgebra) -> bool:
    """Whether [x, y] stays in the orthogonal complement for x in h-perp, y in h."""
    comp = orthogonal_complement(mg, h)
    g = mg.algebra
    for x in comp.rows:
        for y in h.rows:
            if not comp.contains(g.bracket(x, y)):
                return False
    return True


def is_totally_geodesic(mg: MetricLieAlgebra, h: Subalgebra) -> TGReport:
    """Exact verdict for <[X,Y],Z> + <[X,Z],Y> = 0 over basis triples.

    The witness, when present, is the first violating triple in lexicographic
    basis order (complement rows, then h-row pairs).
    """
    if not isinstance(h, Subalgebra):
        h = Subalgebra(mg.algebra, h.rows, h.pivots)  # validates closure
    comp = orthogonal_complement(mg, h)
    g = mg.algebra
    witness = None
    for x in comp.rows:
        brackets = [g.bracket(x, y) for y in h.rows]
        for a in range(h.dim):
            for b in range(a, h.dim):
                val = mg.inner(brackets[a], h.rows[b]) + mg.inner(brackets[b], h.rows[a])
                if val != 0:
                    witness = (x, h.rows[a], h.rows[b], val)
                    break
            if witness:
                break
        if witness:
            break
    invariant = is_invariant_complement(mg, h)
    if invariant and witness is not None:
        raise InternalInvariantError("invariant complement but condition (2) fails")
    return TGReport(witness is None, witness, invariant)


def phi_map(mg: MetricLieAlgebra, h: Subalgebra, x):
    """Matrix of Y -> proj_h [x, Y] on the basis of h, for x in h-perp.

    For totally geodesic h each phi(x) is skew-adjoint with respect to the
    Gram matrix restricted to h.
    """
    comp = orthogonal_complement(mg, h)
    if not comp.contains(x):
        raise ValueError("x is not in the orthogonal complement of h")
    cols = []
    for y in h.rows:
        p = project(mg, h, mg.algebra.bracket(x, y))
        cols.append(_coords_in(h, mg, p))
    return transpose(cols)


def psi_map(mg: MetricLieAlgebra, h: Subalgebra, y):
    """Matrix of X -> proj_{h-perp} [y, X] on the basis of h-perp, for y in h."""
    if not h.contains(y):
        raise ValueError("y is not in h")
    comp = orthogonal_complement(mg, h)
    cols = []
    for x in comp.rows:
        p = project(mg, comp, mg.algebra.bracket(y, x))
        cols.append(_coords_in(comp, mg, p))
    return transpose(cols)


def _coords_in(space: Subspace, mg: MetricLieAlgebra, v):
    c = space.coordinates_of(v)
    if c is None:
        raise InternalInvariantError("projection landed outside its target space")
    return c


def construct_geodesic_metric(g: LieAlgebra, y) -> Metric:
    """An inner product making y a geodesic, when one exists.

    Succeeds iff y is outside im(ad y): extend a basis of im(ad y) by y and a
    complement, and declare that basis orthonormal.  Raises ValueError when
    y lies in im(ad y) (no inner product works).
    """
    if is_zero_vec(y):
        raise ValueError("geodesic metric requires a nonzero vector")
    n = g.dim
    image = Subspace(n, transpose(g.ad(y)))
    if image.contains(y):
        raise ValueError("y lies in the image of ad(y); no metric makes it geodesic")
    rows = list(image.rows) + [tuple(y)]
    span = Subspace(n, rows)
    for i in range(n):
        if span.dim == n:
            break
        e = unit_vec(n, i)
        if not span.contains(e):
            rows.append(e)
            span = Subspace(n, rows)
    p = mat(rows)
    gram = inverse(matmul(transpose(p), p))
    metric = Metric(gram)
    report = is_geodesic(MetricLieAlgebra(g, metric), y)
    if not report.ok:
        raise InternalInvariantError("constructed metric failed the geodesic check")
    return metric


def is_bi_invariant(mg: MetricLieAlgebra) -> bool:
    """Whether every ad(x) is skew-adjoint for the inner product."""
    g = mg.algebra
    n = g.dim
    for i in range(n):
        e = unit_vec(n, i)
        images = [g.bracket(e, unit_vec(n, a)) for a in range(n)]
        for a in range(n):
            for b in range(a, n):
                val = mg.inner(images[a], unit_vec(n, b)) + mg.inner(images[b], unit_vec(n, a))
                if val != 0:
                    return False
    return True


def killing_metric(g: LieAlgebra) -> Metric:
    """Gram matrix of minus the Killing form; requires compact type."""
    n = g.dim
    ads = [g.ad(unit_vec(n, i)) for i in range(n)]
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = matmul(ads[i], ads[j])
            row.append(-sum((prod[k][k] for k in range(n)), F0))
        gram.append(tuple(row))
    try:
        return Metric(gram)
    except ValueError:
        raise ValueError("negative Killing form is not positive definite") from None


def gram_schmidt_adapted(mg: MetricLieAlgebra, basis):
    """Orthogonal (not normalized) basis adapted to the flag of a given basis.

    Built from the last element downward, so span(E_k,...,E_n) equals
    span(B_k,...,B_n) for every k and the B-degree of E_i is exactly i.
    Outputs are rescaled to primitive integer vectors (orthogonality and
    degrees are scale-invariant).
    """
    rows = [tuple(v) for v in basis]
    n = len(rows)
    if Subspace(mg.dim, rows).dim != n or n != mg.dim:
        raise ValueError("input is not a basis")
    out = [None] * n
    for i in range(n - 1, -1, -1):
        v = rows[i]
        for j in range(i + 1, n):
            e = out[j]
            c = mg.inner(v, e) / mg.inner(e, e)
            if c:
                v = vsub(v, vscale(c, e))
        out[i] = primitive(v)
    return tuple(out)
