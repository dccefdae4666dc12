"""Finite-dimensional real Lie algebras with exact rational structure constants.

A LieAlgebra is a dimension n plus the bracket table [X_i, X_j] for i < j
(1-based, matching the usual X_1,...,X_n conventions); brackets with i >= j
follow by antisymmetry.  Subspaces are kept in reduced row echelon form, so
equality of subspaces is equality of their basis matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import (
    F0,
    frac,
    identity,
    inverse,
    is_zero_vec,
    matvec,
    nullspace,
    primitive,
    rref,
    transpose,
    unit_vec,
    vadd,
    vec,
    vscale,
    zero_vec,
)


class InternalInvariantError(RuntimeError):
    """A property the theory guarantees failed to hold; indicates a bug."""


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    triple: Optional[tuple] = None  # (i, j, k), 1-based
    residual: Optional[tuple] = None  # the nonzero cyclic sum


class LieAlgebra:
    """Immutable Lie algebra given by rational structure constants.

    ``brackets`` maps (i, j) with 1 <= i < j <= n to {k: coeff} giving
    [X_i, X_j] = sum_k coeff * X_k.  Missing pairs are zero.
    """

    __slots__ = ("dim", "name", "_table")

    def __init__(self, dim, brackets, name=None, check=True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "name", name)
        table = {}
        for (i, j), coeffs in brackets.items():
            if not (1 <= i < j <= dim):
                raise ValueError("bracket indices (%d,%d) out of range or i >= j" % (i, j))
            row = [F0] * dim
            for k, c in coeffs.items():
                if not 1 <= k <= dim:
                    raise ValueError("bracket target index %d out of range" % k)
                row[k - 1] = frac(c)
            if not is_zero_vec(row):
                table[(i, j)] = tuple(row)
        object.__setattr__(self, "_table", table)
        if check:
            rep = self.verify_jacobi()
            if not rep.ok:
                raise ValueError(
                    "structure constants violate the Jacobi identity at basis "
                    "triple %s" % (rep.triple,)
                )

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LieAlgebra is immutable")

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return "%s(dim=%d, %d nonzero brackets)" % (label, self.dim, len(self._table))

    def basis_bracket(self, i: int, j: int):
        """[X_i, X_j] for 1-based i, j (antisymmetry applied)."""
        if i == j:
            return zero_vec(self.dim)
        if i < j:
            return self._table.get((i, j), zero_vec(self.dim))
        row = self._table.get((j, i))
        return vscale(Fraction(-1), row) if row is not None else zero_vec(self.dim)

    def nonzero_brackets(self):
        """Iterate (i, j, vector) over stored i < j pairs with nonzero bracket."""
        for (i, j), row in sorted(self._table.items()):
            yield i, j, row

    def bracket(self, x, y):
        """Bilinear extension of the structure constants to arbitrary vectors."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError("vector length does not match algebra dimension")
        out = [F0] * n
        for (i, j), row in self._table.items():
            c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if c:
                for k, v in enumerate(row):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def ad(self, x):
        """Matrix of ad(x): y -> [x, y] in the defining basis (columns = images)."""
        n = self.dim
        cols = [self.bracket(x, unit_vec(n, j)) for j in range(n)]
        return transpose(cols)

    def verify_jacobi(self) -> JacobiReport:
        n = self.dim
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    s = vadd(
                        vadd(
                            self.bracket(self.basis_bracket(i, j), unit_vec(n, k - 1)),
                            self.bracket(self.basis_bracket(j, k), unit_vec(n, i - 1)),
                        ),
                        self.bracket(self.basis_bracket(k, i), unit_vec(n, j - 1)),
                    )
                    if not is_zero_vec(s):
                        return JacobiReport(False, (i, j, k), s)
        return JacobiReport(True)


class Subspace:
    """Subspace of the coordinate space, canonicalized to RREF rows."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, rows, pivots=None):
        object.__setattr__(self, "ambient", int(ambient))
        if pivots is None:
            rows, pivots = rref(rows)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Subspace is immutable")

    @classmethod
    def spanned_by(cls, ambient, vectors):
        return cls(ambient, [vec(v) for v in vectors])

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient):
        return cls(ambient, identity(ambient), tuple(range(ambient)))

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Eliminate this subspace from v; zero result means membership."""
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                for k, x in enumerate(row):
                    if x:
                        w[k] -= c * x
        return tuple(w)

    def contains(self, v) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other) -> bool:
        return all(self.contains(r) for r in other.rows)

    def coordinates_of(self, v):
        """Coefficients of v in this RREF basis, or None if v is outside."""
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def sum(self, other):
        return Subspace(self.ambient, self.rows + other.rows)

    def intersect(self, other):
        # Zassenhaus: row-reduce [A|A; B|0]; rows with zero left block carry
        # the intersection in their right block.
        n = self.ambient
        block = [list(r) + list(r) for r in self.rows]
        block += [list(r) + [F0] * n for r in other.rows]
        red, _ = rref(block)
        rows = [r[n:] for r in red if is_zero_vec(r[:n])]
        return Subspace(n, rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)


class Subalgebra(Subspace):
    """Bracket-closed subspace of a LieAlgebra."""

    __slots__ = ("algebra",)

    def __init__(self, algebra, rows, pivots=None, check=True):
        super().__init__(algebra.dim, rows, pivots)
        object.__setattr__(self, "algebra", algebra)
        if check:
            for a in range(self.dim):
                for b in range(a + 1, self.dim):
                    w = algebra.bracket(self.rows[a], self.rows[b])
                    if not self.contains(w):
                        raise ValueError(
                            "span is not bracket-closed: [row %d, row %d] escapes"
                            % (a + 1, b + 1)
                        )

    @classmethod
    def from_subspace(cls, algebra, subspace, check=True):
        return cls(algebra, subspace.rows, subspace.pivots, check=check)

    def __repr__(self):
        return "Subalgebra(dim %d of %d)" % (self.dim, self.ambient)


# ---------------------------------------------------------------------------
# structural toolbox
# ---------------------------------------------------------------------------


def bracket(g: LieAlgebra, x, y):
    return g.bracket(x, y)


def verify_jacobi(g: LieAlgebra) -> JacobiReport:
    return g.verify_jacobi()


def derived_algebra(g: LieAlgebra) -> Subspace:
    rows = [row for _, _, row in g.nonzero_brackets()]
    return Subspace(g.dim, rows)


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    rows = []
    for u in a.rows:
        for v in b.rows:
            w = g.bracket(u, v)
            if not is_zero_vec(w):
                rows.append(w)
    return Subspace(g.dim, rows)


def center(g: LieAlgebra) -> Subspace:
    """Kernel of the stacked maps x -> [x, e_j], j = 1..n."""
    n = g.dim
    stacked = []
    for j in range(n):
        # row block over output coordinate k: entry (k, i) = ([e_i, e_j])_k
        cols = [g.basis_bracket(i + 1, j + 1) for i in range(n)]
        for k in range(n):
            row = tuple(cols[i][k] for i in range(n))
            if not is_zero_vec(row):
                stacked.append(row)
    return Subspace(n, nullspace(stacked, ncols=n))


def lower_central_series(g: LieAlgebra):
    """[g, g, ...] until stabilization; g is nilpotent iff it ends at 0."""
    full = Subspace.full(g.dim)
    series = [full]
    current = full
    while True:
        nxt = bracket_span(g, full, current)
        series.append(nxt)
        if nxt.dim == current.dim:
            break
        current = nxt
        if nxt.dim == 0:
            break
    return series


def is_nilpotent(g: LieAlgebra):
    """Returns (verdict, nilpotency class or None)."""
    series = lower_central_series(g)
    if series[-1].dim == 0:
        return True, len(series) - 1
    return False, None


def is_abelian(g: LieAlgebra, w: Subspace) -> bool:
    for a in range(w.dim):
        for b in range(a + 1, w.dim):
            if not is_zero_vec(g.bracket(w.rows[a], w.rows[b])):
                return False
    return True


def is_ideal(g: LieAlgebra, w: Subspace) -> bool:
    n = g.dim
    for i in range(n):
        e = unit_vec(n, i)
        for r in w.rows:
            if not w.contains(g.bracket(e, r)):
                return False
    return True


def generated_subalgebra(g: LieAlgebra, vectors) -> Subalgebra:
    """Smallest bracket-closed subspace containing the given vectors."""
    span = Subspace.spanned_by(g.dim, vectors)
    while True:
        new_rows = list(span.rows)
        grew = False
        for a in range(span.dim):
            for b in range(a + 1, span.dim):
                w = g.bracket(span.rows[a], span.rows[b])
                if not span.contains(w):
                    new_rows.append(w)
                    grew = True
        if not grew:
            return Subalgebra(g, span.rows, span.pivots, check=False)
        span = Subspace(g.dim, new_rows)


def quotient(g: LieAlgebra, ideal: Subspace):
    """Quotient algebra by an ideal plus the projection matrix.

    Coordinates on the quotient are the non-pivot coordinates of the ideal's
    RREF, i.e. reduction mod the ideal followed by restriction.  Returns
    (algebra, projection) where projection is a (dim(g/I) x dim(g)) matrix.
    """
    if not is_ideal(g, ideal):
        raise ValueError("subspace is not an ideal")
    n = g.dim
    pivset = set(ideal.pivots)
    free = [c for c in range(n) if c not in pivset]
    q = len(free)
    if q == 0:
        raise ValueError("quotient by the full algebra is zero-dimensional")
    proj = tuple(
        tuple(row[c] for c in free) for row in (ideal.reduce(unit_vec(n, i)) for i in range(n))
    )
    proj = transpose(proj)  # shape q x n
    brackets = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = ideal.reduce(g.bracket(unit_vec(n, free[a]), unit_vec(n, free[b])))
            coeffs = {k + 1: w[c] for k, c in enumerate(free) if w[c]}
            if coeffs:
                brackets[(a + 1, b + 1)] = coeffs
    name = ("%s/ideal" % g.name) if g.name else None
    return LieAlgebra(q, brackets, name=name, check=False), proj


def change_basis(g: LieAlgebra, m) -> LieAlgebra:
    """Structure constants in the basis whose vectors are the rows of m."""
    n = g.dim
    minv = inverse(m)  # raises on singular input
    coord = transpose(minv)  # new coords of v = coord @ v
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = g.bracket(m[i], m[j])
            c = matvec(coord, w)
            coeffs = {k + 1: c[k] for k in range(n) if c[k]}
            if coeffs:
                brackets[(i + 1, j + 1)] = coeffs
    return LieAlgebra(n, brackets, name=g.name, check=False)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    n1, n2 = g1.dim, g2.dim
    brackets = {}
    for i, j, row in g1.nonzero_brackets():
        brackets[(i, j)] = {k + 1: c for k, c in enumerate(row) if c}
    for i, j, row in g2.nonzero_brackets():
        brackets[(i + n1, j + n1)] = {k + 1 + n1: c for k, c in enumerate(row) if c}
    name = None
    if g1.name and g2.name:
        name = "%s+%s" % (g1.name, g2.name)
    return LieAlgebra(n1 + n2, brackets, name=name, check=False)


def abelianization_surjectivity_check(g: LieAlgebra, a: Subalgebra) -> bool:
    """Whether a surjects onto g/[g,g]; surjectivity must force a = g.

    For nilpotent g no proper subalgebra can surject, so a surjective proper
    subalgebra is an internal-consistency failure.
    """
    nilp, _ = is_nilpotent(g)
    if not nilp:
        raise ValueError("check requires a nilpotent algebra")
    surjective = derived_algebra(g).sum(a).dim == g.dim
    if surjective and a.dim < g.dim:
        raise InternalInvariantError(
            "proper subalgebra surjects onto the abelianization of a nilpotent algebra"
        )
    return surjective


def subspace_primitive_rows(s: Subspace):
    """Primitive-integer representatives of the RREF rows (for display)."""
    return tuple(primitive(r) for r in s.rows)
