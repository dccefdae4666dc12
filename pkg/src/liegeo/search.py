"""Search layer: numeric geodesic finding and totally-geodesic subalgebra search.

Floating point is quarantined to proposal generation (multi-start descent and
batched candidate filters); every accepted artifact is exact-rational and is
re-verified by the exact predicates before being returned.  Identical budgets
reproduce identical results, float paths included.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

from .algebra import (
    InternalInvariantError,
    LieAlgebra,
    Subalgebra,
    Subspace,
    center,
    change_basis,
    derived_algebra,
    generated_subalgebra,
    is_ideal,
    is_nilpotent,
)
from .filiform import is_filiform, subspace_has_max_nilpotency_element
from .geometry import (
    MetricLieAlgebra,
    geodesic_defect,
    gram_schmidt_adapted,
    is_invariant_complement,
    is_totally_geodesic,
    orthogonal_complement,
    psi_map,
)
from .linalg import (
    F0,
    identity,
    is_zero_vec,
    matmul,
    nullspace,
    rref,
    to_float_matrix,
    to_float_vector,
    unit_vec,
    vadd,
    vscale,
    zero_vec,
)


@dataclass(frozen=True)
class SearchBudget:
    """Deterministic resource budget; equal budgets give equal results."""

    seed: int = 12345
    max_candidates: int = 2000
    tol: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        if self.max_candidates <= 0 or self.max_iterations <= 0 or self.tol <= 0:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class NumericGeodesic:
    vector: tuple  # floats, unit metric norm
    residual: float
    converged: bool
    iterations: int
    exact_vector: Optional[tuple] = None  # rational reconstruction, if confirmed
    exact_confirmed: bool = False


class _FloatModel:
    """Dense float mirrors of the structure constants and the Gram matrix."""

    def __init__(self, mg: MetricLieAlgebra):
        g = mg.algebra
        n = g.dim
        t = np.zeros((n, n, n))
        for (i, j), row in g._table.items():
            r = to_float_vector(row)
            t[i - 1, j - 1] = r
            t[j - 1, i - 1] = -r
        self.n = n
        self.T = t
        self.G = to_float_matrix(mg.metric.gram)
        self.Ginv = np.linalg.inv(self.G)
        # a_k(Y) = Y^T Mtil[k] Y with Mtil[k] = T[k] @ G
        self.Mtil = np.einsum("kjl,lm->kjm", t, self.G)
        self.Msym = self.Mtil + np.transpose(self.Mtil, (0, 2, 1))

    def alpha(self, y):
        return np.einsum("kjm,j,m->k", self.Mtil, y, y)

    def defect(self, y):
        return self.Ginv @ self.alpha(y)

    def residual(self, y):
        a = self.alpha(y)
        return float(np.sqrt(max(a @ self.Ginv @ a, 0.0)))

    def grad_sq(self, y):
        f = self.defect(y)
        return 2.0 * np.einsum("k,kjm,m->j", f, self.Msym, y)

    def normalize(self, y):
        nrm = np.sqrt(y @ self.G @ y)
        if nrm == 0:
            raise ZeroDivisionError
        return y / nrm


def _sphere_starts(model: _FloatModel, mg: MetricLieAlgebra, budget: SearchBudget):
    """Structured exact candidates first, then low-discrepancy directions."""
    n = model.n
    starts = []
    comp = orthogonal_complement(mg, derived_algebra(mg.algebra))
    for row in comp.rows:
        starts.append(to_float_vector(row))
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        starts.append(e)
    count = 8 * max(n - 1, 1)
    sob = qmc.Sobol(d=n, scramble=True, seed=budget.seed)
    pts = sob.random_base2(max(int(np.ceil(np.log2(count))), 1))[:count]
    pts = ndtri(np.clip(pts, 1e-12, 1 - 1e-12))
    for row in pts:
        if np.linalg.norm(row) > 1e-9:
            starts.append(row)
    return starts


def _rational_reconstruct(mg: MetricLieAlgebra, y, max_den: int = 10**6):
    """Continued-fraction rounding of a float direction; exact-zero defect
    confirms it as a geodesic."""
    scale = max(abs(float(c)) for c in y)
    if scale == 0:
        return None
    cand = tuple(Fraction(float(c) / scale).limit_denominator(max_den) for c in y)
    if is_zero_vec(cand):
        return None
    if is_zero_vec(geodesic_defect(mg, cand)):
        return cand
    return None


def find_geodesic_numeric(mg: MetricLieAlgebra, budget: SearchBudget = SearchBudget()) -> NumericGeodesic:
    """Multi-start projected-gradient minimization of the defect norm on the
    metric unit sphere, with a Gauss-Newton polish near zeros.

    Returns the best point found; ``converged`` means residual <= budget.tol.
    When the point rounds to a nearby rational direction whose exact defect
    vanishes, the reconstruction is attached.
    """
    if mg.dim < 1:
        raise ValueError("dimension must be at least 1")
    model = _FloatModel(mg)
    best_y = None
    best_res = np.inf
    total_iter = 0
    for start in _sphere_starts(model, mg, budget):
        y = model.normalize(np.asarray(start, dtype=float))
        res = model.residual(y)
        it = 0
        while res > budget.tol and it < budget.max_iterations:
            it += 1
            grad = model.grad_sq(y)
            u = model.G @ y
            tangent = grad - (grad @ u) / (u @ u) * u
            tnorm = np.linalg.norm(tangent)
            if tnorm < 1e-16:
                break
            # backtracking line search on the sphere retraction
            fval = res * res
            eta = 1.0 / max(tnorm, 1.0)
            accepted = False
            for _ in range(50):
                cand = model.normalize(y - eta * tangent)
                cres = model.residual(cand)
                if cres * cres <= fval - 1e-4 * eta * tnorm * tnorm:
                    y, res = cand, cres
                    accepted = True
                    break
                eta *= 0.5
            if not accepted:
                break
            if res < 1e-2:
                # Gauss-Newton polish: solve the linearized defect = 0 on the sphere
                for _ in range(25):
                    if res <= budget.tol * 0.01:
                        break
                    f = model.defect(y)
                    jac = model.Ginv @ np.einsum("kjm,m->kj", model.Msym, y)
                    u = model.G @ y
                    a_mat = np.vstack([jac, u[None, :]])
                    rhs = np.concatenate([-f, [0.0]])
                    step, *_ = np.linalg.lstsq(a_mat, rhs, rcond=None)
                    cand = model.normalize(y + step)
                    cres = model.residual(cand)
                    if cres >= res:
                        break
                    y, res = cand, cres
        total_iter += it
        if res < best_res:
            best_res, best_y = res, y.copy()
        if best_res <= budget.tol:
            break
    converged = bool(best_res <= budget.tol)
    exact = _rational_reconstruct(mg, best_y) if converged else None
    return NumericGeodesic(
        tuple(float(c) for c in best_y),
        float(best_res),
        converged,
        total_iter,
        exact,
        exact is not None,
    )


# ---------------------------------------------------------------------------
# totally geodesic subalgebra search
# ---------------------------------------------------------------------------


class _AdaptedFrame:
    """The adapted orthogonal basis with the algebra rewritten in its
    coordinates; the Gram matrix becomes diagonal there."""

    def __init__(self, mg: MetricLieAlgebra):
        g = mg.algebra
        self.mg = mg
        self.basis = gram_schmidt_adapted(mg, identity(g.dim))
        self.alg = change_basis(g, self.basis)
        self.norms = tuple(mg.inner(e, e) for e in self.basis)
        n = g.dim
        self.table = [
            [self.alg.basis_bracket(i + 1, j + 1) for j in range(n)] for i in range(n)
        ]

    def pair_value(self, m, p, q):
        """<[E_m,E_p],E_q> + <[E_m,E_q],E_p> in adapted coordinates."""
        return self.table[m][p][q] * self.norms[q] + self.table[m][q][p] * self.norms[p]

    def to_ambient(self, rows):
        return [
            tuple(
                sum((c * self.basis[i][k] for i, c in enumerate(r) if c), F0)
                for k in range(self.mg.dim)
            )
            for r in rows
        ]


def _coordinate_candidates(frame: _AdaptedFrame, k: int):
    """Bracket-closed k-subsets of the adapted basis, with their TG status."""
    n = frame.mg.dim
    closed = []
    for subset in itertools.combinations(range(n), k):
        sset = set(subset)
        ok = True
        for a in subset:
            for b in subset:
                if a < b and any(
                    frame.table[a][b][m] for m in range(n) if m not in sset
                ):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            closed.append(subset)
    return closed


def _subset_is_tg(frame: _AdaptedFrame, subset) -> bool:
    n = frame.mg.dim
    comp = [m for m in range(n) if m not in subset]
    for m in comp:
        for ia, a in enumerate(subset):
            for b in subset[ia:]:
                if frame.pair_value(m, a, b) != 0:
                    return False
    return True


def _pencil_solutions(frame: _AdaptedFrame, subset, j):
    """Solve the linear part of condition (2) for the family {E_i + b_i E_j}.

    Constant and linear coefficients come from the complement directions E_m;
    the quadratic terms and the remaining complement direction are handled by
    the exact verification of each solution.
    """
    n = frame.mg.dim
    k = len(subset)
    idx = {s: t for t, s in enumerate(subset)}
    comp = [m for m in range(n) if m not in subset and m != j]
    rows = []
    rhs = []
    for m in comp:
        for ia, a in enumerate(subset):
            for b in subset[ia:]:
                coeff = [F0] * k
                coeff[idx[b]] += frame.pair_value(m, a, j)
                coeff[idx[a]] += frame.pair_value(m, b, j)
                const = frame.pair_value(m, a, b)
                if any(coeff) or const:
                    rows.append(tuple(coeff))
                    rhs.append(const)
    if not rows:
        return [tuple([F0] * k)]
    aug = [r + (-c,) for r, c in zip(rows, rhs)]
    red, pivots = rref(aug)
    if any(p == k for p in pivots):
        return []  # inconsistent linearization
    particular = [F0] * k
    for r, p in enumerate(pivots):
        particular[p] = red[r][k]
    sols = [tuple(particular)]
    hom = nullspace(rows, ncols=k)
    for h in hom[:3]:
        sols.append(tuple(p + x for p, x in zip(particular, h)))
    return sols


def _exact_accept(mg: MetricLieAlgebra, rows, k: int) -> Optional[Subalgebra]:
    """Close up, keep only exact dimension-k totally geodesic subalgebras."""
    try:
        h = generated_subalgebra(mg.algebra, rows)
    except ValueError:
        return None
    if h.dim != k:
        return None
    if not is_totally_geodesic(mg, h).ok:
        return None
    return h


def _random_candidates_float(mg: MetricLieAlgebra, k: int, budget: SearchBudget):
    """Batched float pre-filter over seeded random rational frames.

    The filter only proposes: survivors are rebuilt exactly and must pass
    generated_subalgebra + the exact TG check.
    """
    model = _FloatModel(mg)
    n = model.n
    count = budget.max_candidates
    rng = np.random.default_rng(np.random.PCG64(budget.seed ^ 0x7E57ED))
    num = rng.integers(-9, 10, size=(count, k, n))
    den = rng.integers(1, 3, size=(count, k, 1))
    frames = num / den
    norms = np.linalg.norm(frames, axis=2, keepdims=True)
    good = (norms > 0).all(axis=(1, 2))
    frames_n = np.where(norms > 0, frames / np.maximum(norms, 1e-30), 0.0)

    brackets = np.einsum("cai,cbj,ijk->cabk", frames_n, frames_n, model.T)
    stack = np.concatenate([frames_n, brackets.reshape(count, k * k, n)], axis=1)
    sv = np.linalg.svd(stack, compute_uv=False)
    ranks = (sv > 1e-7 * np.maximum(sv[:, :1], 1e-30)).sum(axis=1)
    mask = good & (ranks == k)
    idx = np.nonzero(mask)[0]
    if idx.size == 0:
        return []

    fm = frames_n[idx]
    mg_prod = fm @ model.G
    _, sv2, vh = np.linalg.svd(mg_prod, full_matrices=True)
    comp = vh[:, k:, :]
    br = np.einsum("cxi,caj,ijk->cxak", comp, fm, model.T)
    inner = np.einsum("cxak,km,cbm->cxab", br, model.G, fm)
    resid = np.abs(inner + np.transpose(inner, (0, 1, 3, 2))).max(axis=(1, 2, 3))
    survivors = idx[resid < 1e-6]

    out = []
    for c in survivors:
        rows = [
            tuple(Fraction(int(num[c, a, i]), int(den[c, a, 0])) for i in range(n))
            for a in range(k)
        ]
        out.append(rows)
    return out


def search_tg_subalgebras(mg: MetricLieAlgebra, k: int, budget: SearchBudget = SearchBudget()):
    """Deterministic three-strategy search for k-dim totally geodesic
    subalgebras; every returned subalgebra passed the exact TG check.

    Strategies: (a) bracket-closed k-subsets of the adapted orthogonal basis;
    (b) one-direction pencils over those subsets, solving the linear part of
    the TG condition for the perturbation coefficients; (c) seeded random
    rational frames, float-filtered then exactly verified.  The result list
    is deduplicated by canonical subspace form and sorted, so equal inputs
    give equal outputs.  An empty list is evidence, not a nonexistence proof.
    """
    n = mg.dim
    if not 1 <= k < n:
        raise ValueError("subalgebra dimension must satisfy 1 <= k < dim")
    frame = _AdaptedFrame(mg)
    found = {}

    def record(h):
        if h is not None:
            found.setdefault(h.rows, h)

    closed_subsets = _coordinate_candidates(frame, k)
    for subset in closed_subsets:
        if _subset_is_tg(frame, subset):
            rows = frame.to_ambient(
                [unit_vec(n, i) for i in subset]
            )
            record(_exact_accept(mg, rows, k))

    for subset in closed_subsets:
        for j in range(n):
            if j in subset:
                continue
            for sol in _pencil_solutions(frame, subset, j):
                rows_e = []
                for t, i in enumerate(subset):
                    v = list(unit_vec(n, i))
                    v[j] = sol[t]
                    rows_e.append(tuple(v))
                record(_exact_accept(mg, frame.to_ambient(rows_e), k))

    for rows in _random_candidates_float(mg, k, budget):
        record(_exact_accept(mg, rows, k))

    return sorted(found.values(), key=lambda h: tuple(tuple(r) for r in h.rows))


# ---------------------------------------------------------------------------
# audits and per-subalgebra property reports
# ---------------------------------------------------------------------------


class BoundViolation(InternalInvariantError):
    """A proved dimension bound failed on a found instance (indicates a bug)."""

    def __init__(self, message, witness_rows):
        super().__init__("%s; witness basis %s" % (message, witness_rows))
        self.witness_rows = witness_rows


def _is_standard_metric_ln(mg: MetricLieAlgebra) -> bool:
    g = mg.algebra
    n = g.dim
    expected = {(1, i): tuple(unit_vec(n, i)) for i in range(2, n)}
    return g._table == expected and mg.metric.gram == identity(n)


@dataclass
class AuditReport:
    dim: int
    bound: Fraction  # n/2
    max_dim_found: int
    found_by_dim: dict
    invariant_flags: dict  # h.rows -> bool
    notes: list

    def summary(self) -> str:
        lines = [
            "dimension %d, bound %s" % (self.dim, self.bound),
            "max totally geodesic dimension found: %d" % self.max_dim_found,
        ]
        for k in sorted(self.found_by_dim):
            lines.append("  dim %d: %d found" % (k, len(self.found_by_dim[k])))
        lines.extend(self.notes)
        lines.append(
            "search evidence only, not a proof: absences are consistent with "
            "the stated bounds, never verification of them"
        )
        return "\n".join(lines)


def audit_dimension_bounds(mg: MetricLieAlgebra, budget: SearchBudget = SearchBudget()) -> AuditReport:
    """Search all dimensions and assert the proved bounds on found instances.

    Any found subalgebra with invariant complement must satisfy
    dim h <= n/2; on the standard filiform metric every found subalgebra
    must; a found codimension-one subalgebra must split the algebra.
    Violations raise BoundViolation with the witness serialized.
    """
    g = mg.algebra
    rep = is_filiform(g)
    if not rep.ok:
        raise ValueError("audit expects a filiform nilpotent algebra")
    n = g.dim
    bound = Fraction(n, 2)
    standard = _is_standard_metric_ln(mg)
    found_by_dim = {}
    invariant_flags = {}
    notes = []
    max_dim = 0
    z = center(g)
    for k in range(1, n):
        found = search_tg_subalgebras(mg, k, budget)
        found_by_dim[k] = found
        for h in found:
            max_dim = max(max_dim, h.dim)
            inv = is_invariant_complement(mg, h)
            invariant_flags[h.rows] = inv
            if inv and h.dim > bound:
                raise BoundViolation(
                    "invariant-complement subalgebra exceeds half dimension",
                    h.rows,
                )
            if standard and h.dim > bound:
                raise BoundViolation(
                    "standard filiform metric admits no subalgebra above half dimension",
                    h.rows,
                )
            if h.dim == n - 1:
                splits = (
                    is_ideal(g, h)
                    and not h.contains_subspace(z)
                    and h.sum(z).dim == n
                )
                if not splits:
                    raise BoundViolation(
                        "codimension-one subalgebra without a central complement",
                        h.rows,
                    )
                notes.append("codimension-one subalgebra found; algebra splits")
    if any(invariant_flags.values()):
        notes.append("some found subalgebra leaves its complement invariant")
    return AuditReport(n, bound, max_dim, found_by_dim, invariant_flags, notes)


def _center_of_subalgebra(g: LieAlgebra, h: Subspace) -> Subspace:
    """{v in h : [v, h] = 0}, as a subspace of the ambient algebra."""
    k = h.dim
    if k == 0:
        return Subspace.zero(g.dim)
    rows = []
    for y in h.rows:
        cols = [g.bracket(r, y) for r in h.rows]
        for coord in range(g.dim):
            row = tuple(cols[a][coord] for a in range(k))
            if not is_zero_vec(row):
                rows.append(row)
    combos = nullspace(rows, ncols=k)
    ambient_rows = []
    for c in combos:
        v = zero_vec(g.dim)
        for coeff, r in zip(c, h.rows):
            if coeff:
                v = vadd(v, vscale(coeff, r))
        ambient_rows.append(v)
    return Subspace(g.dim, ambient_rows)


@dataclass
class SubalgebraProperties:
    psi_is_homomorphism: bool
    psi_nilpotent: Optional[bool]  # None when the ambient algebra is not nilpotent
    codim: int
    bracket_z1z2_in_h: Optional[bool] = None
    bracket_z1z2_central_in_h: Optional[bool] = None
    closure_meets_h_inside_center: Optional[bool] = None
    half_dim_bound_ok: Optional[bool] = None  # invariant complement + max-nilpotency case


def verify_found_subalgebra_properties(mg: MetricLieAlgebra, h: Subalgebra) -> SubalgebraProperties:
    """Exact structural checks on a totally geodesic subalgebra.

    psi must be a homomorphism always; nilpotent when the algebra is.  In
    codimension two (nilpotent case) the complement bracket must land in the
    centre of h and the closure of the complement must meet h inside that
    centre; the report records the same intersections in higher codimension
    without asserting them.
    """
    report = is_totally_geodesic(mg, h)
    if not report.ok:
        raise ValueError("properties are defined for totally geodesic subalgebras")
    g = mg.algebra
    comp = orthogonal_complement(mg, h)
    nilp, _ = is_nilpotent(g)

    psis = [psi_map(mg, h, y) for y in h.rows]
    hom = True
    for a in range(h.dim):
        for b in range(a + 1, h.dim):
            w = g.bracket(h.rows[a], h.rows[b])
            lhs = psi_map(mg, h, w)
            rhs = _mat_sub(matmul(psis[a], psis[b]), matmul(psis[b], psis[a]))
            if lhs != rhs:
                hom = False
    psi_nilp = None
    if nilp:
        psi_nilp = True
        for m in psis:
            p = m
            for _ in range(max(comp.dim - 1, 0)):
                p = matmul(m, p)
            if any(any(x for x in row) for row in p):
                psi_nilp = False

    props = SubalgebraProperties(hom, psi_nilp, comp.dim)
    zh = _center_of_subalgebra(g, h)
    a = generated_subalgebra(g, comp.rows)
    props.closure_meets_h_inside_center = zh.contains_subspace(a.intersect(h))
    if comp.dim == 2 and nilp:
        w = g.bracket(comp.rows[0], comp.rows[1])
        props.bracket_z1z2_in_h = h.contains(w)
        props.bracket_z1z2_central_in_h = zh.contains(w) and h.contains(w)
    if nilp and is_invariant_complement(mg, h):
        try:
            filiform = is_filiform(g).ok
        except ValueError:
            filiform = False
        if filiform and subspace_has_max_nilpotency_element(g, comp):
            props.half_dim_bound_ok = 2 * h.dim <= g.dim
    return props


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
