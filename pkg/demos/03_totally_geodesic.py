"""Totally geodesic subalgebras, witnesses, and the induced maps.

A subalgebra h is totally geodesic iff <[X,Y],Z> + <[X,Z],Y> = 0 for X in the
orthogonal complement and Y, Z in h.  Failures come with the first violating
triple in a fixed order, so regressions are reproducible.

Run:  python demos/03_totally_geodesic.py
"""

from liegeo import (
    Metric,
    MetricLieAlgebra,
    Subalgebra,
    is_invariant_complement,
    is_totally_geodesic,
    phi_map,
    psi_map,
    solv_rot,
    standard_filiform,
)
from liegeo.linalg import unit_vec


def e(n, i):
    return unit_vec(n, i - 1)


def main():
    # rotation example: totally geodesic although the complement moves
    g = solv_rot()
    mg = MetricLieAlgebra(g, Metric.standard(3))
    h = Subalgebra(g, (e(3, 2), e(3, 3)))
    rep = is_totally_geodesic(mg, h)
    print("solv_rot span(Y,Z): TG =", rep.ok, "| complement invariant =", rep.complement_invariant)
    print("  phi(X) on (Y, Z):", phi_map(mg, h, e(3, 1)), "(a rotation generator)")

    # the even-index span of the standard filiform metric algebra
    n = 6
    ln = standard_filiform(n)
    mgl = MetricLieAlgebra(ln, Metric.standard(n))
    even = Subalgebra(ln, tuple(e(n, i) for i in range(2, n + 1, 2)))
    print("L_6 even span: TG =", is_totally_geodesic(mgl, even).ok)
    print("  psi(X2) nilpotent degree-raising map:", psi_map(mgl, even, e(n, 2)))

    # a failing candidate carries its witness
    bad = Subalgebra(ln, (e(n, 2), e(n, 3)))
    rep = is_totally_geodesic(mgl, bad)
    x, y, z, value = rep.witness
    print("L_6 span(X2,X3): TG =", rep.ok, "| witness value =", value)
    print("  witness triple: X =", x, " Y =", y, " Z =", z)
    print("  complement invariant:", is_invariant_complement(mgl, bad))


if __name__ == "__main__":
    main()
