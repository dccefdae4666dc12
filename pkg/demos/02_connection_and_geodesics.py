"""The Levi-Civita connection and exact geodesic verdicts.

A vector y is geodesic exactly when nabla_y y = 0, equivalently when the
defect vector (the metric dual of X -> <[X,y],y>) vanishes.  Everything here
is rational, so verdicts are exact.

Run:  python demos/02_connection_and_geodesics.py
"""

from liegeo import (
    Metric,
    MetricLieAlgebra,
    construct_geodesic_metric,
    geodesic_defect,
    heis3,
    is_geodesic,
    killing_metric,
    levi_civita,
    so3,
    solv_exp,
)
from liegeo.linalg import unit_vec


def e(n, i):
    return unit_vec(n, i - 1)


def main():
    mg = MetricLieAlgebra(heis3(), Metric.standard(3))
    print("Heisenberg, standard metric:")
    print("  nabla_{X1} X2 =", levi_civita(mg, e(3, 1), e(3, 2)), "(= X3/2)")

    # the exponential solvable algebra: Y is never geodesic
    g = solv_exp()
    mge = MetricLieAlgebra(g, Metric.standard(3))
    rep = is_geodesic(mge, e(3, 2))
    print("solv_exp, y = Y: geodesic?", rep.ok, "| defect =", rep.defect)
    print("  defect is orthogonal to y:", mge.inner(rep.defect, e(3, 2)) == 0)
    try:
        construct_geodesic_metric(g, e(3, 2))
    except ValueError as exc:
        print("  no metric can fix this:", exc)

    # but every nonzero vector of a nilpotent algebra admits one
    metric = construct_geodesic_metric(heis3(), e(3, 1))
    print("Heisenberg: found a geodesic-making metric with gram", metric.gram[0])

    # compact type: under minus the Killing form, everything is geodesic
    km = killing_metric(so3())
    mgk = MetricLieAlgebra(so3(), km)
    probe = (1, -2, 3)
    from liegeo.linalg import vec

    print("so(3), -Killing metric: (1,-2,3) geodesic?", is_geodesic(mgk, vec(probe)).ok)
    print("  defect of a random-ish probe:", geodesic_defect(mgk, vec((5, "1/2", -7))))


if __name__ == "__main__":
    main()
