"""The 4-dimensional normal form and its geodesic cone.

Any 4-dim nilpotent metric algebra with 2-dim derived algebra normalizes to
[B1,B2] = a B3 + b B4, [B1,B3] = c B4 over an orthogonal basis; the geodesic
vectors inside span(B2,B3,B4) form the cone alpha*xy + beta*xz + gamma*yz = 0,
and exactly when beta = 0 there are two 2-dimensional totally geodesic
subalgebras.

Run:  python demos/06_four_dim_cone.py
"""

import random

from liegeo import (
    Metric,
    MetricLieAlgebra,
    geodesic_cone_4d,
    is_geodesic,
    normalize_4d,
    standard_filiform,
    tg_2d_subalgebras_4d,
)
from liegeo.algebra import change_basis
from liegeo.filiform import random_unimodular
from liegeo.sampling import random_spd_gram


def main():
    g = standard_filiform(4)
    nf = normalize_4d(MetricLieAlgebra(g, Metric.standard(4)))
    print("L_4, standard metric: (alpha, beta, gamma) =", (nf.alpha, nf.beta, nf.gamma))
    cone = geodesic_cone_4d(nf)
    print("  cone is y(x + z) = 0 here; (1,0,5) on cone:", cone(1, 0, 5),
          "| (1,1,1) on cone:", cone(1, 1, 1))
    subs = tg_2d_subalgebras_4d(nf)
    print("  the two 2-dim totally geodesic subalgebras:")
    for s in subs:
        print("   ", s.rows)

    # a scrambled presentation with a random metric: the cone still matches
    # the exact geodesic verdict pointwise
    rng = random.Random(1)
    g2 = change_basis(g, random_unimodular(rng, 4))
    mg2 = MetricLieAlgebra(g2, random_spd_gram(rng, 4))
    nf2 = normalize_4d(mg2)
    cone2 = geodesic_cone_4d(nf2)
    agree = all(
        cone2(x, y, z) == is_geodesic(mg2, nf2.vector(x, y, z)).ok
        for x in range(-2, 3)
        for y in range(-2, 3)
        for z in range(-2, 3)
        if (x, y, z) != (0, 0, 0)
    )
    print("scrambled fixture: constants =", (nf2.alpha, nf2.beta, nf2.gamma))
    print("  cone agrees with the exact verdict on a 5x5x5 grid:", agree)
    print("  2-dim TG subalgebras:", len(tg_2d_subalgebras_4d(nf2)),
          "(empty unless beta = 0)")


if __name__ == "__main__":
    main()
