"""Build Lie algebras from rational structure constants and inspect them.

Run:  python demos/01_bracket_basics.py
"""

from liegeo import (
    LieAlgebra,
    center,
    derived_algebra,
    is_nilpotent,
    lower_central_series,
    quotient,
    standard_filiform,
)
from liegeo.algebra import Subspace
from liegeo.linalg import unit_vec


def e(n, i):
    return unit_vec(n, i - 1)


def main():
    # the standard filiform algebra L_5: [X_1, X_i] = X_{i+1}
    g = standard_filiform(5)
    print(g)
    print("[X_1, X_2] =", g.bracket(e(5, 1), e(5, 2)))
    print("Jacobi:", g.verify_jacobi().ok)

    print("centre:", center(g).rows)
    print("derived algebra dim:", derived_algebra(g).dim)
    print("lower central series dims:", [s.dim for s in lower_central_series(g)])
    print("nilpotent:", is_nilpotent(g))

    # quotient by the centre gives L_4
    q, proj = quotient(g, Subspace(5, [e(5, 5)]))
    print("dim of g / z(g):", q.dim, "| still nilpotent:", is_nilpotent(q)[0])

    # a deliberately broken bracket table is rejected at construction
    try:
        LieAlgebra(4, {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {3: 1}})
    except ValueError as exc:
        print("rejected:", exc)


if __name__ == "__main__":
    main()
