"""Adapted bases for filiform nilpotent algebras.

Every filiform algebra admits a basis with [X_1, X_i] = X_{i+1}, brackets that
raise degree away from the antidiagonal, and a single antidiagonal constant
alpha (zero in odd dimension).  The construction verifies all of this exactly
and raises if anything fails, so a returned basis is a certificate.

Run:  python demos/04_filiform_normal_form.py
"""

import random

from liegeo import (
    dim6_example,
    has_maximal_nilpotency,
    irreg6_example,
    is_filiform,
    is_standard_filiform,
    regularity_verdict,
    standard_filiform,
    twisted_l4,
    vergne_basis,
)
from liegeo.algebra import change_basis
from liegeo.filiform import random_unimodular
from liegeo.linalg import unit_vec, vsub


def main():
    # a disguised presentation of L_4 normalizes to {X1, X2-X1, X3, X4}
    tw = twisted_l4()
    vb = vergne_basis(tw)
    print("twisted 4-dim fixture:")
    print("  adapted basis:", vb.vectors)
    print("  alpha =", vb.alpha, "| standard?", is_standard_filiform(tw))

    # the irregular 6-dim fixture keeps alpha = 1 under the bounded retry
    data = irreg6_example()
    vb6 = vergne_basis(data.algebra)
    print("irregular 6-dim fixture: alpha =", vb6.alpha)
    print("  regularity verdict:", regularity_verdict(data.algebra, attempts=10)[0])
    x = vsub(unit_vec(6, 0), unit_vec(6, 1))  # X_1 - X_2
    print("  X1 - X2 has maximal nilpotency?", has_maximal_nilpotency(data.algebra, vb6, x))

    # normalization is exact under arbitrary rational changes of basis
    rng = random.Random(0)
    g = dim6_example()
    for _ in range(3):
        scrambled = change_basis(g, random_unimodular(rng, 6))
        vb2 = vergne_basis(scrambled)  # would raise if any relation failed
        print("scrambled copy: filiform =", is_filiform(scrambled).ok, "| alpha =", vb2.alpha)
    print("dim-6 example standard?", is_standard_filiform(g))
    print("L_7 standard?", is_standard_filiform(standard_filiform(7)))


if __name__ == "__main__":
    main()
