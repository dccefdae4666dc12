"""Seeded rational samplers shared by the search layer and the test suites.

Everything takes an explicit random.Random (or seed) so identical seeds
reproduce identical objects, including across the float paths built on top.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Subspace
from .geometry import Metric
from .linalg import F0, is_zero_vec, matmul, transpose


def rng_from(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_fraction(rng: random.Random, spread: int = 3, dens=(1, 1, 2)) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.choice(dens))


def random_vector(rng: random.Random, n: int, spread: int = 3, nonzero: bool = True):
    while True:
        v = tuple(random_fraction(rng, spread) for _ in range(n))
        if not nonzero or not is_zero_vec(v):
            return v


def random_spd_gram(rng: random.Random, n: int, spread: int = 2) -> Metric:
    """G = L L^T with random lower-triangular L of positive diagonal; exact SPD."""
    rows = []
    for i in range(n):
        row = [F0] * n
        for j in range(i):
            row[j] = Fraction(rng.randint(-spread, spread), rng.choice((1, 2)))
        row[i] = Fraction(rng.choice((1, 1, 2, 3)), rng.choice((1, 1, 2)))
        rows.append(tuple(row))
    l = tuple(rows)
    return Metric(matmul(l, transpose(l)))


def random_subspace(rng: random.Random, n: int, k: int, spread: int = 2) -> Subspace:
    while True:
        rows = [random_vector(rng, n, spread) for _ in range(k)]
        s = Subspace(n, rows)
        if s.dim == k:
            return s


def random_central_subspace(rng: random.Random, z: Subspace, k: int) -> Subspace:
    """Random k-dim subspace of a given subspace (e.g. the centre)."""
    if k > z.dim:
        raise ValueError("requested dimension exceeds the ambient subspace")
    while True:
        rows = []
        for _ in range(k):
            v = (F0,) * z.ambient
            while is_zero_vec(v):
                coeffs = [random_fraction(rng, 2) for _ in range(z.dim)]
                v = tuple(
                    sum((c * r[i] for c, r in zip(coeffs, z.rows)), F0)
                    for i in range(z.ambient)
                )
            rows.append(v)
        s = Subspace(z.ambient, rows)
        if s.dim == k:
            return s
