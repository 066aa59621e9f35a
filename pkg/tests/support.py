"""Shared helpers for the test suite: seeded random generators for exact
scalars, polynomials, rational functions, matrices and sphere points."""

import random
from fractions import Fraction

from lievessiot.matrix import MatK
from lievessiot.ratfunc import Poly, RatFunc
from lievessiot.scalars import GaussianRational


def rand_fraction(rng: random.Random, span=4, den=3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_gauss(rng: random.Random, span=4, den=3) -> GaussianRational:
    return GaussianRational(rand_fraction(rng, span, den), rand_fraction(rng, span, den))


def rand_gauss_int(rng: random.Random, span=2) -> GaussianRational:
    return GaussianRational(rng.randint(-span, span), rng.randint(-span, span))


def rand_poly(rng: random.Random, max_deg=3, span=2) -> Poly:
    deg = rng.randint(0, max_deg)
    coeffs = [rand_gauss_int(rng, span) for _ in range(deg + 1)]
    return Poly(coeffs)


def rand_ratfunc(rng: random.Random, max_deg=3, span=2) -> RatFunc:
    num = rand_poly(rng, max_deg, span)
    den = rand_poly(rng, max_deg, span)
    while den.is_zero():
        den = rand_poly(rng, max_deg, span)
    return RatFunc(num, den)


def rand_poly_matrix(rng: random.Random, n: int, max_deg=3, span=2) -> MatK:
    rows = [[RatFunc(rand_poly(rng, max_deg, span)) for _ in range(n)]
            for _ in range(n)]
    return MatK.from_rows(rows)


def rand_fundamental(rng: random.Random, n: int, max_deg=3, span=2) -> MatK:
    """Random polynomial matrix with all principal minors nonzero."""
    while True:
        tau = rand_poly_matrix(rng, n, max_deg, span)
        if all(not mk.is_zero() for mk in tau.principal_minors()):
            return tau


def rand_invertible(rng: random.Random, n: int, max_deg=2, span=2) -> MatK:
    while True:
        tau = rand_poly_matrix(rng, n, max_deg, span)
        if not tau.det().is_zero():
            return tau


def rand_sphere_point(rng: random.Random):
    """Exact rational sphere point via inverse stereographic projection."""
    from lievessiot.darboux import SpherePoint

    while True:
        u = rand_fraction(rng, 3, 3)
        v = rand_fraction(rng, 3, 3)
        d = u * u + v * v + 1
        p = SpherePoint(Fraction(2) * u / d, Fraction(2) * v / d,
                        (u * u + v * v - 1) / d)
        if (GaussianRational(1) - p.x2) and (p.x0 - GaussianRational(0, 1) * p.x1):
            return p
