"""Seeded random rational tori for property checks and sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .ratmath import RatMat
from .torus import TorusSpec, validate


def random_rational(rng: random.Random, lo: int = -3, hi: int = 3, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_positive(rng: random.Random, hi: int = 3, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(1, hi * den), den)


def random_spec(rng: random.Random, max_n: int = 5, max_factor: int = 3,
                l: int | None = None, m: int | None = None, n: int | None = None) -> TorusSpec:
    """A valid spec: n <= max_n, l, m <= min(max_factor, n), entries in [-3, 3], denominators <= 4.

    Any of ``n``, ``l``, ``m`` may be pinned; draws are retried until the
    frequency matrices have full rank.
    """
    while True:
        nn = n if n is not None else rng.randint(1, max_n)
        ll = l if l is not None else rng.randint(0, min(max_factor, nn))
        mm = m if m is not None else rng.randint(0, min(max_factor, nn))
        if ll + mm == 0:
            continue
        r_sq = tuple(random_positive(rng) for _ in range(nn))
        E = RatMat(tuple(tuple(random_rational(rng) for _ in range(ll)) for _ in range(nn)), ll)
        F = RatMat(tuple(tuple(random_rational(rng) for _ in range(mm)) for _ in range(nn)), mm)
        spec = TorusSpec(nn, ll, mm, r_sq, E, F)
        if not validate(spec):
            return spec


def random_specs(seed: int, count: int, **kwargs) -> list[TorusSpec]:
    rng = random.Random(seed)
    return [random_spec(rng, **kwargs) for _ in range(count)]
