"""Seeded random rational points and core-class rejection sampling.

Directions are drawn as rational vectors with bounded numerators and
denominators (default magnitude bound 10^4), never as rounded reals, so every
downstream computation stays exact.  Numerators are drawn symmetrically about
zero, which makes the per-point distribution centrally symmetric.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .exact import InputError, Point, in_convex_hull, origin

__all__ = [
    "SamplingError",
    "random_fraction",
    "random_point",
    "random_points",
    "random_core_class",
]

DEFAULT_BOUND = 10_000


class SamplingError(RuntimeError):
    """A rejection-sampling budget was exhausted."""


def random_fraction(rng: Random, bound: int = DEFAULT_BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_point(rng: Random, dim: int, bound: int = DEFAULT_BOUND) -> Point:
    while True:
        p = Point(random_fraction(rng, bound) for _ in range(dim))
        if any(c != 0 for c in p.coords):
            return p


def random_points(rng: Random, n: int, dim: int, bound: int = DEFAULT_BOUND) -> list[Point]:
    return [random_point(rng, dim, bound) for _ in range(n)]


def random_core_class(
    rng: Random,
    size: int,
    dim: int,
    bound: int = DEFAULT_BOUND,
    max_tries: int = 2000,
) -> list[Point]:
    """Draw `size` random points whose convex hull strictly contains 0."""
    if size < dim + 1:
        raise InputError(f"need at least {dim + 1} points to surround the origin")
    zero = origin(dim)
    for _ in range(max_tries):
        pts = random_points(rng, size, dim, bound)
        if in_convex_hull(zero, pts, strict=True):
            return pts
    raise SamplingError(
        f"no {size}-point class with 0 strictly inside after {max_tries} draws"
    )
