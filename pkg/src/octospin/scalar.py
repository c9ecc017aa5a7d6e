"""Arithmetic backends and exact points on the unit circle.

Every quantity in this package is a scalar from one of two backends: exact
arbitrary-precision rationals (``fractions.Fraction``), where equality is
decidable and tested with ``==``, or 64-bit floats, where equality means
agreement within a hybrid relative/absolute tolerance.  All algebra in the
other modules is generic over the scalar type; a computation stays inside
whichever backend its inputs came from.

Rotation angles are never stored as radians.  A rotation parameter is a
point (c, s) on the unit circle, so identities involving cos and sin reduce
to field arithmetic and can be checked exactly on the rational backend.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]


class ExactBackend:
    """Arbitrary-precision rationals; equality and zero tests are exact."""

    name = "exact"
    epsilon = None

    def from_fraction(self, q: Fraction) -> Fraction:
        return q

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return a == b

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def format(self, a: Scalar) -> str:
        q = Fraction(a)
        return f"{q.numerator}/{q.denominator}"

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())


class FloatBackend:
    """64-bit floats compared with |a-b| <= eps * max(1, |a|, |b|)."""

    name = "float"

    def __init__(self, epsilon: float = 1e-9):
        if epsilon <= 0:
            raise ValueError("epsilon must be positive")
        self.epsilon = float(epsilon)

    def from_fraction(self, q: Fraction) -> float:
        return float(q)

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return abs(a - b) <= self.epsilon * max(1.0, abs(a), abs(b))

    def is_zero(self, a: Scalar) -> bool:
        return abs(a) <= self.epsilon

    def format(self, a: Scalar) -> str:
        return format(float(a), ".17g")

    def parse(self, text: str) -> float:
        text = text.strip()
        if "/" in text:
            return float(Fraction(text))
        return float(text)


Backend = Union[ExactBackend, FloatBackend]

EXACT = ExactBackend()


def make_backend(name: str, epsilon: float = 1e-9) -> Backend:
    """Build a backend from its config name ("exact" or "float")."""
    if name == "exact":
        return EXACT
    if name == "float":
        return FloatBackend(epsilon)
    raise ValueError(f"unknown backend {name!r}")


@dataclass(frozen=True)
class CirclePoint:
    """A point (c, s) on the unit circle, standing in for the angle t.

    c plays the role of cos t and s of sin t; c**2 + s**2 == 1 (exactly on
    the rational backend, within tolerance on floats).
    """

    c: Scalar
    s: Scalar

    def inverse(self) -> "CirclePoint":
        """The point of the opposite angle, (c, -s)."""
        return CirclePoint(self.c, -self.s)

    def map_scalars(self, fn) -> "CirclePoint":
        return CirclePoint(fn(self.c), fn(self.s))


CIRCLE_IDENTITY = CirclePoint(Fraction(1), Fraction(0))
CIRCLE_QUARTER = CirclePoint(Fraction(0), Fraction(1))
CIRCLE_HALF = CirclePoint(Fraction(-1), Fraction(0))


def circle_from_parameter(u: Fraction) -> CirclePoint:
    """Rational point ((1-u^2)/(1+u^2), 2u/(1+u^2)) on the unit circle.

    The stereographic parameter u keeps angle arithmetic exact: any
    rational u lands exactly on the circle.
    """
    u = Fraction(u)
    den = 1 + u * u
    return CirclePoint((1 - u * u) / den, 2 * u / den)


def double_angle(p: CirclePoint) -> CirclePoint:
    """(c, s) -> (c^2 - s^2, 2cs), the angle-doubling self-map."""
    return CirclePoint(p.c * p.c - p.s * p.s, 2 * p.c * p.s)


def angle_sum(p: CirclePoint, q: CirclePoint) -> CirclePoint:
    """Group law on the circle: add the two angles."""
    return CirclePoint(p.c * q.c - p.s * q.s, p.s * q.c + p.c * q.s)


def on_circle(p: CirclePoint, backend: Backend = EXACT) -> bool:
    return backend.eq(p.c * p.c + p.s * p.s, backend.from_fraction(Fraction(1)))


def circle_eq(p: CirclePoint, q: CirclePoint, backend: Backend = EXACT) -> bool:
    return backend.eq(p.c, q.c) and backend.eq(p.s, q.s)


def parse_circle_point(text: str, backend: Backend = EXACT) -> CirclePoint:
    """Parse "c,s" or a stereographic parameter "u=p/q" into a CirclePoint."""
    text = text.strip()
    if text.startswith("u="):
        p = circle_from_parameter(Fraction(text[2:]))
        return p.map_scalars(backend.from_fraction)
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'c,s' or 'u=p/q', got {text!r}")
    p = CirclePoint(backend.parse(parts[0]), backend.parse(parts[1]))
    if not on_circle(p, backend):
        raise ValueError(f"point {text!r} is not on the unit circle")
    return p


def random_rational(rng: random.Random, max_num: int = 20, max_den: int = 10) -> Fraction:
    """Random p/q with p in [-max_num, max_num], q in [1, max_den]."""
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def derived_rng(seed: int, *path) -> random.Random:
    """Independent deterministic stream for (seed, path).

    String seeding hashes via SHA-512 inside ``random.Random``, so streams
    are stable across processes and platforms.
    """
    return random.Random(f"{seed}|" + "|".join(str(p) for p in path))
