"""Octonion algebra over the basis e0..e7.

e0 is the two-sided identity and ei**2 = -e0 for i >= 1.  Products of
distinct imaginary units are fixed by seven oriented triples: (a, b, c)
means ea*eb = ec, eb*ec = ea, ec*ea = eb, and swapping two factors flips
the sign.  Every unordered pair of imaginary indices lies on exactly one
triple, so the table below determines the full bilinear product.

The orientations were pinned down operationally: they are the unique
assignment, given e1*e2 = e3 and the products e4*e1 = -e5, e4*e2 = e6,
e4*e3 = -e7, under which the algebra is alternative and norm-multiplicative
(the identity suites in :mod:`octospin.suites` re-check this on every run).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .scalar import Backend, EXACT, Scalar, random_rational

FANO_CYCLES: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (3, 5, 6),
    (3, 4, 7),
    (6, 4, 2),
    (7, 2, 5),
)


def _build_tables():
    sign = [[0] * 8 for _ in range(8)]
    index = [[0] * 8 for _ in range(8)]
    for i in range(8):
        sign[0][i] = sign[i][0] = 1
        index[0][i] = index[i][0] = i
    for i in range(1, 8):
        sign[i][i] = -1
        index[i][i] = 0
    for line in FANO_CYCLES:
        for a, b, c in (line, line[1:] + line[:1], line[2:] + line[:2]):
            sign[a][b], index[a][b] = 1, c
            sign[b][a], index[b][a] = -1, c
    return tuple(map(tuple, sign)), tuple(map(tuple, index))


#: FANO_SIGN[i][j], FANO_INDEX[i][j] encode ei*ej = FANO_SIGN * e_FANO_INDEX
#: for imaginary i != j; rows/columns 0 encode the identity element.
FANO_SIGN, FANO_INDEX = _build_tables()


@dataclass(frozen=True)
class Octonion:
    """An octonion (equivalently, a vector of R^8) as 8 scalar coordinates."""

    coords: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("octonion needs exactly 8 coordinates")

    @staticmethod
    def zero() -> "Octonion":
        return Octonion((Fraction(0),) * 8)

    @staticmethod
    def basis(i: int) -> "Octonion":
        coords = [Fraction(0)] * 8
        coords[i] = Fraction(1)
        return Octonion(tuple(coords))

    @staticmethod
    def from_coords(values) -> "Octonion":
        return Octonion(tuple(values))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, k: Scalar) -> "Octonion":
        return Octonion(tuple(k * a for a in self.coords))

    def map_scalars(self, fn) -> "Octonion":
        return Octonion(tuple(fn(a) for a in self.coords))


#: Vectors of R^8 are octonion coordinate vectors; Im O (= R^7) is the
#: subspace with coordinate 0 equal to zero.
Vector8 = Octonion


def mul(a: Octonion, b: Octonion) -> Octonion:
    """Octonion product, the bilinear extension of the basis table."""
    out = [0] * 8
    for i, ai in enumerate(a.coords):
        if not ai:
            continue
        srow = FANO_SIGN[i]
        krow = FANO_INDEX[i]
        for j, bj in enumerate(b.coords):
            if not bj:
                continue
            if srow[j] > 0:
                out[krow[j]] += ai * bj
            else:
                out[krow[j]] -= ai * bj
    return Octonion(tuple(out))


def conj(a: Octonion) -> Octonion:
    """Conjugation: negate the imaginary part."""
    return Octonion((a.coords[0],) + tuple(-c for c in a.coords[1:]))


def inner(a: Octonion, b: Octonion) -> Scalar:
    """Euclidean dot product of the coordinate vectors."""
    return sum(x * y for x, y in zip(a.coords, b.coords))


def norm_sq(a: Octonion) -> Scalar:
    return inner(a, a)


def right_divide(a: Octonion, u: Octonion) -> Octonion:
    """The unique b with b*u = a, namely a*conj(u) / |u|^2.

    Raises ZeroDivisionError when u = 0.
    """
    n = norm_sq(u)
    if not n:
        raise ZeroDivisionError("division by the zero octonion")
    prod = mul(a, conj(u))
    return Octonion(tuple(c / n for c in prod.coords))


def oct_eq(a: Octonion, b: Octonion, backend: Backend = EXACT) -> bool:
    return all(backend.eq(x, y) for x, y in zip(a.coords, b.coords))


def is_zero(a: Octonion, backend: Backend = EXACT) -> bool:
    return all(backend.is_zero(c) for c in a.coords)


def is_imaginary(a: Octonion, backend: Backend = EXACT) -> bool:
    """True when the e0 coordinate vanishes."""
    return backend.is_zero(a.coords[0])


def random_octonion(rng: random.Random, imaginary: bool = False) -> Octonion:
    """Random rational octonion with coordinates p/q, p in [-20, 20], q in [1, 10]."""
    coords = [random_rational(rng) for _ in range(8)]
    if imaginary:
        coords[0] = Fraction(0)
    return Octonion(tuple(coords))


def serialize(a: Octonion, backend: Backend = EXACT) -> list:
    """Coordinate list of scalar strings, order e0..e7."""
    return [backend.format(c) for c in a.coords]


def parse_octonion(values, backend: Backend = EXACT) -> Octonion:
    return Octonion(tuple(backend.parse(v) for v in values))
