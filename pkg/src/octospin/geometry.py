"""Oriented planes in R^8, plane rotations as matrices, and exact random frames.

A rotation of an oriented plane is represented by its full 8x8 matrix.
The spanning pair of a plane is only required to be orthogonal with equal
norms, not unit: the rotation formula divides by the common norm, which
keeps every construction inside the rationals (unit vectors with rational
coordinates are rare, equal-norm pairs are everywhere).

Special-orthogonal matrices with exact rational entries come from the
Cayley transform A -> (I - A)(I + A)^-1 of random antisymmetric rational
matrices; their columns provide exactly orthonormal frames for the random
plane generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .octonion import Octonion, Vector8, inner, mul, norm_sq
from .scalar import Backend, EXACT, Scalar, derived_rng


class PlaneError(ValueError):
    """An oriented plane violates its orthogonality/equal-norm contract."""


@dataclass(frozen=True)
class OrientedPlane:
    """Ordered orthogonal spanning pair [u, v] with equal norms.

    [u, v] and [v, u] carry opposite orientations.
    """

    u: Vector8
    v: Vector8

    def map_scalars(self, fn) -> "OrientedPlane":
        return OrientedPlane(self.u.map_scalars(fn), self.v.map_scalars(fn))


def check_plane(p: OrientedPlane, backend: Backend = EXACT) -> None:
    """Raise PlaneError unless u ⟂ v and |u|^2 = |v|^2 != 0."""
    n = norm_sq(p.u)
    if backend.is_zero(n):
        raise PlaneError("plane spanning pair must be nonzero")
    if not backend.eq(n, norm_sq(p.v)):
        raise PlaneError("plane spanning pair must have equal norms")
    if not backend.is_zero(inner(p.u, p.v)):
        raise PlaneError("plane spanning pair must be orthogonal")


@dataclass(frozen=True)
class Matrix8:
    """8x8 matrix, row-major, generic over the scalar backend."""

    rows: Tuple[Tuple[Scalar, ...], ...]

    @staticmethod
    def identity() -> "Matrix8":
        return Matrix8(
            tuple(
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(8))
                for i in range(8)
            )
        )

    @staticmethod
    def from_rows(rows) -> "Matrix8":
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != 8 or any(len(r) != 8 for r in rows):
            raise ValueError("matrix needs 8x8 entries")
        return Matrix8(rows)

    def column(self, j: int) -> Vector8:
        return Octonion(tuple(self.rows[i][j] for i in range(8)))

    def transpose(self) -> "Matrix8":
        return Matrix8(tuple(zip(*self.rows)))

    def __neg__(self) -> "Matrix8":
        return Matrix8(tuple(tuple(-x for x in row) for row in self.rows))

    def map_scalars(self, fn) -> "Matrix8":
        return Matrix8(tuple(tuple(fn(x) for x in row) for row in self.rows))


def compose(a: Matrix8, b: Matrix8) -> Matrix8:
    """Matrix product a*b (apply b first, then a)."""
    bt = tuple(zip(*b.rows))
    return Matrix8(
        tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
            for row in a.rows
        )
    )


def apply(a: Matrix8, z: Vector8) -> Vector8:
    """Matrix-vector product."""
    return Octonion(tuple(sum(x * y for x, y in zip(row, z.coords)) for row in a.rows))


def mat_eq(a: Matrix8, b: Matrix8, backend: Backend = EXACT) -> bool:
    return all(
        backend.eq(x, y)
        for ra, rb in zip(a.rows, b.rows)
        for x, y in zip(ra, rb)
    )


def _det_fraction_free(rows) -> Scalar:
    """Bareiss fraction-free elimination; all divisions are exact."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_lu(rows) -> float:
    """Partial-pivot elimination for the float backend."""
    m = [[float(x) for x in r] for r in rows]
    n = len(m)
    det = 1.0
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[piv][k] == 0.0:
            return 0.0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k + 1, n):
                m[i][j] -= f * m[k][j]
    return det


def determinant(m: Matrix8, backend: Backend = EXACT) -> Scalar:
    if backend.name == "float":
        return _det_lu(m.rows)
    return _det_fraction_free(m.rows)


@dataclass(frozen=True)
class SOReport:
    """Outcome of the special-orthogonality check for one matrix."""

    orthogonality_residual: Scalar
    determinant: Scalar
    passed: bool


def so_check(m: Matrix8, backend: Backend = EXACT) -> SOReport:
    """Max-abs entry of M^T M - I, the determinant, and the verdict."""
    residual = 0
    for i in range(8):
        for j in range(8):
            entry = sum(m.rows[k][i] * m.rows[k][j] for k in range(8))
            if i == j:
                entry = entry - 1
            if abs(entry) > residual:
                residual = abs(entry)
    det = determinant(m, backend)
    one = backend.from_fraction(Fraction(1))
    ok = backend.is_zero(residual) and backend.eq(det, one)
    return SOReport(residual, det, ok)


def plane_rotation(p: OrientedPlane, t, backend: Backend = EXACT) -> Matrix8:
    """Rotation of the plane [u, v] by the angle t, fixing its complement.

    With N the common squared norm of u and v, the matrix is
    I + ((c-1)/N)(u u^T + v v^T) + (s/N)(v u^T - u v^T); it sends
    u -> c*u + s*v and v -> -s*u + c*v and is special orthogonal.
    """
    check_plane(p, backend)
    n = norm_sq(p.u)
    a = (t.c - 1) / n
    b = t.s / n
    u, v = p.u.coords, p.v.coords
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            entry = a * (u[i] * u[j] + v[i] * v[j]) + b * (v[i] * u[j] - u[i] * v[j])
            if i == j:
                entry = entry + 1
            row.append(entry)
        rows.append(tuple(row))
    return Matrix8(tuple(rows))


def rotate_plane_basis(p: OrientedPlane, s) -> OrientedPlane:
    """Same plane and orientation, spanning pair rotated inside the plane."""
    u2 = p.u.scale(s.c) + p.v.scale(s.s)
    v2 = p.v.scale(s.c) - p.u.scale(s.s)
    return OrientedPlane(u2, v2)


def solve_linear(a_rows: Sequence[Sequence[Scalar]], b_rows: Sequence[Sequence[Scalar]]):
    """Solve A X = B by Gauss-Jordan elimination; exact over rationals.

    Raises ZeroDivisionError when A is singular.
    """
    n = len(a_rows)
    m = [list(ar) + list(br) for ar, br in zip(a_rows, b_rows)]
    width = len(m[0])
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("singular linear system")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        inv = m[k][k]
        m[k] = [x / inv for x in m[k]]
        for i in range(n):
            if i == k or not m[i][k]:
                continue
            f = m[i][k]
            m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:width] for row in m]


def cayley_orthogonal(a: Matrix8) -> Matrix8:
    """Cayley transform (I - A)(I + A)^-1 of an antisymmetric rational A.

    The result is an exact rational special-orthogonal matrix; I + A is
    always invertible for real antisymmetric A.
    """
    for i in range(8):
        for j in range(8):
            if a.rows[i][j] != -a.rows[j][i]:
                raise ValueError("matrix must be antisymmetric")
    ident = Matrix8.identity()
    plus = [[ident.rows[i][j] + a.rows[i][j] for j in range(8)] for i in range(8)]
    minus = [[ident.rows[i][j] - a.rows[i][j] for j in range(8)] for i in range(8)]
    # (I - A) and (I + A)^-1 commute, so solving (I + A) X = (I - A) gives
    # the transform in either factor order.
    return Matrix8.from_rows(solve_linear(plus, minus))


SUBSPACE_COORDS = {"R7": (1, 2, 3, 4, 5, 6, 7), "R5": (1, 2, 3, 4, 5)}


def random_antisymmetric(rng: random.Random, support: Sequence[int]) -> Matrix8:
    """Random antisymmetric rational matrix, entries p/q with p in [-5, 5],
    q in [1, 4], supported on the given coordinate block."""
    rows = [[Fraction(0)] * 8 for _ in range(8)]
    for ai, i in enumerate(support):
        for j in support[ai + 1:]:
            x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            rows[i][j] = x
            rows[j][i] = -x
    return Matrix8.from_rows(rows)


def random_orthonormal_pair(seed: int, restrict_to: str = "R7", index=0) -> OrientedPlane:
    """Exact random orthonormal pair [x, y] spanning an oriented plane.

    The pair consists of the first two columns of the Cayley transform of a
    random antisymmetric matrix supported on the chosen subspace (imaginary
    coordinates 1-7 for "R7", 1-5 for "R5"), so x and y are exactly unit,
    exactly orthogonal, and purely imaginary.  Distinct (seed, index) pairs
    give independent streams.
    """
    support = SUBSPACE_COORDS[restrict_to]
    rng = derived_rng(seed, "pair", restrict_to, index)
    q = cayley_orthogonal(random_antisymmetric(rng, support))
    return OrientedPlane(q.column(support[0]), q.column(support[1]))


def choose_w(p: OrientedPlane, backend: Backend = EXACT) -> Vector8:
    """Deterministic vector orthogonal to span{e0, x, y, xy}.

    Runs Gram-Schmidt on e1..e7 in order against {e0, x, y, xy} and returns
    the first nonzero residual, unnormalized (the complement has dimension
    four, so one of the seven candidates always survives).
    """
    x, y = p.u, p.v
    span = [Octonion.basis(0), x, y, mul(x, y)]
    for i in range(1, 8):
        w = Octonion.basis(i)
        for b in span:
            coef = inner(w, b) / norm_sq(b)
            w = w - b.scale(coef)
        if not backend.is_zero(norm_sq(w)):
            return w
    raise PlaneError("no vector orthogonal to span{e0, x, y, xy} found")


def serialize_matrix(m: Matrix8, backend: Backend = EXACT) -> list:
    """Row-major 8x8 array of scalar strings."""
    return [[backend.format(x) for x in row] for row in m.rows]


def parse_matrix(rows, backend: Backend = EXACT) -> Matrix8:
    return Matrix8.from_rows(
        tuple(tuple(backend.parse(x) for x in row) for row in rows)
    )
