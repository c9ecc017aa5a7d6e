"""Rotation products landing in Spin(7), and the membership machinery.

The central map sends an oriented plane [x, y] of purely imaginary unit
vectors and a circle point t to the product of four plane rotations, all by
the angle t, through the mutually orthogonal planes

    [x, y], [e0, x*y], [w, w*(x*y)], [w*x, w*y],

where w is any nonzero vector orthogonal to span{e0, x, y, x*y}.  Together
with its restriction to planes inside span{e1..e5}, pointwise products of
the two, and the projection to SO(7), this module provides everything the
verification suites exercise: the eight-element frame and its product
table, the double-cover projection, the Spin(7) membership decision
procedure, and the octonion-multiplication compatibility check.

Spin(7) is realized inside SO(8) as the set of g~ admitting a g in SO(7)
with g(a) * g~(b) = g~(a*b) for all octonions a, b; the projection
g~ -> g is the double covering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .geometry import (
    Matrix8,
    OrientedPlane,
    PlaneError,
    apply,
    check_plane,
    choose_w,
    compose,
    plane_rotation,
    so_check,
)
from .octonion import (
    FANO_INDEX,
    FANO_SIGN,
    Octonion,
    Vector8,
    inner,
    is_imaginary,
    mul,
    norm_sq,
    oct_eq,
    right_divide,
)
from .scalar import Backend, CirclePoint, EXACT, Scalar, double_angle


class FrameError(ValueError):
    """The eight-element frame failed one of its orthogonality contracts."""


FRAME_NAMES = ("e0", "x", "y", "xy", "w", "wx", "wy", "w(xy)")


@dataclass(frozen=True)
class FrameB:
    """Orthogonal frame (e0, x, y, xy, w, wx, wy, w(xy)) of R^8.

    The first four elements are unit; the last four share the squared norm
    ``norm_w`` of w (w is not required to be unit).
    """

    elements: Tuple[Octonion, ...]
    norm_w: Scalar


def basis_b(p: OrientedPlane, w: Vector8, backend: Backend = EXACT) -> FrameB:
    """Build and validate the frame spanned by the plane [x, y] and w.

    Raises FrameError when the inputs violate their contracts or when any
    of the 28 pairwise inner products fails to vanish.
    """
    check_plane(p, backend)
    one = backend.from_fraction(Fraction(1))
    x, y = p.u, p.v
    if not backend.eq(norm_sq(x), one):
        raise FrameError("plane spanning pair must be unit")
    if not (is_imaginary(x, backend) and is_imaginary(y, backend)):
        raise FrameError("plane must be purely imaginary")
    if not is_imaginary(w, backend):
        raise FrameError("w must be purely imaginary")
    nw = norm_sq(w)
    if backend.is_zero(nw):
        raise FrameError("w must be nonzero")
    xy = mul(x, y)
    for b in (x, y, xy):
        if not backend.is_zero(inner(w, b)):
            raise FrameError("w must be orthogonal to span{e0, x, y, xy}")
    elements = (
        Octonion.basis(0),
        x,
        y,
        xy,
        w,
        mul(w, x),
        mul(w, y),
        mul(w, xy),
    )
    for i in range(8):
        for j in range(i + 1, 8):
            if not backend.is_zero(inner(elements[i], elements[j])):
                raise FrameError(
                    f"frame elements {FRAME_NAMES[i]} and {FRAME_NAMES[j]} "
                    "are not orthogonal"
                )
    for i, el in enumerate(elements):
        expected = one if i < 4 else nw
        if not backend.eq(norm_sq(el), expected):
            raise FrameError(f"frame element {FRAME_NAMES[i]} has the wrong norm")
    return FrameB(elements, nw)


def frame_table(f: FrameB, backend: Backend = EXACT):
    """Signed 8x8 product table of the frame.

    Entry [i][j] is (sign, k, norm_power) meaning
    elements[i] * elements[j] = sign * norm_w**norm_power * elements[k],
    with norm_power = 1 exactly when both factors come from the last four
    elements.  Every product is verified against direct octonion
    multiplication; a mismatch raises FrameError.
    """
    n = f.norm_w
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            prod = mul(f.elements[i], f.elements[j])
            power = 1 if (i >= 4 and j >= 4) else 0
            target = n if power else backend.from_fraction(Fraction(1))
            entry = None
            for k in range(8):
                cand = f.elements[k]
                if oct_eq(prod, cand.scale(target), backend):
                    entry = (1, k, power)
                    break
                if oct_eq(prod, cand.scale(-target), backend):
                    entry = (-1, k, power)
                    break
            if entry is None:
                raise FrameError(
                    f"product {FRAME_NAMES[i]}*{FRAME_NAMES[j]} is not a signed "
                    "multiple of a frame element"
                )
            row.append(entry)
        table.append(tuple(row))
    return tuple(table)


def format_frame_table(table) -> str:
    """Human-readable grid for the frame product table."""
    def cell(entry):
        sign, k, power = entry
        body = ("N*" if power else "") + FRAME_NAMES[k]
        return ("-" if sign < 0 else "+") + body

    width = max(len(cell(e)) for row in table for e in row)
    width = max(width, max(len(n) for n in FRAME_NAMES))
    header = " " * (width + 2) + " ".join(n.rjust(width) for n in FRAME_NAMES)
    lines = [header]
    for i, row in enumerate(table):
        cells = " ".join(cell(e).rjust(width) for e in row)
        lines.append(FRAME_NAMES[i].rjust(width + 2) + " " + cells)
    return "\n".join(lines)


def f7_factors(
    p: OrientedPlane,
    t: CirclePoint,
    w: Optional[Vector8] = None,
    backend: Backend = EXACT,
) -> Tuple[Matrix8, Matrix8, Matrix8, Matrix8]:
    """The four commuting plane rotations whose product is the Spin(7) map."""
    if w is None:
        w = choose_w(p, backend)
    frame = basis_b(p, w, backend)
    e0, x, y, xy, wv, wx, wy, wxy = frame.elements
    planes = (
        OrientedPlane(x, y),
        OrientedPlane(e0, xy),
        OrientedPlane(wv, wxy),
        OrientedPlane(wx, wy),
    )
    return tuple(plane_rotation(q, t, backend) for q in planes)


def f7(
    p: OrientedPlane,
    t: CirclePoint,
    w: Optional[Vector8] = None,
    backend: Backend = EXACT,
) -> Matrix8:
    """Product of the four plane rotations at angle t; lands in Spin(7).

    The result does not depend on the admissible w (nor on the spanning
    pair chosen for the plane); w defaults to ``choose_w(p)``.
    """
    r1, r2, r3, r4 = f7_factors(p, t, w, backend)
    return compose(compose(compose(r1, r2), r3), r4)


def f5(p: OrientedPlane, t: CirclePoint, backend: Backend = EXACT) -> Matrix8:
    """Restriction of the Spin(7) map to planes inside span{e1..e5}."""
    for vec in (p.u, p.v):
        for idx in (0, 6, 7):
            if not backend.is_zero(vec.coords[idx]):
                raise PlaneError("plane must be supported on coordinates 1..5")
    return f7(p, t, None, backend)


def f7xf5(
    p7: OrientedPlane,
    t: CirclePoint,
    p5: OrientedPlane,
    t2: CirclePoint,
    backend: Backend = EXACT,
) -> Matrix8:
    """Pointwise product of the two Spin(7)-valued rotation maps."""
    return compose(f7(p7, t, None, backend), f5(p5, t2, backend))


def h70(
    p7: OrientedPlane,
    t: CirclePoint,
    p5: OrientedPlane,
    t2: CirclePoint,
    backend: Backend = EXACT,
) -> Matrix8:
    """Product of the two bare plane rotations; fixes e0, lands in SO(7)."""
    return compose(plane_rotation(p7, t, backend), plane_rotation(p5, t2, backend))


def p_map(t: CirclePoint, t2: CirclePoint) -> Tuple[CirclePoint, CirclePoint]:
    """Double both circle parameters; plane arguments pass through unchanged."""
    return double_angle(t), double_angle(t2)


def project_double_cover(gt: Matrix8) -> Matrix8:
    """Candidate SO(7) image of g~ under the double covering.

    The defining relation g(a) g~(b) = g~(a*b) at b = e0 forces
    g(a) = g~(a) * g~(e0)^-1; the matrix built column-by-column from that
    formula (with g(e0) = e0) is the canonical covering image whenever
    g~ lies in Spin(7), and the candidate tested for membership otherwise.
    """
    ge0 = gt.column(0)
    cols = [Octonion.basis(0)]
    for i in range(1, 8):
        cols.append(right_divide(gt.column(i), ge0))
    return Matrix8(tuple(tuple(cols[j].coords[i] for j in range(8)) for i in range(8)))


@dataclass(frozen=True)
class MembershipReport:
    """Spin(7) membership verdict for one candidate matrix."""

    candidate_g: Matrix8
    relation_failures: Tuple[Tuple[int, int], ...]
    g_in_so7: bool
    is_member: bool

    def to_dict(self, backend: Backend = EXACT) -> dict:
        return {
            "is_member": self.is_member,
            "g_in_so7": self.g_in_so7,
            "relation_failures": [list(p) for p in self.relation_failures],
            "candidate_g": [
                [backend.format(x) for x in row] for row in self.candidate_g.rows
            ],
        }


def verify_spin7(gt: Matrix8, backend: Backend = EXACT) -> MembershipReport:
    """Decide whether g~ lies in Spin(7).

    Extracts the unique candidate g with g(a) g~(e0) = g~(a), checks that g
    fixes e0, preserves the imaginary subspace, and is special orthogonal,
    and checks the relation g(ei) * g~(ej) = g~(ei*ej) on all 64 basis
    pairs (bilinearity extends the basis check to all octonion pairs).
    """
    g = project_double_cover(gt)
    fixes_e0 = oct_eq(g.column(0), Octonion.basis(0), backend)
    maps_im = all(backend.is_zero(g.rows[0][j]) for j in range(1, 8))
    in_so7 = fixes_e0 and maps_im and so_check(g, backend).passed
    failures = []
    for i in range(8):
        for j in range(8):
            lhs = mul(g.column(i), gt.column(j))
            rhs = gt.column(FANO_INDEX[i][j]).scale(
                backend.from_fraction(Fraction(FANO_SIGN[i][j]))
            )
            if not oct_eq(lhs, rhs, backend):
                failures.append((i, j))
    return MembershipReport(g, tuple(failures), in_so7, in_so7 and not failures)


@dataclass(frozen=True)
class TrialityReport:
    """Octonion-compatibility check of one rotation-product instance."""

    pair_failures: Tuple[Tuple[int, int], ...]
    half_turn_failures: Tuple[Tuple[int, int], ...]
    explicit_case_ok: bool
    passed: bool

    def to_dict(self) -> dict:
        return {
            "pair_failures": [list(p) for p in self.pair_failures],
            "half_turn_failures": [list(p) for p in self.half_turn_failures],
            "explicit_case_ok": self.explicit_case_ok,
            "passed": self.passed,
        }


def triality_check(
    p: OrientedPlane,
    t: CirclePoint,
    w: Optional[Vector8] = None,
    backend: Backend = EXACT,
) -> TrialityReport:
    """Check g(a) psi(b) = psi(a*b) on all 64 ordered frame pairs.

    Here psi is the four-rotation product at angle t and g the bare plane
    rotation at the doubled angle.  Also checks the quarter-turn identity
    a * psi_quarter(b) = psi_quarter(a*b) for frame elements a outside
    {x, y}, and the closed form g(x) psi(y) = -s*e0 + c*xy.
    """
    if w is None:
        w = choose_w(p, backend)
    frame = basis_b(p, w, backend)
    psi = f7(p, t, w, backend)
    g = plane_rotation(p, double_angle(t), backend)

    pair_failures = []
    for i, alpha in enumerate(frame.elements):
        g_alpha = apply(g, alpha)
        for j, beta in enumerate(frame.elements):
            lhs = mul(g_alpha, apply(psi, beta))
            rhs = apply(psi, mul(alpha, beta))
            if not oct_eq(lhs, rhs, backend):
                pair_failures.append((i, j))

    quarter = CirclePoint(
        backend.from_fraction(Fraction(0)), backend.from_fraction(Fraction(1))
    )
    psi_q = f7(p, quarter, w, backend)
    half_turn_failures = []
    for i, alpha in enumerate(frame.elements):
        if i in (1, 2):
            continue
        for j, beta in enumerate(frame.elements):
            lhs = mul(alpha, apply(psi_q, beta))
            rhs = apply(psi_q, mul(alpha, beta))
            if not oct_eq(lhs, rhs, backend):
                half_turn_failures.append((i, j))

    x, y, xy = frame.elements[1], frame.elements[2], frame.elements[3]
    closed_form = Octonion.basis(0).scale(-t.s) + xy.scale(t.c)
    lhs = mul(apply(g, x), apply(psi, y))
    explicit_ok = oct_eq(lhs, closed_form, backend) and oct_eq(
        apply(psi, mul(x, y)), closed_form, backend
    )

    return TrialityReport(
        tuple(pair_failures),
        tuple(half_turn_failures),
        explicit_ok,
        not pair_failures and not half_turn_failures and explicit_ok,
    )


def spin8_map(
    p7: OrientedPlane,
    t: CirclePoint,
    p5: OrientedPlane,
    t2: CirclePoint,
    s: Vector8,
    backend: Backend = EXACT,
) -> Tuple[Matrix8, Vector8]:
    """The Spin(8)-valued map in Spin(7) x S^7 product coordinates.

    Returns the rotation-product matrix together with the unit vector s,
    which passes through unchanged.
    """
    if not backend.eq(norm_sq(s), backend.from_fraction(Fraction(1))):
        raise ValueError("s must be a unit vector")
    return f7xf5(p7, t, p5, t2, backend), s
