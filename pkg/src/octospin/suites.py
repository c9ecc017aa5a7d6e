"""Named verification suites and the report-producing runner.

Each suite checks a family of claims and returns one record per claim:
a stable claim id, the identity in plain formula text, how many instances
ran, and descriptions of any failing instances.  All randomness derives
from (seed, suite, claim) streams, so a report is a pure function of its
configuration and two runs with the same config are byte-identical.

Instances are always generated in exact rational arithmetic; the float
backend receives the same instances converted to floats, which keeps the
two backends comparable seed-for-seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional

from . import degree as degree_mod
from .geometry import (
    Matrix8,
    OrientedPlane,
    apply,
    cayley_orthogonal,
    choose_w,
    compose,
    mat_eq,
    plane_rotation,
    random_antisymmetric,
    random_orthonormal_pair,
    rotate_plane_basis,
    so_check,
)
from .octonion import (
    FANO_CYCLES,
    FANO_INDEX,
    FANO_SIGN,
    Octonion,
    conj,
    inner,
    mul,
    norm_sq,
    oct_eq,
    random_octonion,
    right_divide,
    serialize,
)
from .scalar import (
    Backend,
    CirclePoint,
    EXACT,
    angle_sum,
    circle_from_parameter,
    derived_rng,
    double_angle,
    make_backend,
    random_rational,
)
from .spinmaps import (
    basis_b,
    f5,
    f7,
    f7_factors,
    f7xf5,
    frame_table,
    p_map,
    project_double_cover,
    spin8_map,
    triality_check,
    verify_spin7,
)

SUITE_NAMES = (
    "octonion-identities",
    "rotation-laws",
    "f7-well-defined",
    "spin7-membership",
    "triality",
    "double-cover",
    "commutative-square",
    "degree-ledger",
)

MAX_REPORTED_FAILURES = 5


@dataclass(frozen=True)
class RunConfig:
    """Configuration shared by every suite in one verification run."""

    backend: str = "exact"
    epsilon: float = 1e-9
    seed: int = 42
    trials: int = 100

    def validate(self) -> None:
        if self.backend not in ("exact", "float"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.backend == "float" and not self.epsilon > 0:
            raise ValueError("epsilon must be positive")

    def make_backend(self) -> Backend:
        return make_backend(self.backend, self.epsilon)


@dataclass
class ClaimResult:
    """Outcome of one verified claim."""

    claim: str
    statement: str
    instances: int
    failure_count: int
    failures: list
    passed: bool
    details: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "statement": self.statement,
            "instances": self.instances,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "passed": self.passed,
        }
        if self.details is not None:
            out["details"] = self.details
        return out


def _run_claim(claim, statement, instances, check, details=None) -> ClaimResult:
    """Run ``check(index) -> failure-description-or-None`` over instances."""
    failures = []
    for k in range(instances):
        bad = check(k)
        if bad is not None:
            failures.append(bad)
    return ClaimResult(
        claim=claim,
        statement=statement,
        instances=instances,
        failure_count=len(failures),
        failures=failures[:MAX_REPORTED_FAILURES],
        passed=not failures,
        details=details,
    )


def _random_angle(rng) -> CirclePoint:
    return circle_from_parameter(random_rational(rng, 8, 5))


def _nonzero_imaginary(rng) -> Octonion:
    while True:
        a = random_octonion(rng, imaginary=True)
        if norm_sq(a) != 0:
            return a


def _orthogonal_to(rng, others) -> Octonion:
    """Random nonzero imaginary octonion orthogonal to the given vectors."""
    while True:
        a = random_octonion(rng, imaginary=True)
        for b in others:
            a = a - b.scale(inner(a, b) / norm_sq(b))
        if norm_sq(a) != 0:
            return a


def _describe_octonion(a: Octonion, backend: Backend) -> list:
    return serialize(a, backend)


def _describe_plane(p: OrientedPlane, backend: Backend) -> dict:
    return {"u": serialize(p.u, backend), "v": serialize(p.v, backend)}


def _describe_angle(t: CirclePoint, backend: Backend) -> dict:
    return {"c": backend.format(t.c), "s": backend.format(t.s)}


def _exact_plane(seed, restrict, index) -> OrientedPlane:
    return random_orthonormal_pair(seed, restrict, index)


# --------------------------------------------------------------------------
# octonion-identities


def suite_octonion_identities(backend: Backend, seed: int, trials: int):
    conv = backend.from_fraction
    results = []

    def pair_stream(name):
        rng = derived_rng(seed, "octonion", name)
        while True:
            yield (
                random_octonion(rng).map_scalars(conv),
                random_octonion(rng).map_scalars(conv),
            )

    def triple_stream(name):
        rng = derived_rng(seed, "octonion", name)
        while True:
            yield tuple(
                random_octonion(rng).map_scalars(conv) for _ in range(3)
            )

    e = [Octonion.basis(i).map_scalars(conv) for i in range(8)]

    results.append(
        _run_claim(
            "octonion.e3e2-equals-minus-e1",
            "e3 * e2 = -e1",
            1,
            lambda k: None if oct_eq(mul(e[3], e[2]), -e[1], backend) else "e3*e2 != -e1",
        )
    )

    pairs = pair_stream("alternative")

    def check_alternative(k):
        x, y = next(pairs)
        left = oct_eq(mul(x, mul(x, y)), mul(mul(x, x), y), backend)
        right = oct_eq(mul(mul(y, x), x), mul(y, mul(x, x)), backend)
        if left and right:
            return None
        return {"x": _describe_octonion(x, backend), "y": _describe_octonion(y, backend)}

    results.append(
        _run_claim(
            "octonion.alternative",
            "x*(x*y) = (x*x)*y and (y*x)*x = y*(x*x)",
            trials,
            check_alternative,
        )
    )

    triples1 = triple_stream("moufang-1")

    def check_moufang_1(k):
        x, y, z = next(triples1)
        a = mul(mul(x, mul(y, z)), x)
        b = mul(x, mul(mul(y, z), x))
        c = mul(mul(x, y), mul(z, x))
        if oct_eq(a, b, backend) and oct_eq(b, c, backend):
            return None
        return {"x": _describe_octonion(x, backend)}

    results.append(
        _run_claim(
            "octonion.moufang-bimultiplication",
            "(x*(y*z))*x = x*((y*z)*x) = (x*y)*(z*x)",
            trials,
            check_moufang_1,
        )
    )

    triples2 = triple_stream("moufang-2")

    def check_moufang_2(k):
        x, y, z = next(triples2)
        if oct_eq(mul(mul(x, mul(y, x)), z), mul(x, mul(y, mul(x, z))), backend):
            return None
        return {"x": _describe_octonion(x, backend)}

    results.append(
        _run_claim(
            "octonion.moufang-left",
            "(x*(y*x))*z = x*(y*(x*z))",
            trials,
            check_moufang_2,
        )
    )

    triples3 = triple_stream("moufang-3")

    def check_moufang_3(k):
        x, y, z = next(triples3)
        if oct_eq(mul(y, mul(x, mul(z, x))), mul(mul(mul(y, x), z), x), backend):
            return None
        return {"x": _describe_octonion(x, backend)}

    results.append(
        _run_claim(
            "octonion.moufang-right",
            "y*(x*(z*x)) = ((y*x)*z)*x",
            trials,
            check_moufang_3,
        )
    )

    anti_rng = derived_rng(seed, "octonion", "anticommute")

    def check_anticommute(k):
        x = _nonzero_imaginary(anti_rng)
        y = _orthogonal_to(anti_rng, [x])
        x, y = x.map_scalars(conv), y.map_scalars(conv)
        if oct_eq(mul(x, y), -mul(y, x), backend):
            return None
        return {"x": _describe_octonion(x, backend), "y": _describe_octonion(y, backend)}

    results.append(
        _run_claim(
            "octonion.anticommute-orthogonal",
            "x*y = -y*x for orthogonal purely imaginary x, y",
            trials,
            check_anticommute,
        )
    )

    fano_pairs = [(a, b) for (a, b, _) in FANO_CYCLES]

    def check_unit_triple(k):
        if k < len(fano_pairs):
            a, b = fano_pairs[k]
            x, y = e[a], e[b]
        else:
            p = _exact_plane(seed, "R7", ("unit-triple", k)).map_scalars(conv)
            x, y = p.u, p.v
        z = mul(x, y)
        if oct_eq(mul(y, z), x, backend):
            return None
        return {"x": _describe_octonion(x, backend), "y": _describe_octonion(y, backend)}

    results.append(
        _run_claim(
            "octonion.unit-triple-cycle",
            "y*(x*y) = x for orthonormal purely imaginary x, y",
            len(fano_pairs) + trials,
            check_unit_triple,
        )
    )

    assoc_rng = derived_rng(seed, "octonion", "anti-associative")

    def check_anti_associative(k):
        x = _nonzero_imaginary(assoc_rng)
        y = _orthogonal_to(assoc_rng, [x])
        xy = mul(x, y)
        z = _orthogonal_to(assoc_rng, [x, y, xy])
        x, y, z = (v.map_scalars(conv) for v in (x, y, z))
        if oct_eq(mul(x, mul(y, z)), -mul(mul(x, y), z), backend):
            return None
        return {
            "x": _describe_octonion(x, backend),
            "y": _describe_octonion(y, backend),
            "z": _describe_octonion(z, backend),
        }

    results.append(
        _run_claim(
            "octonion.orthogonal-anti-associative",
            "x*(y*z) = -(x*y)*z when x, y, z, x*y are mutually orthogonal imaginary",
            trials,
            check_anti_associative,
        )
    )

    norm_pairs = pair_stream("norm")

    def check_norm(k):
        x, y = next(norm_pairs)
        if backend.eq(norm_sq(mul(x, y)), norm_sq(x) * norm_sq(y)):
            return None
        return {"x": _describe_octonion(x, backend), "y": _describe_octonion(y, backend)}

    results.append(
        _run_claim(
            "octonion.norm-multiplicative",
            "|x*y|^2 = |x|^2 * |y|^2",
            trials,
            check_norm,
        )
    )

    conj_rng = derived_rng(seed, "octonion", "conjugation")

    def check_conj(k):
        x = random_octonion(conj_rng).map_scalars(conv)
        expected = e[0].scale(norm_sq(x))
        if oct_eq(conj(conj(x)), x, backend) and oct_eq(mul(x, conj(x)), expected, backend):
            return None
        return {"x": _describe_octonion(x, backend)}

    results.append(
        _run_claim(
            "octonion.conjugation",
            "conj(conj(x)) = x and x*conj(x) = |x|^2 e0",
            trials,
            check_conj,
        )
    )

    div_rng = derived_rng(seed, "octonion", "right-division")

    def check_division(k):
        b = random_octonion(div_rng).map_scalars(conv)
        u = random_octonion(div_rng)
        while norm_sq(u) == 0:
            u = random_octonion(div_rng)
        u = u.map_scalars(conv)
        if oct_eq(right_divide(mul(b, u), u), b, backend):
            return None
        return {"b": _describe_octonion(b, backend), "u": _describe_octonion(u, backend)}

    results.append(
        _run_claim(
            "octonion.right-division",
            "right_divide(b*u, u) = b for u != 0",
            trials,
            check_division,
        )
    )

    def check_table(k):
        seen = {}
        for a, b, c in FANO_CYCLES:
            for pair in ((a, b), (b, c), (c, a)):
                key = frozenset(pair)
                if key in seen:
                    return f"pair {sorted(key)} appears on two lines"
                seen[key] = True
        if len(seen) != 21:
            return "table does not cover all 21 imaginary pairs"
        for i in range(1, 8):
            for j in range(1, 8):
                if i == j:
                    continue
                if FANO_INDEX[i][j] != FANO_INDEX[j][i]:
                    return f"index table not symmetric at ({i},{j})"
                if FANO_SIGN[i][j] != -FANO_SIGN[j][i]:
                    return f"sign table not antisymmetric at ({i},{j})"
        return None

    results.append(
        _run_claim(
            "octonion.fano-consistency",
            "every imaginary pair lies on exactly one oriented line; ei*ej = -ej*ei",
            1,
            check_table,
        )
    )

    return results


# --------------------------------------------------------------------------
# rotation-laws


def suite_rotation_laws(backend: Backend, seed: int, trials: int):
    conv = backend.from_fraction
    results = []

    def instance(name, k):
        p = _exact_plane(seed, "R7", (name, k))
        rng = derived_rng(seed, "rotation", name, k)
        t = _random_angle(rng)
        t2 = _random_angle(rng)
        return p, t, t2, rng

    def check_one_parameter(k):
        p, t, t2, _ = instance("one-parameter", k)
        p, t, t2 = p.map_scalars(conv), t.map_scalars(conv), t2.map_scalars(conv)
        lhs = plane_rotation(p, angle_sum(t, t2), backend)
        rhs = compose(plane_rotation(p, t, backend), plane_rotation(p, t2, backend))
        if mat_eq(lhs, rhs, backend):
            return None
        return {"plane": _describe_plane(p, backend), "t": _describe_angle(t, backend)}

    results.append(
        _run_claim(
            "rotation.one-parameter",
            "rot(P, t + t') = rot(P, t) * rot(P, t')",
            trials,
            check_one_parameter,
        )
    )

    def check_fixes_complement(k):
        p, t, _, rng = instance("fixes-complement", k)
        z = _orthogonal_to(rng, [p.u, p.v])
        p, t, z = p.map_scalars(conv), t.map_scalars(conv), z.map_scalars(conv)
        if oct_eq(apply(plane_rotation(p, t, backend), z), z, backend):
            return None
        return {"plane": _describe_plane(p, backend), "z": _describe_octonion(z, backend)}

    results.append(
        _run_claim(
            "rotation.fixes-complement",
            "rot(P, t) fixes every vector orthogonal to the plane",
            trials,
            check_fixes_complement,
        )
    )

    def check_orientation(k):
        p, t, _, _ = instance("orientation", k)
        p, t = p.map_scalars(conv), t.map_scalars(conv)
        lhs = plane_rotation(p, t, backend)
        rhs = plane_rotation(OrientedPlane(p.v, p.u), t.inverse(), backend)
        if mat_eq(lhs, rhs, backend):
            return None
        return {"plane": _describe_plane(p, backend)}

    results.append(
        _run_claim(
            "rotation.orientation-reversal",
            "rot([u,v], t) = rot([v,u], -t)",
            trials,
            check_orientation,
        )
    )

    def check_scaling(k):
        p, t, _, rng = instance("scaling", k)
        lam = random_rational(rng, 9, 4)
        while lam == 0:
            lam = random_rational(rng, 9, 4)
        scaled = OrientedPlane(p.u.scale(lam), p.v.scale(lam))
        p, t, scaled = p.map_scalars(conv), t.map_scalars(conv), scaled.map_scalars(conv)
        if mat_eq(plane_rotation(scaled, t, backend), plane_rotation(p, t, backend), backend):
            return None
        return {"plane": _describe_plane(p, backend), "lambda": EXACT.format(lam)}

    results.append(
        _run_claim(
            "rotation.scaling-invariance",
            "rot([a*u, a*v], t) = rot([u, v], t) for a != 0",
            trials,
            check_scaling,
        )
    )

    def check_basis(k):
        p, t, s, _ = instance("basis", k)
        p, t, s = p.map_scalars(conv), t.map_scalars(conv), s.map_scalars(conv)
        lhs = plane_rotation(rotate_plane_basis(p, s), t, backend)
        if mat_eq(lhs, plane_rotation(p, t, backend), backend):
            return None
        return {"plane": _describe_plane(p, backend), "s": _describe_angle(s, backend)}

    results.append(
        _run_claim(
            "rotation.basis-invariance",
            "rot(P, t) does not depend on the spanning pair of P",
            trials,
            check_basis,
        )
    )

    def check_so(k):
        p, t, _, _ = instance("so", k)
        p, t = p.map_scalars(conv), t.map_scalars(conv)
        if so_check(plane_rotation(p, t, backend), backend).passed:
            return None
        return {"plane": _describe_plane(p, backend), "t": _describe_angle(t, backend)}

    results.append(
        _run_claim(
            "rotation.special-orthogonal",
            "every plane rotation passes the SO(8) check",
            trials,
            check_so,
        )
    )

    def check_cayley(k):
        rng = derived_rng(seed, "rotation", "cayley", k)
        q = cayley_orthogonal(random_antisymmetric(rng, range(8)))
        if so_check(q.map_scalars(conv), backend).passed:
            return None
        return {"trial": k}

    results.append(
        _run_claim(
            "geometry.cayley-special-orthogonal",
            "Cayley transforms of antisymmetric matrices pass the SO(8) check",
            trials,
            check_cayley,
        )
    )

    return results


# --------------------------------------------------------------------------
# f7-well-defined


def suite_f7_well_defined(backend: Backend, seed: int, trials: int):
    conv = backend.from_fraction
    results = []

    def instance(name, k):
        p = _exact_plane(seed, "R7", (name, k))
        rng = derived_rng(seed, "f7wd", name, k)
        t = _random_angle(rng)
        return p, t, rng

    def check_frame(k):
        p, _, _ = instance("frame", k)
        p = p.map_scalars(conv)
        w = choose_w(p, backend)
        frame = basis_b(p, w, backend)
        frame_table(frame, backend)
        return None

    results.append(
        _run_claim(
            "frame.orthogonal-basis",
            "(e0, x, y, xy, w, wx, wy, w(xy)) is orthogonal and multiplies "
            "into signed frame elements",
            trials,
            check_frame,
        )
    )

    def check_plane_basis(k):
        p, t, rng = instance("plane-basis", k)
        s = _random_angle(rng)
        p, t, s = p.map_scalars(conv), t.map_scalars(conv), s.map_scalars(conv)
        w = choose_w(p, backend)
        lhs = f7(rotate_plane_basis(p, s), t, w, backend)
        if mat_eq(lhs, f7(p, t, w, backend), backend):
            return None
        return {"plane": _describe_plane(p, backend), "s": _describe_angle(s, backend)}

    results.append(
        _run_claim(
            "f7.plane-basis-invariance",
            "the rotation product is invariant under rotating the spanning pair",
            trials,
            check_plane_basis,
        )
    )

    def random_w_combo(rng, frame):
        while True:
            a, b, c, d = (random_rational(rng, 6, 4) for _ in range(4))
            if a or b or c or d:
                break
        w2 = (
            frame.elements[4].scale(a)
            + frame.elements[5].scale(b)
            + frame.elements[6].scale(c)
            + frame.elements[7].scale(d)
        )
        return (a, b, c, d), w2

    def check_w_invariance(k):
        p, t, rng = instance("w-invariance", k)
        p, t = p.map_scalars(conv), t.map_scalars(conv)
        w = choose_w(p, backend)
        frame = basis_b(p, w, backend)
        coeffs, w2 = random_w_combo(rng, frame)
        w2 = w2.map_scalars(conv)
        if mat_eq(f7(p, t, w2, backend), f7(p, t, w, backend), backend):
            return None
        return {
            "plane": _describe_plane(p, backend),
            "coefficients": [EXACT.format(c) for c in coeffs],
        }

    results.append(
        _run_claim(
            "f7.w-choice-invariance",
            "any nonzero w' = a*w + b*wx + c*wy + d*w(xy) gives the same map",
            trials,
            check_w_invariance,
        )
    )

    def expansion_check(which, combine):
        def check(k):
            p, _, rng = instance(f"w-expansion-{which}", k)
            p = p.map_scalars(conv)
            w = choose_w(p, backend)
            frame = basis_b(p, w, backend)
            (a, b, c, d), w2 = random_w_combo(rng, frame)
            _, _, _, xy, wv, wx, wy, wxy = frame.elements
            factor = {"x": frame.elements[1], "y": frame.elements[2], "xy": xy}[which]
            lhs = mul(w2, factor)
            rhs = combine(a, b, c, d, wv, wx, wy, wxy)
            if oct_eq(lhs, rhs, backend):
                return None
            return {"plane": _describe_plane(p, backend)}

        return check

    results.append(
        _run_claim(
            "f7.w-expansion-x",
            "w'*x = -b*w + a*wx - d*wy + c*w(xy)",
            trials,
            expansion_check(
                "x",
                lambda a, b, c, d, wv, wx, wy, wxy: wv.scale(-b)
                + wx.scale(a)
                + wy.scale(-d)
                + wxy.scale(c),
            ),
        )
    )
    results.append(
        _run_claim(
            "f7.w-expansion-y",
            "w'*y = -c*w + d*wx + a*wy - b*w(xy)",
            trials,
            expansion_check(
                "y",
                lambda a, b, c, d, wv, wx, wy, wxy: wv.scale(-c)
                + wx.scale(d)
                + wy.scale(a)
                + wxy.scale(-b),
            ),
        )
    )
    results.append(
        _run_claim(
            "f7.w-expansion-xy",
            "w'*(xy) = -d*w - c*wx + b*wy + a*w(xy)",
            trials,
            expansion_check(
                "xy",
                lambda a, b, c, d, wv, wx, wy, wxy: wv.scale(-d)
                + wx.scale(-c)
                + wy.scale(b)
                + wxy.scale(a),
            ),
        )
    )

    def check_tail_action(k):
        p, t, rng = instance("tail-action", k)
        p, t = p.map_scalars(conv), t.map_scalars(conv)
        w = choose_w(p, backend)
        frame = basis_b(p, w, backend)
        _, w2 = random_w_combo(rng, frame)
        w2 = w2.map_scalars(conv)
        xy = frame.elements[3]
        _, _, r3, r4 = f7_factors(p, t, w, backend)
        psi = compose(r3, r4)
        lhs = apply(psi, w2)
        rhs = w2.scale(t.c) + mul(w2, xy).scale(t.s)
        if oct_eq(lhs, rhs, backend):
            return None
        return {"plane": _describe_plane(p, backend), "t": _describe_angle(t, backend)}

    results.append(
        _run_claim(
            "f7.tail-pair-action",
            "the last two rotation factors send w' to c*w' + s*(w'*(xy))",
            trials,
            check_tail_action,
        )
    )

    return results


# --------------------------------------------------------------------------
# spin7-membership


def _random_unit_vector(seed, k) -> Octonion:
    rng = derived_rng(seed, "unit-vector", k)
    q = cayley_orthogonal(random_antisymmetric(rng, range(8)))
    return q.column(rng.randrange(8))


def suite_spin7_membership(backend: Backend, seed: int, trials: int):
    conv = backend.from_fraction
    results = []

    def rand_inputs(name, k, restrict="R7"):
        p = _exact_plane(seed, restrict, (name, k)).map_scalars(conv)
        rng = derived_rng(seed, "membership", name, k)
        t = _random_angle(rng).map_scalars(conv)
        return p, t

    def check_f7(k):
        p, t = rand_inputs("f7", k)
        report = verify_spin7(f7(p, t, None, backend), backend)
        if report.is_member:
            return None
        return {
            "plane": _describe_plane(p, backend),
            "t": _describe_angle(t, backend),
            "relation_failures": [list(x) for x in report.relation_failures[:4]],
        }

    results.append(
        _run_claim(
            "spin7.f7-image",
            "every value of the four-rotation product satisfies the "
            "membership relation g(a) g~(b) = g~(a*b)",
            trials,
            check_f7,
        )
    )

    def check_f5(k):
        p, t = rand_inputs("f5", k, restrict="R5")
        if verify_spin7(f5(p, t, backend), backend).is_member:
            return None
        return {"plane": _describe_plane(p, backend)}

    results.append(
        _run_claim(
            "spin7.f5-image",
            "every value of the restricted map lies in Spin(7)",
            trials,
            check_f5,
        )
    )

    def check_product(k):
        p7, t = rand_inputs("product7", k)
        p5, t2 = rand_inputs("product5", k, restrict="R5")
        if verify_spin7(f7xf5(p7, t, p5, t2, backend), backend).is_member:
            return None
        return {"trial": k}

    results.append(
        _run_claim(
            "spin7.product-image",
            "pointwise products of the two maps lie in Spin(7)",
            trials,
            check_product,
        )
    )

    minus_identity = (-Matrix8.identity()).map_scalars(conv)
    results.append(
        _run_claim(
            "spin7.minus-identity",
            "-I lies in Spin(7) (the nontrivial deck transformation)",
            1,
            lambda k: None
            if verify_spin7(minus_identity, backend).is_member
            else "verify_spin7(-I) rejected",
        )
    )

    def check_negative_control(k):
        plane = OrientedPlane(Octonion.basis(0), Octonion.basis(1)).map_scalars(conv)
        quarter = CirclePoint(conv(Fraction(0)), conv(Fraction(1)))
        report = verify_spin7(plane_rotation(plane, quarter, backend), backend)
        if not report.is_member and report.relation_failures:
            return None
        return "a single-plane rotation of R^8 was accepted as a member"

    results.append(
        _run_claim(
            "spin7.single-rotation-rejected",
            "a generic single-plane rotation of R^8 violates the membership relation",
            1,
            check_negative_control,
        )
    )

    def check_spin8(k):
        p7, t = rand_inputs("spin8-7", k)
        p5, t2 = rand_inputs("spin8-5", k, restrict="R5")
        s = _random_unit_vector(seed, k)
        s_b = s.map_scalars(conv)
        matrix, s_out = spin8_map(p7, t, p5, t2, s_b, backend)
        if not verify_spin7(matrix, backend).is_member:
            return {"trial": k, "reason": "first component not a member"}
        if s_out is not s_b:
            return {"trial": k, "reason": "s vector did not pass through"}
        return None

    results.append(
        _run_claim(
            "spin8.product-coordinates",
            "the Spin(8)-valued map has a Spin(7) first component and "
            "passes s through unchanged",
            trials,
            check_spin8,
        )
    )

    return results


# --------------------------------------------------------------------------
# triality


def suite_triality(backend: Backend, seed: int, trials: int):
    conv = backend.from_fraction
    results = []

    def rand_inputs(name, k):
        p = _exact_plane(seed, "R7", (name, k)).map_scalars(conv)
        rng = derived_rng(seed, "triality", name, k)
        t = _random_angle(rng).map_scalars(conv)
        return p, t

    def run_check(k):
        p, t = rand_inputs("pairs", k)
        return triality_check(p, t, None, backend)

    reports = {}

    def check_pairs(k):
        reports[k] = run_check(k)
        if not reports[k].pair_failures:
            return None
        return {"trial": k, "failures": [list(x) for x in reports[k].pair_failures[:4]]}

    results.append(
        _run_claim(
            "triality.sixty-four-pairs",
            "g(a) psi(b) = psi(a*b) for all 64 ordered frame pairs",
            trials,
            check_pairs,
        )
    )

    results.append(
        _run_claim(
            "triality.explicit-case",
            "g(x) psi(y) = -s*e0 + c*xy = psi(xy)",
            trials,
            lambda k: None if reports[k].explicit_case_ok else {"trial": k},
        )
    )

    results.append(
        _run_claim(
            "triality.quarter-turn",
            "a * psi_quarter(b) = psi_quarter(a*b) for frame elements a "
            "outside {x, y}",
            trials,
            lambda k: None
            if not reports[k].half_turn_failures
            else {"trial": k},
        )
    )

    def check_factors_commute(k):
        p, t = rand_inputs("commute", k)
        factors = f7_factors(p, t, None, backend)
        for i in range(4):
            for j in range(i + 1, 4):
                if not mat_eq(
                    compose(factors[i], factors[j]),
                    compose(factors[j], factors[i]),
                    backend,
                ):
                    return {"trial": k, "pair": [i, j]}
        return None

    results.append(
        _run_claim(
            "f7.factors-commute",
            "the four rotation factors commute pairwise",
            trials,
            check_factors_commute,
        )
    )

    return results


# --------------------------------------------------------------------------
# double-cover


def suite_double_cover(backend: Backend, seed: int, trials: int):
    conv = backend.from_fraction
    results = []

    def rand_inputs(name, k, restrict="R7"):
        p = _exact_plane(seed, restrict, (name, k)).map_scalars(conv)
        rng = derived_rng(seed, "cover", name, k)
        t = _random_angle(rng).map_scalars(conv)
        return p, t

    def check_projection(k):
        p, t = rand_inputs("projection", k)
        lhs = project_double_cover(f7(p, t, None, backend))
        rhs = plane_rotation(p, double_angle(t), backend)
        if mat_eq(lhs, rhs, backend):
            return None
        return {"plane": _describe_plane(p, backend), "t": _describe_angle(t, backend)}

    results.append(
        _run_claim(
            "cover.projects-to-doubled-rotation",
            "projecting the four-rotation product yields the plane rotation "
            "at the doubled angle",
            trials,
            check_projection,
        )
    )

    identity = Matrix8.identity().map_scalars(conv)
    minus_identity = (-Matrix8.identity()).map_scalars(conv)

    def check_center(k):
        p, _ = rand_inputs("center", k)
        half = CirclePoint(conv(Fraction(-1)), conv(Fraction(0)))
        if not mat_eq(f7(p, half, None, backend), minus_identity, backend):
            return {"plane": _describe_plane(p, backend), "reason": "f7 at angle pi != -I"}
        if not mat_eq(project_double_cover(minus_identity), identity, backend):
            return {"reason": "-I did not project to the identity"}
        return None

    results.append(
        _run_claim(
            "cover.center",
            "the angle-pi value of the rotation product is -I, and -I "
            "projects to the identity",
            trials,
            check_center,
        )
    )

    def check_homomorphism(k):
        p7, t = rand_inputs("hom7", k)
        p5, t2 = rand_inputs("hom5", k, restrict="R5")
        a = f7(p7, t, None, backend)
        b = f5(p5, t2, backend)
        lhs = project_double_cover(compose(a, b))
        rhs = compose(project_double_cover(a), project_double_cover(b))
        if mat_eq(lhs, rhs, backend):
            return None
        return {"trial": k}

    results.append(
        _run_claim(
            "cover.homomorphism",
            "the projection is multiplicative on products of map values",
            trials,
            check_homomorphism,
        )
    )

    return results


# --------------------------------------------------------------------------
# commutative-square


def suite_commutative_square(backend: Backend, seed: int, trials: int):
    results = []
    square = degree_mod.verify_square(seed, trials, backend)
    results.append(
        ClaimResult(
            claim="square.pointwise",
            statement="cover(f7(P,t) * f5(P',t')) = h70(P, 2t, P', 2t') pointwise",
            instances=square.trials,
            failure_count=len(square.failures),
            failures=list(square.failures[:MAX_REPORTED_FAILURES]),
            passed=square.passed,
            details={"max_residual": float(square.max_residual)},
        )
    )

    def check_p_map(k):
        rng = derived_rng(seed, "square", "p-map", k)
        t, t2 = _random_angle(rng), _random_angle(rng)
        d1, d2 = p_map(t, t2)
        ok = (
            d1 == double_angle(t)
            and d2 == double_angle(t2)
            and d1.c * d1.c + d1.s * d1.s == 1
        )
        return None if ok else {"trial": k}

    results.append(
        _run_claim(
            "square.angle-doubling",
            "the reparametrization doubles both circle factors and stays "
            "on the circle",
            trials,
            check_p_map,
        )
    )

    return results


# --------------------------------------------------------------------------
# degree-ledger


def suite_degree_ledger(backend: Backend, seed: int, trials: int):
    results = []

    def wind(f, samples=256):
        return degree_mod.winding_degree(f, samples, backend)

    checks = [
        ("degree.identity-map", "the identity circle map has winding degree 1",
         lambda: wind(lambda p: p) == 1),
        ("degree.double-angle", "the angle-doubling map has winding degree 2",
         lambda: wind(double_angle) == 2),
        ("degree.constant-map", "a constant circle map has winding degree 0",
         lambda: wind(lambda p: CirclePoint(p.c * 0 + 1, p.s * 0)) == 0),
        ("degree.composition", "winding degree is multiplicative: doubling "
         "twice has degree 4",
         lambda: wind(lambda p: double_angle(double_angle(p))) == 4),
        ("degree.sample-stability", "the degree of the doubling map is the "
         "same at 256 and 1024 samples",
         lambda: wind(double_angle, 256) == wind(double_angle, 1024)),
    ]
    for claim, statement, fn in checks:
        results.append(
            _run_claim(claim, statement, 1, lambda k, fn=fn: None if fn() else "mismatch")
        )

    square_trials = max(1, min(trials, 10))
    square = degree_mod.verify_square(seed, square_trials, backend)
    try:
        ledger = degree_mod.degree_ledger(
            square,
            degree_mod.winding_degree(double_angle, 256, backend),
            degree_mod.winding_degree(double_angle, 256, backend),
        )
        ok = (
            ledger.conclusion_magnitude == 8
            and not ledger.sign_determined
            and ledger.conclusion_magnitude * ledger.cover_multiplier
            == ledger.h_multiplier_magnitude * ledger.p_degree
        )
        details = ledger.to_dict()
        details["square"] = square.to_dict()
        failures = [] if ok else ["ledger arithmetic did not yield magnitude 8"]
    except degree_mod.LedgerError as err:
        details = {"error": str(err)}
        failures = [str(err)]
    results.append(
        ClaimResult(
            claim="degree.ledger",
            statement="combining the computed circle degrees (2 and 2) with the "
            "cited multipliers (2 and 4) yields magnitude 8, sign undetermined",
            instances=1,
            failure_count=len(failures),
            failures=failures,
            passed=not failures,
            details=details,
        )
    )

    return results


SUITES: Dict[str, Callable] = {
    "octonion-identities": suite_octonion_identities,
    "rotation-laws": suite_rotation_laws,
    "f7-well-defined": suite_f7_well_defined,
    "spin7-membership": suite_spin7_membership,
    "triality": suite_triality,
    "double-cover": suite_double_cover,
    "commutative-square": suite_commutative_square,
    "degree-ledger": suite_degree_ledger,
}


def run_verify_suite(config: RunConfig, suite_names=None):
    """Run the selected suites and build the deterministic report.

    Returns (exit_code, report_dict): exit code 0 when every claim passed,
    1 otherwise.  Invalid configurations raise ValueError before any suite
    runs (the CLI maps that to exit code 2).
    """
    config.validate()
    if suite_names is None:
        suite_names = list(SUITE_NAMES)
    unknown = [s for s in suite_names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    backend = config.make_backend()
    results = {}
    all_passed = True
    for name in SUITE_NAMES:
        if name not in suite_names:
            continue
        claims = SUITES[name](backend, config.seed, config.trials)
        results[name] = [c.to_dict() for c in claims]
        all_passed = all_passed and all(c.passed for c in claims)
    report = {
        "config": {
            "backend": config.backend,
            "epsilon": config.epsilon if config.backend == "float" else None,
            "seed": config.seed,
            "trials": config.trials,
            "suites": [s for s in SUITE_NAMES if s in suite_names],
        },
        "results": results,
        "all_passed": all_passed,
    }
    return (0 if all_passed else 1), report


def render_report(report: dict) -> str:
    """Canonical JSON text; byte-identical for identical configurations."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
