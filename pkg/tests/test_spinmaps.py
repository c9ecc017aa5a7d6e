from fractions import Fraction as F

import pytest

from octospin.geometry import (
    Matrix8,
    OrientedPlane,
    PlaneError,
    apply,
    choose_w,
    compose,
    mat_eq,
    plane_rotation,
    random_orthonormal_pair,
    so_check,
)
from octospin.octonion import Octonion, mul, norm_sq, oct_eq
from octospin.scalar import (
    CIRCLE_HALF,
    CIRCLE_IDENTITY,
    CIRCLE_QUARTER,
    CirclePoint,
    angle_sum,
    circle_from_parameter,
    derived_rng,
    double_angle,
    random_rational,
)
from octospin.spinmaps import (
    FrameB,
    FrameError,
    basis_b,
    f5,
    f7,
    f7_factors,
    f7xf5,
    frame_table,
    format_frame_table,
    h70,
    p_map,
    project_double_cover,
    spin8_map,
    triality_check,
    verify_spin7,
)

E = [Octonion.basis(i) for i in range(8)]
P12 = OrientedPlane(E[1], E[2])
T35 = CirclePoint(F(3, 5), F(4, 5))


def rand_inputs(k, restrict="R7"):
    p = random_orthonormal_pair(90, restrict, k)
    t = circle_from_parameter(random_rational(derived_rng(90, "t", k), 8, 5))
    return p, t


def test_basis_b_standard_instance():
    frame = basis_b(P12, E[4])
    expected = (E[0], E[1], E[2], E[3], E[4], -E[5], E[6], -E[7])
    assert frame.elements == expected
    assert frame.norm_w == 1


def test_basis_b_scaled_w():
    frame = basis_b(P12, E[4].scale(F(2)))
    assert frame.norm_w == 4
    assert frame.elements[5] == E[5].scale(F(-2))
    assert frame.elements[7] == E[7].scale(F(-2))


def test_basis_b_rejects_bad_inputs():
    with pytest.raises(FrameError):
        basis_b(P12, E[3])  # inside span{e0,x,y,xy}
    with pytest.raises(FrameError):
        basis_b(P12, Octonion.zero())
    with pytest.raises(FrameError):
        basis_b(P12, E[0] + E[4])  # not purely imaginary
    scaled = OrientedPlane(E[1].scale(F(2)), E[2].scale(F(2)))
    with pytest.raises(FrameError):
        basis_b(scaled, E[4])  # spanning pair must be unit


def test_frame_table_standard_instance():
    frame = basis_b(P12, E[4])
    table = frame_table(frame)
    assert table[1][2] == (1, 3, 0)  # x*y = +xy
    assert table[4][3] == (1, 7, 0)  # w*(xy) = +w(xy)
    assert table[3][4] == (-1, 7, 0)  # (xy)*w = -w(xy)
    assert table[5][6] == (-1, 3, 1)  # (wx)*(wy) = -N*xy
    assert table[0][0] == (1, 0, 0)
    assert table[4][4] == (-1, 0, 1)  # w*w = -N*e0
    rendered = format_frame_table(table)
    assert "+xy" in rendered and "-N*xy" in rendered


def test_frame_table_matches_direct_multiplication_on_random_frames():
    for k in range(5):
        p, _ = rand_inputs(k)
        frame = basis_b(p, choose_w(p))
        table = frame_table(frame)
        n = frame.norm_w
        for i in range(8):
            for j in range(8):
                sign, idx, power = table[i][j]
                expected = frame.elements[idx].scale(F(sign) * (n if power else 1))
                assert oct_eq(mul(frame.elements[i], frame.elements[j]), expected)


def test_frame_table_rejects_non_frame():
    bogus = FrameB((E[0], E[1], E[2], E[3], E[4], E[5], E[6], E[6] + E[7]), F(1))
    with pytest.raises(FrameError):
        frame_table(bogus)


def test_f7_identity_angle():
    assert mat_eq(f7(P12, CIRCLE_IDENTITY), Matrix8.identity())


def test_f7_quarter_turn_signed_permutation():
    m = f7(P12, CIRCLE_QUARTER, E[4])
    images = {0: (3, 1), 3: (0, -1), 1: (2, 1), 2: (1, -1),
              4: (7, -1), 7: (4, 1), 5: (6, -1), 6: (5, 1)}
    for src, (dst, sign) in images.items():
        assert apply(m, E[src]) == E[dst].scale(F(sign))


def test_f7_half_turn_is_minus_identity():
    for k in range(3):
        p, _ = rand_inputs(k)
        assert mat_eq(f7(p, CIRCLE_HALF), -Matrix8.identity())


def test_f7_w_override_is_invariant():
    w = choose_w(P12)
    frame = basis_b(P12, w)
    w2 = frame.elements[4].scale(F(2)) + frame.elements[6].scale(F(-3, 2))
    assert mat_eq(f7(P12, T35, w2), f7(P12, T35, w))


def test_f7_one_parameter_subgroup():
    p, t = rand_inputs(0)
    t2 = circle_from_parameter(F(-2, 3))
    lhs = f7(p, angle_sum(t, t2))
    rhs = compose(f7(p, t), f7(p, t2))
    assert mat_eq(lhs, rhs)


def test_f7_outputs_are_special_orthogonal():
    p, t = rand_inputs(1)
    assert so_check(f7(p, t)).passed


def test_f7_factors_commute():
    p, t = rand_inputs(2)
    factors = f7_factors(p, t)
    for i in range(4):
        for j in range(i + 1, 4):
            assert mat_eq(compose(factors[i], factors[j]), compose(factors[j], factors[i]))


def test_f5_is_restriction():
    assert mat_eq(f5(P12, CIRCLE_QUARTER), f7(P12, CIRCLE_QUARTER))
    assert mat_eq(f5(P12, CIRCLE_IDENTITY), Matrix8.identity())


def test_f5_rejects_unsupported_planes():
    with pytest.raises(PlaneError):
        f5(OrientedPlane(E[1], E[6]), T35)
    with pytest.raises(PlaneError):
        f5(OrientedPlane(E[0], E[1]), T35)


def test_f5_on_e4_e5_is_member():
    p = OrientedPlane(E[4], E[5])
    m = f5(p, T35)
    assert so_check(m).passed
    assert verify_spin7(m).is_member


def test_f7xf5_identities():
    p7, _ = rand_inputs(3)
    p5 = OrientedPlane(E[4], E[5])
    assert mat_eq(f7xf5(p7, CIRCLE_IDENTITY, p5, CIRCLE_IDENTITY), Matrix8.identity())
    assert mat_eq(f7xf5(p7, T35, p5, CIRCLE_IDENTITY), f7(p7, T35))
    assert verify_spin7(f7xf5(p7, T35, p5, CIRCLE_QUARTER)).is_member


def test_h70():
    p7, t = rand_inputs(4)
    p5, t2 = rand_inputs(4, restrict="R5")
    assert mat_eq(h70(p7, CIRCLE_IDENTITY, p5, CIRCLE_IDENTITY), Matrix8.identity())
    m = h70(p7, t, p5, t2)
    assert apply(m, E[0]) == E[0]
    single = h70(P12, CIRCLE_QUARTER, p5, CIRCLE_IDENTITY)
    assert mat_eq(single, plane_rotation(P12, CIRCLE_QUARTER))


def test_p_map():
    assert p_map(CIRCLE_IDENTITY, CIRCLE_IDENTITY) == (CIRCLE_IDENTITY, CIRCLE_IDENTITY)
    assert p_map(CIRCLE_QUARTER, CIRCLE_QUARTER) == (CIRCLE_HALF, CIRCLE_HALF)
    assert p_map(T35, CIRCLE_IDENTITY) == (CirclePoint(F(-7, 25), F(24, 25)), CIRCLE_IDENTITY)


def test_project_double_cover_identity_and_center():
    ident = Matrix8.identity()
    assert mat_eq(project_double_cover(ident), ident)
    assert mat_eq(project_double_cover(-ident), ident)


def test_minus_identity_satisfies_relation_on_all_pairs():
    minus = -Matrix8.identity()
    g = project_double_cover(minus)
    for i in range(8):
        for j in range(8):
            lhs = mul(g.column(i), minus.column(j))
            rhs = apply(minus, mul(E[i], E[j]))
            assert oct_eq(lhs, rhs)


def test_projection_gives_doubled_plane_rotation():
    p, t = rand_inputs(5)
    assert mat_eq(project_double_cover(f7(p, t)), plane_rotation(p, double_angle(t)))


def test_verify_spin7_on_f7_values():
    p, t = rand_inputs(6)
    report = verify_spin7(f7(p, t))
    assert report.is_member and report.g_in_so7 and not report.relation_failures


def test_verify_spin7_reports_invariant():
    member = verify_spin7(-Matrix8.identity())
    assert member.is_member == (member.g_in_so7 and not member.relation_failures)
    assert member.is_member
    reject = verify_spin7(plane_rotation(OrientedPlane(E[0], E[1]), CIRCLE_QUARTER))
    assert not reject.is_member
    assert reject.relation_failures
    assert reject.is_member == (reject.g_in_so7 and not reject.relation_failures)


def test_membership_report_serialization():
    report = verify_spin7(f7(P12, CIRCLE_QUARTER))
    d = report.to_dict()
    assert d["is_member"] is True
    assert d["relation_failures"] == []
    assert len(d["candidate_g"]) == 8


def test_triality_standard_instance():
    report = triality_check(P12, T35, E[4])
    assert report.passed
    assert report.explicit_case_ok
    assert not report.pair_failures and not report.half_turn_failures


def test_triality_trivial_angle():
    report = triality_check(P12, CIRCLE_IDENTITY, E[4])
    assert report.passed


def test_triality_explicit_case_formula():
    # g(x) psi(y) must equal -s*e0 + c*xy on the standard instance
    psi = f7(P12, T35, E[4])
    g = plane_rotation(P12, double_angle(T35))
    lhs = mul(apply(g, E[1]), apply(psi, E[2]))
    assert lhs == E[0].scale(F(-4, 5)) + E[3].scale(F(3, 5))


def test_spin8_map():
    p7, t = rand_inputs(7)
    p5 = OrientedPlane(E[4], E[5])
    matrix, s = spin8_map(p7, t, p5, T35, E[0])
    assert s == E[0]
    assert verify_spin7(matrix).is_member
    matrix, s = spin8_map(p7, CIRCLE_IDENTITY, p5, CIRCLE_IDENTITY, E[0])
    assert mat_eq(matrix, Matrix8.identity())
    with pytest.raises(ValueError):
        spin8_map(p7, t, p5, T35, E[0].scale(F(2)))
