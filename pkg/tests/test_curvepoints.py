import math

import pytest

from hasseforms.curvepoints import (
    INFINITY,
    AffinePoint,
    ec_add,
    ec_multiply,
    enumerate_points,
    has_two_torsion,
    is_smooth,
    picard_order,
    point_report,
)
from hasseforms.curvering import CurveSpec
from hasseforms.finfield import make_extension

from oracles import count_points_char_sum, smooth_weierstrass_pairs

F5 = make_extension(5, 1)
SINGULAR = CurveSpec.weierstrass(F5, 2, 3)
C511 = CurveSpec.weierstrass(F5, 1, 1)
C510 = CurveSpec.weierstrass(F5, -1, 0)


def pt(curve, x, y):
    return AffinePoint(curve.field.element(x), curve.field.element(y))


# -- counting ----------------------------------------------------------------


def test_point_count_singular_cubic():
    pts = enumerate_points(SINGULAR)
    assert len(pts) == 6
    assert point_report(SINGULAR).total == 7


@pytest.mark.parametrize(
    "curve,affine,total",
    [(SINGULAR, 6, 7), (C511, 8, 9), (C510, 7, 8)],
)
def test_point_counts_match_char_sum_oracle(curve, affine, total):
    a = curve.a.coeffs[0]
    b = curve.b.coeffs[0]
    assert count_points_char_sum(5, a, b) == affine
    assert len(enumerate_points(curve)) == affine
    assert point_report(curve).total == total


def test_enumerate_rejects_polyline():
    with pytest.raises(ValueError):
        enumerate_points(CurveSpec.polyline(F5))


def test_enumerate_respects_size_bound():
    with pytest.raises(ValueError):
        enumerate_points(C511, degree=4)  # 5^4 = 625 > 121


def test_degree_two_enumeration():
    pts1 = {(p.x.coeffs, p.y.coeffs) for p in enumerate_points(C511)}
    pts2 = enumerate_points(C511, degree=2)
    assert len(pts2) >= len(pts1)
    degrees = {p.degree for p in pts2}
    assert degrees <= {1, 2}
    ones = [p for p in pts2 if p.degree == 1]
    assert len(ones) == len(pts1)
    # every point satisfies the embedded equation exactly
    ext = pts2[0].x.field
    from hasseforms.finfield import embed

    a, b = embed(C511.a, ext), embed(C511.b, ext)
    for p in pts2:
        assert p.y * p.y == p.x**3 + a * p.x + b


# -- smoothness ----------------------------------------------------------------


def test_singular_locus_of_worked_cubic():
    smooth, sing = is_smooth(SINGULAR)
    assert not smooth
    assert [(p.x, p.y) for p in sing] == [(F5.element(4), F5.zero())]


def test_smooth_curves_have_empty_locus():
    assert is_smooth(C511) == (True, ())
    assert is_smooth(C510) == (True, ())


def test_char3_smoothness():
    F3 = make_extension(3, 1)
    # in characteristic 3 the discriminant degenerates to -a^3
    assert CurveSpec.weierstrass(F3, 1, 1).is_smooth
    assert not CurveSpec.weierstrass(F3, 0, 1).is_smooth


# -- group law --------------------------------------------------------------------


def test_identity_and_inverse():
    p = pt(C510, 2, 1)
    assert ec_add(C510, p, INFINITY) == p
    assert ec_add(C510, INFINITY, p) == p
    minus = pt(C510, 2, -1)
    assert ec_add(C510, p, minus) is INFINITY


def test_two_torsion_chord():
    # chord through (0,0) and (1,0) meets the third root of x^3 - x
    assert ec_add(C510, pt(C510, 0, 0), pt(C510, 1, 0)) == pt(C510, 4, 0)


def test_group_law_commutative_and_associative():
    points = enumerate_points(C511) + [INFINITY]
    for p in points:
        for q in points:
            assert ec_add(C511, p, q) == ec_add(C511, q, p)
    for p in points[:4]:
        for q in points[:4]:
            for r in points[:4]:
                lhs = ec_add(C511, ec_add(C511, p, q), r)
                rhs = ec_add(C511, p, ec_add(C511, q, r))
                assert lhs == rhs


def test_group_law_rejects_singular():
    with pytest.raises(ValueError):
        ec_add(SINGULAR, pt(SINGULAR, 1, 1), pt(SINGULAR, 1, 1))


# -- picard order ---------------------------------------------------------------------


def test_picard_order_examples():
    assert picard_order(CurveSpec.polyline(F5)) == 1
    assert picard_order(C511) == 9
    with pytest.raises(ValueError):
        picard_order(SINGULAR)


def test_two_torsion_examples():
    assert has_two_torsion(C511) is False
    assert has_two_torsion(C510) is True
    c = CurveSpec.weierstrass(make_extension(7, 1), 1, 1)
    assert has_two_torsion(c) == (picard_order(c) % 2 == 0)


# -- global invariants --------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_parity_law_exhaustive(q):
    # group order odd iff no rational 2-torsion, over every smooth curve
    _, pairs = smooth_weierstrass_pairs(q)
    field = pairs[0][0].field
    for a, b in pairs:
        curve = CurveSpec.weierstrass(field, a, b)
        assert (picard_order(curve) % 2 == 1) == (not has_two_torsion(curve))


@pytest.mark.parametrize("q", [3, 5, 7])
def test_lagrange_annihilation(q):
    _, pairs = smooth_weierstrass_pairs(q)
    field = pairs[0][0].field
    for a, b in pairs:
        curve = CurveSpec.weierstrass(field, a, b)
        order = picard_order(curve)
        for p in enumerate_points(curve):
            assert ec_multiply(curve, order, p) is INFINITY


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_hasse_bound(q):
    _, pairs = smooth_weierstrass_pairs(q)
    field = pairs[0][0].field
    for a, b in pairs:
        curve = CurveSpec.weierstrass(field, a, b)
        total = point_report(curve).total
        assert abs(total - (q + 1)) <= 2 * math.sqrt(q)


# -- reports ------------------------------------------------------------------------


def test_report_fields_smooth():
    rep = point_report(C511)
    assert rep.smooth and rep.pic_order == 9 and rep.pic_parity == "odd"
    assert rep.two_torsion is False and rep.warning is None


def test_report_fields_singular():
    rep = point_report(SINGULAR)
    assert not rep.smooth
    assert rep.pic_order is None and rep.pic_parity is None
    assert rep.warning is not None
    assert [(p.x, p.y) for p in rep.singular_points] == [(F5.element(4), F5.zero())]


def test_report_polyline():
    rep = point_report(CurveSpec.polyline(F5))
    assert rep.affine == 5 and rep.total == 6
    assert rep.pic_order == 1 and rep.pic_parity == "odd"
