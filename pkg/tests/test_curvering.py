import random

import pytest

from hasseforms.curvering import (
    CurveSpec,
    RingElement,
    RingFraction,
    RingMatrix,
    congruence,
)
from hasseforms.finfield import make_extension
from hasseforms.funcfield import Poly

F5 = make_extension(5, 1)
EC = CurveSpec.weierstrass(F5, 2, 3)  # y^2 = x^3 + 2x + 3, singular cubic
LINE = CurveSpec.polyline(F5)


def P(text, field=F5):
    return Poly.from_text(field, text)


def relem(curve, a_text, b_text="0"):
    return RingElement(curve, P(a_text, curve.field), P(b_text, curve.field))


def rand_relem(rng, curve, max_deg=2):
    a = Poly(curve.field, [rng.randrange(5) for _ in range(max_deg + 1)])
    b = Poly(curve.field, [rng.randrange(5) for _ in range(max_deg + 1)])
    return RingElement(curve, a, b)


# -- curve specs ----------------------------------------------------------


def test_singular_cubic_flagged_but_accepted():
    assert not EC.is_smooth
    assert EC.discriminant.is_zero()
    assert EC.cubic() == P("x^3+2*x+3")


def test_smooth_cubic():
    c = CurveSpec.weierstrass(F5, 1, 1)
    assert c.is_smooth
    assert c.discriminant == F5.element(4)  # -4 - 27 = -31 = 4 mod 5


def test_polyline_is_smooth():
    assert LINE.is_smooth


# -- ring arithmetic ------------------------------------------------------


def test_y_squared_rewrites_to_cubic():
    y = RingElement.y(EC)
    yy = y * y
    assert yy.b.is_zero()
    assert yy.a == P("x^3+2*x+3")


def test_norm_of_y():
    # N(0 + 1*y) = -(x^3 + 2x + 3)
    assert RingElement.y(EC).norm() == -P("x^3+2*x+3")


def test_norm_of_constant():
    c = RingElement.constant(EC, 3)
    assert c.norm() == P("9")


def test_norm_multiplicative_random():
    rng = random.Random(5)
    for _ in range(40):
        u = rand_relem(rng, EC)
        v = rand_relem(rng, EC)
        assert (u * v).norm() == u.norm() * v.norm()


def test_conjugation_properties():
    rng = random.Random(6)
    for _ in range(20):
        u = rand_relem(rng, EC)
        assert u.conj().conj() == u
        assert u * u.conj() == RingElement(EC, u.norm())


def test_is_unit_examples():
    assert relem(EC, "3").is_unit()
    assert not relem(EC, "x").is_unit()
    assert not RingElement.y(EC).is_unit()
    assert not RingElement.zero(EC).is_unit()


def test_is_unit_exhaustive_small_degree():
    # all three characterizations (nonzero constant, constant norm, the
    # assert inside is_unit) agree over every element with deg <= 1 parts
    field = EC.field
    count = 0
    for a0 in range(5):
        for a1 in range(5):
            for b0 in range(5):
                for b1 in range(5):
                    u = RingElement(EC, Poly(field, (a0, a1)), Poly(field, (b0, b1)))
                    unit = u.is_unit()
                    assert unit == (a1 == 0 and b0 == 0 and b1 == 0 and a0 != 0)
                    count += unit
    assert count == 4


def test_polyline_rejects_y():
    with pytest.raises(ValueError):
        RingElement.y(LINE)
    with pytest.raises(ValueError):
        relem(LINE, "0", "1")


def test_mismatched_curves_rejected():
    other = CurveSpec.weierstrass(F5, 1, 1)
    with pytest.raises(ValueError):
        relem(EC, "x") + relem(other, "x")


def test_canonical_form_idempotent():
    u = relem(EC, "x^2+1", "3")
    again = RingElement(EC, u.a, u.b)
    assert again == u
    assert (u + RingElement.zero(EC)) == u


def test_evaluate_ring_element():
    u = relem(EC, "x^2", "2")  # x^2 + 2y
    assert u.evaluate(F5.element(1), F5.element(1)) == F5.element(3)


# -- fractions -------------------------------------------------------------


def test_one_over_y_rationalizes():
    inv_y = RingFraction.make(RingElement.one(EC), RingElement.y(EC))
    assert inv_y.num == RingElement.y(EC)
    assert inv_y.den == P("x^3+2*x+3")


def test_fraction_cancellation():
    inv_y = RingFraction.make(RingElement.one(EC), RingElement.y(EC))
    two_y = RingFraction.from_ring(relem(EC, "0", "2"))
    prod = inv_y * two_y
    assert prod.is_integral()
    assert prod.as_ring_element() == RingElement.constant(EC, 2)


def test_fraction_field_axioms_random():
    rng = random.Random(9)
    for _ in range(25):
        u = RingFraction.make(rand_relem(rng, EC, 1), P("x+1"))
        v = RingFraction.make(rand_relem(rng, EC, 1), P("x+3"))
        if v.is_zero():
            continue
        assert (u / v) * v == u
        assert u - u == RingFraction.from_ring(RingElement.zero(EC))


def test_fraction_monic_canonicalization():
    # 1/(1-x) normalizes to -1/(x-1) = 4/(x+4)
    f = RingFraction(LINE, RingElement.one(LINE), P("1-x"))
    assert f.den == P("x+4")
    assert f.num == RingElement.constant(LINE, 4)


def test_fraction_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RingFraction(LINE, RingElement.one(LINE), Poly.zero(F5))


# -- matrices ----------------------------------------------------------------


def q_matrix():
    # [[1/y, 3y], [2/y, 2y]]
    y = RingElement.y(EC)
    inv_y = RingFraction.make(RingElement.one(EC), y)
    return RingMatrix(
        EC,
        [
            [inv_y, relem(EC, "0", "3")],
            [inv_y * 2, relem(EC, "0", "2")],
        ],
    )


def p_matrix():
    # [[3/(x+1), x(x+1)], [1/(x+1), 2(x+1)^2]]
    return RingMatrix(
        EC,
        [
            [RingFraction(EC, RingElement.constant(EC, 3), P("x+1")), relem(EC, "x^2+x")],
            [RingFraction(EC, RingElement.one(EC), P("x+1")), relem(EC, "2*x^2+4*x+2")],
        ],
    )


def g_matrix():
    # [[0, 2], [2, 3y^2]] where 3y^2 = 3(x^3+2x+3)
    return RingMatrix(EC, [[0, 2], [2, P("3*x^3+6*x+9")]])


def test_congruence_identity_q():
    identity = RingMatrix.identity(EC, 2)
    assert congruence(q_matrix(), identity) == g_matrix()


def test_congruence_identity_p():
    identity = RingMatrix.identity(EC, 2)
    assert congruence(p_matrix(), identity) == g_matrix()


def test_congruence_with_identity_is_noop():
    f = g_matrix()
    assert congruence(RingMatrix.identity(EC, 2), f) == f


def test_det_of_q_is_unit():
    d = q_matrix().det()
    assert d.is_integral()
    assert d.as_ring_element() == RingElement.constant(EC, 1)  # -4 = 1 mod 5


def test_det_of_p_is_unit():
    d = p_matrix().det()
    assert d.as_ring_element() == RingElement.constant(EC, 1)


def test_det_congruence_multiplicative_random():
    rng = random.Random(13)
    for n in (2, 3):
        for _ in range(8):
            q = RingMatrix(EC, [[rand_relem(rng, EC, 1) for _ in range(n)] for _ in range(n)])
            f = RingMatrix(EC, [[rand_relem(rng, EC, 1) for _ in range(n)] for _ in range(n)])
            lhs = congruence(q, f).det()
            rhs = q.det() * q.det() * f.det()
            assert lhs == rhs


def test_det_against_leibniz_3x3():
    rng = random.Random(17)
    import itertools

    for _ in range(5):
        m = RingMatrix(EC, [[rand_relem(rng, EC, 1) for _ in range(3)] for _ in range(3)])
        total = RingFraction.from_ring(RingElement.zero(EC))
        for perm in itertools.permutations(range(3)):
            sign = 1
            for i in range(3):
                for j in range(i + 1, 3):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = m.entry(0, perm[0]) * m.entry(1, perm[1]) * m.entry(2, perm[2])
            total = total + term * sign
        assert m.det() == total


def test_matrix_flags():
    g = g_matrix()
    assert g.is_symmetric()
    assert g.all_integral()
    assert not q_matrix().all_integral()


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        congruence(RingMatrix.identity(EC, 2), RingMatrix.identity(EC, 3))
