"""Point enumeration, smoothness, group law, and Picard order for curves.

Point counting is pure enumeration: scan x over the field, solve
y^2 = x^3 + ax + b with an exhaustive square root.  At desk scale the
brute force doubles as the oracle for everything downstream.

For a smooth Weierstrass curve with its rational point at infinity
removed, the Picard group of the affine curve is isomorphic to the
group of rational points (P maps to the class of [P] - [infinity]), so
the Picard order is the full projective point count.  For the affine
line it is 1 (polynomial rings have trivial class group).  Singular
cubics still get counted (the projective count includes the singular
point), but the Picard-group and group-law routines refuse them, since
the point-group isomorphism needs smoothness.

The 2-torsion criterion: a point of order 2 is a rational point on the
x-axis, so the group order is odd exactly when x^3 + ax + b has no root
in F_q.  ``point_report`` carries both facts side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .curvering import CurveSpec
from .finfield import FieldElement, embed, is_square, make_extension, sqrt


class PointAtInfinity:
    """The distinguished infinite point, the identity of the group law."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = PointAtInfinity()


@dataclass(frozen=True)
class AffinePoint:
    """A solution (x, y) of the curve equation over F_{q^d}."""

    x: FieldElement
    y: FieldElement
    degree: int = 1

    def __repr__(self):
        return f"({self.x!r}, {self.y!r})"


Point = Union[AffinePoint, PointAtInfinity]


@dataclass
class PointCountReport:
    """Counting summary; Picard data is present only for smooth curves."""

    affine: int
    total: int
    smooth: bool
    singular_points: tuple
    pic_order: Optional[int] = None
    pic_parity: Optional[str] = None
    two_torsion: Optional[bool] = None
    warning: Optional[str] = None


def _extension_of(curve: CurveSpec, degree: int):
    field = curve.field
    return make_extension(field.p, field.k * degree)


def _element_degree(value: FieldElement, base_q: int, ambient_degree: int) -> int:
    """Least e dividing the ambient degree with value fixed by the e-th
    power of the base-field Frobenius."""
    for e in range(1, ambient_degree + 1):
        if ambient_degree % e:
            continue
        if value ** (base_q**e) == value:
            return e
    return ambient_degree


def enumerate_points(curve: CurveSpec, degree: int = 1):
    """All affine points with coordinates in F_{q^degree}, by x-scan.

    Points are tagged with the least extension degree containing both
    coordinates, and returned in canonical coordinate order.
    """
    if curve.is_polyline:
        raise ValueError(
            "the affine line has no curve equation; its closed points are "
            "enumerated as monic irreducible polynomials"
        )
    ext = _extension_of(curve, degree)
    a = embed(curve.a, ext)
    b = embed(curve.b, ext)
    base_q = curve.field.q
    points = []
    for x0 in ext.elements():
        rhs = x0 * x0 * x0 + a * x0 + b
        if rhs.is_zero():
            ys = [ext.zero()]
        elif is_square(rhs):
            r = sqrt(rhs)
            ys = sorted({r, -r}, key=lambda v: v.coeffs)
        else:
            continue
        for y0 in ys:
            d = max(
                _element_degree(x0, base_q, degree),
                _element_degree(y0, base_q, degree),
            )
            points.append(AffinePoint(x0, y0, d))
    return points


def is_smooth(curve: CurveSpec):
    """(smooth?, singular point list).

    Singular points are the common zeros of the equation and both
    partials: y = 0 together with a repeated root of the cubic.  A cubic
    can only repeat a root rationally, so the list is complete.
    """
    if curve.is_polyline:
        return True, ()
    if curve.is_smooth:
        return True, ()
    cubic = curve.cubic()
    from .funcfield import poly_gcd

    rep = poly_gcd(cubic, cubic.derivative())
    field = curve.field
    singular = tuple(
        AffinePoint(x0, field.zero())
        for x0 in field.elements()
        if rep.evaluate(x0).is_zero()
    )
    return False, singular


def _require_smooth(curve: CurveSpec, what: str):
    if curve.is_polyline:
        return
    if not curve.is_smooth:
        _, sing = is_smooth(curve)
        raise ValueError(
            f"{what} requires a smooth curve; discriminant is zero "
            f"(singular at {tuple((p.x, p.y) for p in sing)})"
        )


def ec_add(curve: CurveSpec, p1: Point, p2: Point) -> Point:
    """Chord-tangent addition with the infinite point as identity."""
    if curve.is_polyline:
        raise ValueError("group law applies to Weierstrass curves")
    _require_smooth(curve, "the group law")
    if isinstance(p1, PointAtInfinity):
        return p2
    if isinstance(p2, PointAtInfinity):
        return p1
    if p1.x.field != p2.x.field:
        raise ValueError("points must be rational over a common field")
    ext = p1.x.field
    a = embed(curve.a, ext)
    if p1.x == p2.x and p1.y == -p2.y:
        return INFINITY
    if p1.x == p2.x:
        slope = (ext.element(3) * p1.x * p1.x + a) / (ext.element(2) * p1.y)
    else:
        slope = (p2.y - p1.y) / (p2.x - p1.x)
    x3 = slope * slope - p1.x - p2.x
    y3 = slope * (p1.x - x3) - p1.y
    degree = max(p1.degree, p2.degree)
    return AffinePoint(x3, y3, degree)


def ec_multiply(curve: CurveSpec, n: int, point: Point) -> Point:
    """n-fold sum of a point under the group law (n >= 0)."""
    if n < 0:
        raise ValueError("negative multiples not supported")
    acc: Point = INFINITY
    for _ in range(n):
        acc = ec_add(curve, acc, point)
    return acc


def picard_order(curve: CurveSpec) -> int:
    """Order of the Picard group of the affine curve.

    1 for the affine line; the projective point count for a smooth
    Weierstrass curve (point group isomorphism).  Singular cubics are
    rejected: the isomorphism with the point group needs smoothness.
    """
    if curve.is_polyline:
        return 1
    if not curve.is_smooth:
        raise ValueError(
            "the Picard/point-group isomorphism requires smoothness; "
            "this cubic has a repeated root"
        )
    return len(enumerate_points(curve)) + 1


def has_two_torsion(curve: CurveSpec) -> bool:
    """Whether the curve has a rational point on the x-axis, i.e. the
    cubic has a root in F_q."""
    if curve.is_polyline:
        raise ValueError("2-torsion applies to Weierstrass curves")
    _require_smooth(curve, "the 2-torsion test")
    cubic = curve.cubic()
    return any(cubic.evaluate(x0).is_zero() for x0 in curve.field.elements())


def point_report(curve: CurveSpec) -> PointCountReport:
    """Counting report; for singular cubics the count is still produced
    (all projective points, singular one included) but the Picard fields
    are left unset with a warning."""
    if curve.is_polyline:
        q = curve.field.q
        return PointCountReport(
            affine=q,
            total=q + 1,
            smooth=True,
            singular_points=(),
            pic_order=1,
            pic_parity="odd",
            two_torsion=None,
        )
    smooth, singular = is_smooth(curve)
    affine = len(enumerate_points(curve))
    report = PointCountReport(
        affine=affine,
        total=affine + 1,
        smooth=smooth,
        singular_points=singular,
    )
    if smooth:
        report.pic_order = affine + 1
        report.pic_parity = "odd" if report.pic_order % 2 else "even"
        report.two_torsion = has_two_torsion(curve)
    else:
        report.warning = (
            "curve is singular: Picard data omitted because the "
            "point-group isomorphism requires smoothness"
        )
    return report
