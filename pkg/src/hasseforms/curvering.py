"""Coordinate rings of affine curves: F_q[x] and F_q[x,y]/(y^2 - x^3 - ax - b).

These are the rings of functions regular away from the distinguished
infinite point, for the affine line and for a Weierstrass cubic with its
point at infinity removed.  Ring elements are kept in the canonical
A(x) + B(x)*y shape, with every occurrence of y^2 rewritten through the
curve equation, so equality is pairwise polynomial equality.

Fractions are rationalized by conjugate multiplication, a + b*y into
a - b*y, which forces denominators into F_q[x]; with the denominator
monic and coprime to the content of the numerator this representation
is unique, so fraction equality is structural too.  Divisibility and
valuation questions thereby reduce to plain polynomial arithmetic.

Singular Weierstrass cubics (discriminant zero) are accepted but the
smoothness flag is carried on the curve and checked by the consumers
that require it; the point-counting and congruence machinery must keep
working on singular inputs.

Units: a + b*y is a unit iff its norm a^2 - b^2*(x^3+ax+b) is a nonzero
constant, which for a monic cubic happens exactly when the element is a
nonzero constant of F_q.  ``is_unit`` computes both characterizations
and insists they agree.
"""

from __future__ import annotations

from typing import Optional

from .finfield import FieldElement, FiniteField
from .funcfield import Poly, poly_gcd, to_text

POLYLINE = "polyline"
WEIERSTRASS = "weierstrass"


class CurveSpec:
    """The base geometry: the affine line, or an affine Weierstrass cubic."""

    __slots__ = ("kind", "field", "a", "b", "_cubic")

    def __init__(self, kind: str, field: FiniteField, a=None, b=None):
        if kind not in (POLYLINE, WEIERSTRASS):
            raise ValueError(f"unknown curve kind {kind!r}")
        if kind == WEIERSTRASS and (a is None or b is None):
            raise ValueError("weierstrass curves need coefficients a and b")
        self.kind = kind
        self.field = field
        self.a = field.element(a) if a is not None else None
        self.b = field.element(b) if b is not None else None
        self._cubic = None

    @classmethod
    def polyline(cls, field: FiniteField) -> CurveSpec:
        return cls(POLYLINE, field)

    @classmethod
    def weierstrass(cls, field: FiniteField, a, b) -> CurveSpec:
        return cls(WEIERSTRASS, field, a, b)

    @property
    def is_polyline(self) -> bool:
        return self.kind == POLYLINE

    @property
    def discriminant(self) -> FieldElement:
        """-4a^3 - 27b^2, the cubic discriminant; zero means singular."""
        if self.is_polyline:
            raise ValueError("the affine line has no discriminant")
        return self.field.element(-4) * self.a**3 + self.field.element(-27) * self.b * self.b

    @property
    def is_smooth(self) -> bool:
        if self.is_polyline:
            return True
        return not self.discriminant.is_zero()

    def cubic(self) -> Poly:
        """x^3 + a*x + b, the right-hand side of the curve equation."""
        if self.is_polyline:
            raise ValueError("the affine line has no cubic")
        if self._cubic is None:
            self._cubic = Poly(self.field, [self.b, self.a, self.field.zero(), self.field.one()])
        return self._cubic

    def __eq__(self, other):
        return (
            isinstance(other, CurveSpec)
            and self.kind == other.kind
            and self.field == other.field
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.kind, self.field.q, self.a, self.b))

    def __repr__(self):
        if self.is_polyline:
            return f"CurveSpec(line/F{self.field.q})"
        return f"CurveSpec(y^2=x^3+{self.a.coeffs[0] if self.field.k==1 else self.a}*x+{self.b.coeffs[0] if self.field.k==1 else self.b}/F{self.field.q})"


class RingElement:
    """A(x) + B(x)*y in the coordinate ring (B identically 0 on the line)."""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve: CurveSpec, a: Poly, b: Optional[Poly] = None):
        if b is None:
            b = Poly.zero(curve.field)
        if a.field != curve.field or b.field != curve.field:
            raise ValueError("polynomial parts must live over the curve's field")
        if curve.is_polyline and not b.is_zero():
            raise ValueError("the affine line has no y coordinate")
        self.curve = curve
        self.a = a
        self.b = b

    @classmethod
    def _raw(cls, curve, a, b):
        # internal: parts already validated polynomials over curve.field
        elem = object.__new__(cls)
        elem.curve = curve
        elem.a = a
        elem.b = b
        return elem

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, curve) -> RingElement:
        return cls(curve, Poly.zero(curve.field))

    @classmethod
    def one(cls, curve) -> RingElement:
        return cls(curve, Poly.one(curve.field))

    @classmethod
    def constant(cls, curve, c) -> RingElement:
        return cls(curve, Poly.constant(curve.field, c))

    @classmethod
    def x(cls, curve) -> RingElement:
        return cls(curve, Poly.x(curve.field))

    @classmethod
    def y(cls, curve) -> RingElement:
        if curve.is_polyline:
            raise ValueError("the affine line has no y coordinate")
        return cls(curve, Poly.zero(curve.field), Poly.one(curve.field))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.curve != self.curve:
                raise ValueError("mismatched curves")
            return other
        if isinstance(other, Poly):
            return RingElement(self.curve, other)
        if isinstance(other, (int, FieldElement)):
            return RingElement.constant(self.curve, other)
        return NotImplemented

    def __add__(self, other):
        if type(other) is not RingElement or other.curve is not self.curve:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return RingElement._raw(self.curve, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return RingElement._raw(self.curve, -self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not RingElement or other.curve is not self.curve:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        a_part = a1 * a2
        if not (b1.is_zero() or b2.is_zero()):
            a_part = a_part + b1 * b2 * self.curve.cubic()  # y^2 rewritten
        if b1.is_zero() and b2.is_zero():
            b_part = b1
        else:
            b_part = a1 * b2 + a2 * b1
        return RingElement._raw(self.curve, a_part, b_part)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative ring power")
        result = RingElement.one(self.curve)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> RingElement:
        """The quadratic-ring conjugate a + b*y -> a - b*y."""
        return RingElement(self.curve, self.a, -self.b)

    def norm(self) -> Poly:
        """N(u) = u * conj(u) = A^2 - B^2 (x^3+ax+b), in F_q[x]."""
        if self.curve.is_polyline or self.b.is_zero():
            return self.a * self.a
        return self.a * self.a - self.b * self.b * self.curve.cubic()

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_constant(self) -> bool:
        return self.a.is_constant() and self.b.is_zero()

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise ValueError("ring element is not constant")
        return self.a.constant_value()

    def is_unit(self) -> bool:
        """Unit test; checks 'nonzero constant' against 'constant norm'
        and insists the two characterizations agree."""
        structural = self.is_constant() and not self.is_zero()
        n = self.norm()
        by_norm = n.is_constant() and not n.is_zero()
        assert structural == by_norm, "unit characterizations disagree"
        return structural

    def evaluate(self, x0: FieldElement, y0: Optional[FieldElement] = None) -> FieldElement:
        """Value at a point; y0 is required off the affine line."""
        if self.curve.is_polyline or self.b.is_zero():
            return self.a.evaluate(x0)
        if y0 is None:
            raise ValueError("evaluation on a curve needs a y coordinate")
        return self.a.evaluate(x0) + self.b.evaluate(x0) * y0

    # -- misc -----------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((hash(self.a), hash(self.b)))

    def __repr__(self):
        if self.b.is_zero():
            return f"RingElement({to_text(self.a)!r})"
        return f"RingElement({to_text(self.a)!r} + ({to_text(self.b)!r})*y)"

    def sort_key(self):
        return (self.a.sort_key(), self.b.sort_key())


class RingFraction:
    """num / den with num a RingElement and den monic in F_q[x]."""

    __slots__ = ("curve", "num", "den")

    def __init__(self, curve: CurveSpec, num: RingElement, den: Optional[Poly] = None):
        if den is None:
            den = Poly.one(curve.field)
        if num.curve != curve or den.field != curve.field:
            raise ValueError("mismatched curves")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _reduce_fraction(num, den)
        self.curve = curve
        self.num = num
        self.den = den

    @classmethod
    def from_ring(cls, elem: RingElement) -> RingFraction:
        return cls(elem.curve, elem)

    @classmethod
    def make(cls, num: RingElement, den) -> RingFraction:
        """Build num/den where den may itself involve y; conjugate
        multiplication rationalizes the denominator into F_q[x]."""
        curve = num.curve
        if isinstance(den, (int, FieldElement)):
            den = Poly.constant(curve.field, den)
        if isinstance(den, Poly):
            return cls(curve, num, den)
        if isinstance(den, RingElement):
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if den.b.is_zero():
                return cls(curve, num, den.a)  # may be non-monic; reduced below
            return cls(curve, num * den.conj(), den.norm())
        raise TypeError(f"cannot use {den!r} as a denominator")

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RingFraction):
            if other.curve != self.curve:
                raise ValueError("mismatched curves")
            return other
        if isinstance(other, RingElement):
            return RingFraction.from_ring(other)
        if isinstance(other, (int, FieldElement, Poly)):
            return RingFraction.from_ring(RingElement.zero(self.curve)._coerce(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = self.num * other.den + other.num * self.den
        return RingFraction(self.curve, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RingFraction(self.curve, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingFraction(self.curve, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RingFraction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero")
        # 1 / (n/d) = d * conj(n) / N(n)
        return RingFraction(self.curve, self.num.conj() * self.den, self.num.norm())

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    # -- structure ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den.degree == 0

    def as_ring_element(self) -> RingElement:
        if not self.is_integral():
            raise ValueError("fraction has a nontrivial denominator")
        return self.num

    def evaluate(self, x0: FieldElement, y0: Optional[FieldElement] = None) -> FieldElement:
        d = self.den.evaluate(x0)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(x0, y0) / d

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __repr__(self):
        if self.is_integral():
            return f"RingFraction({self.num!r})"
        return f"RingFraction({self.num!r} / {to_text(self.den)!r})"


def _reduce_fraction(num: RingElement, den: Poly):
    if num.is_zero():
        return num, Poly.one(den.field)
    g = poly_gcd(poly_gcd(num.a, num.b), den)
    if g.degree >= 1:
        num = RingElement(num.curve, num.a // g, num.b // g)
        den = den // g
    lead = den.leading_coeff()
    if lead != den.field.one():
        inv = lead.inverse()
        num = num * inv
        den = den * inv
    return num, den


class RingMatrix:
    """A square matrix over the fraction field of the coordinate ring."""

    __slots__ = ("curve", "rows")

    def __init__(self, curve: CurveSpec, rows):
        n = len(rows)
        coerced = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            coerced.append(tuple(_coerce_entry(curve, e) for e in row))
        self.curve = curve
        self.rows = tuple(coerced)

    @classmethod
    def identity(cls, curve, n: int) -> RingMatrix:
        return cls(
            curve,
            [[1 if i == j else 0 for j in range(n)] for i in range(n)],
        )

    @classmethod
    def diagonal(cls, curve, entries) -> RingMatrix:
        n = len(entries)
        return cls(
            curve,
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> RingFraction:
        return self.rows[i][j]

    def transpose(self) -> RingMatrix:
        n = self.n
        return RingMatrix(self.curve, [[self.rows[j][i] for j in range(n)] for i in range(n)])

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if other.curve != self.curve:
            raise ValueError("mismatched curves")
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        n = self.n
        return RingMatrix(
            self.curve,
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(n)),
                        RingFraction.from_ring(RingElement.zero(self.curve)),
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ],
        )

    def det(self) -> RingFraction:
        """Determinant by cofactor expansion, exact over the fraction field."""
        return _det(self.curve, self.rows)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def all_integral(self) -> bool:
        return all(e.is_integral() for row in self.rows for e in row)

    def evaluate(self, x0, y0=None):
        """Entry-wise value at a point, as rows of field elements."""
        return tuple(tuple(e.evaluate(x0, y0) for e in row) for row in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.curve == other.curve
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.curve, self.rows))

    def __repr__(self):
        return f"RingMatrix({self.rows!r})"


def _coerce_entry(curve, e) -> RingFraction:
    if isinstance(e, RingFraction):
        if e.curve != curve:
            raise ValueError("mismatched curves")
        return e
    if isinstance(e, RingElement):
        return RingFraction.from_ring(e)
    if isinstance(e, Poly):
        return RingFraction.from_ring(RingElement(curve, e))
    if isinstance(e, (int, FieldElement)):
        return RingFraction.from_ring(RingElement.constant(curve, e))
    raise TypeError(f"cannot place {e!r} in a matrix")


def _det(curve, rows) -> RingFraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = RingFraction.from_ring(RingElement.zero(curve))
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        cof = rows[0][j] * _det(curve, minor)
        total = total - cof if j % 2 else total + cof
    return total


def congruence(q: RingMatrix, f: RingMatrix) -> RingMatrix:
    """The congruence action Q^t F Q, exact over the fraction field."""
    if q.curve != f.curve:
        raise ValueError("mismatched curves")
    if q.n != f.n:
        raise ValueError("dimension mismatch")
    return q.transpose() * f * q
