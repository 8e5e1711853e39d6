"""Univariate polynomials over F_q, rational functions, primes, valuations.

Polynomials are coefficient tuples in ascending order with no trailing
zeros; the zero polynomial is the empty tuple and reports degree -1 as
its sentinel.  Rational functions keep a monic denominator coprime to
the numerator, so equality is structural.

Primes of F_q(x) relative to the polynomial ring are the monic
irreducible polynomials plus the distinguished infinite place, where
the valuation of f is -deg(f).  Residue fields at finite primes are
built through ``finfield.make_extension`` together with an explicit
root of the prime, so reductions are reproducible.

Factorization is trial division against monic irreducibles in
increasing degree.  That is transparent and entirely adequate at desk
scale, and the enumeration doubles as an irreducibility certificate.

Text grammar for polynomials: integer coefficients, variable x,
caret powers, e.g. ``x^3+2*x+3``; coefficients are read mod p.
"""

from __future__ import annotations

import re
from typing import Iterator, Optional

from .finfield import FieldElement, FiniteField, embed, make_extension

FACTOR_DEGREE_BOUND = 24


class Poly:
    """A polynomial in F_q[x]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs=()):
        normalized = [field.element(c) for c in coeffs]
        while normalized and normalized[-1].is_zero():
            normalized.pop()
        self.field = field
        self.coeffs = tuple(normalized)

    @classmethod
    def _raw(cls, field, coeffs):
        # internal: coeffs are FieldElements of this field already
        n = len(coeffs)
        while n and coeffs[n - 1].is_zero():
            n -= 1
        poly = object.__new__(cls)
        poly.field = field
        poly.coeffs = tuple(coeffs[:n])
        return poly

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field) -> Poly:
        return cls(field, (1,))

    @classmethod
    def x(cls, field) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c) -> Poly:
        return cls(field, (c,))

    @classmethod
    def from_text(cls, field, text: str) -> Poly:
        return _parse_poly(field, text)

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def leading_coeff(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def monic(self) -> Poly:
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        inv = self.coeffs[-1].inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("mismatched base fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        if type(other) is not Poly or other.field is not self.field:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not Poly or other.field is not self.field:
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo = [self.field.zero()] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        rem = list(self.coeffs)
        inv_lead = other.coeffs[-1].inverse()
        while len(rem) >= len(other.coeffs) and rem:
            factor = rem[-1] * inv_lead
            shift = len(rem) - len(other.coeffs)
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly._raw(self.field, quo), Poly._raw(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def derivative(self) -> Poly:
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs) if i >= 1])

    def evaluate(self, x0: FieldElement) -> FieldElement:
        """Horner evaluation; coefficients are embedded if x0 lives in an
        extension of the base field."""
        target = x0.field
        if target == self.field:
            coeffs = self.coeffs
        else:
            coeffs = tuple(embed(c, target) for c in self.coeffs)
        acc = target.zero()
        for c in reversed(coeffs):
            acc = acc * x0 + c
        return acc

    __call__ = evaluate

    # -- misc ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = Poly.constant(self.field, other)
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.q, tuple(c.coeffs for c in self.coeffs)))

    def sort_key(self):
        return (self.degree, tuple(c.coeffs for c in self.coeffs))

    def __repr__(self):
        return f"Poly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


# ---------------------------------------------------------------------------
# Text grammar


_TERM_RE = re.compile(r"^([+-]?)(\d+)?(?:\*?(x)(?:\^(\d+))?)?$")


def _parse_poly(field: FiniteField, text: str) -> Poly:
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial text")
    # split keeping signs attached to each term
    pieces = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(pieces) != compact:
        raise ValueError(f"cannot parse polynomial text {text!r}")
    coeffs: dict[int, int] = {}
    for piece in pieces:
        m = _TERM_RE.match(piece)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad term {piece!r} in polynomial text {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            exp = 0
        else:
            exp = int(m.group(4)) if m.group(4) is not None else 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    out = [0] * (max(coeffs) + 1)
    for exp, c in coeffs.items():
        out[exp] = c
    return Poly(field, out)


def _coeff_text(c: FieldElement) -> str:
    if c.field.k == 1 or all(v == 0 for v in c.coeffs[1:]):
        return str(c.coeffs[0])
    # extension-field coefficient: render as a parenthesized t-polynomial
    terms = []
    for i, v in enumerate(c.coeffs):
        if v == 0:
            continue
        if i == 0:
            terms.append(str(v))
        else:
            t = "t" if i == 1 else f"t^{i}"
            terms.append(t if v == 1 else f"{v}*{t}")
    return "(" + "+".join(terms) + ")"


def to_text(f: Poly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c.is_zero():
            continue
        ct = _coeff_text(c)
        if i == 0:
            parts.append(ct)
        else:
            xp = "x" if i == 1 else f"x^{i}"
            parts.append(xp if ct == "1" else f"{ct}*{xp}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# Irreducibles and factorization


def monic_polys(field: FiniteField, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the exact degree, in canonical order."""
    if degree < 0:
        return
    elems = list(field.elements())
    q = field.q

    def build(n):
        coeffs = []
        for _ in range(degree):
            n, r = divmod(n, q)
            coeffs.append(elems[r])
        coeffs.append(field.one())
        return Poly(field, coeffs)

    for n in range(q**degree):
        yield build(n)


def is_irreducible(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.field, d):
            if (f % g).is_zero():
                return False
    return True


_irr_cache: dict[tuple, tuple] = {}


def monic_irreducibles(field: FiniteField, degree: int):
    """All monic irreducibles of the degree, cached; built by sieving
    against the cached irreducibles of lower degree."""
    key = (field.p, field.k, field.modulus, degree)
    if key not in _irr_cache:
        divisors = []
        for d in range(1, degree // 2 + 1):
            divisors.extend(monic_irreducibles(field, d))
        _irr_cache[key] = tuple(
            g
            for g in monic_polys(field, degree)
            if not any((g % h).is_zero() for h in divisors)
        )
    return _irr_cache[key]


def factor(f: Poly):
    """Factor into monic irreducibles by trial division.

    Returns (leading coefficient, [(prime, multiplicity), ...]) with the
    primes in increasing (degree, coefficient) order, so the product of
    the prime powers times the leading coefficient reassembles f.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > FACTOR_DEGREE_BOUND:
        raise ValueError(f"degree {f.degree} exceeds factoring bound {FACTOR_DEGREE_BOUND}")
    lead = f.leading_coeff()
    rem = f.monic()
    factors = []
    d = 1
    while rem.degree >= 1:
        if rem.degree < 2 * d:
            factors.append((rem, 1))  # remainder is itself irreducible
            break
        for g in monic_irreducibles(f.field, d):
            if rem.degree < 2 * d:
                break
            mult = 0
            while (rem % g).is_zero():
                rem = rem // g
                mult += 1
            if mult:
                factors.append((g, mult))
        d += 1
    factors.sort(key=lambda fe: fe[0].sort_key())
    return lead, factors


def squarefree_radical(f: Poly) -> Poly:
    """Product of the distinct monic irreducible factors."""
    lead, factors = factor(f)
    rad = Poly.one(f.field)
    for g, _ in factors:
        rad = rad * g
    return rad


# ---------------------------------------------------------------------------
# Primes and valuations


class PrimePoly:
    """A prime of F_q(x) relative to F_q[x]: a monic irreducible
    polynomial, or the distinguished infinite place."""

    __slots__ = ("field", "poly")

    def __init__(self, field: FiniteField, poly: Optional[Poly]):
        self.field = field
        self.poly = poly

    @classmethod
    def finite(cls, poly: Poly) -> PrimePoly:
        if not poly.is_monic():
            raise ValueError("finite primes must be monic")
        if not is_irreducible(poly):
            raise ValueError(f"{to_text(poly)} is reducible")
        return cls(poly.field, poly)

    @classmethod
    def infinite(cls, field: FiniteField) -> PrimePoly:
        return cls(field, None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def __eq__(self, other):
        return (
            isinstance(other, PrimePoly)
            and self.field == other.field
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.field.q, None if self.poly is None else self.poly.coeffs))

    def __repr__(self):
        return "PrimePoly(inf)" if self.is_infinite else f"PrimePoly({to_text(self.poly)!r})"

    def text(self) -> str:
        return "inf" if self.is_infinite else to_text(self.poly)


class RatFunc:
    """A rational function num/den with monic denominator and
    gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None):
        if den is None:
            den = Poly.one(num.field)
        if den.field != num.field:
            raise ValueError("mismatched base fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(num.field)
        else:
            g = poly_gcd(num, den)
            if g.degree >= 1:
                num, den = num // g, den // g
            lead_inv = den.leading_coeff().inverse()
            if lead_inv != num.field.one():
                num = num * lead_inv
                den = den * lead_inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise ValueError("mismatched base fields")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, FieldElement)):
            return RatFunc(Poly.constant(self.field, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

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
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __repr__(self):
        if self.is_poly():
            return f"RatFunc({to_text(self.num)!r})"
        return f"RatFunc({to_text(self.num)!r} / {to_text(self.den)!r})"


def _poly_multiplicity(f: Poly, prime: Poly) -> int:
    mult = 0
    while (f % prime).is_zero():
        f = f // prime
        mult += 1
    return mult


def valuation(r, p: PrimePoly) -> int:
    """v_p of a nonzero rational function (or polynomial)."""
    if isinstance(r, Poly):
        r = RatFunc(r)
    if r.is_zero():
        raise ValueError("valuation of zero is undefined")
    if p.is_infinite:
        return r.den.degree - r.num.degree
    return _poly_multiplicity(r.num, p.poly) - _poly_multiplicity(r.den, p.poly)


# ---------------------------------------------------------------------------
# Residue fields


_residue_cache: dict[tuple, tuple] = {}


def residue_field(p: PrimePoly):
    """(residue field, image of x) for a finite prime.

    The residue field F_q[x]/(pi) is realized as the deterministic
    extension of degree k*deg(pi) over the prime field, with x mapped to
    the smallest root of pi there.
    """
    if p.is_infinite:
        raise ValueError("residue reduction applies to finite primes only")
    base = p.field
    key = (base.p, base.k, base.modulus, p.poly.coeffs)
    if key in _residue_cache:
        return _residue_cache[key]
    target = make_extension(base.p, base.k * p.poly.degree)
    root = None
    for r in target.elements():
        if p.poly.evaluate(r).is_zero():
            root = r
            break
    if root is None:
        raise AssertionError("irreducible prime has no root in its residue field")
    _residue_cache[key] = (target, root)
    return target, root


def residue_reduce(r, p: PrimePoly) -> FieldElement:
    """Image of an integral rational function in the residue field at p."""
    if isinstance(r, Poly):
        r = RatFunc(r)
    if not r.is_zero() and valuation(r, p) < 0:
        raise ValueError(f"not integral at {p.text()}")
    _, root = residue_field(p)
    den_val = r.den.evaluate(root)
    return r.num.evaluate(root) / den_val
