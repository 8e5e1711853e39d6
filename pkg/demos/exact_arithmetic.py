"""A tour of the exact arithmetic layers.

Everything downstream (point counts, witnesses, searches) reduces to
these operations: finite fields with deterministic extensions,
polynomial factorization by trial division, valuations at primes and
at infinity, and residue-field reduction.
"""

from hasseforms import (
    CurveSpec,
    Poly,
    PrimePoly,
    RatFunc,
    RingElement,
    factor,
    is_square,
    make_extension,
    residue_reduce,
    valuation,
)
from hasseforms.funcfield import to_text

F5 = make_extension(5, 1)
F9 = make_extension(3, 2)

print("fields")
print(f"  squares of F_5: {[v for v in range(1, 5) if is_square(F5.element(v))]}")
modulus = "+".join(
    ("t" if i == 1 else f"t^{i}" if i else str(c)) if c == 1 or i == 0 else f"{c}*t^{i}"
    for i, c in enumerate(F9.modulus)
    if c
)
print(f"  F_9 is F_3[t]/({modulus}), t*t = {F9.gen() * F9.gen()!r}")

print("\nfactorization over F_5")
cubic = Poly.from_text(F5, "x^3+2*x+3")
lead, factors = factor(cubic)
pretty = " * ".join(f"({to_text(g)})^{e}" if e > 1 else f"({to_text(g)})" for g, e in factors)
print(f"  x^3+2x+3 = {pretty}")

print("\nvaluations")
r = RatFunc(Poly.from_text(F5, "x^2+2*x+1"), Poly.from_text(F5, "x+3"))
p = PrimePoly.finite(Poly.from_text(F5, "x+1"))
print(f"  v_(x+1) of (x+1)^2/(x+3) = {valuation(r, p)}")
print(f"  v_inf of x^3 = {valuation(RatFunc(Poly.from_text(F5, 'x^3')), PrimePoly.infinite(F5))}")

print("\nresidue fields")
print(f"  x^2 mod (x+1) over F_5 -> {residue_reduce(Poly.from_text(F5, 'x^2'), p)!r}")
quad = PrimePoly.finite(Poly.from_text(make_extension(3, 1), "x^2+1"))
print(f"  x mod (x^2+1) over F_3 -> {residue_reduce(Poly.x(make_extension(3, 1)), quad)!r} (a generator of F_9)")

print("\ncoordinate rings")
curve = CurveSpec.weierstrass(F5, 2, 3)
y = RingElement.y(curve)
print(f"  y * y rewrites to {to_text((y * y).a)}")
print(f"  N(y) = {to_text(y.norm())}")
print(f"  units are the nonzero constants: is_unit(3) = {RingElement.constant(curve, 3).is_unit()}, is_unit(y) = {y.is_unit()}")
