"""Integral forms as Gram matrices: unimodularity, residue-field Witt
invariants, local isomorphism, genus witnesses, and bounded isometry
search.

Classification over a finite field of odd order is rank plus the square
class of the determinant, so ``field_isomorphic`` is a two-invariant
comparison; the test suite pins it against exhaustive congruence search
over the full general linear group.  Local isomorphism of unimodular
forms at a prime with residue field k reduces to form isomorphism over
k, which is what ``local_isomorphic`` computes after reducing both Gram
matrices.

A genus witness is a finite list of fraction-field transition matrices
Q, each with a declared bad locus given by a ring element s: away from
the zero locus of s the matrix must be integral with unit determinant.
Verification is point-based up to an inspection degree d (closed points
of the curve, or monic irreducible polynomials for the affine line)
rather than ideal-theoretic; whatever no witness reaches is reported as
a gap.

``isom_search`` looks for an integral unit-determinant congruence
between two Gram matrices by column-pruned enumeration inside explicit
degree bounds, returning the first witness in a fixed deterministic
order or none-within-bounds.  A negative answer is bounded-search
evidence, not a proof of non-isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curvepoints import AffinePoint, enumerate_points, is_smooth
from .curvering import (
    CurveSpec,
    RingElement,
    RingFraction,
    RingMatrix,
    congruence,
)
from .finfield import FieldElement, FiniteField, SquareClass, embed, square_class
from .funcfield import (
    Poly,
    PrimePoly,
    RatFunc,
    factor,
    monic_irreducibles,
    residue_reduce,
    valuation,
)

DEFAULT_SEARCH_BUDGET = 10**8


class MalformedWitnessError(ValueError):
    """A witness denominator does not divide a power of its declared locus."""


class BudgetExceededError(RuntimeError):
    """Estimated search size exceeds the configured evaluation cap."""


# ---------------------------------------------------------------------------
# Forms over finite fields


class FieldForm:
    """A symmetric matrix of field elements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FiniteField, rows):
        coerced = tuple(tuple(field.element(v) for v in row) for row in rows)
        n = len(coerced)
        if any(len(row) != n for row in coerced):
            raise ValueError("form matrix must be square")
        for i in range(n):
            for j in range(i):
                if coerced[i][j] != coerced[j][i]:
                    raise ValueError("form matrix must be symmetric")
        self.field = field
        self.rows = coerced

    @classmethod
    def diagonal(cls, field, entries) -> FieldForm:
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def det(self) -> FieldElement:
        return _field_det(self.field, self.rows)

    def is_degenerate(self) -> bool:
        return self.det().is_zero()

    @property
    def rank(self) -> int:
        diag, _ = diagonalize(self)
        return sum(1 for d in diag if not d.is_zero())

    def __eq__(self, other):
        return (
            isinstance(other, FieldForm)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field.q, self.rows))

    def __repr__(self):
        return f"FieldForm({[[c.coeffs[0] if self.field.k == 1 else c.coeffs for c in row] for row in self.rows]})"


def _field_det(field, rows) -> FieldElement:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = field.zero()
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        cof = rows[0][j] * _field_det(field, minor)
        total = total - cof if j % 2 else total + cof
    return total


def field_congruence(t_rows, form: FieldForm) -> FieldForm:
    """T^t F T over the field, for plain row-tuple transition matrices."""
    field = form.field
    n = form.n
    ft = [
        [sum((form.rows[i][k] * t_rows[k][j] for k in range(n)), field.zero()) for j in range(n)]
        for i in range(n)
    ]
    rows = [
        [sum((t_rows[k][i] * ft[k][j] for k in range(n)), field.zero()) for j in range(n)]
        for i in range(n)
    ]
    return FieldForm(field, rows)


def diagonalize(form: FieldForm):
    """Congruence diagonalization over a field of odd characteristic.

    Returns (diagonal entries, T) with T^t F T diagonal.  A zero pivot
    with a nonzero off-diagonal partner j is repaired by the basis
    substitution e_i <- e_i + e_j (falling back to e_i - e_j when the
    characteristic-independent cancellation 2F_ij + F_jj = 0 strikes);
    pivots and partners are always taken at the lowest index.
    Degenerate forms simply keep zeros on the diagonal, so the rank is
    preserved.
    """
    field = form.field
    n = form.n
    m = [list(row) for row in form.rows]
    t = [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]

    def add_basis(i, j, c):
        # e_i <- e_i + c * e_j
        for r in range(n):
            t[r][i] = t[r][i] + c * t[r][j]
        for r in range(n):
            m[r][i] = m[r][i] + c * m[r][j]
        for r in range(n):
            m[i][r] = m[i][r] + c * m[j][r]

    for i in range(n):
        if m[i][i].is_zero():
            j = next((k for k in range(i + 1, n) if not m[i][k].is_zero()), None)
            if j is None:
                continue  # e_i lies in the radical of the trailing block
            add_basis(i, j, field.one())
            if m[i][i].is_zero():
                add_basis(i, j, field.element(-2))
        inv = m[i][i].inverse()
        for j in range(i + 1, n):
            if not m[i][j].is_zero():
                add_basis(j, i, -(m[i][j] * inv))
    diag = tuple(m[i][i] for i in range(n))
    return diag, tuple(tuple(row) for row in t)


def disc_class(form: FieldForm) -> SquareClass:
    """Square class of the determinant, a congruence invariant."""
    d = form.det()
    if d.is_zero():
        raise ValueError("discriminant class of a degenerate form is undefined")
    return square_class(d)


def field_isomorphic(f: FieldForm, g: FieldForm) -> bool:
    """Rank plus discriminant class decide isomorphism over a finite
    field of odd order (Witt classification)."""
    if f.field != g.field:
        raise ValueError("forms live over different fields")
    if f.is_degenerate() or g.is_degenerate():
        raise ValueError("isomorphism test requires nondegenerate forms")
    return f.n == g.n and disc_class(f) == disc_class(g)


# ---------------------------------------------------------------------------
# Integral forms


class GramMatrix:
    """A nondegenerate symmetric matrix with entries in the coordinate
    ring, representing an integral bilinear form."""

    __slots__ = ("curve", "matrix", "_det")

    def __init__(self, curve: CurveSpec, matrix: RingMatrix):
        if matrix.curve != curve:
            raise ValueError("matrix lives over a different curve")
        if not matrix.is_symmetric():
            raise ValueError("integral forms are symmetric")
        if not matrix.all_integral():
            raise ValueError("integral forms have no denominators")
        det = matrix.det()
        if det.is_zero():
            raise ValueError("integral forms are nondegenerate")
        self.curve = curve
        self.matrix = matrix
        self._det = det

    @classmethod
    def from_rows(cls, curve, rows) -> GramMatrix:
        return cls(curve, RingMatrix(curve, rows))

    @classmethod
    def identity(cls, curve, n: int) -> GramMatrix:
        return cls(curve, RingMatrix.identity(curve, n))

    @classmethod
    def diagonal(cls, curve, entries) -> GramMatrix:
        return cls(curve, RingMatrix.diagonal(curve, entries))

    @property
    def n(self) -> int:
        return self.matrix.n

    def det(self) -> RingElement:
        return self._det.as_ring_element()

    def ring_rows(self):
        return tuple(tuple(e.as_ring_element() for e in row) for row in self.matrix.rows)

    def reduce_at_point(self, point: AffinePoint) -> FieldForm:
        rows = self.matrix.evaluate(point.x, point.y)
        return FieldForm(point.x.field, rows)

    def reduce_mod_prime(self, prime: PrimePoly) -> FieldForm:
        if not self.curve.is_polyline:
            raise ValueError("prime reduction applies over the affine line")
        target, _ = _residue(prime)
        rows = [
            [residue_reduce(RatFunc(e.as_ring_element().a), prime) for e in row]
            for row in self.matrix.rows
        ]
        return FieldForm(target, rows)

    def __eq__(self, other):
        return isinstance(other, GramMatrix) and self.matrix == other.matrix

    def __repr__(self):
        return f"GramMatrix({self.matrix.rows!r})"


def _residue(prime: PrimePoly):
    from .funcfield import residue_field

    return residue_field(prime)


def is_unimodular(form: GramMatrix) -> bool:
    """Whether the determinant is a unit, i.e. a nonzero constant."""
    return form.det().is_unit()


def local_isomorphic(f: GramMatrix, g: GramMatrix, at) -> bool:
    """Compare two unimodular forms at a closed point.

    Both Gram matrices are reduced into the residue field (evaluation at
    an affine point, or reduction mod a monic irreducible over the
    line), where unimodularity keeps them nondegenerate and the Witt
    comparison applies.
    """
    if f.curve != g.curve:
        raise ValueError("forms live over different curves")
    for name, form in (("first", f), ("second", g)):
        if not is_unimodular(form):
            raise ValueError(f"{name} form is not unimodular; its reduction may degenerate")
    curve = f.curve
    if isinstance(at, PrimePoly):
        if not curve.is_polyline:
            raise ValueError("prime reduction applies over the affine line")
        return field_isomorphic(f.reduce_mod_prime(at), g.reduce_mod_prime(at))
    if isinstance(at, AffinePoint):
        if curve.is_polyline:
            raise ValueError("affine-line forms reduce at primes, not curve points")
        _reject_singular_point(curve, at)
        return field_isomorphic(f.reduce_at_point(at), g.reduce_at_point(at))
    raise TypeError(f"cannot localize at {at!r}")


def _reject_singular_point(curve: CurveSpec, point: AffinePoint):
    if curve.is_smooth:
        return
    _, singular = is_smooth(curve)
    ext = point.x.field
    for s in singular:
        if embed(s.x, ext) == point.x and embed(s.y, ext) == point.y:
            raise ValueError(
                "reduction at the singular point is rejected: the local ring "
                "there is not a discrete valuation ring"
            )


# ---------------------------------------------------------------------------
# Genus witnesses


@dataclass
class GenusWitness:
    """Transition matrices with declared bad loci, certifying membership
    in a genus prime by prime."""

    target: GramMatrix
    pairs: tuple  # of (RingMatrix, RingElement)

    def __post_init__(self):
        pairs = []
        for q, s in self.pairs:
            if not isinstance(q, RingMatrix) or not isinstance(s, RingElement):
                raise TypeError("witness pairs are (matrix, ring element)")
            if q.curve != self.target.curve or s.curve != self.target.curve:
                raise ValueError("witness pieces live over different curves")
            if s.is_zero():
                raise MalformedWitnessError("declared locus must be nonzero")
            _check_denominators(q, s)
            pairs.append((q, s))
        self.pairs = tuple(pairs)


def _check_denominators(q: RingMatrix, s: RingElement):
    """Every denominator must divide a power of s, equivalently every
    irreducible factor of the denominator divides the norm of s."""
    norm = s.norm()
    for row in q.rows:
        for e in row:
            if e.den.degree < 1:
                continue
            _, factors = factor(e.den)
            for prime, _ in factors:
                if not (norm % prime).is_zero():
                    raise MalformedWitnessError(
                        f"denominator factor {prime} does not divide a power "
                        f"of the declared locus"
                    )


@dataclass
class GenusReport:
    """Outcome of point-based genus verification up to a degree."""

    verdict: str  # "Certified" | "GapFound"
    degree: int
    identity_ok: tuple
    covered: tuple
    uncovered: tuple


def verify_genus_witness(
    f: GramMatrix, g: GramMatrix, witness: GenusWitness, degree: int = 2
) -> GenusReport:
    """Check a genus witness and report coverage up to the given degree.

    Three things are verified: each congruence identity Q^t F Q = G
    exactly over the fraction field (which certifies isomorphism over
    the function field), integrality and unit determinant of each Q away
    from its declared locus, and coverage: every closed point of degree
    at most ``degree`` must be reached by some witness.  Points beyond
    the inspection degree are not examined; a Certified verdict means
    certified up to that degree.
    """
    if f.curve != g.curve:
        raise ValueError("forms live over different curves")
    if f.n != g.n:
        raise ValueError("forms have different ranks")
    if witness.target.matrix != g.matrix:
        raise ValueError("witness targets a different form")
    if degree < 1:
        raise ValueError("inspection degree must be >= 1")
    curve = f.curve

    identity_ok = tuple(congruence(q, f.matrix) == g.matrix for q, _ in witness.pairs)

    dets = [q.det() for q, _ in witness.pairs]
    covered, uncovered = [], []
    if curve.is_polyline:
        for d in range(1, degree + 1):
            for prime_poly in monic_irreducibles(curve.field, d):
                prime = PrimePoly(curve.field, prime_poly)
                if any(
                    _covers_prime(q, s, det, prime_poly)
                    for (q, s), det in zip(witness.pairs, dets)
                ):
                    covered.append(prime)
                else:
                    uncovered.append(prime)
    else:
        for d in range(1, degree + 1):
            for point in enumerate_points(curve, d):
                if point.degree != d:
                    continue  # seen at its own degree already
                if any(
                    _covers_point(q, s, det, point)
                    for (q, s), det in zip(witness.pairs, dets)
                ):
                    covered.append(point)
                else:
                    uncovered.append(point)

    certified = all(identity_ok) and not uncovered
    return GenusReport(
        verdict="Certified" if certified else "GapFound",
        degree=degree,
        identity_ok=identity_ok,
        covered=tuple(covered),
        uncovered=tuple(uncovered),
    )


def _covers_prime(q: RingMatrix, s: RingElement, det: RingFraction, prime: Poly) -> bool:
    if (s.a % prime).is_zero():
        return False  # the prime lies in the declared bad locus
    for row in q.rows:
        for e in row:
            if (e.den % prime).is_zero():
                return False
    if det.num.is_zero():
        return False
    return valuation(RatFunc(det.num.a, det.den), PrimePoly(prime.field, prime)) == 0


def _covers_point(q: RingMatrix, s: RingElement, det: RingFraction, point: AffinePoint) -> bool:
    if s.evaluate(point.x, point.y).is_zero():
        return False
    for row in q.rows:
        for e in row:
            if e.den.evaluate(point.x).is_zero():
                return False
    if det.den.evaluate(point.x).is_zero():
        return False
    return not det.num.evaluate(point.x, point.y).is_zero()


# ---------------------------------------------------------------------------
# Bounded isometry search


def isom_search(
    f: GramMatrix,
    g: GramMatrix,
    deg_x: int,
    deg_y: int = -1,
    budget: Optional[int] = None,
) -> Optional[RingMatrix]:
    """Search for Q integral with Q^t F Q = G and unit determinant.

    Candidate entries are ring elements A(x) + B(x)y with deg A <= deg_x
    and deg B <= deg_y (deg_y < 0, or the affine line, forbids the y
    part).  Columns are found left to right: a column must achieve the
    matching diagonal entry of G, then the inner products against the
    columns already chosen, and a full candidate must have unit
    determinant.  The first witness in entry order is returned (entries
    compare by coefficient vectors, nonzero before zero, which makes the
    identity the first witness whenever it works); ``None`` means
    none-within-bounds, which is evidence, not proof.

    ``budget`` caps the estimated number of inner-product evaluations
    (default 10^8); exceeding it raises BudgetExceededError.
    """
    if f.curve != g.curve:
        raise ValueError("forms live over different curves")
    if f.n != g.n:
        raise ValueError("forms have different ranks")
    n = f.n
    if n > 3:
        raise ValueError("search supports rank <= 3")
    if budget is None:
        budget = DEFAULT_SEARCH_BUDGET
    curve = f.curve
    if curve.is_polyline:
        deg_y = -1

    pool = _entry_pool(curve, deg_x, deg_y)
    f_rows = f.ring_rows()
    g_rows = g.ring_rows()
    diagonal = all(
        f_rows[i][j].is_zero() for i in range(n) for j in range(n) if i != j
    )

    rank = {e: i for i, e in enumerate(pool)}
    counter = _EvalCounter(budget)
    targets = {}
    for j in range(n):
        t = g_rows[j][j]
        if t not in targets:
            targets[t] = _quadratic_candidates(f_rows, pool, t, diagonal, counter, rank)
    candidates = [targets[g_rows[j][j]] for j in range(n)]

    est = 1
    for cand in candidates:
        est *= max(1, len(cand))
        if est > budget:
            raise BudgetExceededError(
                f"estimated candidate count {est} exceeds budget {budget}"
            )

    # evaluation at a few curve points is a ring homomorphism, so a
    # mismatch there rules a pair out before the exact inner product
    probes = _probe_points(curve)
    entry_vals = {e: tuple(e.evaluate(x0, y0) for x0, y0 in probes) for e in pool}
    f_vals = [
        [tuple(f_rows[i][j].evaluate(x0, y0) for x0, y0 in probes) for j in range(n)]
        for i in range(n)
    ]
    g_vals = [
        [tuple(g_rows[i][j].evaluate(x0, y0) for x0, y0 in probes) for j in range(n)]
        for i in range(n)
    ]

    def probe_mismatch(u, v, i, j) -> bool:
        gv = g_vals[i][j]
        for t in range(len(probes)):
            acc = None
            for r in range(n):
                for c in range(n):
                    fv = f_vals[r][c][t]
                    if fv.is_zero():
                        continue
                    term = entry_vals[u[r]][t] * fv * entry_vals[v[c]][t]
                    acc = term if acc is None else acc + term
            if acc is None:
                if not gv[t].is_zero():
                    return True
            elif acc != gv[t]:
                return True
        return False

    cols = []

    def extend(j: int) -> Optional[RingMatrix]:
        for col in candidates[j]:
            ok = True
            for i in range(j):
                counter.tick()
                if probe_mismatch(cols[i], col, i, j):
                    ok = False
                    break
                if _bilinear(f_rows, cols[i], col) != g_rows[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            cols.append(col)
            if j == n - 1:
                q = RingMatrix(curve, [[cols[c][r] for c in range(n)] for r in range(n)])
                det = q.det()
                if det.is_integral() and det.as_ring_element().is_unit():
                    return q
            else:
                found = extend(j + 1)
                if found is not None:
                    return found
            cols.pop()
        return None

    return extend(0)


def _probe_points(curve: CurveSpec):
    """A few evaluation points of the coordinate ring, used as a cheap
    necessary filter during the search."""
    if curve.is_polyline:
        xs = []
        for x0 in curve.field.elements():
            xs.append((x0, None))
            if len(xs) == 4:
                break
        return xs
    pts = enumerate_points(curve, 1)
    if len(pts) < 2:
        pts = enumerate_points(curve, 2)
    return [(p.x, p.y) for p in pts[:4]]


class _EvalCounter:
    __slots__ = ("count", "budget")

    def __init__(self, budget: int):
        self.count = 0
        self.budget = budget

    def tick(self, amount: int = 1):
        self.count += amount
        if self.count > self.budget:
            raise BudgetExceededError(
                f"evaluation count {self.count} exceeds budget {self.budget}"
            )


def _entry_pool(curve: CurveSpec, deg_x: int, deg_y: int):
    """All candidate entries within the degree bounds, in search order."""
    field = curve.field
    elems = list(field.elements())
    a_polys = _polys_up_to(field, elems, deg_x)
    if deg_y < 0:
        b_polys = [Poly.zero(field)]
    else:
        b_polys = _polys_up_to(field, elems, deg_y)
    pool = [RingElement(curve, a, b) for a in a_polys for b in b_polys]
    pool.sort(key=lambda e: _entry_key(e, deg_x, deg_y))
    return pool


def _polys_up_to(field, elems, max_deg: int):
    out = []
    q = field.q

    def build(num, length):
        coeffs = []
        for _ in range(length):
            num, r = divmod(num, q)
            coeffs.append(elems[r])
        return Poly(field, coeffs)

    for num in range(q ** (max_deg + 1)):
        out.append(build(num, max_deg + 1))
    return out


def _entry_key(e: RingElement, deg_x: int, deg_y: int):
    """Deterministic search order: nonzero entries first, then by padded
    coefficient vectors (A part before B part)."""
    field = e.curve.field
    zero = field.zero()
    a = list(e.a.coeffs) + [zero] * (deg_x + 1 - len(e.a.coeffs))
    b = []
    if deg_y >= 0:
        b = list(e.b.coeffs) + [zero] * (deg_y + 1 - len(e.b.coeffs))
    flat = tuple(v for c in a + b for v in c.coeffs)
    return (1 if e.is_zero() else 0,) + flat


def _bilinear(f_rows, u, v) -> RingElement:
    n = len(f_rows)
    acc = None
    for i in range(n):
        for j in range(n):
            if f_rows[i][j].is_zero():
                continue
            term = u[i] * f_rows[i][j] * v[j]
            acc = term if acc is None else acc + term
    if acc is None:
        return RingElement.zero(u[0].curve)
    return acc


def _quadratic_candidates(f_rows, pool, target: RingElement, diagonal: bool, counter, rank):
    """All columns c within bounds with c^t F c = target, in entry order."""
    import itertools

    n = len(f_rows)
    if n == 1:
        counter.tick(len(pool))
        return [(e,) for e in pool if f_rows[0][0] * e * e == target]
    if not diagonal:
        counter.tick(len(pool) ** n)
        out = []
        for col in itertools.product(pool, repeat=n):
            if _bilinear(f_rows, col, col) == target:
                out.append(col)
        return out
    # diagonal form: hash the first-row contribution, scan the rest
    counter.tick(len(pool))
    first = {}
    f0 = f_rows[0][0]
    for e in pool:
        first.setdefault(f0 * e * e, []).append(e)
    out = []
    if n == 2:
        f1 = f_rows[1][1]
        counter.tick(len(pool))
        for e2 in pool:
            need = target - f1 * e2 * e2
            for e1 in first.get(need, ()):
                out.append((e1, e2))
    else:
        f1, f2 = f_rows[1][1], f_rows[2][2]
        counter.tick(len(pool) ** 2)
        for e2 in pool:
            part = target - f1 * e2 * e2
            for e3 in pool:
                need = part - f2 * e3 * e3
                for e1 in first.get(need, ()):
                    out.append((e1, e2, e3))
    out.sort(key=lambda col: tuple(rank[e] for e in col))
    return out
