"""Supersingular curves y^2 + a1*y = x^3 + a2*x behind the quartic maps.

On such a curve the x-coordinate of point duplication is x -> a*x^4 + b with
a = 1/a1^2 and b = (a2/a1)^2.  Cycle lengths of those maps on P^1 therefore
come down to the order of 2 modulo point orders in the group E(F_{2^n}),
which this module computes and catalogs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import lcm

from .fields import (
    BinaryField,
    ExtensionEmbedding,
    FieldElement,
    FieldMismatchError,
    InvariantViolationError,
    LinearizedPoly,
    extension_of,
    quadratic_extension,
)

_FULL_SCAN_LIMIT = 1 << 16  # verify group exponent against every point below this


@dataclass(frozen=True)
class CurveSpec:
    """The curve y^2 + a1*y = x^3 + a2*x over a binary field (a1 nonzero)."""

    a1: FieldElement
    a2: FieldElement

    def __post_init__(self):
        if self.a1.field != self.a2.field:
            raise FieldMismatchError("curve coefficients lie in different fields")
        if self.a1.is_zero:
            raise ValueError("a1 must be nonzero (the curve would be singular)")

    @property
    def field(self) -> BinaryField:
        return self.a1.field

    @property
    def identity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def contains(self, x: FieldElement, y: FieldElement) -> bool:
        return y * y + self.a1 * y == x * x * x + self.a2 * x

    def point(self, x: FieldElement, y: FieldElement) -> "CurvePoint":
        if x.field != self.field or y.field != self.field:
            raise FieldMismatchError("coordinates lie outside the curve's field")
        if not self.contains(x, y):
            raise ValueError(f"({x.hex}, {y.hex}) does not satisfy the curve equation")
        return CurvePoint(self, x, y)

    def extended(self, embedding: ExtensionEmbedding) -> "CurveSpec":
        if embedding.base != self.field:
            raise FieldMismatchError("embedding does not start at the curve's field")
        return CurveSpec(embedding(self.a1), embedding(self.a2))

    def describe(self) -> str:
        return f"y^2 + {self.a1.hex}*y = x^3 + {self.a2.hex}*x"


@dataclass(frozen=True)
class CurvePoint:
    """A point of E: the identity, or an affine pair satisfying the equation."""

    curve: CurveSpec
    x: FieldElement | None
    y: FieldElement | None

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "CurvePoint":
        if self.is_identity:
            return self
        return CurvePoint(self.curve, self.x, self.y + self.curve.a1)

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return point_add(self.curve, self, other)

    def double(self) -> "CurvePoint":
        return point_add(self.curve, self, self)

    def __rmul__(self, n: int) -> "CurvePoint":
        return scalar_mul(n, self)

    def __repr__(self) -> str:
        if self.is_identity:
            return "CurvePoint(identity)"
        return f"CurvePoint({self.x.hex}, {self.y.hex})"


def curve_from_map(a: FieldElement, b: FieldElement) -> CurveSpec:
    """The curve whose duplication x-map is x -> a*x^4 + b.

    Squaring is a bijection in characteristic two, so a1 = sqrt(1/a) and
    a2 = a1*sqrt(b) are the unique coefficients with 1/a1^2 = a and
    (a2/a1)^2 = b.
    """
    if a.field != b.field:
        raise FieldMismatchError("map coefficients lie in different fields")
    if a.is_zero:
        raise ValueError("coefficient a must be nonzero")
    a1 = a.inv().sqrt()
    return CurveSpec(a1, a1 * b.sqrt())


def map_coefficients(curve: CurveSpec) -> tuple[FieldElement, FieldElement]:
    """The (a, b) with duplication-x equal to x -> a*x^4 + b."""
    inv_sq = (curve.a1 * curve.a1).inv()
    return inv_sq, curve.a2 * curve.a2 * inv_sq


def duplication_x(curve: CurveSpec, x0: FieldElement) -> FieldElement:
    """x-coordinate of 2P for any P with x-coordinate x0: (x0^4 + a2^2)/a1^2."""
    if x0.field != curve.field:
        raise FieldMismatchError("x0 lies outside the curve's field")
    a1, a2 = curve.a1, curve.a2
    return (x0.frob(2) + a2 * a2) / (a1 * a1)


def point_add(curve: CurveSpec, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-and-tangent group law.

    For y^2 + a1*y = x^3 + a2*x over F_{2^n} the slopes are
    lambda = (y1 + y2)/(x1 + x2) for a chord and (x1^2 + a2)/a1 for a
    tangent; then x3 = lambda^2 + (x1 + x2 for the chord case) and
    y3 = lambda*(x1 + x3) + y1 + a1.
    """
    if p.curve != curve or q.curve != curve:
        raise FieldMismatchError("points lie on a different curve")
    if p.is_identity:
        return q
    if q.is_identity:
        return p
    a1, a2 = curve.a1, curve.a2
    if p.x == q.x:
        if p.y != q.y:  # q == -p, since the two lifts of an x differ by a1
            return curve.identity
        slope = (p.x * p.x + a2) / a1
        x3 = slope * slope
    else:
        slope = (p.y + q.y) / (p.x + q.x)
        x3 = slope * slope + p.x + q.x
    y3 = slope * (p.x + x3) + p.y + a1
    return CurvePoint(curve, x3, y3)


def scalar_mul(n: int, p: CurvePoint) -> CurvePoint:
    """n*P by double-and-add; group order is odd so negation handles n < 0."""
    if n < 0:
        return scalar_mul(-n, -p)
    acc = p.curve.identity
    addend = p
    while n:
        if n & 1:
            acc = point_add(p.curve, acc, addend)
        n >>= 1
        if n:
            addend = addend.double()
    return acc


# -- lifting x-coordinates ---------------------------------------------------------

_ARTIN_SCHREIER: dict[BinaryField, LinearizedPoly] = {}


def _halves(field: BinaryField, w: FieldElement) -> set[FieldElement]:
    """Solutions of z^2 + z = w (empty when the trace of w is 1)."""
    poly = _ARTIN_SCHREIER.get(field)
    if poly is None:
        poly = LinearizedPoly(2, [field.one, field.one])
        _ARTIN_SCHREIER[field] = poly
    return poly.solve(w)


def lift_x(curve: CurveSpec, x0: FieldElement,
           ext: ExtensionEmbedding | None = None) -> set[CurvePoint]:
    """The points of E with x-coordinate x0: in the base field when
    y^2 + a1*y = x0^3 + a2*x0 is solvable there, otherwise in the quadratic
    extension (where it always is).  The two returned points are negatives
    of each other."""
    if x0.field != curve.field:
        raise FieldMismatchError("x0 lies outside the curve's field")
    a1 = curve.a1
    rhs = x0 * x0 * x0 + curve.a2 * x0
    w = rhs / (a1 * a1)
    zs = _halves(curve.field, w)
    if zs:
        return {CurvePoint(curve, x0, a1 * z) for z in zs}
    if ext is None:
        ext = quadratic_extension(curve.field)
    big = curve.extended(ext)
    zs = _halves(ext.ext, ext(w))
    if not zs:  # pragma: no cover
        raise InvariantViolationError(
            "quadratic equation unsolvable in the quadratic extension")
    return {CurvePoint(big, ext(x0), ext(a1) * z) for z in zs}


# -- point counting ---------------------------------------------------------------


def _curve_over(curve: CurveSpec, field: BinaryField | None) -> CurveSpec:
    if field is None or field == curve.field:
        return curve
    if field.degree % curve.field.degree:
        raise ValueError("target field does not extend the curve's field")
    emb = extension_of(curve.field, field.degree // curve.field.degree)
    if emb.ext != field:
        raise ValueError("target field does not match the canonical extension")
    return curve.extended(emb)


def _count_chunk(degree: int, modulus: int, a1: int, a2: int,
                 start: int, stop: int) -> int:
    """Number of x in [start, stop) whose quadratic is solvable (worker-safe)."""
    field = BinaryField(degree, modulus)
    inv_sq = field.inv(field.mul(a1, a1))
    count = 0
    for x in range(start, stop):
        rhs = field.mul(field.mul(x, x), x) ^ field.mul(a2, x)
        if field.trace(field.mul(rhs, inv_sq)) == 0:
            count += 1
    return count


def point_count(curve: CurveSpec, field: BinaryField | None = None,
                jobs: int = 1) -> int:
    """|E(field)| = 1 + twice the number of x with solvable quadratic.

    y^2 + a1*y = rhs becomes z^2 + z = rhs/a1^2 after y = a1*z, which has two
    solutions when Tr(rhs/a1^2) = 0 and none otherwise.
    """
    cur = _curve_over(curve, field)
    f = cur.field
    args = (f.degree, f.modulus, cur.a1.bits, cur.a2.bits)
    if jobs <= 1 or f.order < 1 << 12:
        solvable = _count_chunk(*args, 0, f.order)
    else:
        step = -(-f.order // jobs)
        chunks = [(*args, lo, min(lo + step, f.order))
                  for lo in range(0, f.order, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            solvable = sum(pool.map(_count_chunk, *zip(*chunks)))
    total = 1 + 2 * solvable
    if total % 2 == 0:  # pragma: no cover
        raise InvariantViolationError("point count must be odd")
    return total


# -- group structure ---------------------------------------------------------------


@dataclass(frozen=True)
class GroupStructure:
    """E(F) as Z/n1 x Z/n2 with n1 | n2 (and n1 | field's 2^m - 1)."""

    order: int
    n1: int
    n2: int


def _factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def divisors(m: int) -> list[int]:
    """All positive divisors, ascending."""
    if m < 1:
        raise ValueError("m must be positive")
    out = [1]
    for p, e in _factorize(m).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def euler_phi(m: int) -> int:
    """Euler's totient via trial-division factorization."""
    if m < 1:
        raise ValueError("m must be positive")
    out = m
    for p in _factorize(m):
        out = out // p * (p - 1)
    return out


def _point_order(p: CurvePoint, group_order: int,
                 factors: dict[int, int]) -> int:
    order = group_order
    for prime in factors:
        while order % prime == 0 and scalar_mul(order // prime, p).is_identity:
            order //= prime
    return order


def _rational_points(curve: CurveSpec):
    """One representative per {P, -P} pair, in ascending x order."""
    field = curve.field
    inv_sq = (curve.a1 * curve.a1).inv()
    for xbits in range(field.order):
        x = field.element(xbits)
        rhs = x * x * x + curve.a2 * x
        w = rhs * inv_sq
        if w.trace() == 0:
            z = min(_halves(field, w), key=lambda e: e.bits)
            yield CurvePoint(curve, x, curve.a1 * z)


def group_structure(curve: CurveSpec, field: BinaryField | None = None,
                    jobs: int = 1) -> GroupStructure:
    """Compute (order, n1, n2) with E(field) = Z/n1 x Z/n2 and n1 | n2.

    n2 is the group exponent: the lcm of point orders, grown until it covers
    a sample (and, for fields small enough to sweep, every point).
    """
    cur = _curve_over(curve, field)
    f = cur.field
    total = point_count(cur, jobs=jobs)
    factors = _factorize(total)
    exponent = 1
    sample_budget = 48
    points = _rational_points(cur)
    for p, _ in zip(points, range(sample_budget)):
        exponent = lcm(exponent, _point_order(p, total, factors))
        if exponent == total:
            break
    if exponent < total and f.order <= _FULL_SCAN_LIMIT:
        for p in _rational_points(cur):
            if not scalar_mul(exponent, p).is_identity:
                exponent = lcm(exponent, _point_order(p, total, factors))
                if exponent == total:
                    break
    n2 = exponent
    if total % n2:
        raise InvariantViolationError("group exponent does not divide the order")
    n1 = total // n2
    if n2 % n1:
        raise InvariantViolationError(
            f"structure Z/{n1} x Z/{n2} is not of the required shape")
    if (f.order - 1) % n1:
        raise InvariantViolationError(
            f"n1 = {n1} does not divide the multiplicative order {f.order - 1}")
    return GroupStructure(order=total, n1=n1, n2=n2)


# -- cycle-length prediction ------------------------------------------------------


def predict_orbit_length(curve: CurveSpec, p: CurvePoint) -> int:
    """Least k >= 1 with 2^k * P = P or -P: the orbit length of x(P) under
    the duplication x-map (the identity predicts the fixed point at infinity)."""
    if p.curve != curve:
        raise FieldMismatchError("point lies on a different curve")
    if p.is_identity:
        return 1
    neg = -p
    q = p.double()
    cap = 4 * curve.field.order + 8  # k is at most the order of 2 mod ord(P)
    for k in range(1, cap):
        if q == p or q == neg:
            return k
        q = q.double()
    raise InvariantViolationError("doubling never returned to the start point")


def half_multiple_relation(l: int, curve: CurveSpec, p: CurvePoint) -> int:
    """Resolve the doubling ambiguity at a candidate length l: the true orbit
    length is l exactly when 2^l * P = P or -P, and 2l otherwise."""
    if l < 1:
        raise ValueError("l must be positive")
    if p.curve != curve:
        raise FieldMismatchError("point lies on a different curve")
    q = p
    for _ in range(l):  # 2^l * P by l doublings
        q = q.double()
    return l if q == p or q == -p else 2 * l


# -- the divisor-pair catalog ------------------------------------------------------


def _order_of_two(modulus: int) -> int:
    if modulus <= 1:
        return 1
    k, v = 1, 2 % modulus
    while v != 1:
        v = (v + v) % modulus
        k += 1
        if k > modulus:  # pragma: no cover
            raise InvariantViolationError("order of 2 exceeded the modulus")
    return k


def _signed_exponents(modulus: int) -> tuple[int, int | None]:
    """(least k with 2^k = 1, least k with 2^k = -1 or None) mod modulus."""
    if modulus <= 1:
        return 1, 1
    plus = _order_of_two(modulus)
    if plus % 2 == 0 and pow(2, plus // 2, modulus) == modulus - 1:
        return plus, plus // 2
    return plus, None


@dataclass(frozen=True)
class CycleCatalogEntry:
    """Divisor pair (d1, d2) of (n1, n2) and the dynamics of its points.

    The phi(m1)*phi(m2) points whose coordinates have exact orders (m1, m2)
    share one orbit length under duplication-x: the least k with 2^k = 1 or
    2^k = -1 simultaneously mod m1 and m2 (length).  possible_lengths lists
    both one-sign candidates; over a subfield of the catalog's field only
    those are attainable.
    """

    d1: int
    d2: int
    m1: int
    m2: int
    length: int
    possible_lengths: tuple[int, ...]
    point_count: int
    cycle_count: int

    @property
    def is_identity_class(self) -> bool:
        return self.m1 == 1 and self.m2 == 1


def cycle_catalog(gs: GroupStructure) -> list[CycleCatalogEntry]:
    """One entry per divisor pair (d1 | n1, d2 | n2), sorted by
    (length, d1, d2).  The (m1, m2) = (1, 1) entry is the identity point,
    whose x-coordinate is the fixed point at infinity."""
    entries = []
    for d1 in divisors(gs.n1):
        m1 = gs.n1 // d1
        for d2 in divisors(gs.n2):
            m2 = gs.n2 // d2
            joint = lcm(m1, m2)
            k_plus, k_minus = _signed_exponents(joint)
            length = k_plus if k_minus is None else min(k_plus, k_minus)
            possible = tuple(sorted({k_plus, k_minus} - {None}))
            points = euler_phi(m1) * euler_phi(m2)
            if m1 == 1 and m2 == 1:
                cycles = 1
            else:
                if points % (2 * length):
                    raise InvariantViolationError(
                        f"{points} points cannot split into cycles of "
                        f"length {length}")
                cycles = points // (2 * length)
            entries.append(CycleCatalogEntry(
                d1=d1, d2=d2, m1=m1, m2=m2, length=length,
                possible_lengths=possible, point_count=points,
                cycle_count=cycles))
    entries.sort(key=lambda e: (e.length, e.d1, e.d2))
    return entries


def catalog_length_sets(entries: list[CycleCatalogEntry]) -> tuple[set[int], set[int]]:
    """(realized lengths, all candidate lengths) across a catalog."""
    realized = {e.length for e in entries}
    possible = set()
    for e in entries:
        possible.update(e.possible_lengths)
    return realized, possible
