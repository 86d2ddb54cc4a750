"""Conjugating x -> 1/(a*x^(2^k) + b) to its normal form c*x^(2^k).

The fractional-linear map tau(x) = (x + c1)/(c2*x + c3) transports the
reciprocal map psi_{a,b,k} to theta_{c,0,k} once (c, c1, c2, c3) satisfy

    c = c2^q,  c1 = c3^q,  c2*c = a + b*c2^q,  c3 = a*c1^q + b*c3^q

with q = 2^k.  That reduces fixed-point questions about psi (equivalently,
root counts of x^(2^k+1) + x + a) to the root equation x^(2^k-1) = 1/c.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .fields import (
    BinaryField,
    ExtensionEmbedding,
    ExtensionRootCounter,
    FieldElement,
    FieldMismatchError,
    InvariantViolationError,
    ResourceLimitError,
    SubsetXorSolver,
    extension_of,
    nth_roots,
    polynomial_roots,
)
from .maps import MapSpec, ProjPoint

_VERIFY_LIMIT = 1 << 20  # largest field swept pointwise by verify_conjugation


@dataclass(frozen=True)
class ConjugacyData:
    """A solved conjugation for one reciprocal map.

    The constants live in embedding.ext, an extension of the map's field
    (possibly the field itself); the map's coefficients are embedded there
    when the defining system is checked.
    """

    map: MapSpec
    embedding: ExtensionEmbedding
    c: FieldElement
    c1: FieldElement
    c2: FieldElement
    c3: FieldElement

    def __post_init__(self):
        if self.map.kind != "psi":
            raise ValueError("conjugacy data describes reciprocal maps only")
        if self.embedding.base != self.map.field:
            raise FieldMismatchError("embedding does not start at the map's field")
        ext = self.embedding.ext
        for name in ("c", "c1", "c2", "c3"):
            if getattr(self, name).field != ext:
                raise FieldMismatchError(f"{name} lies outside the extension field")
        if self.c2.is_zero or self.c3.is_zero:
            raise ValueError("c2 and c3 must be nonzero")

    @property
    def ext_degree(self) -> int:
        return self.embedding.ext.degree

    @property
    def is_base_field(self) -> bool:
        return self.embedding.relative_degree == 1

    @property
    def q_step(self) -> int:
        """x^(2^k) acts as x^(2^(k mod N)) on the degree-N extension."""
        return self.map.k % self.embedding.ext.degree

    def normal_form(self) -> MapSpec:
        """theta_{c,0,k} over the extension field."""
        return MapSpec("theta", self.c, self.embedding.ext.zero, self.map.k)

    def embedded_map(self) -> MapSpec:
        """The source reciprocal map with coefficients pushed up."""
        emb = self.embedding
        return MapSpec("psi", emb(self.map.a), emb(self.map.b), self.map.k)

    def system_holds(self) -> bool:
        """The four defining equations, plus nondegeneracy c3 + c1*c2 != 0."""
        emb = self.embedding
        a, b = emb(self.map.a), emb(self.map.b)
        s = self.q_step
        return (self.c == self.c2.frob(s)
                and self.c1 == self.c3.frob(s)
                and self.c2 * self.c == a + b * self.c2.frob(s)
                and self.c3 == a * self.c1.frob(s) + b * self.c3.frob(s)
                and not (self.c3 + self.c1 * self.c2).is_zero)

    def describe(self) -> str:
        return (f"c={self.c.hex} c1={self.c1.hex} c2={self.c2.hex} "
                f"c3={self.c3.hex} over F_2^{self.ext_degree}")


@dataclass(frozen=True)
class TauMap:
    """tau(x) = (x + c1)/(c2*x + c3) on P^1 of the extension field."""

    data: ConjugacyData

    @property
    def field(self) -> BinaryField:
        return self.data.embedding.ext

    def eval(self, x: ProjPoint) -> ProjPoint:
        """tau with its special cases: tau(inf) = 1/c2, the pole c3/c2 maps
        to inf, and tau(c1) = 0 (the formula's own zero)."""
        d = self.data
        if x.field != self.field:
            raise FieldMismatchError("point lies outside tau's field")
        if x.is_infinity:
            return ProjPoint.finite(d.c2.inv())
        denom = d.c2 * x.value + d.c3
        if denom.is_zero:
            return ProjPoint.infinity(self.field)
        return ProjPoint.finite((x.value + d.c1) / denom)

    __call__ = eval

    def eval_inverse(self, y: ProjPoint) -> ProjPoint:
        """The inverse fractional-linear map: x = (c3*y + c1)/(c2*y + 1)."""
        d = self.data
        if y.field != self.field:
            raise FieldMismatchError("point lies outside tau's field")
        if y.is_infinity:
            return ProjPoint.finite(d.c3 / d.c2)
        denom = d.c2 * y.value + self.field.one
        if denom.is_zero:
            return ProjPoint.infinity(self.field)
        return ProjPoint.finite((d.c3 * y.value + d.c1) / denom)


def _linear_kernel(field: BinaryField, fn) -> list[int]:
    """Ascending encodings of the kernel of a GF(2)-linear map on the field."""
    solver = SubsetXorSolver([fn(1 << j) for j in range(field.degree)])
    return sorted(solver.kernel_elements())


def _candidate_degrees(map: MapSpec, bound: int):
    """Relative degrees r worth building: F_{2^(n*r)} must contain a root of
    X^(q+1) + b*X^q + a (for c2) and a nonzero kernel element of v (for c3).

    Both conditions are root-existence questions about fixed polynomials with
    base-field coefficients, so they are probed by gcds over the base field;
    no extension is constructed until a degree passes both probes.  Only for
    enormous q (huge k) does the probe fall back to trying every degree.
    """
    base = map.field
    k = map.k
    q = 1 << k
    if q * q > 4096:
        yield from range(1, bound + 1)
        return
    a, b, one, zero = map.a, map.b, base.one, base.zero
    p_coeffs = [a] + [zero] * (q - 1) + [b, one]
    # nonzero roots of v(x) = a*x^(q^2) + b*x^q + x are roots of this
    v_coeffs = [zero] * (q * q)
    v_coeffs[0] = one
    v_coeffs[q - 1] = b
    v_coeffs[q * q - 1] = a
    c2_counter = ExtensionRootCounter(p_coeffs)
    c3_counter = ExtensionRootCounter(v_coeffs)
    for r in range(1, bound + 1):
        if c2_counter.count(r) and c3_counter.count(r):
            yield r


def solve_conjugation(map: MapSpec, max_relative_degree: int = 24) -> ConjugacyData:
    """Find conjugation constants for a reciprocal map.

    c2 must be a nonzero root of X^(q+1) + b*X^q + a and c3 a kernel element
    of v(x) = a*x^(q^2) + b*x^q + x avoiding the kernel of u(x) = x + c2*x^q;
    then c = c2^q and c1 = c3^q.  The base field is searched first, then
    extensions of increasing degree, and the smallest (extension degree,
    encoding of c2, encoding of c3) is returned.
    """
    if map.kind != "psi":
        raise ValueError("conjugation targets reciprocal maps")
    base = map.field
    for r in _candidate_degrees(map, max_relative_degree):
        emb = extension_of(base, r)
        ext = emb.ext
        a, b = emb(map.a), emb(map.b)
        s = map.k % ext.degree
        one = ext.one

        def v(x: int) -> int:
            t = ext.frob(x, s)
            return x ^ ext.mul(b.bits, t) ^ ext.mul(a.bits, ext.frob(t, s))

        try:
            kernel = _linear_kernel(ext, v)
        except ResourceLimitError:
            continue
        if len(kernel) < 2:
            continue  # only the zero solution; no usable c3 here
        # roots of X^(q+1) + b X^q + a, with the exponent reduced to this field
        q = 1 << s
        coeffs = [a] + [ext.zero] * (q - 1) + [b, one]
        for c2 in polynomial_roots(coeffs):
            if c2.is_zero:
                continue
            c3_bits = next(
                (x for x in kernel
                 if x and x ^ ext.mul(c2.bits, ext.frob(x, s))), None)
            if c3_bits is None:
                continue
            c3 = ext.element(c3_bits)
            data = ConjugacyData(map=map, embedding=emb, c=c2.frob(s),
                                 c1=c3.frob(s), c2=c2, c3=c3)
            if not data.system_holds():  # pragma: no cover
                raise InvariantViolationError(
                    "solver output violates the defining system")
            _check_special_points(data)
            return data
    raise ResourceLimitError(
        f"no conjugation found in extensions up to relative degree "
        f"{max_relative_degree}")


def _check_special_points(data: ConjugacyData) -> None:
    """The displayed case analysis: psi(tau(x)) = tau(theta(x)) at the points
    where tau's formula degenerates, plus the two guaranteed fixed points."""
    tau = TauMap(data)
    psi = data.embedded_map()
    theta = data.normal_form()
    ext = data.embedding.ext
    checks = [ProjPoint.finite(data.c1),            # tau = 0: hits 1/b or inf
              ProjPoint.finite(data.c3 / data.c2),  # tau's pole
              ProjPoint.infinity(ext),
              ProjPoint.finite(ext.zero)]
    for x in checks:
        if psi.eval(tau.eval(x)) != tau.eval(theta.eval(x)):
            raise InvariantViolationError(
                f"conjugation fails at special point {x!r}")
    for fixed in (data.c1 / data.c3, data.c2.inv()):
        p = ProjPoint.finite(fixed)
        if psi.eval(p) != p:
            raise InvariantViolationError(
                f"{fixed.hex} should be a fixed point of the reciprocal map")


def tau_eval(data: ConjugacyData, x: ProjPoint) -> ProjPoint:
    return TauMap(data).eval(x)


def verify_conjugation(data: ConjugacyData) -> bool:
    """Pointwise check of psi(tau(x)) = tau(theta_{c,0,k}(x)) over the whole
    projective line of the field of definition."""
    ext = data.embedding.ext
    if ext.order > _VERIFY_LIMIT:
        raise ResourceLimitError(
            f"pointwise verification over 2^{ext.degree} points is out of range")
    tau = TauMap(data)
    psi = data.embedded_map()
    theta = data.normal_form()
    points = [ProjPoint.infinity(ext)]
    points += [ProjPoint.finite(ext.element(i)) for i in range(ext.order)]
    return all(psi.eval(tau.eval(x)) == tau.eval(theta.eval(x)) for x in points)


def fixed_point_count(c: FieldElement, k: int, m: int) -> int:
    """Number of fixed points on P^1(F_{2^m}) of a reciprocal map whose
    conjugation constant is c, when the conjugacy data lies in F_{2^m} itself.

    With d = gcd(2^k - 1, 2^m - 1): exactly 2 fixed points when
    (1/c)^((2^m-1)/d) != 1, and d + 2 when it equals 1.
    """
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if c.is_zero:
        raise ValueError("c must be nonzero")
    if c.field.degree != m:
        raise ValueError(
            f"c lies in F_2^{c.field.degree}, but the count is over F_2^{m}; "
            "the formula requires the conjugacy data inside that field")
    d = gcd(2**k - 1, 2**m - 1)
    return 2 if c.inv() ** ((2**m - 1) // d) != c.field.one else d + 2


def theta_fixed_points(c: FieldElement, k: int,
                       field: BinaryField) -> set[ProjPoint]:
    """Fixed points of theta_{c,0,k} on P^1: always 0 and infinity, plus the
    solutions of x^(2^k - 1) = 1/c."""
    if c.field != field:
        raise FieldMismatchError("c lies outside the requested field")
    if c.is_zero:
        raise ValueError("c must be nonzero")
    if k < 1:
        raise ValueError("k must be positive")
    pts = {ProjPoint.finite(field.zero), ProjPoint.infinity(field)}
    pts.update(ProjPoint.finite(x) for x in nth_roots(c.inv(), 2**k - 1))
    return pts


def bluher_root_count(a: FieldElement, k: int, field: BinaryField) -> int:
    """Number of roots of x^(2^k+1) + x + a in the field, by direct scan.

    The count always lands in {0, 1, 2, 2^gcd(k,n) + 1} and equals the number
    of finite fixed points of the reciprocal map with both coefficients 1/a;
    both facts are asserted against the scan.
    """
    if a.field != field:
        raise FieldMismatchError("a lies outside the requested field")
    if a.is_zero:
        raise ValueError("a must be nonzero")
    if k < 1:
        raise ValueError("k must be positive")
    n = field.degree
    s = k % n
    a_bits = a.bits
    count = sum(1 for x in range(field.order)
                if field.mul(field.frob(x, s), x) ^ x ^ a_bits == 0)
    allowed = {0, 1, 2, (1 << gcd(k, n)) + 1}
    if count not in allowed:
        raise InvariantViolationError(
            f"root count {count} outside the admissible set {sorted(allowed)}")
    inv = a.inv()
    psi = MapSpec("psi", inv, inv, k)
    fixed = sum(1 for x in range(field.order) if psi.eval_int(x) == x)
    if fixed != count:
        raise InvariantViolationError(
            f"{count} polynomial roots but {fixed} finite fixed points")
    return count
