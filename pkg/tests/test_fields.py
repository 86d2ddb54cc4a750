"""Field construction, arithmetic axioms, linear algebra, and root finding."""

import random

import pytest

from f2dyn import (BinaryField, ExtensionRootCounter, FieldMismatchError,
                   LinearizedPoly, ResourceLimitError, SubsetXorSolver,
                   extension_of, nth_roots, polynomial_roots,
                   quadratic_extension)
from f2dyn.gf2x import CONWAY_POLYNOMIALS


def test_construction_defaults_and_validation():
    for n in range(1, 13):
        assert BinaryField(n).modulus == CONWAY_POLYNOMIALS[n]
    f = BinaryField(3, 0b1101)
    assert f.modulus == 0b1101 and f.order == 8
    with pytest.raises(ValueError):
        BinaryField(0)
    with pytest.raises(ValueError):
        BinaryField(3, 0b101)  # wrong degree
    with pytest.raises(ValueError):
        BinaryField(4, 0b11111 ^ 0b100)  # x^4 + x^3 + x + 1 = (x+1)(...)


def test_element_range_and_equality():
    f = BinaryField(4)
    with pytest.raises(ValueError):
        f.element(16)
    with pytest.raises(ValueError):
        f.element(-1)
    assert f.element(5) == f.from_hex("0x5")
    assert hash(f.element(5)) == hash(f.from_hex("5"))
    assert f.element(5) != BinaryField(4, 0b11001).element(5)


def test_field_axioms_randomized():
    rng = random.Random(11)
    for degree in (1, 2, 3, 5, 8, 11, 20):
        f = BinaryField(degree)
        one, zero = f.one, f.zero
        for _ in range(40):
            a = f.element(rng.randrange(f.order))
            b = f.element(rng.randrange(f.order))
            c = f.element(rng.randrange(f.order))
            assert a + a == zero
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a * one == a and a * zero == zero
            if not a.is_zero:
                assert a * a.inv() == one
                assert (a / a) == one
            assert (a + b).frob(1) == a.frob(1) + b.frob(1)
            assert a.frob(1) == a * a
            assert a.sqrt().frob(1) == a
            assert a.frob(degree) == a


def test_inverse_of_zero_raises():
    f = BinaryField(5)
    with pytest.raises(ZeroDivisionError):
        f.zero.inv()
    with pytest.raises(ZeroDivisionError):
        f.one / f.zero


def test_cross_field_operations_rejected():
    a = BinaryField(4).one
    b = BinaryField(5).one
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a * b


def test_primitive_element_generates():
    for degree in (1, 2, 3, 5, 8):
        f = BinaryField(degree)
        g = f.primitive_element()
        seen = {g.bits}
        cur = g
        for _ in range(f.order - 2):
            cur = cur * g
            seen.add(cur.bits)
        assert len(seen) == f.order - 1
        assert cur == f.one  # g^(order-1) closes the cycle


def test_conway_modulus_makes_x_primitive():
    # the class of x itself generates; g-exponent labels rely on this
    for degree in range(1, 13):
        f = BinaryField(degree)
        assert f.primitive_element() == (f.element(2) if degree > 1 else f.one)


def test_log_and_pow_agree():
    f = BinaryField(6)
    g = f.primitive_element()
    for bits in range(1, f.order):
        e = f.element(bits)
        assert g ** e.log() == e
    assert (g ** 5) ** -1 == (g ** 5).inv()
    with pytest.raises(ZeroDivisionError):
        f.zero.log()


def test_trace_is_balanced_and_frobenius_invariant():
    for degree in (3, 4, 7):
        f = BinaryField(degree)
        traces = [f.element(b).trace() for b in range(f.order)]
        assert set(traces) <= {0, 1}
        assert sum(traces) == f.order // 2
        for b in range(f.order):
            e = f.element(b)
            assert e.trace() == e.frob(1).trace()


def test_large_field_without_tables():
    f = BinaryField(20)
    a = f.element(0xBEEF5)
    assert a * a.inv() == f.one
    assert a.sqrt() * a.sqrt() == a
    with pytest.raises(ResourceLimitError):
        a.log()


def test_subset_xor_solver_round_trip():
    rng = random.Random(12)
    cols = [rng.getrandbits(12) for _ in range(16)]
    solver = SubsetXorSolver(cols)
    for _ in range(50):
        mask = rng.getrandbits(16)
        target = 0
        m = mask
        while m:
            low = m & -m
            target ^= cols[low.bit_length() - 1]
            m ^= low
        found = solver.solve(target)
        assert found is not None
        check = 0
        while found:
            low = found & -found
            check ^= cols[low.bit_length() - 1]
            found ^= low
        assert check == target
    kernel = list(solver.kernel_elements())
    assert len(kernel) == 1 << solver.kernel_dim()
    for mask in kernel:
        acc = 0
        while mask:
            low = mask & -mask
            acc ^= cols[low.bit_length() - 1]
            mask ^= low
        assert acc == 0


def test_linearized_poly_solutions_by_brute_force():
    rng = random.Random(13)
    f = BinaryField(6)
    for _ in range(20):
        coeffs = [f.element(rng.randrange(f.order)) for _ in range(3)]
        if all(c.is_zero for c in coeffs):
            continue
        poly = LinearizedPoly(2, coeffs)
        target = f.element(rng.randrange(f.order))
        brute = {x for b in range(f.order)
                 for x in [f.element(b)] if poly(x) == target}
        assert poly.solve(target) == brute
        assert set(poly.kernel_elements()) == {x for b in range(f.order)
                                               for x in [f.element(b)]
                                               if poly(x).is_zero}


def test_polynomial_roots_by_brute_force():
    rng = random.Random(14)
    f = BinaryField(6)
    for _ in range(30):
        coeffs = [f.element(rng.randrange(f.order)) for _ in range(6)]
        if all(c.is_zero for c in coeffs):
            continue
        roots = polynomial_roots(coeffs)
        assert roots == sorted(roots, key=lambda e: e.bits)
        brute = set()
        for b in range(f.order):
            x = f.element(b)
            acc = f.zero
            for c in reversed(coeffs):
                acc = acc * x + c
            if acc.is_zero:
                brute.add(x)
        assert set(roots) == brute


def test_nth_roots_by_brute_force():
    f = BinaryField(5)
    for n in (1, 2, 3, 5, 11, 31, 33):
        for bits in (1, 7, 19):
            alpha = f.element(bits)
            got = nth_roots(alpha, n)
            brute = {f.element(b) for b in range(1, f.order)
                     if f.element(b) ** n == alpha}
            assert got == brute, (n, bits)


def test_extension_embedding_is_a_homomorphism():
    rng = random.Random(15)
    base = BinaryField(4)
    for r in (1, 2, 3):
        emb = extension_of(base, r)
        assert emb.relative_degree == r
        assert emb.ext.degree == 4 * r
        # the image of the base generator is a root of the base modulus
        img = emb.image_of_root
        acc = emb.ext.zero
        for i in range(base.modulus.bit_length() - 1, -1, -1):
            acc = acc * img
            if base.modulus >> i & 1:
                acc = acc + emb.ext.one
        assert acc.is_zero
        for _ in range(25):
            x = base.element(rng.randrange(base.order))
            y = base.element(rng.randrange(base.order))
            assert emb(x + y) == emb(x) + emb(y)
            assert emb(x * y) == emb(x) * emb(y)
        assert emb(base.one) == emb.ext.one


def test_quadratic_extension_solves_every_lift():
    base = BinaryField(3)
    emb = quadratic_extension(base)
    assert emb.ext.degree == 6
    # every base element becomes a square of the half-trace machinery:
    # x^2 + x = w is solvable for all w in the extension of even degree
    # exactly when trace(w) = 0 there; embedded elements always qualify
    for b in range(base.order):
        assert emb(base.element(b)).trace() == 0


def test_extension_root_counter_matches_explicit_roots():
    f = BinaryField(3)
    rng = random.Random(16)
    for _ in range(10):
        coeffs = [f.element(rng.randrange(f.order)) for _ in range(5)]
        if all(c.is_zero for c in coeffs) or all(c.is_zero for c in coeffs[1:]):
            continue
        counter = ExtensionRootCounter(coeffs)
        for r in (1, 2, 3):
            emb = extension_of(f, r)
            lifted = [emb(c) for c in coeffs]
            assert counter.count(r) == len(polynomial_roots(lifted)), (
                [c.bits for c in coeffs], r)
        # asking for a smaller degree again restarts cleanly
        assert counter.count(1) == len(polynomial_roots(coeffs))
