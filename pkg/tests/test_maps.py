"""Projective-line maps: evaluation, cycles, closed forms, quartic reduction."""

import random

import pytest

from f2dyn import (BinaryField, FieldMismatchError, MapSpec, ProjPoint,
                   QuarticReduction, ResourceLimitError, closed_form,
                   extension_of, iterated_orbit_length, orbit_length_options,
                   reduce_to_quartic)

F32 = BinaryField(5)
G = F32.primitive_element()


def tokens(cycle):
    """Cycle as g-exponents, with '0' for zero and 'inf' for infinity."""
    out = []
    for p in cycle:
        if p.is_infinity:
            out.append("inf")
        elif p.value.is_zero:
            out.append("0")
        else:
            out.append(p.value.log())
    return out


def figure(map_spec):
    return [tokens(c) for c in map_spec.cycle_structure().cycles]


def test_proj_point_basics():
    inf = ProjPoint.infinity(F32)
    fin = ProjPoint.finite(G)
    assert inf.is_infinity and not fin.is_infinity
    assert inf == ProjPoint.infinity(F32)
    assert fin == ProjPoint.finite(G) and fin != inf
    assert hash(fin) == hash(ProjPoint.finite(G))
    assert inf != ProjPoint.infinity(BinaryField(4))


def test_map_spec_validation():
    with pytest.raises(ValueError):
        MapSpec("frobnicate", G, G, 2)
    with pytest.raises(ValueError):
        MapSpec("theta", F32.zero, G, 2)
    with pytest.raises(ValueError):
        MapSpec("psi", G, G, 0)
    with pytest.raises(ValueError):
        MapSpec("theta", G, G, -1)
    with pytest.raises(FieldMismatchError):
        MapSpec("theta", G, BinaryField(4).one, 2)
    MapSpec("theta", G, F32.zero, 0)  # k = 0 is a valid affine map


def test_eval_special_points():
    theta = MapSpec("theta", G, G ** 3, 2)
    psi = MapSpec("psi", G, G ** 2, 2)
    inf = ProjPoint.infinity(F32)
    assert theta.eval(inf) == inf
    assert psi.eval(inf) == ProjPoint.finite(F32.zero)
    # the pole of psi: a*x^4 + b = 0 at x = g^8 since (g^8)^4 = g
    assert psi.eval(ProjPoint.finite(G ** 8)) == inf
    with pytest.raises(FieldMismatchError):
        theta.eval(ProjPoint.infinity(BinaryField(4)))


def test_eval_matches_formula_everywhere():
    theta = MapSpec("theta", G ** 3, G ** 7, 2)
    psi = MapSpec("psi", G ** 3, G ** 7, 2)
    for bits in range(F32.order):
        x = F32.element(bits)
        image = theta.eval(ProjPoint.finite(x))
        want = G ** 3 * x.frob(2) + G ** 7
        assert image == ProjPoint.finite(want)
        pimage = psi.eval(ProjPoint.finite(x))
        if want.is_zero:
            assert pimage.is_infinity
        else:
            assert pimage == ProjPoint.finite(want.inv())


def test_both_families_are_bijections():
    rng = random.Random(21)
    for degree in (1, 2, 3, 4):
        f = BinaryField(degree)
        for abits in range(1, f.order):
            for bbits in range(f.order):
                a, b = f.element(abits), f.element(bbits)
                for k in (1, 2, 3):
                    assert MapSpec("theta", a, b, k).is_bijection()
                    assert MapSpec("psi", a, b, k).is_bijection()
    f = BinaryField(6)
    for _ in range(20):
        a = f.element(rng.randrange(1, f.order))
        b = f.element(rng.randrange(f.order))
        k = rng.randrange(1, 5)
        kind = rng.choice(("theta", "psi"))
        assert MapSpec(kind, a, b, k).is_bijection()


def test_cycle_structure_partitions_the_line():
    mp = MapSpec("psi", G ** 4, G ** 9, 3)
    cs = mp.cycle_structure()
    points = [p for c in cs.cycles for p in c]
    assert len(points) == F32.order + 1
    assert len(set(points)) == F32.order + 1
    for cyc in cs.cycles:
        for p, nxt in zip(cyc, cyc[1:] + cyc[:1]):
            assert mp.eval(p) == nxt
    assert sum(length * n for length, n in cs.summary.items()) == F32.order + 1


def test_cycle_ordering_is_canonical():
    def key(p):
        if p.is_infinity:
            return p.field.order
        if p.value.is_zero:
            return p.field.order - 1
        return p.value.log()

    for spec in (MapSpec("theta", G, G ** 3, 2),
                 MapSpec("psi", G ** 2, G ** 11, 2),
                 MapSpec("theta", G ** 9, F32.zero, 3)):
        cs = spec.cycle_structure()
        starts = [key(c[0]) for c in cs.cycles]
        assert starts == sorted(starts)
        for cyc in cs.cycles:
            assert key(cyc[0]) == min(key(p) for p in cyc)


def test_quartic_theta_cycle_figure():
    mp = MapSpec("theta", G, G ** 3, 2)
    assert figure(mp) == [
        [0, 6, 10, 25, 5, 4, 16, "0", 3, 7],
        [1, 8, 20, 12, 27, 17, 13, 14, 15, 9],
        [2, 30, 24, 21, 11, 22, 18, 23, 29, 28],
        [19, 26],
        ["inf"],
    ]
    assert mp.cycle_structure().summary == {1: 1, 2: 1, 10: 3}


def test_reciprocal_psi_cycle_figure():
    mp = MapSpec("psi", G, G ** 2, 2)
    assert figure(mp) == [
        [0, 12, 20, 30, 1],
        [2, 7, 23, 26, 25],
        [3, 10, 9, 19, 15],
        [4, 5, 18, 13, 21],
        [6, 17, 27, 16, 11],
        [8, "inf", "0", 29, 22],
        [14],
        [24],
        [28],
    ]
    assert mp.cycle_structure().summary == {1: 3, 5: 6}


def test_orbit_agrees_with_cycle_of():
    mp = MapSpec("theta", G, G ** 3, 2)
    cs = mp.cycle_structure()
    for start in (ProjPoint.finite(G ** 19), ProjPoint.finite(F32.zero),
                  ProjPoint.infinity(F32)):
        orb = mp.orbit(start)
        assert orb[0] == start
        assert set(orb) == set(cs.cycle_of(start))
        assert len(orb) == len(cs.cycle_of(start))


def test_closed_form_first_iterate_and_geometric_sum():
    a, b = G ** 4, G ** 22
    it = closed_form(a, b, 4, 1)
    assert it.lead == a and it.tail == b and it.geom_sum == 1
    for m in range(1, 8):
        assert closed_form(a, b, 4, m).geom_sum == (4 ** m - 1) // 3
        assert closed_form(a, b, 2, m).geom_sum == 2 ** m - 1
        assert closed_form(a, b, 1, m).geom_sum == m


def test_closed_form_matches_naive_iteration():
    rng = random.Random(22)
    for degree in (3, 4, 5):
        f = BinaryField(degree)
        for _ in range(12):
            a = f.element(rng.randrange(1, f.order))
            b = f.element(rng.randrange(f.order))
            q = rng.choice((2, 4, 8))
            m = rng.randrange(1, 11)
            it = closed_form(a, b, q, m)
            step = q.bit_length() - 1
            for bits in range(f.order):
                x = f.element(bits)
                cur = x
                for _ in range(m):
                    cur = a * cur.frob(step) + b
                assert it.eval(x) == cur
            inf = ProjPoint.infinity(f)
            assert it.eval_point(inf) == inf
            assert it.eval_point(ProjPoint.finite(a)) == ProjPoint.finite(it.eval(a))


def test_closed_form_validation():
    with pytest.raises(ValueError):
        closed_form(G, G, 3, 2)
    with pytest.raises(ValueError):
        closed_form(G, G, 4, 0)
    with pytest.raises(ValueError):
        closed_form(F32.zero, G, 4, 2)
    with pytest.raises(FieldMismatchError):
        closed_form(G, BinaryField(4).one, 4, 2)


def test_reduce_to_quartic_known_odd_case():
    red = reduce_to_quartic(G ** 7, G ** 3, 3)
    assert red.parity == "odd" and red.j == 3
    assert red.embedding.relative_degree == 1
    assert red.c == G ** 3 and red.d == G ** 15
    assert red.verify()
    # the quartic map realizes six 5-cycles and three fixed points
    assert red.quartic_map().cycle_structure().summary == {1: 3, 5: 6}


def test_reduce_to_quartic_even_k_is_identity_rewrite():
    red = reduce_to_quartic(G ** 7, G ** 3, 2)
    assert red.parity == "even" and red.j == 1
    assert red.c == G ** 7 and red.d == G ** 3
    assert red.verify()


def test_reduce_to_quartic_even_k_four():
    f = BinaryField(3)
    g = f.primitive_element()
    red = reduce_to_quartic(g, g ** 3, 4)
    assert red.parity == "even" and red.j == 2
    assert red.verify()
    src = MapSpec("theta", g, g ** 3, 4)
    emb = red.embedding
    quartic = red.quartic_map()
    for bits in range(f.order):
        p = ProjPoint.finite(emb(f.element(bits)))
        for _ in range(red.j):
            p = quartic.eval(p)
        want = emb(src.eval(ProjPoint.finite(f.element(bits))).value)
        assert p == ProjPoint.finite(want)


def test_quartic_reduction_verify_rejects_wrong_pair():
    emb = extension_of(F32, 1)
    good = QuarticReduction(G ** 7, G ** 3, 3, G ** 3, G ** 15, emb, "odd", 3)
    assert good.verify()
    bad = QuarticReduction(G ** 7, G ** 3, 3, G ** 3, G ** 16, emb, "odd", 3)
    assert not bad.verify()


def test_reduce_to_quartic_validation_and_limits():
    with pytest.raises(ValueError):
        reduce_to_quartic(G, G, 1)
    with pytest.raises(ValueError):
        reduce_to_quartic(F32.zero, G, 2)
    with pytest.raises(ResourceLimitError):
        reduce_to_quartic(G ** 7, G ** 3, 3, max_relative_degree=0)


def test_orbit_length_bookkeeping():
    assert iterated_orbit_length(10, 2) == 5
    assert iterated_orbit_length(10, 4) == 5
    assert iterated_orbit_length(9, 2) == 9
    assert iterated_orbit_length(12, 8) == 3
    assert orbit_length_options(5, "even") == (5,)
    assert orbit_length_options(5, "odd") == (5, 10)
    with pytest.raises(ValueError):
        iterated_orbit_length(0, 1)
    with pytest.raises(ValueError):
        orbit_length_options(3, "sideways")


def test_iterated_orbit_length_matches_actual_composites():
    mp = MapSpec("theta", G, G ** 3, 2)
    perm = mp.permutation()
    for m in (2, 3, 5):
        comp = list(range(len(perm)))
        for _ in range(m):
            comp = [perm[i] for i in comp]
        for cyc in mp.cycle_structure().cycles:
            start = cyc[0]
            i0 = start.value.bits if not start.is_infinity else F32.order
            cur, steps = comp[i0], 1
            while cur != i0:
                cur = comp[cur]
                steps += 1
            assert steps == iterated_orbit_length(len(cyc), m)
