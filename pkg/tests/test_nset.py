"""n-set encoding and action unit tests."""

import pytest

from hypcensus import field as ff
from hypcensus import moebius as mo
from hypcensus import nset as ns
from hypcensus.census import a_p1


def K(p, e=1):
    return ff.make_field(p, e)


def test_enumeration_counts_match_formula():
    for q in (3, 5):
        k = K(q)
        for n in range(1, 7):
            count = sum(1 for _ in ns.enumerate_nsets(k, n))
            assert count == a_p1(n, q), (q, n)


def test_enumeration_counts_f9():
    k = K(3, 2)
    for n in (1, 2, 3):
        assert sum(1 for _ in ns.enumerate_nsets(k, n)) == a_p1(n, 9)


def test_enumeration_is_deterministic_and_distinct():
    k = K(3)
    sets = list(ns.enumerate_nsets(k, 4))
    assert sets == list(ns.enumerate_nsets(k, 4))
    assert len(set(sets)) == len(sets)
    # block order: no-inf block first, then inf block
    first_inf = next(i for i, s in enumerate(sets) if s.has_inf)
    assert all(s.has_inf for s in sets[first_inf:])
    assert all(not s.has_inf for s in sets[:first_inf])


def test_n_property_and_make_nset():
    k = K(5)
    s = ns.make_nset(k, (0, 1), True)  # {0, inf}
    assert s.n == 2
    with pytest.raises(ValueError):
        ns.make_nset(k, (0, 0, 1), False)  # x^2, double root
    with pytest.raises(ValueError):
        ns.make_nset(k, (1, 2), False)  # not monic


def test_points_to_nset_roundtrip():
    k = K(7)
    pts = [mo.fin(2), mo.fin(5), mo.INF]
    s = ns.points_to_nset(k, pts)
    assert s.n == 3
    assert set(ns.rational_points(s, k)) == set(pts)
    with pytest.raises(ValueError):
        ns.points_to_nset(k, [mo.fin(1), mo.fin(1)])


def test_form_roundtrip():
    k = K(3)
    for n in (2, 3, 4):
        for s in ns.enumerate_nsets(k, n):
            form = ns.to_form(k, s, n)
            back, kappa = ns.from_form(k, form)
            assert back == s and kappa == 1
            if s.has_inf:
                assert form[0] == 0 and form[1] == 1
            else:
                assert form[0] == 1


def test_action_moves_points():
    # image of the rational points of S is the rational point set of gamma S
    for q in (3, 5):
        k = K(q)
        elems = mo.enumerate_pgl(k)
        for s in ns.enumerate_nsets(k, 3):
            for e in elems[:: max(1, len(elems) // 17)]:
                img = ns.apply_moebius(e, s, k)
                assert img.n == s.n
                moved = {mo.act_point(e.mat, t, k) for t in ns.rational_points(s, k)}
                assert moved == set(ns.rational_points(img, k))


def test_action_is_group_action():
    k = K(3)
    elems = mo.enumerate_pgl(k)
    sets = list(ns.enumerate_nsets(k, 4))[:20]
    for s in sets:
        assert ns.apply_moebius(mo.classify(k, mo.IDENTITY), s, k) == s
        for e1 in elems[::5]:
            for e2 in elems[::7]:
                prod = mo.classify(k, mo.mat_mul(k, e1.mat, e2.mat))
                lhs = ns.apply_moebius(prod, s, k)
                rhs = ns.apply_moebius(e1, ns.apply_moebius(e2, s, k), k)
                assert lhs == rhs


def test_action_preserves_squarefree():
    k = K(5)
    for s in ns.enumerate_nsets(k, 4):
        for e in mo.enumerate_pgl(k)[::11]:
            img = ns.apply_moebius(e, s, k)
            assert ff.is_squarefree_poly(k, img.f)


def test_contains_point_extension():
    k = K(3)
    ext, emb = ff.extend(k, 2)
    # x^2 + 1 vanishes at the 4th roots of unity in F_9
    s = ns.make_nset(k, (1, 0, 1), False)
    roots = [x for x in range(ext.q) if ff.peval(ext, (emb[1], 0, emb[1]), x) == 0]
    assert len(roots) == 2
    for r in roots:
        assert ns.contains_point(s, mo.fin(r), ext, emb)
    assert not ns.contains_point(s, mo.fin(emb[1]), ext, emb)
    assert not ns.contains_point(s, mo.INF, ext, emb)


def test_stabilizer_of_symmetric_set():
    # {0, inf} is stabilized by t -> at and t -> a/t: 2(q-1) classes
    for q in (3, 5):
        k = K(q)
        s = ns.points_to_nset(k, [mo.fin(0), mo.INF])
        stab = ns.stabilizer(s, k)
        assert len(stab) == 2 * (q - 1)


def test_stabilizer_order_divides_group_order():
    k = K(3)
    for s in ns.enumerate_nsets(k, 4):
        stab = ns.stabilizer(s, k)
        assert (k.q**3 - k.q) % len(stab) == 0


def test_orbit_stabilizer_theorem():
    # orbit size x stabilizer size = group order, sweeping one full orbit
    k = K(3)
    s = next(ns.enumerate_nsets(k, 4))
    orbit = {ns.apply_moebius(e, s, k) for e in mo.enumerate_pgl(k)}
    stab = ns.stabilizer(s, k)
    assert len(orbit) * len(stab) == k.q**3 - k.q


def test_nset_str():
    k = K(3)
    s = ns.make_nset(k, (1, 0, 1), False)
    assert ns.nset_str(s) == "1,0,1"
    s2 = ns.make_nset(k, (0, 1), True)
    assert ns.nset_str(s2) == "0,1;inf"
