"""Transformation group unit tests."""

import pytest

from hypcensus import field as ff
from hypcensus import moebius as mo


def K(p, e=1):
    return ff.make_field(p, e)


def test_canonical_matrix():
    k = K(5)
    m = mo.GlMatrix(2, 4, 0, 3)
    cm = mo.canonical_matrix(k, m)
    assert cm == mo.GlMatrix(1, 2, 0, 4)
    # scalar multiples collapse to the same representative
    for s in range(1, 5):
        sm = mo.GlMatrix(*(ff.mul(k, s, v) for v in (2, 4, 0, 3)))
        assert mo.canonical_matrix(k, sm) == cm
    with pytest.raises(ValueError):
        mo.canonical_matrix(k, mo.GlMatrix(1, 1, 2, 2))


def test_enumerate_sizes():
    for q in (3, 5, 7):
        k = K(q)
        elems = mo.enumerate_pgl(k)
        assert len(elems) == q**3 - q
        assert len({e.mat for e in elems}) == q**3 - q
        assert sum(1 for e in elems if e.kind == "identity") == 1


def test_enumerate_f9():
    k = K(3, 2)
    elems = mo.enumerate_pgl(k)
    assert len(elems) == 9**3 - 9


def test_kind_census():
    # class sizes: order-p elements form one class of size q^2 - 1; each
    # order m > 1 dividing q - 1 contributes phi(m) * q(q+1)/2 elements,
    # each m > 1 dividing q + 1 contributes phi(m) * q(q-1)/2
    from hypcensus.census import divisors, phi

    for q in (3, 5, 7, 9):
        k = K(*((q, 1) if q != 9 else (3, 2)))
        elems = mo.enumerate_pgl(k)
        by_kind = {}
        for e in elems:
            by_kind.setdefault((e.kind, e.order), 0)
            by_kind[(e.kind, e.order)] += 1
        assert by_kind[("identity", 1)] == 1
        assert by_kind[("B", k.p)] == q**2 - 1
        for m in divisors(q - 1):
            if m > 1:
                assert by_kind[("C", m)] == phi(m) * q * (q + 1) // 2
        for m in divisors(q + 1):
            if m > 1:
                assert by_kind[("A", m)] == phi(m) * q * (q - 1) // 2


def test_act_point():
    k = K(3)
    m = mo.GlMatrix(2, 0, 0, 1)  # t -> 2t
    assert mo.act_point(m, mo.fin(1), k) == mo.fin(2)
    assert mo.act_point(m, mo.INF, k) == mo.INF
    inv = mo.GlMatrix(0, 1, 1, 0)  # t -> 1/t
    assert mo.act_point(inv, mo.fin(0), k) == mo.INF
    assert mo.act_point(inv, mo.INF, k) == mo.fin(0)
    assert mo.act_point(inv, mo.fin(2), k) == mo.fin(2)


def test_act_is_group_action():
    k = K(5)
    pts = [mo.INF] + [mo.fin(x) for x in range(5)]
    mats = [e.mat for e in mo.enumerate_pgl(k)[:40]]
    for m in mats:
        for n in mats[:10]:
            mn = mo.mat_mul(k, m, n)
            for t in pts:
                assert mo.act_point(mn, t, k) == mo.act_point(
                    m, mo.act_point(n, t, k), k
                )
        # bijectivity
        images = {mo.act_point(m, t, k) for t in pts}
        assert len(images) == len(pts)


def test_group_law_respects_classes():
    # canonical(M N) only depends on the classes of M and N
    k = K(3)
    reps = [e.mat for e in mo.enumerate_pgl(k)]
    for m in reps[:8]:
        for n in reps[:8]:
            base = mo.canonical_matrix(k, mo.mat_mul(k, m, n))
            for s in range(2, 3):
                ms = mo.GlMatrix(*(ff.mul(k, s, v) for v in (m.a, m.b, m.c, m.d)))
                assert mo.canonical_matrix(k, mo.mat_mul(k, ms, n)) == base


def test_classify_orders():
    k = K(7)
    for e in mo.enumerate_pgl(k):
        # e.order is the true projective order
        acc = e.mat
        for _ in range(e.order - 1):
            acc = mo.mat_mul(k, acc, e.mat)
        assert mo.canonical_matrix(k, acc) == mo.IDENTITY
        if e.order > 1:
            assert e.kind in ("A", "B", "C")


def test_fixed_points_counts_and_membership():
    for q in (3, 5, 7):
        k = K(q)
        for e in mo.enumerate_pgl(k):
            if e.kind == "identity":
                continue
            ext, emb, pts = mo.fixed_points(e, k)
            assert len(pts) == (1 if e.kind == "B" else 2)
            for t in pts:
                assert mo.act_point(e.mat, t, ext, emb) == t


def test_fixed_points_rationality_by_kind():
    k = K(5)
    ext, emb = ff.extend(k, 2)
    base_img = set(emb)
    for e in mo.enumerate_pgl(k):
        if e.kind == "identity":
            continue
        _, _, pts = mo.fixed_points(e, k)
        rational = all((not t.finite) or t.x in base_img for t in pts)
        if e.kind == "A":
            assert not rational
            # the two points are frobenius conjugates
            xs = {t.x for t in pts}
            assert {ff.frobenius(x, ext, k.q) for x in xs} == xs
        else:
            assert rational


def test_subtype_representatives():
    k = K(7)
    elem, alpha = mo.subtype_representative(k, "C", 3)
    assert elem.kind == "C" and elem.order == 3 and alpha is None
    elem, alpha = mo.subtype_representative(k, "B", 7)
    assert elem.kind == "B" and elem.order == 7
    elem, alpha = mo.subtype_representative(k, "A", 8)
    assert elem.kind == "A" and elem.order == 8
    assert alpha is not None


def test_subtype_representative_alpha_eigenvalue():
    for q, m in [(3, 4), (5, 3), (7, 8), (9, 5)]:
        k = K(*((q, 1) if q != 9 else (3, 2)))
        elem, alpha = mo.subtype_representative(k, "A", m)
        ext, emb = ff.extend(k, 2)
        # companion matrix: eigenvalue equation alpha^2 = -n + t*alpha
        mat = elem.mat
        # canonical rep of the companion matrix [[0,1],[-n,t]] is itself,
        # and alpha satisfies alpha^2 = t*alpha - n = mat.d*alpha + mat.c
        assert mat.a == 0 and mat.b == 1
        lhs = ff.mul(ext, alpha, alpha)
        rhs = ff.add(ext, emb[mat.c], ff.mul(ext, emb[mat.d], alpha))
        assert lhs == rhs
        assert elem.order == m


def test_subtype_representative_validation():
    k = K(5)
    with pytest.raises(ValueError):
        mo.subtype_representative(k, "C", 3)  # 3 does not divide 4
    with pytest.raises(ValueError):
        mo.subtype_representative(k, "B", 3)
    with pytest.raises(ValueError):
        mo.subtype_representative(k, "A", 4)  # 4 does not divide 6
    with pytest.raises(ValueError):
        mo.subtype_representative(k, "Z", 2)
