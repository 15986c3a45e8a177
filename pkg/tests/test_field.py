"""Field arithmetic unit tests."""

import pytest

from hypcensus import field as ff


def test_make_field_prime():
    k = ff.make_field(7, 1)
    assert (k.p, k.e, k.q) == (7, 1, 7)
    assert k.modulus == (0, 1)


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        ff.make_field(2, 1)
    with pytest.raises(ValueError):
        ff.make_field(9, 1)
    with pytest.raises(ValueError):
        ff.make_field(5, 0)


def test_modulus_f9_is_x2_plus_1():
    # first monic irreducible quadratic over F_3 in code order
    k = ff.make_field(3, 2)
    assert k.modulus == (1, 0, 1)
    assert k.q == 9


def test_modulus_f27():
    # x^3 + 1, x^3 + 2, x^3 + x, x^3 + x + 1, x^3 + x + 2 all have roots;
    # x^3 + 2x + 1 is the first root-free cubic
    k = ff.make_field(3, 3)
    assert k.modulus == (1, 2, 0, 1)


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2), (3, 4), (5, 2)])
def test_field_axioms_exhaustive(p, e):
    k = ff.make_field(p, e)
    q = k.q
    xs = range(q)
    for x in xs:
        assert ff.add(k, x, 0) == x
        assert ff.mul(k, x, 1) == x
        assert ff.add(k, x, ff.neg(k, x)) == 0
        if x:
            assert ff.mul(k, x, ff.inv(k, x)) == 1
    # spot-check associativity and distributivity on a stride
    stride = max(1, q // 11)
    pts = list(range(0, q, stride))
    for x in pts:
        for y in pts:
            assert ff.add(k, x, y) == ff.add(k, y, x)
            assert ff.mul(k, x, y) == ff.mul(k, y, x)
            for z in pts:
                assert ff.mul(k, x, ff.add(k, y, z)) == ff.add(
                    k, ff.mul(k, x, y), ff.mul(k, x, z)
                )


def test_digit_roundtrip():
    k = ff.make_field(3, 4)
    for x in range(0, k.q, 7):
        assert ff.from_digits(k, ff.to_digits(k, x)) == x


def test_squares_mod_7():
    k = ff.make_field(7, 1)
    squares = {x for x in range(1, 7) if ff.is_square(x, k)}
    assert squares == {1, 2, 4}
    with pytest.raises(ValueError):
        ff.is_square(0, k)


def test_is_square_matches_enumeration():
    for p, e in [(3, 1), (5, 1), (3, 2), (7, 1)]:
        k = ff.make_field(p, e)
        actual_squares = {ff.mul(k, x, x) for x in range(1, k.q)}
        for x in range(1, k.q):
            assert ff.is_square(x, k) == (x in actual_squares)


def test_mult_generator_small_fields():
    assert ff.mult_generator(ff.make_field(3, 1)) == 2
    assert ff.mult_generator(ff.make_field(5, 1)) == 2
    assert ff.mult_generator(ff.make_field(7, 1)) == 3


def test_mult_generator_orders():
    for p, e in [(3, 2), (5, 2), (3, 3)]:
        k = ff.make_field(p, e)
        g = ff.mult_generator(k)
        seen = set()
        x = 1
        for _ in range(k.q - 1):
            x = ff.mul(k, x, g)
            seen.add(x)
        assert len(seen) == k.q - 1


def test_f9_structure():
    # code 3 is the power-basis generator x; x^2 = -1 since the modulus
    # is x^2 + 1, and x+1 (code 4) generates the multiplicative group
    k = ff.make_field(3, 2)
    assert ff.mul(k, 3, 3) == 2
    assert ff.mult_generator(k) == 4
    assert ff.frobenius(3, k, 3) == ff.mul(k, 2, 3)  # x^3 = -x


def test_extend_prime_base():
    base = ff.make_field(5, 1)
    ext, emb = ff.extend(base, 2)
    assert ext.q == 25
    assert emb == tuple(range(5))
    for x in range(5):
        for y in range(5):
            assert emb[ff.add(base, x, y)] == ff.add(ext, emb[x], emb[y])
            assert emb[ff.mul(base, x, y)] == ff.mul(ext, emb[x], emb[y])


def test_extend_nonprime_base_is_homomorphism():
    base = ff.make_field(3, 2)
    ext, emb = ff.extend(base, 2)
    assert ext.q == 81
    assert emb[0] == 0 and emb[1] == 1
    for x in range(base.q):
        for y in range(base.q):
            assert emb[ff.add(base, x, y)] == ff.add(ext, emb[x], emb[y])
            assert emb[ff.mul(base, x, y)] == ff.mul(ext, emb[x], emb[y])
    with pytest.raises(ValueError):
        ff.extend(base, 1)


def test_frobenius_fixes_base_field():
    base = ff.make_field(3, 1)
    ext, emb = ff.extend(base, 2)
    for x in range(base.q):
        assert ff.frobenius(emb[x], ext, base.q) == emb[x]
    # frobenius is an involution on the quadratic extension
    for x in range(ext.q):
        fx = ff.frobenius(x, ext, base.q)
        assert ff.frobenius(fx, ext, base.q) == x


def test_poly_helpers():
    k = ff.make_field(5, 1)
    f = (1, 2, 1)  # (x+1)^2
    g = (4, 1)  # x + 4 = x - 1
    assert ff.pmul(k, g, g) == (1, 3, 1)
    assert ff.pmod(k, f, g) == (4,)  # f(1) = 4
    assert ff.pgcd(k, f, (1, 1)) == (1, 1)
    assert ff.peval(k, f, 4) == 0
    assert not ff.is_squarefree_poly(k, f)
    assert ff.is_squarefree_poly(k, ff.pmul(k, g, (1, 1)))
    assert ff.pderiv(k, (3, 0, 1)) == (0, 2)


def test_squarefree_matches_root_multiplicity():
    k = ff.make_field(3, 1)
    # x^2 (double root) vs x^2 + 1 (irreducible) vs x^2 + 2 = (x-1)(x+1)
    assert not ff.is_squarefree_poly(k, (0, 0, 1))
    assert ff.is_squarefree_poly(k, (1, 0, 1))
    assert ff.is_squarefree_poly(k, (2, 0, 1))
