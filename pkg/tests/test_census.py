"""Closed-formula census unit tests.

The (g, q) anchor values were frozen from an independent brute-force
enumeration of the twisted group action (see tests/test_oracle.py for the
live equality checks).
"""

import pytest

from hypcensus import census


# (g, q) -> (hyp, sd, y); frozen from the brute-force oracle
ORACLE_ANCHORS = {
    (2, 3): (69, 7, 38),
    (2, 5): (285, 27, 156),
    (2, 7): (749, 49, 399),
    (2, 9): (1557, 79, 818),
    (3, 3): (526, 12, 269),
    (3, 5): (6508, 0, 3254),
    (4, 3): (4463, 73, 2268),
}


def test_building_blocks_small_values():
    assert census.a0(4, 3) == 16
    assert census.a2(4, 3) == 20
    assert census.a1(6, 3) == 162
    assert census.a_p1(6, 3) == 648
    # a0 at argument 1 is 1 for every q
    for q in (3, 5, 7, 9, 11, 25):
        assert census.a0(1, q) == 1
    assert census.a1(1, 9) == 1
    assert census.a_p1(1, 7) == 8
    assert census.a_p1(2, 7) == 49


def test_building_blocks_reject_bad_args():
    for fn in (census.a0, census.a1, census.a2, census.a_p1):
        assert fn(0, 5) == 0
        assert fn(-3, 5) == 0
        assert fn(2.5, 5) == 0


def test_building_blocks_are_integers():
    for q in (3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121):
        for n in range(1, 30):
            for fn in (census.a0, census.a1, census.a2, census.a_p1):
                assert isinstance(fn(n, q), int)


def test_anchor_values():
    for (g, q), (h, s, y) in ORACLE_ANCHORS.items():
        assert census.hyp(g, q) == h
        assert census.sd(g, q) == s
        assert census.y_nset_classes(g, q) == y


def test_component_breakdown_g2_q3():
    h_a, h_b, h_c, h_d = census.hyp_components(2, 3)
    assert (h_a, h_b, h_c, h_d) == (4, 4, 7, 54)
    assert h_a + h_b + h_c + h_d == 69


def test_components_sum_to_hyp():
    for g in range(2, 8):
        for q in (3, 5, 7, 9, 11, 13, 25, 27):
            parts = census.hyp_components(g, q)
            assert sum(parts) == census.hyp(g, q)
            assert parts[3] == 2 * q ** (2 * g - 1)


def test_sd_vanishes_for_odd_g_q_1_mod_4():
    for g in (3, 5, 7, 9):
        for q in (5, 9, 13, 17, 25, 29):
            assert census.sd(g, q) == 0


def test_sd_positive_for_even_g():
    for g in (2, 4, 6):
        for q in (3, 5, 7, 9):
            assert census.sd(g, q) > 0


def test_integrality_moderate_sweep():
    # the acceptance suite runs the full g <= 30, q <= 1000 sweep
    for g in range(2, 12):
        for q in (3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41):
            h = census.hyp(g, q)
            s = census.sd(g, q)
            assert isinstance(h, int) and isinstance(s, int)
            assert h > 0 and s >= 0
            assert (h + s) % 2 == 0
            assert h >= 2 * q ** (2 * g - 1)


def test_validation_errors():
    with pytest.raises(ValueError):
        census.hyp(1, 5)
    with pytest.raises(ValueError):
        census.hyp(2, 4)
    with pytest.raises(ValueError):
        census.hyp(2, 15)
    with pytest.raises(ValueError):
        census.factor_prime_power(1)
    assert census.factor_prime_power(27) == (3, 3)
    assert census.factor_prime_power(121) == (11, 2)
    assert census.factor_prime_power(13) == (13, 1)


def test_census_report_roundtrip():
    rep = census.census_report(2, 3)
    assert rep.hyp == 69 and rep.sd == 7 and rep.y == 38
    d = rep.to_json_dict()
    assert d["hyp"] == "69"
    assert d["components"]["h_d"] == "54"
    # big counts stay exact through the decimal-string encoding
    rep30 = census.census_report(30, 997)
    d30 = rep30.to_json_dict()
    assert int(d30["hyp"]) == census.hyp(30, 997)
