"""Tests for the pairing on finite abelian groups and the annihilator map."""
from fractions import Fraction

import numpy as np
import pytest

from solqsol.analysis.duality import (
    AbelianPresentation,
    PairingValue,
    check_eq_4,
    delta,
    delta_is_involution,
    pairing,
    verify_prop_3_1,
)
from solqsol.analysis.solitary import qsol, sol
from solqsol.core.families import make_abelian, make_cyclic
from solqsol.core.subgroups import all_subgroups, frattini, omega, trivial_subgroup, whole_subgroup

Z2_Z4 = AbelianPresentation(((2, 1), (2, 2)))

PRESENTATIONS = [
    AbelianPresentation(()),
    AbelianPresentation(((3, 1),)),
    Z2_Z4,
    AbelianPresentation.from_partition(2, [1, 1, 1]),
    AbelianPresentation.from_partition(3, [1, 2]),
    AbelianPresentation(((2, 1), (3, 1), (3, 1))),
]


def test_presentation_basics():
    assert Z2_Z4.moduli == [2, 4]
    assert Z2_Z4.order == 8
    assert Z2_Z4.exponent == 4
    assert AbelianPresentation(()).order == 1
    assert AbelianPresentation(()).exponent == 1
    assert AbelianPresentation.from_partition(3, [1, 2]).factors == ((3, 1), (3, 2))
    assert np.array_equal(Z2_Z4.group().table, make_abelian([(2, 1), (2, 2)]).table)


def test_encode_and_decode():
    assert Z2_Z4.encode((1, 3)) == 7
    assert Z2_Z4.decode(7) == (1, 3)
    assert Z2_Z4.encode((-1, 0)) == 4
    assert Z2_Z4.encode((3, 5)) == Z2_Z4.encode((1, 1))
    with pytest.raises(ValueError):
        Z2_Z4.encode((1,))
    with pytest.raises(ValueError):
        Z2_Z4.decode(8)


def test_pairing_values():
    assert pairing(Z2_Z4, (1, 0), (1, 0)) == PairingValue(2, 4)
    assert pairing(Z2_Z4, (1, 0), (1, 0)).as_fraction() == Fraction(1, 2)
    assert pairing(Z2_Z4, (0, 1), (0, 1)) == PairingValue(1, 4)
    assert pairing(Z2_Z4, (0, 2), (0, 2)).is_zero()
    assert pairing(Z2_Z4, (1, 1), (0, 0)).is_zero()
    with pytest.raises(ValueError):
        pairing(Z2_Z4, (1,), (1, 0))


def test_pairing_value_range():
    with pytest.raises(ValueError):
        PairingValue(4, 4)
    with pytest.raises(ValueError):
        PairingValue(-1, 4)


def test_pairing_matrix_matches_pairing():
    G = AbelianPresentation(((2, 1), (3, 1), (3, 2)))
    matrix = G.pairing_matrix()
    assert matrix.shape == (G.order, G.order)
    assert np.array_equal(matrix, matrix.T)
    for g in range(0, G.order, 5):
        for h in range(G.order):
            assert matrix[g, h] == pairing(G, G.decode(g), G.decode(h)).numerator


def test_pairing_is_non_degenerate():
    for G in PRESENTATIONS:
        matrix = G.pairing_matrix()
        zero_rows = [g for g in range(G.order) if not matrix[g].any()]
        assert zero_rows == [0]


def test_delta_of_ends():
    group = Z2_Z4.group()
    assert delta(Z2_Z4, trivial_subgroup(group)).is_whole
    assert delta(Z2_Z4, whole_subgroup(group)).is_trivial


def test_delta_swaps_frattini_and_omega():
    group = Z2_Z4.group()
    assert delta(Z2_Z4, frattini(group)) == omega(group, 1)
    assert delta(Z2_Z4, omega(group, 1)) == frattini(group)


def test_delta_reverses_inclusion():
    group = Z2_Z4.group()
    subs = all_subgroups(group)
    for H in subs:
        assert delta(Z2_Z4, H).order * H.order == group.order
        for K in subs:
            if H.issubset(K):
                assert delta(Z2_Z4, K).issubset(delta(Z2_Z4, H))


def test_delta_is_involution():
    for G in PRESENTATIONS:
        assert delta_is_involution(G) is None, G.factors


def test_eq_4_holds():
    for G in PRESENTATIONS:
        assert check_eq_4(G) is None, G.factors


def test_delta_accepts_equal_tables():
    H = all_subgroups(make_abelian([(2, 1), (2, 2)]))[1]
    D = delta(Z2_Z4, H)
    assert D.parent is H.parent
    assert D.order == 4


def test_delta_rejects_foreign_groups():
    with pytest.raises(ValueError):
        delta(Z2_Z4, whole_subgroup(make_cyclic(4)))


def test_prop_3_1():
    for G in PRESENTATIONS[1:5]:
        result = verify_prop_3_1(G)
        assert result.status == "verified", G.factors
        assert result.details["sol_orders"] == sol(G.group()).orders()
        assert result.details["qsol_orders"] == qsol(G.group()).orders()


def test_prop_3_1_needs_a_p_group():
    with pytest.raises(ValueError):
        verify_prop_3_1(PRESENTATIONS[5])


def test_bad_factors():
    with pytest.raises(ValueError):
        AbelianPresentation(((4, 1),))
    with pytest.raises(ValueError):
        AbelianPresentation(((2, 0),))
