"""Tests for Cayley-table groups, constructors and configuration."""
import numpy as np
import pytest

from solqsol import config
from solqsol.config import OrderCapExceeded, check_order
from solqsol.core.families import (
    abelian_label,
    direct_product,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_semidihedral,
    make_symmetric,
    trivial_group,
)
from solqsol.core.group import Group, elements_of, extend, mask_of, popcount, span

# Smallest non-associative loop: identity 0, every element self-inverse.
LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]

HISTOGRAMS = {
    "C6": (make_cyclic(6), {1: 1, 2: 1, 3: 2, 6: 2}),
    "D8": (make_dihedral(8), {1: 1, 2: 5, 4: 2}),
    "D6": (make_dihedral(6), {1: 1, 2: 3, 3: 2}),
    "Q8": (make_quaternion(), {1: 1, 2: 1, 4: 6}),
    "SD16": (make_semidihedral(16), {1: 1, 2: 5, 4: 6, 8: 4}),
    "S3": (make_symmetric(3), {1: 1, 2: 3, 3: 2}),
    "S4": (make_symmetric(4), {1: 1, 2: 9, 3: 8, 4: 6}),
    "Z2xZ4": (make_abelian([(2, 1), (2, 2)]), {1: 1, 2: 3, 4: 4}),
}


def test_bitset_helpers():
    assert mask_of([0, 3, 5]) == 0b101001
    assert elements_of(0b101001) == [0, 3, 5]
    assert popcount(0b101001) == 3
    assert elements_of(0) == []


def test_order_histograms():
    for name, (G, expected) in HISTOGRAMS.items():
        assert G.order_histogram() == expected, name
        assert sum(expected.values()) == G.order


def test_constructors_validate():
    for G, _ in HISTOGRAMS.values():
        G.validate()
    make_symmetric(5).validate()
    make_semidihedral(32).validate()


def test_identity_and_inverses():
    G = make_dihedral(10)
    assert G.identity == 0
    for g in range(G.order):
        assert G.mul(g, G.inv(g)) == G.identity
        assert G.mul(G.inv(g), g) == G.identity


def test_power_and_exponent():
    G = make_cyclic(12)
    assert G.power(1, 5) == 5
    assert G.power(1, -1) == 11
    assert G.power(3, 4) == 0
    assert G.exponent() == 12
    assert make_dihedral(12).exponent() == 6
    assert make_abelian([(2, 1), (3, 1)]).exponent() == 6


def test_is_abelian():
    assert make_cyclic(7).is_abelian()
    assert make_abelian([(2, 1), (2, 1), (2, 1)]).is_abelian()
    assert not make_dihedral(6).is_abelian()
    assert not make_quaternion().is_abelian()


def test_dihedral_relations():
    G = make_dihedral(8)
    x, y = 1, 4
    assert G.element_order(x) == 4
    assert G.element_order(y) == 2
    # y x y = x^-1
    assert G.mul(G.mul(y, x), y) == G.inv(x)


def test_quaternion_relations():
    G = make_quaternion()
    x, y = 1, 4
    assert G.power(x, 2) == G.power(y, 2) == 2
    assert G.mul(G.mul(y, x), G.inv(y)) == G.inv(x)


def test_symmetric_composition():
    G = make_symmetric(3)
    assert G.identity == 0
    assert G.order == 6
    assert not G.is_abelian()


def test_generators():
    assert len(make_cyclic(6).generators()) == 1
    assert len(make_abelian([(2, 1)] * 3).generators()) == 3
    assert len(make_dihedral(12).generators()) == 2
    G = make_quaternion()
    assert span(G, G.generators()) == (1 << 8) - 1


def test_span_and_extend():
    G = make_dihedral(8)
    assert span(G, []) == 1 << G.identity
    rotations = span(G, [1])
    assert elements_of(rotations) == [0, 1, 2, 3]
    assert extend(G, rotations, elements_of(rotations), [1], 4) == (1 << 8) - 1
    assert extend(G, rotations, elements_of(rotations), [1], 2) == rotations


def test_conjugation_and_centralizers():
    G = make_dihedral(8)
    conj = G.conjugation_table()
    assert conj[4, 1] == 3
    assert G.centralizer_sizes()[2] == 8
    assert G.centralizer_sizes()[1] == 4


def test_direct_product():
    G = direct_product(make_dihedral(8), make_cyclic(3))
    assert G.label == "D8xC3"
    assert G.order == 24
    assert G.order_histogram() == {1: 1, 2: 5, 3: 2, 4: 2, 6: 10, 12: 4}


def test_abelian_label():
    assert abelian_label([(2, 1), (2, 2), (3, 1)]) == "Ab(2:[1,2])xAb(3:[1])"
    assert abelian_label([]) == "C1"
    assert make_abelian([]).order == 1


def test_trivial_group():
    G = trivial_group()
    assert G.order == 1
    assert G.exponent() == 1
    assert G.generators() == ()


def test_invalid_tables():
    with pytest.raises(ValueError):
        Group([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        Group([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Group(np.zeros((0, 0)))
    with pytest.raises(ValueError, match="associativity"):
        Group(LOOP5, label="loop")


def test_validation_can_be_skipped():
    G = Group(LOOP5, label="loop", validate=False)
    assert G.order == 5
    with pytest.raises(ValueError):
        G.validate()


def test_bad_constructor_arguments():
    with pytest.raises(ValueError):
        make_cyclic(0)
    with pytest.raises(ValueError):
        make_dihedral(7)
    with pytest.raises(ValueError):
        make_dihedral(4)
    with pytest.raises(ValueError):
        make_semidihedral(24)
    with pytest.raises(ValueError):
        make_abelian([(4, 1)])
    with pytest.raises(ValueError):
        make_abelian([(2, 0)])
    with pytest.raises(OrderCapExceeded):
        make_symmetric(6)


def test_element_order_out_of_range():
    with pytest.raises(ValueError):
        make_cyclic(4).element_order(4)


def test_order_cap_from_environment(monkeypatch):
    monkeypatch.setenv(config.ENV_MAX_ORDER, "10")
    assert config.current().max_order == 10
    with pytest.raises(OrderCapExceeded) as exc:
        make_cyclic(11)
    assert exc.value.order == 11
    assert exc.value.cap == 10
    make_cyclic(10)


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv(config.ENV_MAX_ORDER, "abc")
    with pytest.raises(ValueError):
        config.current()
    monkeypatch.setenv(config.ENV_MAX_ORDER, "0")
    with pytest.raises(ValueError):
        config.current()


def test_check_order():
    check_order(200, "G")
    with pytest.raises(OrderCapExceeded):
        check_order(201, "G")
    with pytest.raises(OrderCapExceeded):
        check_order(9, "G", cap=8)


def test_cap_message_names_the_setting():
    with pytest.raises(OrderCapExceeded, match=config.ENV_MAX_ORDER):
        check_order(201, "G")
    with pytest.raises(OrderCapExceeded, match=config.ENV_AUTOMORPHISM_CAP) as exc:
        check_order(9, "G", cap=8, setting=config.ENV_AUTOMORPHISM_CAP)
    assert exc.value.setting == config.ENV_AUTOMORPHISM_CAP
    with pytest.raises(OrderCapExceeded, match="fixed limit") as exc:
        make_symmetric(6)
    assert exc.value.setting is None
    assert config.ENV_MAX_ORDER not in str(exc.value)


def test_huge_symmetric_degree_fails_before_factorial():
    with pytest.raises(OrderCapExceeded) as exc:
        make_symmetric(100_000_000)
    assert exc.value.order == 100_000_000
    assert "degree" in str(exc.value)
