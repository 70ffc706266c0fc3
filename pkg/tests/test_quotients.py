"""Tests for quotient groups."""
import pytest

from solqsol.core.families import make_cyclic, make_dihedral, make_quaternion, make_symmetric
from solqsol.core.iso import isomorphic
from solqsol.core.quotients import project_subgroup, quotient
from solqsol.core.subgroups import all_subgroups, center, closure, derived_subgroup, normal_subgroups


def test_quotient_by_center():
    G = make_dihedral(8)
    Q = quotient(G, center(G))
    assert Q.group.order == 4
    assert Q.group.order_histogram() == {1: 1, 2: 3}
    assert Q.group.label == "D8/N2"
    assert Q.kernel == center(G)


def test_quotient_is_a_homomorphic_image():
    G = make_dihedral(12)
    for N in normal_subgroups(G):
        Q = quotient(G, N)
        assert Q.group.order * N.order == G.order
        for g in range(G.order):
            for h in range(G.order):
                assert Q.project(G.mul(g, h)) == Q.group.mul(Q.project(g), Q.project(h))


def test_coset_numbering():
    G = make_cyclic(6)
    Q = quotient(G, closure(G, [3]))
    assert Q.representatives == (0, 1, 2)
    assert Q.coset_of == (0, 1, 2, 0, 1, 2)


def test_lift_and_project():
    G = make_quaternion()
    Z = center(G)
    Q = quotient(G, Z)
    assert Q.lift(1 << Q.group.identity) == Z.mask
    for K in all_subgroups(G):
        if Z.issubset(K):
            assert Q.lift(project_subgroup(Q, K).mask) == K.mask


def test_project_subgroup():
    G = make_symmetric(4)
    N = derived_subgroup(G)
    Q = quotient(G, N)
    for K in all_subgroups(G):
        image = project_subgroup(Q, K)
        assert image.order == K.order // len([g for g in K.members if g in N])


def test_quotient_types():
    G = make_dihedral(12)
    rotations = closure(G, [1])
    assert isomorphic(quotient(G, rotations).group, make_cyclic(2))
    threes = closure(G, [2])
    assert quotient(G, threes).group.order_histogram() == {1: 1, 2: 3}


def test_quotient_by_non_normal_subgroup():
    G = make_dihedral(8)
    with pytest.raises(ValueError, match="outside the subgroup"):
        quotient(G, closure(G, [4]))


def test_project_foreign_subgroup():
    G, H = make_cyclic(4), make_cyclic(4)
    Q = quotient(G, closure(G, [2]))
    with pytest.raises(ValueError):
        project_subgroup(Q, closure(H, [1]))
