"""Tests for finite lattices and Hasse diagram output."""
import networkx as nx
import numpy as np
import pytest

from solqsol.core.families import make_abelian, make_cyclic, make_dihedral, make_quaternion, make_symmetric
from solqsol.core.subgroups import all_subgroups, normal_subgroups
from solqsol.lattice.finite import (
    FiniteLattice,
    NotALattice,
    chain_lattice,
    chain_length,
    divisor_lattice,
    from_subgroup_family,
    is_chain,
    is_distributive,
    is_modular,
    lattice_anti_isomorphic,
    lattice_isomorphic,
    product_lattice,
)
from solqsol.lattice.render import to_dot, to_json

# Diamond M3 (modular, not distributive) and pentagon N5 (not modular).
M3 = [
    [1, 1, 1, 1, 1],
    [0, 1, 0, 0, 1],
    [0, 0, 1, 0, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]
N5 = [
    [1, 1, 1, 1, 1],
    [0, 1, 1, 0, 1],
    [0, 0, 1, 0, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]
# Two incomparable tops.
NO_TOP = [
    [1, 1, 1],
    [0, 1, 0],
    [0, 0, 1],
]
# Bowtie: a, b below both c and d, so a | b does not exist.
BOWTIE = [
    [1, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 1],
    [0, 0, 1, 1, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
]


def test_chain():
    L = chain_lattice(4)
    assert is_chain(L)
    assert chain_length(L) == 3
    assert L.edge_count == 3
    assert L.heights == (0, 1, 2, 3)
    assert L.bottom == 0 and L.top == 3
    assert is_distributive(L) and is_modular(L)
    assert chain_length(chain_lattice(1)) == 0
    with pytest.raises(ValueError):
        chain_lattice(0)


def test_meet_and_join():
    L = FiniteLattice(M3)
    assert L.meet(1, 2) == 0
    assert L.join(1, 2) == 4
    assert L.meet(1, 4) == 1
    assert L.covers == [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]


def test_distributive_and_modular_laws():
    assert is_modular(FiniteLattice(M3))
    assert not is_distributive(FiniteLattice(M3))
    assert not is_modular(FiniteLattice(N5))
    assert not is_distributive(FiniteLattice(N5))
    with pytest.raises(ValueError):
        chain_length(FiniteLattice(M3))


def test_not_a_lattice():
    with pytest.raises(NotALattice):
        FiniteLattice(NO_TOP)
    with pytest.raises(NotALattice) as exc:
        FiniteLattice(BOWTIE)
    assert exc.value.pair == (1, 2)


def test_bad_order_relations():
    with pytest.raises(ValueError):
        FiniteLattice([[0]])
    with pytest.raises(ValueError):
        FiniteLattice([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        FiniteLattice([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(ValueError):
        FiniteLattice(np.ones((2, 3), dtype=bool))


def test_product_lattice():
    L = product_lattice(chain_lattice(2), chain_lattice(3))
    assert L.size == 6
    assert L.edge_count == 7
    assert is_distributive(L)
    assert L.payload[4] == (1, 1)
    assert lattice_isomorphic(L, product_lattice(chain_lattice(3), chain_lattice(2)))


def test_divisor_lattice():
    L = divisor_lattice([1, 2, 3, 4, 6, 12])
    assert lattice_isomorphic(L, product_lattice(chain_lattice(3), chain_lattice(2)))
    assert L.payload == (1, 2, 3, 4, 6, 12)
    with pytest.raises(ValueError):
        divisor_lattice([1, 4])
    with pytest.raises(ValueError):
        divisor_lattice([])


def test_isomorphism_and_duality():
    assert not lattice_isomorphic(FiniteLattice(M3), FiniteLattice(N5))
    assert lattice_anti_isomorphic(FiniteLattice(M3), FiniteLattice(M3))
    assert lattice_anti_isomorphic(FiniteLattice(N5), FiniteLattice(N5))
    assert not lattice_isomorphic(chain_lattice(3), chain_lattice(4))


def test_subgroup_lattices():
    L = from_subgroup_family(all_subgroups(make_quaternion()))
    assert lattice_isomorphic(L, FiniteLattice([
        [1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
    ]))
    assert is_modular(L) and not is_distributive(L)
    assert is_distributive(from_subgroup_family(all_subgroups(make_cyclic(12))))
    assert not is_modular(from_subgroup_family(all_subgroups(make_dihedral(8))))
    assert is_modular(from_subgroup_family(normal_subgroups(make_symmetric(4))))


def test_cyclic_subgroup_lattice_is_divisor_lattice():
    L = from_subgroup_family(all_subgroups(make_cyclic(12)))
    assert lattice_isomorphic(L, divisor_lattice([1, 2, 3, 4, 6, 12]))


def test_elementary_abelian_lattice_is_self_dual():
    L = from_subgroup_family(all_subgroups(make_abelian([(2, 1), (2, 1), (2, 1)])))
    assert L.size == 16
    assert lattice_anti_isomorphic(L, L)


def test_family_without_ends_is_rejected():
    G = make_dihedral(8)
    proper = all_subgroups(G).filter(lambda H: not H.is_whole)
    with pytest.raises(ValueError):
        from_subgroup_family(proper)


def test_dot_output():
    L = from_subgroup_family(all_subgroups(make_dihedral(8)))
    dot = to_dot(L, name="d8")
    assert dot.startswith("digraph d8 {")
    assert dot.endswith("}\n")
    assert dot.count("->") == L.edge_count
    assert "rank=same" in dot
    assert to_dot(L, name="d8") == dot


def test_dot_matches_order():
    L = from_subgroup_family(all_subgroups(make_dihedral(12)))
    graph = nx.DiGraph()
    graph.add_nodes_from(range(L.size))
    for line in to_dot(L).splitlines():
        if "->" in line:
            lo, hi = line.strip().rstrip(";").split(" -> ")
            graph.add_edge(int(lo[1:]), int(hi[1:]))
    assert nx.is_directed_acyclic_graph(graph)
    closure = nx.transitive_closure_dag(graph)
    for i in range(L.size):
        for j in range(L.size):
            if i != j:
                assert closure.has_edge(i, j) == bool(L.leq[i, j])


def test_json_output():
    L = from_subgroup_family(all_subgroups(make_cyclic(4)))
    data = to_json(L)
    assert data["nodes"] == [
        {"id": 0, "order": 1, "members": [0]},
        {"id": 1, "order": 2, "members": [0, 2]},
        {"id": 2, "order": 4, "members": [0, 1, 2, 3]},
    ]
    assert data["covers"] == [[0, 1], [1, 2]]
    unlabeled = to_json(FiniteLattice(M3))
    assert unlabeled["nodes"][0] == {"id": 0}
