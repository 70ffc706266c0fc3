"""Tests for isomorphism search, automorphisms and characteristic subgroups."""
import itertools

import numpy as np
import pytest

from solqsol import config
from solqsol.config import OrderCapExceeded
from solqsol.core import iso
from solqsol.core.families import make_abelian, make_cyclic, make_dihedral, make_quaternion, make_symmetric
from solqsol.core.group import elements_of, mask_of
from solqsol.core.groupspec import build_group
from solqsol.core.iso import (
    IsoMap,
    abelian_invariants,
    are_isomorphic,
    automorphism_classes,
    automorphism_search_bound,
    automorphisms,
    characteristic_subgroups,
    fingerprint,
    identity_map,
    is_characteristic,
    isomorphic,
    subgroup_abstract_group,
    subgroup_fingerprint,
)
from solqsol.core.subgroups import all_subgroups, center, closure, frattini, omega

ABELIAN_ORBIT_SPECS = [
    "C1", "C12", "Ab(2:[1,2])", "Ab(2:[2,2])", "Ab(2:[1,3])", "Ab(2:[1,1,2])", "Ab(3:[1,2])", "Ab(2:[1,2])xC3",
]

SMALL = [
    "C1", "C2", "C3", "C4", "Ab(2:[1,1])", "C5", "C6", "D6", "S3", "C7",
    "C8", "Ab(2:[1,2])", "Ab(2:[1,1,1])", "D8", "Q8",
]

MEDIUM = [
    "C12", "Ab(2:[1,1])xAb(3:[1])", "D12", "D6xC2",
    "C16", "Ab(2:[1,3])", "Ab(2:[2,2])", "D16", "SD16", "D8xC2", "Q8xC2",
]

AUTOMORPHISM_COUNTS = {
    "C1": 1,
    "C8": 4,
    "Ab(2:[1,1])": 6,
    "S3": 6,
    "D8": 8,
    "Q8": 24,
    "Ab(2:[1,1,1])": 168,
}


def _is_hom(G, H, img):
    img = np.asarray(img)
    return bool((img[G.table] == H.table[np.ix_(img, img)]).all())


def _permutation_oracle(G, H):
    """Try every bijection fixing the identity."""
    if G.order != H.order:
        return False
    rest_g = [g for g in range(G.order) if g != G.identity]
    rest_h = [h for h in range(H.order) if h != H.identity]
    for perm in itertools.permutations(rest_h):
        img = [0] * G.order
        img[G.identity] = H.identity
        for g, h in zip(rest_g, perm):
            img[g] = h
        if _is_hom(G, H, img):
            return True
    return False


def _generator_oracle(G, H):
    """Try every tuple of generator images, extending by words in the generators."""
    if G.order != H.order:
        return False
    gens = G.generators()
    words = {G.identity: []}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for i, s in enumerate(gens):
                y = G.mul(x, s)
                if y not in words:
                    words[y] = words[x] + [i]
                    nxt.append(y)
        frontier = nxt
    for images in itertools.product(range(H.order), repeat=len(gens)):
        img = [0] * G.order
        for g, word in words.items():
            z = H.identity
            for i in word:
                z = H.mul(z, images[i])
            img[g] = z
        if len(set(img)) == G.order and _is_hom(G, H, img):
            return True
    return False


def test_oracle_agreement_small():
    groups = [build_group(s) for s in SMALL]
    for G, H in itertools.combinations_with_replacement(groups, 2):
        if G.order != H.order:
            continue
        found = are_isomorphic(G, H)
        assert (found is not None) == _permutation_oracle(G, H), (G.label, H.label)
        if found is not None:
            assert found.is_valid()


def test_oracle_agreement_medium():
    groups = [build_group(s) for s in MEDIUM]
    for G, H in itertools.combinations(groups, 2):
        if G.order != H.order:
            continue
        found = are_isomorphic(G, H)
        assert (found is not None) == _generator_oracle(G, H), (G.label, H.label)


def test_known_isomorphisms():
    assert are_isomorphic(build_group("D6"), build_group("S3")) is not None
    assert are_isomorphic(build_group("D12"), build_group("D6xC2")) is not None
    assert are_isomorphic(build_group("C6"), build_group("Ab(2:[1])xAb(3:[1])")) is not None
    assert are_isomorphic(build_group("D8"), build_group("Q8")) is None
    assert are_isomorphic(build_group("C4"), build_group("C5")) is None


def test_isomorphic_abelian_shortcut():
    assert isomorphic(build_group("C2xC6"), build_group("Ab(2:[1,1])xAb(3:[1])"))
    assert not isomorphic(build_group("C4xC2"), build_group("Ab(2:[1,1,1])"))
    assert not isomorphic(build_group("D8"), build_group("Q8"))


def test_fingerprint():
    fp = fingerprint(make_dihedral(8))
    assert fp.order == 8
    assert not fp.abelian
    assert fp.center_order == 2
    assert fp.derived_order == 2
    assert fp.class_sizes == (1, 1, 2, 2, 2)
    assert len(fp.digest()) == 10
    assert fp.digest() == fingerprint(make_dihedral(8)).digest()
    assert fingerprint(make_quaternion()) != fp


def test_subgroup_fingerprint_matches_abstract_group():
    G = make_dihedral(16)
    for H in all_subgroups(G):
        A = subgroup_abstract_group(G, H)[0]
        assert subgroup_fingerprint(G, H) == fingerprint(A)


def test_iso_map_operations():
    G, H = build_group("D6"), build_group("S3")
    phi = are_isomorphic(G, H)
    back = phi.inverse()
    assert back.is_valid()
    assert back.compose(phi).is_identity()
    assert phi.compose(identity_map(G)) == phi
    with pytest.raises(ValueError):
        phi.compose(phi)
    rotations = closure(G, [1])
    image = phi.apply(rotations)
    assert image.parent is H
    assert image.order == 3


def test_invalid_iso_map():
    G = make_cyclic(4)
    assert not IsoMap(G, G, (0, 1, 1, 3)).is_valid()
    assert not IsoMap(G, G, (0, 2, 1, 3)).is_valid()
    assert IsoMap(G, G, (0, 3, 2, 1)).is_valid()


def test_automorphism_counts():
    for spec, expected in AUTOMORPHISM_COUNTS.items():
        autos = automorphisms(build_group(spec))
        assert len(autos) == expected, spec
        assert len(set(autos)) == expected
        assert all(phi.is_valid() for phi in autos)


def test_characteristic_subgroups():
    D8 = make_dihedral(8)
    assert characteristic_subgroups(D8).orders() == [1, 2, 4, 8]
    assert is_characteristic(D8, closure(D8, [1]))
    assert not is_characteristic(D8, closure(D8, [2, 4]))
    assert characteristic_subgroups(make_quaternion()).orders() == [1, 2, 8]
    assert characteristic_subgroups(make_abelian([(2, 1), (2, 1)])).orders() == [1, 4]


def test_automorphism_cap(monkeypatch):
    monkeypatch.setenv(config.ENV_AUTOMORPHISM_CAP, "8")
    with pytest.raises(OrderCapExceeded, match=config.ENV_AUTOMORPHISM_CAP):
        automorphisms(make_cyclic(9))


def test_automorphism_search_limit(monkeypatch):
    monkeypatch.setattr(iso, "AUTOMORPHISM_SEARCH_LIMIT", 5)
    D8 = make_dihedral(8)
    with pytest.raises(OrderCapExceeded, match="fixed limit"):
        automorphisms(D8)
    with pytest.raises(OrderCapExceeded):
        characteristic_subgroups(D8)
    with pytest.raises(OrderCapExceeded):
        automorphisms(make_abelian([(2, 1)] * 5))


def test_abelian_automorphism_classes_are_orbits():
    for spec in ABELIAN_ORBIT_SPECS:
        G = build_group(spec)
        orbits = {mask_of({phi(g) for phi in automorphisms(G)}) for g in range(G.order)}
        assert set(automorphism_classes(G)) == orbits, spec
        autos = automorphisms(G)
        by_search = {
            H.mask for H in all_subgroups(G) if all(phi.apply_mask(H.mask) == H.mask for phi in autos)
        }
        assert characteristic_subgroups(G).masks == by_search, spec


def test_characteristic_subgroups_of_large_abelian_groups():
    E = make_abelian([(2, 1)] * 5)
    assert automorphism_search_bound(E) > iso.AUTOMORPHISM_SEARCH_LIMIT
    assert characteristic_subgroups(E).orders() == [1, 32]
    assert len(automorphism_classes(E)) == 2
    G = build_group("Ab(2:[1,1,2,2])")
    assert is_characteristic(G, frattini(G))
    assert is_characteristic(G, omega(G, 1))
    assert not is_characteristic(G, closure(G, [1]))
    assert characteristic_subgroups(make_abelian([(2, 1), (2, 2)])).orders() == [1, 2, 4, 8]
    with pytest.raises(ValueError):
        automorphism_classes(make_dihedral(8))


def test_automorphism_search_bound():
    assert automorphism_search_bound(make_cyclic(8)) == 4
    assert automorphism_search_bound(make_abelian([(2, 1)] * 5)) == 31 ** 5
    assert automorphism_search_bound(make_symmetric(3)) >= 6


def test_subgroup_abstract_group():
    G = make_dihedral(8)
    klein = closure(G, [2, 4])
    A, inclusion = subgroup_abstract_group(G, klein)
    assert A.order == 4
    assert inclusion == klein.members
    assert A.is_abelian()
    assert A.order_histogram() == {1: 1, 2: 3}
    for a in range(4):
        for b in range(4):
            assert inclusion[A.mul(a, b)] == G.mul(inclusion[a], inclusion[b])


def test_abelian_invariants():
    assert abelian_invariants(make_abelian([(2, 1), (2, 2), (3, 1)])) == [(2, 1), (2, 2), (3, 1)]
    assert abelian_invariants(make_cyclic(12)) == [(2, 2), (3, 1)]
    assert abelian_invariants(make_cyclic(1)) == []
    Q = make_quaternion()
    A = subgroup_abstract_group(Q, center(Q))[0]
    assert abelian_invariants(A) == [(2, 1)]
    with pytest.raises(ValueError):
        abelian_invariants(make_dihedral(8))


def test_apply_mask_matches_pointwise_images():
    G = build_group("Ab(2:[1,2])")
    for H in all_subgroups(G):
        for phi in automorphisms(G):
            assert elements_of(phi.apply_mask(H.mask)) == sorted(phi(h) for h in H.members)
