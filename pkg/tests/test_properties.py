"""Property-based tests: group axioms, relabelling invariance, product histograms and duality laws."""
import math
from collections import Counter

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from solqsol.analysis.duality import AbelianPresentation, delta, pairing
from solqsol.analysis.solitary import qsol, sol
from solqsol.core.families import direct_product
from solqsol.core.group import Group
from solqsol.core.groupspec import build_group
from solqsol.core.iso import are_isomorphic
from solqsol.core.quotients import quotient
from solqsol.core.subgroups import all_subgroups, join, meet, normal_subgroups

SPECS = ["C6", "D8", "Q8", "D10", "S3", "Ab(2:[1,2])", "Ab(3:[1,1])", "D12", "SD16", "Q8xC3"]
PRESENTATIONS = [
    AbelianPresentation(((2, 1), (2, 2))),
    AbelianPresentation(((3, 1), (3, 2))),
    AbelianPresentation(((2, 1), (2, 1), (3, 1))),
    AbelianPresentation(((2, 2), (5, 1))),
]

specs = st.sampled_from(SPECS)
presentations = st.sampled_from(PRESENTATIONS)


def _relabel(G: Group, perm) -> Group:
    """Copy of G with element g renamed to perm[g]."""
    perm = np.asarray(perm)
    table = np.empty_like(G.table)
    table[np.ix_(perm, perm)] = perm[G.table]
    return Group(table, label=f"{G.label}'")


@settings(max_examples=40, deadline=None)
@given(specs, st.data())
def test_associativity(spec, data):
    G = build_group(spec)
    elements = st.integers(min_value=0, max_value=G.order - 1)
    a, b, c = data.draw(elements), data.draw(elements), data.draw(elements)
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity


@settings(max_examples=20, deadline=None)
@given(specs, st.data())
def test_relabelled_group_is_isomorphic(spec, data):
    G = build_group(spec)
    perm = data.draw(st.permutations(range(G.order)))
    H = _relabel(G, perm)
    phi = are_isomorphic(G, H)
    assert phi is not None and phi.is_valid()
    assert H.order_histogram() == G.order_histogram()


@settings(max_examples=15, deadline=None)
@given(specs, st.data())
def test_sol_and_qsol_follow_relabelling(spec, data):
    G = build_group(spec)
    perm = data.draw(st.permutations(range(G.order)))
    H = _relabel(G, perm)

    def moved(family):
        return {sum(1 << int(perm[g]) for g in K.members) for K in family}

    assert moved(sol(G)) == set(sol(H).masks)
    assert moved(qsol(G)) == set(qsol(H).masks)


@settings(max_examples=30, deadline=None)
@given(specs, st.data())
def test_subgroup_lattice_laws(spec, data):
    subs = all_subgroups(build_group(spec))
    pick = st.integers(min_value=0, max_value=len(subs) - 1)
    A, B = subs[data.draw(pick)], subs[data.draw(pick)]
    assert meet(A, B) == meet(B, A)
    assert join(A, B) == join(B, A)
    assert join(A, meet(A, B)) == A
    assert meet(A, join(A, B)) == A
    assert join(A, B).order * meet(A, B).order >= A.order * B.order


@settings(max_examples=30, deadline=None)
@given(specs, st.data())
def test_quotient_map_is_a_homomorphism(spec, data):
    G = build_group(spec)
    normals = normal_subgroups(G)
    N = normals[data.draw(st.integers(min_value=0, max_value=len(normals) - 1))]
    Q = quotient(G, N)
    elements = st.integers(min_value=0, max_value=G.order - 1)
    a, b = data.draw(elements), data.draw(elements)
    assert Q.project(G.mul(a, b)) == Q.group.mul(Q.project(a), Q.project(b))
    assert (Q.project(a) == Q.project(b)) == (G.mul(G.inv(a), b) in N)


@settings(max_examples=50, deadline=None)
@given(presentations, st.data())
def test_pairing_is_bilinear_and_symmetric(G, data):
    element = st.integers(min_value=0, max_value=G.order - 1)
    x, y, z = (G.decode(data.draw(element)) for _ in range(3))
    xy = tuple(a + b for a, b in zip(x, y))
    lhs = pairing(G, xy, z).numerator
    rhs = (pairing(G, x, z).numerator + pairing(G, y, z).numerator) % G.exponent
    assert lhs == rhs
    assert pairing(G, x, y) == pairing(G, y, x)


@settings(max_examples=30, deadline=None)
@given(presentations, st.data())
def test_delta_is_an_order_reversing_involution(G, data):
    subs = all_subgroups(G.group())
    H = subs[data.draw(st.integers(min_value=0, max_value=len(subs) - 1))]
    D = delta(G, H)
    assert D.order * H.order == G.order
    assert delta(G, D) == H
    for K in subs:
        if H.issubset(K):
            assert delta(G, K).issubset(D)


@settings(max_examples=20, deadline=None)
@given(specs, st.sampled_from(["C2", "C3", "S3", "Q8", "Ab(2:[1,1])"]))
def test_direct_product_histogram(left, right):
    G, H = build_group(left), build_group(right)
    expected = Counter()
    for a, m in G.order_histogram().items():
        for b, n in H.order_histogram().items():
            expected[math.lcm(a, b)] += m * n
    assert direct_product(G, H).order_histogram() == dict(expected)
