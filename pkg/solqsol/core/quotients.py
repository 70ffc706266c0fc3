"""
Quotient groups G/N with their canonical projection.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .group import Element, Group, elements_of, mask_of
from .subgroups import Subgroup, find_conjugation_violation, is_subgroup_set


@dataclass(frozen=True, eq=False)
class QuotientGroup:
    """
    G/N as a Cayley table on cosets. Cosets are numbered in ascending order
    of their least member, which is also their representative.
    """

    group: Group
    parent: Group
    kernel: Subgroup
    coset_of: Tuple[int, ...]
    representatives: Tuple[Element, ...]

    def project(self, g: Element) -> int:
        return self.coset_of[g]

    def project_mask(self, mask: int) -> int:
        return mask_of(self.coset_of[g] for g in elements_of(mask))

    def lift(self, mask: int) -> int:
        """Bitset of the preimage of a set of cosets."""
        return mask_of(g for g, c in enumerate(self.coset_of) if mask >> c & 1)


def quotient(G: Group, N: Subgroup) -> QuotientGroup:
    if N.parent is not G or not is_subgroup_set(G, N.mask):
        raise ValueError(f"{N} is not a subgroup of {G.label}")
    violation = find_conjugation_violation(G, N)
    if violation is not None:
        g, h, c = violation
        raise ValueError(
            f"{N} is not normal in {G.label}: conjugating {h} by {g} gives {c}, outside the subgroup"
        )

    def compute():
        rows = G._rows
        coset_of = [-1] * G.order
        reps = []
        for g in range(G.order):
            if coset_of[g] != -1:
                continue
            idx = len(reps)
            reps.append(g)
            for k in N.members:
                coset_of[rows[g][k]] = idx
        lookup = np.array(coset_of, dtype=np.int64)
        table = lookup[G.table[np.ix_(reps, reps)]]
        group = Group(table, label=f"{G.label}/N{N.order}")
        return QuotientGroup(group, G, N, tuple(coset_of), tuple(reps))

    return G.memo(("quotient", N.mask), compute)


def project_subgroup(Q: QuotientGroup, K: Subgroup) -> Subgroup:
    """Image of K in Q.group."""
    if K.parent is not Q.parent:
        raise ValueError(f"{K} is not a subgroup of {Q.parent.label}")
    gens = tuple(dict.fromkeys(Q.coset_of[g] for g in K.gens()))
    gens = tuple(c for c in gens if c != Q.group.identity)
    return Subgroup(Q.group, Q.project_mask(K.mask), gens)
