"""
Duality of finite abelian groups through an explicit perfect pairing.

For G = Z_{m_1} x ... x Z_{m_k} with exponent E, the pairing

    <x, y> = sum_i x_i * y_i * (E / m_i)   (mod E)

is bilinear, symmetric and non-degenerate. The annihilator
delta(H) = {g : <g, h> = 0 for all h in H} reverses inclusion, has order
|G| / |H| and is an involution on the subgroup lattice.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from ..core.families import check_factors, make_abelian
from ..core.group import Group, elements_of
from ..core.iso import isomorphic, subgroup_abstract_group
from ..core.quotients import quotient
from ..core.subgroups import Subgroup, all_subgroups
from .solitary import VerificationResult, qsol, sol

Residues = Tuple[int, ...]


@dataclass(frozen=True)
class PairingValue:
    """numerator / denominator mod 1, with denominator the exponent of G."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if not 0 <= self.numerator < self.denominator:
            raise ValueError(f"pairing numerator {self.numerator} outside [0, {self.denominator})")

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def is_zero(self) -> bool:
        return self.numerator == 0


@lru_cache(maxsize=None)
def _group_for(factors: Tuple[Tuple[int, int], ...]) -> Group:
    return make_abelian(factors)


@lru_cache(maxsize=None)
def _pairing_matrix(factors: Tuple[Tuple[int, int], ...]) -> np.ndarray:
    moduli = np.array([p ** a for p, a in factors], dtype=np.int64)
    exponent = math.lcm(*moduli.tolist()) if len(moduli) else 1
    order = int(np.prod(moduli)) if len(moduli) else 1
    coords = np.zeros((order, len(moduli)), dtype=np.int64)
    rest = np.arange(order)
    for i in range(len(moduli) - 1, -1, -1):
        coords[:, i] = rest % moduli[i]
        rest = rest // moduli[i]
    weights = exponent // moduli if len(moduli) else moduli
    matrix = (coords * weights) @ coords.T % exponent
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class AbelianPresentation:
    """
    Finite abelian group as prime-power cyclic factors, in the same order
    (and the same element encoding) as make_abelian.
    """

    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(check_factors(self.factors)))

    @classmethod
    def from_partition(cls, p: int, parts: Iterable[int]) -> "AbelianPresentation":
        return cls(tuple((p, a) for a in parts))

    @property
    def moduli(self) -> List[int]:
        return [p ** a for p, a in self.factors]

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli) if self.factors else 1

    def group(self) -> Group:
        return _group_for(self.factors)

    def encode(self, x: Sequence[int]) -> int:
        if len(x) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} residues, got {len(x)}")
        index = 0
        for r, m in zip(x, self.moduli):
            index = index * m + (int(r) % m)
        return index

    def decode(self, index: int) -> Residues:
        if not 0 <= index < self.order:
            raise ValueError(f"{index} is not an element index of a group of order {self.order}")
        out = []
        for m in reversed(self.moduli):
            out.append(index % m)
            index //= m
        return tuple(reversed(out))

    def pairing_matrix(self) -> np.ndarray:
        """Numerators of <g, h> for all element indices g, h."""
        return _pairing_matrix(self.factors)


def pairing(G: AbelianPresentation, x: Sequence[int], y: Sequence[int]) -> PairingValue:
    if len(x) != len(G.factors) or len(y) != len(G.factors):
        raise ValueError(f"expected {len(G.factors)} residues per element")
    E = G.exponent
    total = 0
    for xi, yi, m in zip(x, y, G.moduli):
        total += (int(xi) % m) * (int(yi) % m) * (E // m)
    return PairingValue(total % E, E)


def _realize(G: AbelianPresentation, H: Subgroup) -> None:
    group = G.group()
    if H.parent is group:
        return
    if H.parent.order != group.order or not np.array_equal(H.parent.table, group.table):
        raise ValueError(f"{H} does not live in the Cayley table of {group.label}")


def delta(G: AbelianPresentation, H: Subgroup) -> Subgroup:
    """Annihilator of H, as a subgroup of H's own parent."""
    _realize(G, H)
    matrix = G.pairing_matrix()
    members = list(H.members)
    kills = (matrix[:, members] == 0).all(axis=1)
    mask = 0
    for g in np.flatnonzero(kills).tolist():
        mask |= 1 << g
    return Subgroup(H.parent, mask)


def check_eq_4(G: AbelianPresentation) -> Optional[Subgroup]:
    """First subgroup H violating H ~ G/delta(H) or delta(H) ~ G/H, else None."""
    group = G.group()
    for H in all_subgroups(group):
        D = delta(G, H)
        H_abs = subgroup_abstract_group(group, H)[0]
        D_abs = subgroup_abstract_group(group, D)[0]
        if not isomorphic(H_abs, quotient(group, D).group):
            return H
        if not isomorphic(D_abs, quotient(group, H).group):
            return H
    return None


def delta_is_involution(G: AbelianPresentation) -> Optional[Subgroup]:
    """
    First subgroup where delta fails to be an order-reversing involution
    with |delta(H)| * |H| = |G|, else None.
    """
    group = G.group()
    subs = list(all_subgroups(group))
    image = {}
    for H in subs:
        D = delta(G, H)
        if D.order * H.order != group.order or delta(G, D).mask != H.mask:
            return H
        image[H.mask] = D.mask
    for H in subs:
        for K in subs:
            if K.order % H.order == 0 and (H.mask & ~K.mask) == 0:
                if image[K.mask] & ~image[H.mask]:
                    return H
    return None


def verify_prop_3_1(G: AbelianPresentation) -> VerificationResult:
    """delta maps QSol(G) onto Sol(G) and fixes each QSol member under delta twice."""
    group = G.group()
    if len(factorint(G.order)) > 1:
        raise ValueError(f"{group.label} is not a p-group")
    S, Q = sol(group), qsol(group)
    images = {}
    for N in Q:
        D = delta(G, N)
        images[N.mask] = D.mask
        back = delta(G, D)
        if back.mask != N.mask:
            return VerificationResult(
                "prop-3.1",
                "refuted",
                f"{group.label}: delta applied twice moves a QSol member",
                witness={"group": group.label, "subgroup": list(N.members), "image": list(back.members)},
            )
    if frozenset(images.values()) != S.masks:
        extra = sorted(frozenset(images.values()) ^ S.masks)[0]
        return VerificationResult(
            "prop-3.1",
            "refuted",
            f"{group.label}: delta(QSol) and Sol differ",
            witness={"group": group.label, "subgroup": elements_of(extra)},
        )
    return VerificationResult(
        "prop-3.1",
        "verified",
        f"{group.label}: delta maps the {len(Q)} QSol members onto Sol",
        details={"qsol_orders": Q.orders(), "sol_orders": S.orders()},
    )
