"""
Solitary subgroups and solitary quotients.

A subgroup is solitary when no other subgroup is isomorphic to it; a normal
subgroup N is quotient-solitary when no other normal subgroup M gives
G/M isomorphic to G/N. Both are decided by bucketing candidates of equal
order by fingerprint and then splitting buckets with the isomorphism search.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .. import config
from ..config import check_order
from ..core.families import make_abelian, make_dihedral
from ..core.group import Group
from ..core.iso import (
    AUTOMORPHISM_SEARCH_LIMIT,
    Fingerprint,
    are_isomorphic,
    automorphism_search_bound,
    characteristic_subgroups,
    fingerprint,
    subgroup_abstract_group,
    subgroup_fingerprint,
)
from ..core.quotients import project_subgroup, quotient
from ..core.subgroups import (
    Subgroup,
    SubgroupFamily,
    all_subgroups,
    center,
    frattini,
    frattini_series,
    normal_subgroups,
    omega_series,
)
from ..lattice.finite import FiniteLattice, from_subgroup_family, is_distributive, is_modular

logger = logging.getLogger("solqsol")

STATUSES = ("verified", "refuted", "probe")


def _singleton_classes(fps: Sequence[Fingerprint], build: Callable[[int], Group]) -> List[int]:
    """Indices whose isomorphism class has exactly one member."""
    buckets: Dict[Fingerprint, List[int]] = defaultdict(list)
    for i, fp in enumerate(fps):
        buckets[fp].append(i)
    alone = []
    for fp, idx in buckets.items():
        if len(idx) == 1:
            alone.append(idx[0])
            continue
        if fp.abelian:
            continue
        classes: List[List[int]] = []
        for i in idx:
            G = build(i)
            for cls in classes:
                if are_isomorphic(build(cls[0]), G) is not None:
                    cls.append(i)
                    break
            else:
                classes.append([i])
        alone.extend(cls[0] for cls in classes if len(cls) == 1)
    return sorted(alone)


def classify_isomorphism(groups: Sequence[Group]) -> List[int]:
    """Class id per group, numbered by first appearance; equal ids iff isomorphic."""
    reps: Dict[Fingerprint, List[Tuple[int, Group]]] = defaultdict(list)
    ids = []
    next_id = 0
    for G in groups:
        fp = fingerprint(G)
        for cid, R in reps[fp]:
            if fp.abelian or are_isomorphic(R, G) is not None:
                ids.append(cid)
                break
        else:
            reps[fp].append((next_id, G))
            ids.append(next_id)
            next_id += 1
    return ids


def _by_order(family: SubgroupFamily) -> Dict[int, List[Subgroup]]:
    groups: Dict[int, List[Subgroup]] = defaultdict(list)
    for H in family:
        groups[H.order].append(H)
    return groups


def sol(G: Group) -> SubgroupFamily:
    check_order(G.order, f"sol({G.label})")

    def compute():
        chosen = []
        for order, subs in _by_order(all_subgroups(G)).items():
            if len(subs) == 1:
                chosen.append(subs[0])
                continue
            fps = [subgroup_fingerprint(G, H) for H in subs]
            keep = _singleton_classes(fps, lambda i: subgroup_abstract_group(G, subs[i])[0])
            chosen.extend(subs[i] for i in keep)
        family = SubgroupFamily(G, chosen)
        logger.debug(f"sol({G.label}): orders {family.orders()}")
        return family

    return G.memo("sol", compute)


def qsol(G: Group) -> SubgroupFamily:
    check_order(G.order, f"qsol({G.label})")

    def compute():
        chosen = []
        for order, normals in _by_order(normal_subgroups(G)).items():
            if len(normals) == 1:
                chosen.append(normals[0])
                continue
            quotients = [quotient(G, N).group for N in normals]
            fps = [fingerprint(Q) for Q in quotients]
            keep = _singleton_classes(fps, lambda i: quotients[i])
            chosen.extend(normals[i] for i in keep)
        family = SubgroupFamily(G, chosen)
        logger.debug(f"qsol({G.label}): orders {family.orders()}")
        return family

    return G.memo("qsol", compute)


def sol_lattice(G: Group) -> FiniteLattice:
    return G.memo("sol_lattice", lambda: from_subgroup_family(sol(G)))


def qsol_lattice(G: Group) -> FiniteLattice:
    return G.memo("qsol_lattice", lambda: from_subgroup_family(qsol(G), require_intersections=True))


def is_quotient_solitary_free(G: Group) -> bool:
    ends = {1 << G.identity, (1 << G.order) - 1}
    return qsol(G).masks == frozenset(ends)


# --- Reports ---

@dataclass
class SolitaryReport:
    label: str
    sol: SubgroupFamily
    qsol: SubgroupFamily
    sol_lattice: FiniteLattice
    qsol_lattice: FiniteLattice
    quotient_solitary_free: bool
    qsol_equals_normal: bool
    sol_equals_qsol: bool
    probes: Dict[str, Any] = field(default_factory=dict)


def _lattice_probes(G: Group) -> Dict[str, Any]:
    S, Q = sol(G), qsol(G)
    F, Z = frattini(G), center(G)
    probes: Dict[str, Any] = {
        "frattini_in_sol": F in S,
        "frattini_in_qsol": F in Q,
        "center_in_sol": Z in S,
        "center_in_qsol": Z in Q,
        "sol_distributive": is_distributive(sol_lattice(G)),
        "sol_modular": is_modular(sol_lattice(G)),
        "qsol_distributive": is_distributive(qsol_lattice(G)),
        "qsol_modular": is_modular(qsol_lattice(G)),
    }
    if char_is_tractable(G):
        probes["qsol_equals_char"] = Q == characteristic_subgroups(G)
    else:
        probes["qsol_equals_char"] = None
    return probes


def char_is_tractable(G: Group) -> bool:
    """Whether Char(G) can be computed: abelian groups always, others by enumerating automorphisms."""
    if G.is_abelian():
        return True
    return (
        G.order <= config.current().automorphism_cap
        and automorphism_search_bound(G) <= AUTOMORPHISM_SEARCH_LIMIT
    )


def solitary_report(G: Group, probes: bool = True) -> SolitaryReport:
    S, Q = sol(G), qsol(G)
    return SolitaryReport(
        label=G.label,
        sol=S,
        qsol=Q,
        sol_lattice=sol_lattice(G),
        qsol_lattice=qsol_lattice(G),
        quotient_solitary_free=is_quotient_solitary_free(G),
        qsol_equals_normal=Q == normal_subgroups(G),
        sol_equals_qsol=S.masks == Q.masks,
        probes=_lattice_probes(G) if probes else {},
    )


@dataclass
class VerificationResult:
    """
    Outcome of one claim check. A refuted result always carries a witness
    that can be re-checked from its element lists alone.
    """

    claim_id: str
    status: str
    narrative: str
    witness: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")
        if self.status == "refuted" and self.witness is None:
            raise ValueError(f"{self.claim_id}: a refuted result needs a witness")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "narrative": self.narrative,
            "witness": self.witness,
            "details": self.details,
        }


# --- Closed-form predictions ---

def predicted_qsol_dihedral(order: int, group: Optional[Group] = None) -> SubgroupFamily:
    """
    QSol of the dihedral group of the given order, from the rotation subgroup
    M = <x>: all subgroups of M plus the group when |M| is odd, and the proper
    subgroups of M plus the group when |M| is even.
    """
    G = group if group is not None else make_dihedral(order)
    if G.order != order:
        raise ValueError(f"{G.label} does not have order {order}")
    n = order // 2
    members = []
    for d in range(1, n + 1):
        if n % d:
            continue
        if n % 2 == 0 and d == 1:
            continue
        mask = 0
        for k in range(0, n, d):
            mask |= 1 << k
        members.append(Subgroup(G, mask, () if d == n else (d,)))
    members.append(Subgroup(G, (1 << order) - 1, G.generators()))
    return SubgroupFamily(G, members)


def predicted_qsol_abelian_p(p: int, partition: Sequence[int], group: Optional[Group] = None) -> List[Subgroup]:
    """The Frattini series of the abelian p-group of the given type."""
    G = group if group is not None else make_abelian([(p, a) for a in partition])
    return frattini_series(G)


def predicted_sol_abelian_p(p: int, partition: Sequence[int], group: Optional[Group] = None) -> List[Subgroup]:
    """The omega series of the abelian p-group of the given type."""
    G = group if group is not None else make_abelian([(p, a) for a in partition])
    return omega_series(G)


def find_prop_2_3_counterexample(G: Group) -> Optional[Tuple[Subgroup, Subgroup]]:
    """
    First (H, K), in canonical order, with H a proper normal subgroup,
    K in QSol(G) and the image of K in G/H outside QSol(G/H).
    """
    check_order(G.order, f"counterexample search in {G.label}")
    Q = qsol(G)
    for H in normal_subgroups(G):
        if H.is_whole:
            continue
        quo = quotient(G, H)
        target = qsol(quo.group)
        for K in Q:
            if project_subgroup(quo, K) not in target:
                logger.info(f"{G.label}: image of {K} in G/{list(H.members)} is not quotient-solitary")
                return H, K
    return None


def prop_2_3_witness(G: Group, H: Subgroup, K: Subgroup) -> Dict[str, Any]:
    quo = quotient(G, H)
    image = project_subgroup(quo, K)
    return {
        "group": G.label,
        "H": list(H.members),
        "K": list(K.members),
        "quotient_order": quo.group.order,
        "quotient_table": quo.group.table.tolist(),
        "image": list(image.members),
    }


def recheck_prop_2_3_witness(witness: Dict[str, Any]) -> bool:
    """
    Independent re-check from the witness data alone: rebuild G/H from its
    stored table, recompute its QSol from scratch and confirm that the image
    of K is missing.
    """
    rebuilt = Group(witness["quotient_table"], label="rebuilt-quotient", validate=True)
    image = 0
    for g in witness["image"]:
        image |= 1 << g
    return image not in qsol(rebuilt)
