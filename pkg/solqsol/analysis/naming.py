"""
Readable isomorphism-type labels in the group spec grammar.

Abelian groups are labelled from their invariants ("C2xC4"). Nonabelian
groups are matched against a small library: dihedral, Q8, semidihedral and
symmetric cores, each optionally times an abelian group. Anything else gets
"order<n>#fp<digest>".
"""

import itertools
import logging
import threading
from typing import Dict, List, Tuple

from sympy import divisors, factorint
from sympy.utilities.iterables import partitions

from ..core.families import direct_product, make_abelian
from ..core.group import Group
from ..core.groupspec import build_group
from ..core.iso import abelian_invariants, are_isomorphic, fingerprint, subgroup_abstract_group
from ..core.quotients import quotient
from ..core.subgroups import Subgroup

logger = logging.getLogger("solqsol")

_library: Dict[int, List[Tuple[str, Group]]] = {}
_library_lock = threading.Lock()


def abelian_type_label(factors: List[Tuple[int, int]]) -> str:
    if not factors:
        return "C1"
    return "x".join(f"C{p ** a}" for p, a in factors)


def abelian_types(order: int) -> List[List[Tuple[int, int]]]:
    """Every abelian group of the given order as (p, a) factor lists."""
    per_prime = []
    for p, k in sorted(factorint(order).items()):
        options = []
        for part in partitions(k):
            exps = sorted(a for a, mult in part.items() for _ in range(mult))
            options.append([(p, a) for a in exps])
        per_prime.append(options)
    return [sum(combo, []) for combo in itertools.product(*per_prime)]


def _cores(order: int) -> List[str]:
    cores = []
    for d in divisors(order):
        if d >= 6 and d % 2 == 0:
            cores.append(f"D{d}")
        if d == 8:
            cores.append("Q8")
        if d >= 16 and d & (d - 1) == 0:
            cores.append(f"SD{d}")
        if d in (24, 120):
            cores.append(f"S{4 if d == 24 else 5}")
    return cores


def _library_for(order: int) -> List[Tuple[str, Group]]:
    with _library_lock:
        if order in _library:
            return _library[order]
    entries = []
    for core in _cores(order):
        base = build_group(core)
        for factors in abelian_types(order // base.order):
            if factors:
                G = direct_product(base, make_abelian(factors))
                entries.append((f"{core}x{abelian_type_label(factors)}", G))
            else:
                entries.append((core, base))
    entries.sort(key=lambda e: ("x" in e[0], len(e[0])))
    with _library_lock:
        return _library.setdefault(order, entries)


def type_label(G: Group) -> str:
    def compute():
        if G.is_abelian():
            return abelian_type_label(abelian_invariants(G))
        fp = fingerprint(G)
        for label, candidate in _library_for(G.order):
            if fingerprint(candidate) == fp and are_isomorphic(candidate, G) is not None:
                return label
        logger.debug(f"{G.label}: no library match for order {G.order}")
        return f"order{G.order}#fp{fp.digest()}"
    return G.memo("type_label", compute)


def subgroup_type_label(H: Subgroup) -> str:
    return type_label(subgroup_abstract_group(H.parent, H)[0])


def quotient_type_label(G: Group, N: Subgroup) -> str:
    return type_label(quotient(G, N).group)

