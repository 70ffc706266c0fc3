"""
Frozen group corpora for the verification suite.

corpus.json names, per claim, either a corpus (a list of family sources),
explicit specs, or factor pairs, together with an order cap and the
expected status. Groups are built once per spec and shared, so the memoised
subgroup data of a group is reused across claims.
"""

import json
import logging
import math
import threading
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from sympy import primerange
from sympy.utilities.iterables import partitions

from ..core.families import SYMMETRIC_MAX_DEGREE, abelian_label
from ..core.group import Group
from ..core.groupspec import build_group, parse_group_spec
from .naming import abelian_types

logger = logging.getLogger("solqsol")

MANIFEST_PATH = Path(__file__).with_name("corpus.json")

_groups: Dict[str, Group] = {}
_groups_lock = threading.Lock()


@lru_cache(maxsize=1)
def load_manifest() -> Dict[str, Any]:
    with open(MANIFEST_PATH) as f:
        return json.load(f)


def claim_ids() -> List[str]:
    return list(load_manifest()["claims"])


def claim_entry(claim_id: str) -> Dict[str, Any]:
    claims = load_manifest()["claims"]
    if claim_id not in claims:
        raise ValueError(f"unknown claim id {claim_id!r}; known ids: {', '.join(claims)}")
    return claims[claim_id]


def claim_expectation(claim_id: str) -> str:
    return claim_entry(claim_id)["expect"]


def group_for(spec: str) -> Group:
    """Build (once) the group named by `spec`."""
    with _groups_lock:
        if spec in _groups:
            return _groups[spec]
    G = build_group(spec)
    with _groups_lock:
        return _groups.setdefault(spec, G)


def spec_order(spec: str) -> int:
    return parse_group_spec(spec).order


# --- Family expansion ---

def _partitions_of(k: int) -> List[Tuple[int, ...]]:
    out = []
    for part in partitions(k):
        out.append(tuple(sorted(a for a, mult in part.items() for _ in range(mult))))
    return sorted(out)


def _expand_family(source: Dict[str, Any], max_order: int) -> List[str]:
    family = source["family"]
    lo = source.get("min_order", 1)

    if family == "cyclic":
        return [f"C{n}" for n in range(max(lo, 1), max_order + 1)]
    if family == "dihedral":
        return [f"D{n}" for n in range(max(lo, 6), max_order + 1) if n % 2 == 0]
    if family == "quaternion":
        return ["Q8"] if max_order >= 8 else []
    if family == "semidihedral":
        out, n = [], 16
        while n <= max_order:
            out.append(f"SD{n}")
            n *= 2
        return out
    if family == "symmetric":
        return [f"S{n}" for n in range(1, SYMMETRIC_MAX_DEGREE + 1) if math.factorial(n) <= max_order]
    if family == "abelian_p":
        out = []
        for p in source.get("primes", list(primerange(2, max_order + 1))):
            k = 1
            while p ** k <= max_order:
                out.extend(abelian_label([(p, a) for a in parts]) for parts in _partitions_of(k))
                k += 1
        return out
    if family == "abelian":
        out = []
        for n in range(max(lo, 1), max_order + 1):
            for factors in abelian_types(n):
                primes = [p for p, _ in factors]
                if source.get("noncyclic") and len(primes) == len(set(primes)):
                    continue
                out.append(abelian_label(factors))
        return out
    if family == "hamiltonian":
        out = []
        for rank in range(source.get("max_rank", 2) + 1):
            for odd in source.get("odd_parts", ["C1"]):
                spec = "Q8"
                if rank:
                    spec += "x" + abelian_label([(2, 1)] * rank)
                if odd != "C1":
                    spec += "x" + odd
                out.append(spec)
        return [s for s in out if spec_order(s) <= max_order]
    raise ValueError(f"unknown corpus family {family!r}")


def expand_sources(sources: List[Dict[str, Any]], max_order: int) -> List[str]:
    """Spec strings for a list of sources, in manifest order, without duplicates."""
    specs: List[str] = []
    for source in sources:
        if "family" in source:
            specs.extend(_expand_family(source, max_order))
        elif "specs" in source:
            specs.extend(s for s in source["specs"] if spec_order(s) <= max_order)
        else:
            raise ValueError(f"corpus source needs 'family' or 'specs': {source}")
    return list(dict.fromkeys(specs))


def corpus_specs(name: str, max_order: int) -> List[str]:
    corpora = load_manifest()["corpora"]
    if name not in corpora:
        raise ValueError(f"unknown corpus {name!r}")
    return expand_sources(corpora[name], max_order)


def claim_max_order(claim_id: str, max_order: Optional[int] = None) -> int:
    cap = claim_entry(claim_id).get("max_order")
    if max_order is None:
        return cap
    return min(cap, max_order) if cap is not None else max_order


def claim_specs(claim_id: str, max_order: Optional[int] = None) -> List[str]:
    entry = claim_entry(claim_id)
    cap = claim_max_order(claim_id, max_order)
    if "corpus" in entry:
        return corpus_specs(entry["corpus"], cap)
    if "specs" in entry:
        return [s for s in entry["specs"] if spec_order(s) <= cap]
    if "pairs" in entry:
        return [f"{p}x{q}" for p, q in claim_pairs(claim_id, max_order)]
    return []


def claim_pairs(claim_id: str, max_order: Optional[int] = None) -> List[Tuple[str, str]]:
    cap = claim_max_order(claim_id, max_order)
    pairs = claim_entry(claim_id).get("pairs", [])
    return [(p, q) for p, q in pairs if spec_order(p) * spec_order(q) <= cap]


def families_for_census(names: List[str], max_order: int) -> List[str]:
    """Census specs for family names such as 'dihedral' or 'abelian_p'."""
    sources = []
    for name in names:
        if name == "abelian_p":
            sources.append({"family": "abelian_p", "primes": list(primerange(2, max_order + 1))})
        elif name == "hamiltonian":
            sources.append({"family": "hamiltonian", "max_rank": 2,
                            "odd_parts": ["C1", "C3", "C5", "C9", "Ab(3:[1,1])"]})
        else:
            sources.append({"family": name})
    return expand_sources(sources, max_order)
