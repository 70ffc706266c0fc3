"""
Clean JSON serialization for CLI reports.

Every report is a plain dict of JSON-safe values. dumps() sorts keys so the
same input always produces the same bytes.
"""

import json
from typing import Any, Dict, List, Optional

import numpy as np

from ..analysis.naming import subgroup_type_label, type_label
from ..core.group import Group
from ..core.subgroups import (
    SubgroupFamily,
    is_cyclic,
    is_elementary_abelian,
    is_hamiltonian,
    is_nilpotent,
    is_perfect,
)
from ..lattice.finite import FiniteLattice, is_chain, is_distributive, is_modular
from ..lattice.render import to_json

SCHEMA_VERSION = 1


def clean_for_json(obj: Any) -> Any:
    """Recursively make an object JSON-serializable."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return clean_for_json(obj.tolist())
    if isinstance(obj, dict):
        return {str(k): clean_for_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean_for_json(item) for item in obj]
    if isinstance(obj, (set, frozenset)):
        return [clean_for_json(item) for item in sorted(obj, key=str)]
    return str(obj)


def group_descriptor(G: Group) -> Dict[str, Any]:
    return {
        "label": G.label,
        "order": G.order,
        "type": type_label(G),
        "exponent": G.exponent(),
        "histogram": {str(k): v for k, v in sorted(G.order_histogram().items())},
        "flags": {
            "abelian": G.is_abelian(),
            "cyclic": is_cyclic(G),
            "nilpotent": is_nilpotent(G),
            "perfect": is_perfect(G),
            "hamiltonian": is_hamiltonian(G),
            "elementary_abelian": is_elementary_abelian(G),
        },
    }


def family_to_dict(family: SubgroupFamily, types: bool = True) -> List[Dict[str, Any]]:
    """Members in canonical order, each with its order and abstract type."""
    out = []
    for H in family:
        entry = {"order": H.order, "members": list(H.members)}
        if types:
            entry["type"] = subgroup_type_label(H)
        out.append(entry)
    return out


def lattice_summary(L: FiniteLattice) -> Dict[str, Any]:
    return {
        "nodes": L.size,
        "edges": L.edge_count,
        "is_chain": is_chain(L),
        "is_distributive": is_distributive(L),
        "is_modular": is_modular(L),
        "covers": to_json(L)["covers"],
    }


def build_report(command: List[str], **sections: Any) -> Dict[str, Any]:
    report = {"schema_version": SCHEMA_VERSION, "command": list(command)}
    for key, value in sections.items():
        if value is not None:
            report[key] = value
    return clean_for_json(report)


def dumps(report: Dict[str, Any], indent: Optional[int] = 2) -> str:
    return json.dumps(clean_for_json(report), indent=indent, sort_keys=True)


def write_report(report: Dict[str, Any], path: Optional[str] = None) -> str:
    """Write the report to `path`, or return it as text when path is None."""
    text = dumps(report) + "\n"
    if path:
        with open(path, "w") as f:
            f.write(text)
    return text
