"""
Hasse diagram output: Graphviz DOT and the JSON lattice schema.
"""

from typing import Any, Dict, List

from .finite import FiniteLattice


def _node_label(payload: Any) -> str:
    if isinstance(payload, dict) and "order" in payload:
        members = ",".join(str(g) for g in payload["members"])
        return f"{payload['order']}: {{{members}}}"
    if isinstance(payload, (tuple, list)):
        return " x ".join(_node_label(p) for p in payload)
    return str(payload)


def _rank(L: FiniteLattice, node: int) -> int:
    payload = L.payload[node] if L.payload is not None else None
    if isinstance(payload, dict) and "order" in payload:
        return payload["order"]
    return L.heights[node]


def to_dot(L: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram; one rank per subgroup order (or height when unlabeled)."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for j in range(L.size):
        label = _node_label(L.payload[j]) if L.payload is not None else str(j)
        label = label.replace('"', '\\"')
        lines.append(f'  n{j} [label="{label}"];')

    ranks: Dict[int, List[int]] = {}
    for j in range(L.size):
        ranks.setdefault(_rank(L, j), []).append(j)
    for rank in sorted(ranks):
        nodes = ranks[rank]
        if len(nodes) > 1:
            lines.append("  { rank=same; " + " ".join(f"n{j};" for j in nodes) + " }")

    for lo, hi in L.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(L: FiniteLattice) -> Dict[str, Any]:
    nodes = []
    for j in range(L.size):
        payload = L.payload[j] if L.payload is not None else None
        node: Dict[str, Any] = {"id": j}
        if isinstance(payload, dict) and "order" in payload:
            node["order"] = payload["order"]
            node["members"] = list(payload["members"])
        elif payload is not None:
            node["label"] = _node_label(payload)
        nodes.append(node)
    return {"nodes": nodes, "covers": [[lo, hi] for lo, hi in L.covers]}
