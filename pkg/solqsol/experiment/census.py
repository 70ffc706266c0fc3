"""
Census runner: compute Sol/QSol summaries for many groups in parallel.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

from ..analysis.corpus import group_for
from ..analysis.naming import type_label
from ..analysis.solitary import solitary_report
from ..config import OrderCapExceeded
from ..report.serialize import clean_for_json

logger = logging.getLogger("solqsol")


def census_row(spec: str, probes: bool = True) -> Dict[str, Any]:
    """One census line: the SolitaryReport of a group, reduced to orders and flags."""
    G = group_for(spec)
    report = solitary_report(G, probes=probes)
    return {
        "spec": spec,
        "order": G.order,
        "type": type_label(G),
        "sol_orders": report.sol.orders(),
        "qsol_orders": report.qsol.orders(),
        "sol_lattice": {"nodes": report.sol_lattice.size, "edges": report.sol_lattice.edge_count},
        "qsol_lattice": {"nodes": report.qsol_lattice.size, "edges": report.qsol_lattice.edge_count},
        "quotient_solitary_free": report.quotient_solitary_free,
        "qsol_equals_normal": report.qsol_equals_normal,
        "sol_equals_qsol": report.sol_equals_qsol,
        "probes": report.probes,
    }


def _run_one(run_id: int, spec: str, probes: bool) -> Dict[str, Any]:
    try:
        row = census_row(spec, probes=probes)
    except OrderCapExceeded as exc:
        logger.warning(f"census: skipping {spec}: {exc}")
        row = {"spec": spec, "skipped": str(exc)}
    row["run_id"] = run_id
    return row


def run_census(
    specs: List[str],
    max_workers: int = 4,
    output_file: Optional[str] = None,
    probes: bool = True,
) -> List[Dict[str, Any]]:
    """
    Summarise every group in `specs`.

    Args:
        specs: Group spec strings, e.g. ["D8", "Q8", "Ab(2:[1,2])"].
        max_workers: Parallel threads.
        output_file: Optional JSONL path. Lines are written in spec order as
            soon as every earlier spec has finished.
        probes: Include the lattice probes (Char(G), distributivity, ...).

    Returns:
        One row per spec, in spec order.
    """
    results: Dict[int, Dict[str, Any]] = {}
    out_file = open(output_file, "w") if output_file else None
    next_id = 0

    try:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            futures = {
                executor.submit(_run_one, rid, spec, probes): rid
                for rid, spec in enumerate(specs)
            }
            for future in as_completed(futures):
                row = future.result()
                results[row["run_id"]] = row
                logger.debug(f"census: {row['spec']} done")
                while out_file and next_id in results:
                    out_file.write(json.dumps(clean_for_json(results[next_id]), sort_keys=True) + "\n")
                    next_id += 1
    finally:
        if out_file:
            out_file.close()

    return [results[rid] for rid in sorted(results)]
