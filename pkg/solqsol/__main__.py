"""
CLI entry point: python -m solqsol qsol D8

Exit codes: 0 ok, 1 a claim expected to verify was refuted, 2 usage error
(bad flags or group spec), 3 order cap exceeded.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .config import OrderCapExceeded

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

FAMILY_CHOICES = ["sol", "qsol", "normal", "char", "subgroups"]
DEFAULT_CENSUS_FAMILIES = "cyclic,dihedral,quaternion,semidihedral,abelian_p,hamiltonian"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solqsol",
        description="Solitary subgroups and solitary quotients of small finite groups.",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", help="Order, element-order histogram and flags of a group")
    show.add_argument("spec", help="Group spec, e.g. D8, Q8xC3, Ab(2:[1,2])")
    show.add_argument("--output", "-o", default=None, help="Output file (JSON)")

    fam = sub.add_parser("families", help="Sol, QSol, N(G), Char(G) or L(G) as JSON")
    fam.add_argument("spec")
    fam.add_argument("which", choices=FAMILY_CHOICES)
    fam.add_argument("--dot", default=None, help="Write the Hasse diagram to this DOT file")
    fam.add_argument("--output", "-o", default=None, help="Output file (JSON)")

    for which in ("sol", "qsol"):
        short = sub.add_parser(which, help=f"Shorthand for 'families SPEC {which}'")
        short.add_argument("spec")
        short.add_argument("--dot", default=None, help="Write the Hasse diagram to this DOT file")
        short.add_argument("--output", "-o", default=None, help="Output file (JSON)")

    ver = sub.add_parser("verify", help="Run the verification suite")
    target = ver.add_mutually_exclusive_group(required=True)
    target.add_argument("--all", action="store_true", help="Every claim in the manifest")
    target.add_argument("--id", action="append", dest="ids", help="Claim id (repeatable)")
    ver.add_argument("--max-order", type=int, default=None, help="Lower the corpus order caps")
    ver.add_argument("--workers", type=int, default=4, help="Parallel threads (default: 4)")
    ver.add_argument("--output", "-o", default=None, help="Output file (JSON)")

    cen = sub.add_parser("census", help="Sol/QSol summary of every group in some families (JSONL)")
    cen.add_argument("--max-order", type=int, default=32, help="Largest group order (default: 32)")
    cen.add_argument("--families", default=DEFAULT_CENSUS_FAMILIES,
                     help=f"Comma-separated families (default: {DEFAULT_CENSUS_FAMILIES})")
    cen.add_argument("--workers", type=int, default=4, help="Parallel threads (default: 4)")
    cen.add_argument("--no-probes", action="store_true", help="Skip Char(G) and lattice-law probes")
    cen.add_argument("--output", "-o", default=None, help="Output file (JSONL)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    from dotenv import load_dotenv
    load_dotenv()

    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    command = list(sys.argv[1:] if argv is None else argv)

    handlers = {
        "show": _cmd_show,
        "families": _cmd_families,
        "sol": _cmd_families,
        "qsol": _cmd_families,
        "verify": _cmd_verify,
        "census": _cmd_census,
    }
    try:
        return handlers[args.command](args, command)
    except OrderCapExceeded as e:
        print(f"solqsol: {e}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as e:
        print(f"solqsol: {e}", file=sys.stderr)
        return EXIT_USAGE


def _emit(report, args) -> None:
    from .report.serialize import write_report

    text = write_report(report, args.output)
    if args.output:
        print(f"Saved to {args.output}")
    else:
        sys.stdout.write(text)


def _cmd_show(args, command) -> int:
    from .core.groupspec import build_group
    from .report.serialize import build_report, group_descriptor

    G = build_group(args.spec)
    desc = group_descriptor(G)
    print(f"{desc['label']}: order {desc['order']}, exponent {desc['exponent']}, type {desc['type']}")
    hist = ", ".join(f"{k}:{v}" for k, v in desc["histogram"].items())
    print(f"  element orders: {hist}")
    flags = [name for name, on in desc["flags"].items() if on]
    print(f"  flags: {', '.join(flags) if flags else 'none'}")
    if args.output:
        _emit(build_report(command, group=desc), args)
    return EXIT_OK


def _family(G, which: str):
    from .analysis.solitary import qsol, qsol_lattice, sol, sol_lattice
    from .core.iso import characteristic_subgroups
    from .core.subgroups import all_subgroups, normal_subgroups
    from .lattice.finite import from_subgroup_family

    if which == "sol":
        return sol(G), sol_lattice(G)
    if which == "qsol":
        return qsol(G), qsol_lattice(G)
    family = {
        "normal": normal_subgroups,
        "char": characteristic_subgroups,
        "subgroups": all_subgroups,
    }[which](G)
    return family, from_subgroup_family(family)


def _cmd_families(args, command) -> int:
    from .core.groupspec import build_group
    from .lattice.render import to_dot
    from .report.serialize import build_report, family_to_dict, group_descriptor, lattice_summary

    which = args.which if args.command == "families" else args.command
    G = build_group(args.spec)
    family, lattice = _family(G, which)
    if args.dot:
        with open(args.dot, "w") as f:
            f.write(to_dot(lattice, name=which))
    report = build_report(
        command,
        group=group_descriptor(G),
        families={which: family_to_dict(family)},
        lattice=lattice_summary(lattice),
    )
    _emit(report, args)
    return EXIT_OK


def _cmd_verify(args, command) -> int:
    from .analysis.verify import unexpected_refutations, verify_all
    from .report.serialize import build_report

    results = verify_all(None if args.all else args.ids, max_order=args.max_order, max_workers=args.workers)
    for r in results:
        print(f"{r.claim_id:<20} {r.status:<9} {r.narrative}")

    if args.output:
        report = build_report(command, verification=[r.to_dict() for r in results])
        _emit(report, args)

    failed = unexpected_refutations(results)
    if failed:
        print(f"refuted but expected to verify: {', '.join(failed)}", file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK


def _cmd_census(args, command) -> int:
    from .analysis.corpus import families_for_census
    from .experiment.census import run_census
    from .report.serialize import clean_for_json

    names = [n.strip() for n in args.families.split(",") if n.strip()]
    specs = families_for_census(names, args.max_order)
    rows = run_census(specs, max_workers=args.workers, output_file=args.output, probes=not args.no_probes)
    if args.output:
        print(f"Saved {len(rows)} groups to {args.output}")
    else:
        for row in rows:
            print(json.dumps(clean_for_json(row), sort_keys=True))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
