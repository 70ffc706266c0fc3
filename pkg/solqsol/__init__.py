"""
solqsol: solitary subgroups and solitary quotients of small finite groups.

    from solqsol import build_group, sol, qsol
    from solqsol.analysis.verify import verify, verify_all
    from solqsol.experiment import run_census
    from solqsol.lattice import to_dot
"""

from .core.group import Group
from .core.groupspec import GroupSpecError, build_group, parse_group_spec
from .core.subgroups import Subgroup, SubgroupFamily, all_subgroups, normal_subgroups
from .core.iso import are_isomorphic, characteristic_subgroups
from .core.quotients import quotient
from .analysis.solitary import VerificationResult, qsol, sol, solitary_report
from .config import OrderCapExceeded

__version__ = "0.1.0"

__all__ = [
    "Group",
    "GroupSpecError",
    "build_group",
    "parse_group_spec",
    "Subgroup",
    "SubgroupFamily",
    "all_subgroups",
    "normal_subgroups",
    "are_isomorphic",
    "characteristic_subgroups",
    "quotient",
    "VerificationResult",
    "sol",
    "qsol",
    "solitary_report",
    "OrderCapExceeded",
]
