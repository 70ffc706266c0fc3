"""
Runtime limits for group construction and enumeration.

Caps are read from the environment each time settings are requested, so a
`.env` file loaded by the CLI (or an exported variable) takes effect without
reimporting anything:

    SOLQSOL_MAX_ORDER=120 solqsol qsol S5
"""

import os
from dataclasses import dataclass
from typing import Optional

ENV_MAX_ORDER = "SOLQSOL_MAX_ORDER"
ENV_VALIDATE_CAP = "SOLQSOL_VALIDATE_CAP"
ENV_AUTOMORPHISM_CAP = "SOLQSOL_AUTOMORPHISM_CAP"

DEFAULT_MAX_ORDER = 200
DEFAULT_VALIDATE_CAP = 64
DEFAULT_AUTOMORPHISM_CAP = 64


class OrderCapExceeded(ValueError):
    """A group (or an enumeration over it) would exceed a cap.

    `setting` names the environment variable that raises the cap, or is
    None when the limit is fixed.
    """

    def __init__(self, what: str, order: int, cap: int, setting: Optional[str] = ENV_MAX_ORDER,
                 quantity: str = "order"):
        self.what = what
        self.order = order
        self.cap = cap
        self.setting = setting
        hint = f"raise it with {setting}" if setting else "fixed limit"
        super().__init__(f"{what}: {quantity} {order} exceeds the cap {cap} ({hint})")


def _read_positive(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be a positive integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Order caps.

    Args:
        max_order: Largest group the constructors and enumerations accept.
        validate_cap: Constructors run the O(n^3) associativity check only
            up to this order.
        automorphism_cap: Largest group whose automorphisms are enumerated.
    """

    max_order: int = DEFAULT_MAX_ORDER
    validate_cap: int = DEFAULT_VALIDATE_CAP
    automorphism_cap: int = DEFAULT_AUTOMORPHISM_CAP

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            max_order=_read_positive(ENV_MAX_ORDER, DEFAULT_MAX_ORDER),
            validate_cap=_read_positive(ENV_VALIDATE_CAP, DEFAULT_VALIDATE_CAP),
            automorphism_cap=_read_positive(ENV_AUTOMORPHISM_CAP, DEFAULT_AUTOMORPHISM_CAP),
        )


def current() -> Settings:
    """Settings as seen by the environment right now."""
    return Settings.from_env()


def check_order(order: int, what: str, cap: int = None, setting: Optional[str] = ENV_MAX_ORDER) -> None:
    """Raise OrderCapExceeded if `order` is above `cap` (default: max_order).

    Pass the `setting` that controls a non-default cap so the error names it.
    """
    if cap is None:
        cap = current().max_order
    if order > cap:
        raise OrderCapExceeded(what, order, cap, setting=setting)
