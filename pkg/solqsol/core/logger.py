"""
Event trace for verification sweeps.

Records which groups a claim checked, skipped, or produced a witness on, so
a VerificationResult can say what was actually covered.
"""

import time
from typing import Any, Dict, List, Optional


class EventLogger:
    """
    In-memory, timestamped event list.

    Args:
        enabled: Whether events are recorded at all.
        log_level: "minimal" drops per-group check events, "normal" keeps them.
    """

    def __init__(self, enabled: bool = True, log_level: str = "normal"):
        if log_level not in ("minimal", "normal"):
            raise ValueError(f"log_level must be 'minimal' or 'normal', got {log_level!r}")
        self.enabled = enabled
        self.log_level = log_level
        self.events: List[Dict[str, Any]] = []
        self.start_time = time.time()

    def log_event(self, event_type: str, **kwargs):
        if not self.enabled:
            return
        self.events.append({
            "timestamp": time.time() - self.start_time,
            "type": event_type,
            **kwargs,
        })

    def log_group_checked(self, label: str, order: int, holds: bool):
        if self.log_level == "minimal":
            return
        self.log_event("group_checked", group=label, order=order, holds=holds)

    def log_group_skipped(self, label: str, reason: str):
        self.log_event("group_skipped", group=label, reason=reason)

    def log_witness(self, label: str, details: Optional[Dict] = None):
        self.log_event("witness_found", group=label, details=details or {})

    def get_events(self, event_type: Optional[str] = None) -> List[Dict]:
        if event_type is None:
            return list(self.events)
        return [e for e in self.events if e["type"] == event_type]

    def groups_checked(self) -> List[str]:
        return [e["group"] for e in self.events if e["type"] == "group_checked"]

    def get_summary(self) -> Dict[str, Any]:
        """Counts per event type; no timestamps, so reports stay byte-stable."""
        if not self.events:
            return {"total_events": 0}

        event_types: Dict[str, int] = {}
        for event in self.events:
            event_types[event["type"]] = event_types.get(event["type"], 0) + 1

        return {
            "total_events": len(self.events),
            "event_types": dict(sorted(event_types.items())),
            "skipped": sorted({e["group"] for e in self.events if e["type"] == "group_skipped"}),
        }

    def clear(self):
        self.events = []
        self.start_time = time.time()
