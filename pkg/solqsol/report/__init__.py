"""JSON report serialization."""
from .serialize import build_report, clean_for_json
