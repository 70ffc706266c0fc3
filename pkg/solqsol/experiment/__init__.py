"""Experiment tools: family census."""
from .census import run_census
