"""Command-line front end: build graphs, run checks, draw diagrams and reproduce results."""

from .app import app, main
from .reports import Report, aggregate
from .suites import SUITE_NAMES, SuiteCase, run_cases, suite_cases

__all__ = ["app", "main", "Report", "aggregate", "SUITE_NAMES", "SuiteCase", "run_cases", "suite_cases"]
