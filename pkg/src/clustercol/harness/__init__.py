"""Experiment suites, reports and the command-line front end."""

from .report import Claim, SuiteReport, export, render_graph, report_store
from .suites import SUITES, SuiteConfig, UnknownSuiteError, run_suite

__all__ = ["Claim", "SuiteReport", "export", "render_graph", "report_store", "SUITES", "SuiteConfig",
           "UnknownSuiteError", "run_suite"]
