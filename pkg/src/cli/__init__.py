"""
Command-line surface for Stickel.

Parses curve fixture files, turns flags into a RunConfig, fans the checks out
over (curve, M) and renders text, JSON or CSV reports.
"""

from .config import CHECKS, OUTPUT_FORMATS, VERB_CHECKS, RunConfig
from .fixtures import parse_curve_file, parse_curve_line, parse_curve_text, select_curves
from .main import EXIT_FAILED, EXIT_INPUT, EXIT_OK, build_parser, main
from .report import CSV_HEADER, emit, read_json_report, render, render_csv, render_json, render_text, strip_header
from .runner import CurveResult, LValueRow, ModulusResult, Runner, RunResult, run

__all__ = [
    "CHECKS",
    "OUTPUT_FORMATS",
    "VERB_CHECKS",
    "RunConfig",
    "parse_curve_file",
    "parse_curve_line",
    "parse_curve_text",
    "select_curves",
    "EXIT_FAILED",
    "EXIT_INPUT",
    "EXIT_OK",
    "build_parser",
    "main",
    "CSV_HEADER",
    "emit",
    "read_json_report",
    "render",
    "render_csv",
    "render_json",
    "render_text",
    "strip_header",
    "CurveResult",
    "LValueRow",
    "ModulusResult",
    "Runner",
    "RunResult",
    "run",
]
