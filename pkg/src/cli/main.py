"""
Command-line entry point: stickel.py <verb> [flags].

Exit codes: 0 when every hard check passes, 1 on a hard failure, 2 on bad
input (unparseable fixtures, invalid flags, unknown curve).
"""

import argparse
import sys
from typing import Optional

from .. import __version__
from ..config import PARITY_RINGS, EngineSettings
from ..core.errors import StickelError
from ..core.logging import debug_log, start_session_log
from ..core.paths import get_settings_path
from .config import CHECKS, OUTPUT_FORMATS, VERB_CHECKS, RunConfig
from .report import emit
from .runner import run

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

VERB_HELP = {
    "theta": "print Stickelberger elements",
    "ord": "check ord(theta) >= |S_M|",
    "verify": "run the full relation battery",
    "special": "fit character values against twisted L-values",
    "lvalue": "print twisted central L-values",
    "dump-space": "print the period map of each curve",
}


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--curves", default="curves.txt", help="curve fixture file (default: curves.txt)")
    which = parser.add_mutually_exclusive_group()
    which.add_argument("--curve", help="run a single curve by label")
    which.add_argument("--all", action="store_true", help="run every curve in the file (default)")
    moduli = parser.add_mutually_exclusive_group()
    moduli.add_argument("--modulus", type=int, help="a single modulus M")
    moduli.add_argument("--moduli", help="modulus range A..B or list A,B,C")
    parser.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    parser.add_argument("--rmax", type=int, help="augmentation filtration depth")
    parser.add_argument("--digits", type=int, help="decimal digits for L-values")
    parser.add_argument("--cache", help="cache directory (overrides STICKEL_CACHE)")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write disk caches")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="report format")
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--parity-ring", choices=PARITY_RINGS, help="coefficient ring for the parity check")
    parser.add_argument("--workers", type=int, default=1, help="parallel (curve, M) workers")
    parser.add_argument("--no-progress", action="store_true", help="hide the progress bar")
    parser.add_argument("--log", action="store_true", help="tee output into .stickel/logs/")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stickel",
        description="Stickel - verify Mazur-Tate Stickelberger elements of elliptic curves",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERB_CHECKS:
        _add_common(sub.add_parser(verb, help=VERB_HELP[verb]))
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Parse flags, run, emit the report and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    tee = None
    if args.log:
        tee = start_session_log(__version__, sys.argv[1:] if argv is None else argv)

    try:
        settings = EngineSettings.load(get_settings_path())
        if settings.is_new:
            settings.save()
        try:
            config = RunConfig.from_args(args, settings)
        except ValueError as e:
            print(f"stickel: {e}", file=sys.stderr)
            return EXIT_INPUT

        try:
            result = run(config)
        except (ValueError, OSError) as e:
            # bad fixture file, unknown curve label
            print(f"stickel: {e}", file=sys.stderr)
            return EXIT_INPUT
        except StickelError as e:
            print(f"stickel: {type(e).__name__}: {e}", file=sys.stderr)
            return EXIT_FAILED

        emit(result, __version__, config.output_path)
        if result.advisory_failures:
            print(f"stickel: {result.advisory_failures} advisory warning(s)", file=sys.stderr)
        debug_log(f"exit {result.exit_code}")
        return result.exit_code
    except KeyboardInterrupt:
        print("\n\nCancelled by user.", file=sys.stderr)
        return EXIT_FAILED
    finally:
        if tee is not None:
            sys.stdout = tee.terminal
            tee.close()
