"""
Session log for stickel runs.

With --log, stdout is mirrored into <data-dir>/logs/YYYY-MM-DD.log. Report
lines reach both the terminal and the file; diagnostics sent through
debug_log() reach the file only, tagged with the module that emitted them
(filtration, period_map, series, ...).
"""

import re
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Sequence

_ANSI = re.compile(r"\x1b\[[0-9;]*[A-Za-z]")

# tqdm bars and the report's own "# generated" line
_NOISE = re.compile(r"^\s*$|\d+%\|[█▏▎▍▌▋▊▉ ]*\||^\s*#\s*generated\b")


def _clock() -> str:
    return datetime.now().strftime("%H:%M:%S")


class TeeOutput:
    """sys.stdout stand-in that mirrors report lines into the session log."""

    def __init__(self, log_path: Path, version: Optional[str] = None, argv: Optional[Sequence[str]] = None):
        self.terminal = sys.stdout
        self.log_path = log_path
        self._log = open(log_path, "a", encoding="utf-8")
        self._partial = ""
        self._last_note: Optional[str] = None
        self._repeats = 0

        opened = datetime.now().isoformat(timespec="seconds")
        self._log.write(f"\n--- stickel {version or '?'} session {opened}\n")
        if argv:
            self._log.write(f"--- argv: {' '.join(argv)}\n")
        self._log.flush()

    def _emit(self, text: str):
        self._flush_repeats()
        self._log.write(f"[{_clock()}] {text}\n")

    def _flush_repeats(self):
        if self._repeats:
            self._log.write(f"[{_clock()}]   (previous note x{self._repeats + 1})\n")
        self._repeats = 0
        self._last_note = None

    def write(self, message: str):
        self.terminal.write(message)
        self._partial += _ANSI.sub("", message)
        *complete, self._partial = self._partial.split("\n")
        for line in complete:
            # a carriage return redraws the line; only the final state counts
            line = line.rsplit("\r", 1)[-1].rstrip()
            if line and not _NOISE.search(line):
                self._emit(line)
        self._partial = self._partial.rsplit("\r", 1)[-1]
        self._log.flush()

    def flush(self):
        self.terminal.flush()
        self._log.flush()

    def note(self, message: str, source: Optional[str] = None):
        """File-only diagnostic. Back-to-back duplicates are counted, not repeated."""
        text = f"{source}: {message}" if source else message
        if text == self._last_note:
            self._repeats += 1
            return
        self._emit(text)
        self._last_note = text
        self._log.flush()

    def close(self):
        tail = self._partial.strip()
        if tail and not _NOISE.search(tail):
            self._emit(tail)
        self._flush_repeats()
        self._log.write(f"--- session closed {datetime.now().isoformat(timespec='seconds')}\n")
        self._log.close()


def debug_log(message: str):
    """Send a diagnostic to the session log; silent when no log is open."""
    out = sys.stdout
    if isinstance(out, TeeOutput):
        caller = sys._getframe(1).f_globals.get("__name__", "")
        out.note(message, caller.rsplit(".", 1)[-1] or None)


def start_session_log(version: Optional[str] = None, argv: Optional[Sequence[str]] = None) -> TeeOutput:
    """Install a TeeOutput on sys.stdout writing to today's log file."""
    from .paths import get_logs_dir
    log_path = get_logs_dir() / f"{datetime.now():%Y-%m-%d}.log"
    tee = TeeOutput(log_path, version=version, argv=argv)
    sys.stdout = tee
    return tee
