"""
Progress tracking for the verification battery.
"""

import threading

from tqdm import tqdm


class ProgressTracker:
    """Thread-safe tqdm wrapper; messages go through tqdm.write so bars stay intact."""

    def __init__(self, total: int, desc: str = "", enabled: bool = True):
        self.lock = threading.Lock()
        self._closed = False
        self._cancelled = False
        self._bar = tqdm(total=total, desc=desc, unit="item", disable=not enabled, leave=False)

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def cancel(self):
        """Signal cancellation."""
        self._cancelled = True

    def advance(self, label: str = ""):
        """Mark one work item done."""
        with self.lock:
            if label:
                self._bar.set_postfix_str(label, refresh=False)
            self._bar.update(1)

    def write(self, msg: str):
        """Write a message (thread-safe)."""
        with self.lock:
            tqdm.write(msg)

    def close(self):
        """Close the progress tracker."""
        with self.lock:
            if not self._closed:
                self._bar.close()
                self._closed = True
