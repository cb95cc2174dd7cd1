"""
Orientation registry for relations whose sigma exponent or sign is a
convention.

Each relation lists its candidate orientations, default first. The first
case where exactly one candidate holds pins the relation; later cases are
checked against the pinned orientation only.
"""

import threading
from dataclasses import dataclass
from typing import Optional

from ..core.logging import debug_log


@dataclass(frozen=True)
class Pin:
    """A pinned orientation and the case that decided it."""
    relation: str
    orientation: int
    case: str


class OrientationRegistry:
    """Thread-safe map relation name -> pinned orientation."""

    def __init__(self):
        self._lock = threading.Lock()
        self._pins: dict[str, Pin] = {}

    def pinned(self, relation: str) -> Optional[Pin]:
        with self._lock:
            return self._pins.get(relation)

    def resolve(self, relation: str, holds: dict[int, bool], case: str) -> Optional[int]:
        """
        Orientation to judge this case by.

        Returns the pinned orientation if there is one; otherwise pins and
        returns the unique candidate that holds. None when the case cannot
        decide (no candidate or several hold).
        """
        with self._lock:
            pin = self._pins.get(relation)
            if pin is not None:
                return pin.orientation
            holding = [o for o, ok in holds.items() if ok]
            if len(holding) != 1:
                return None
            self._pins[relation] = Pin(relation, holding[0], case)
        debug_log(f"orientation pinned: {relation} -> {holding[0]:+d} by {case}")
        return holding[0]

    def pin(self, relation: str, orientation: int, case: str = "manual"):
        with self._lock:
            self._pins[relation] = Pin(relation, orientation, case)

    def snapshot(self) -> dict[str, dict]:
        with self._lock:
            return {
                name: {"orientation": pin.orientation, "pinned_by": pin.case}
                for name, pin in sorted(self._pins.items())
            }

    def clear(self):
        with self._lock:
            self._pins.clear()


# Shared by every check unless a registry is passed explicitly
ORIENTATIONS = OrientationRegistry()
