"""
Configuration management for Stickel.

Config files:
- .stickel/settings.json: engine defaults (bounds, precision, parity ring)
"""

from .settings import EngineSettings, PARITY_RINGS

__all__ = [
    "EngineSettings",
    "PARITY_RINGS",
]
