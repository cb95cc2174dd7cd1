"""
Centralized path management for Stickel.

All app data is stored in .stickel/ next to the entry script.

Directory structure:
    path/to/stickel.py
    path/to/.stickel/
        settings.json   - Engine defaults (bounds, digits, ring)
        cache/          - a_p tables and period maps
        logs/           - Dated run logs

STICKEL_CACHE overrides the cache directory, STICKEL_ROOT the app dir.
"""

import os
from pathlib import Path


# Directory name for app data (hidden on Unix)
DATA_DIR_NAME = ".stickel"


def get_app_dir() -> Path:
    """
    Get the directory the app runs from.

    STICKEL_ROOT wins when set; otherwise the repo root (parent of src/core/).
    """
    root = os.environ.get("STICKEL_ROOT")
    if root:
        return Path(root)
    return Path(__file__).parent.parent.parent


def get_data_dir() -> Path:
    """Get the .stickel/ data directory, creating it if needed."""
    data_dir = get_app_dir() / DATA_DIR_NAME
    data_dir.mkdir(parents=True, exist_ok=True)
    return data_dir


def get_settings_path() -> Path:
    """Get path to engine settings file."""
    return get_data_dir() / "settings.json"


def get_cache_dir() -> Path:
    """Get the cache directory, honouring STICKEL_CACHE."""
    override = os.environ.get("STICKEL_CACHE")
    cache_dir = Path(override) if override else get_data_dir() / "cache"
    cache_dir.mkdir(parents=True, exist_ok=True)
    return cache_dir


def get_logs_dir() -> Path:
    """Get the logs directory, creating it if needed."""
    logs_dir = get_data_dir() / "logs"
    logs_dir.mkdir(exist_ok=True)
    return logs_dir


def atomic_write_text(path: Path, text: str):
    """Write text via a .tmp sibling and rename, so readers never see half a file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_path = path.with_name(f"{path.name}.{os.getpid()}.tmp")
    with open(tmp_path, "w", encoding="utf-8") as f:
        f.write(text)
    tmp_path.replace(path)
