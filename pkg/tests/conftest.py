"""Pytest configuration and shared fixtures."""

from pathlib import Path

import pytest

from src.curve import CurveData
from src.maninsym import period_map_for
from src.stickelberger import OrientationRegistry

FIXTURE_CURVES = Path(__file__).parent.parent / "curves.txt"


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "slow: builds large modular symbol spaces or long L-series"
    )


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path, monkeypatch):
    """Keep caches, settings and logs out of the repo."""
    monkeypatch.setenv("STICKEL_CACHE", str(tmp_path / "cache"))
    monkeypatch.setenv("STICKEL_ROOT", str(tmp_path / "app"))
    return tmp_path


@pytest.fixture(scope="session")
def e11():
    return CurveData(0, -1, 1, -10, -20, conductor=11, rank_hint=0, label="11a1")


@pytest.fixture(scope="session")
def e37():
    return CurveData(0, 0, 1, -1, 0, conductor=37, rank_hint=1, label="37a1")


@pytest.fixture(scope="session")
def e389():
    return CurveData(0, 1, 1, -2, 0, conductor=389, rank_hint=2, label="389a1")


@pytest.fixture(scope="session")
def phi11(e11):
    return period_map_for(e11, use_cache=False)


@pytest.fixture(scope="session")
def phi37(e37):
    return period_map_for(e37, use_cache=False)


@pytest.fixture(scope="session")
def phi389(e389):
    return period_map_for(e389, use_cache=False)


@pytest.fixture
def registry():
    """Fresh orientation registry so tests never share pins."""
    return OrientationRegistry()


@pytest.fixture
def fixture_curves() -> Path:
    return FIXTURE_CURVES
