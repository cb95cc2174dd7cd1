"""Pytest configuration for integration tests."""

import pytest


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "integration: integration tests (disk caches, full CLI runs)"
    )


@pytest.fixture
def cache_dir(isolated_dirs):
    """The STICKEL_CACHE directory set up by the root conftest."""
    path = isolated_dirs / "cache"
    path.mkdir(parents=True, exist_ok=True)
    return path
