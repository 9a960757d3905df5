"""
Shared pytest configuration
Lagroot - Certified Polynomial Root Finding
"""

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

settings.register_profile(
    "lagroot",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lagroot")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow acceptance tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance test (enable with --runslow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def sqrt2_poly():
    from src.polynomials import parse_poly
    return parse_poly("x^2 - 2")


@pytest.fixture
def fresh_config(tmp_path, monkeypatch):
    """ConfigManager reading from an empty temporary directory."""
    from src.utils.config import reset_config
    monkeypatch.setenv("LAGROOT_CONFIG_DIR", str(tmp_path))
    reset_config()
    yield tmp_path
    monkeypatch.delenv("LAGROOT_CONFIG_DIR", raising=False)
    reset_config()
