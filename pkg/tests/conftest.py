"""
Shared fixtures for the toolkit test suite
"""
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from src.config import REPO_ROOT, config
from src.quiver.core import load_rep, preprojective_quiver
from src.roots.lattice import window_lattice
from src.shuffle.words import WordPoly
from src.utils.fixtures import load_fixture


settings.register_profile(
    "toolkit",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("toolkit")


FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(autouse=True)
def _log_dir(tmp_path, monkeypatch):
    monkeypatch.setattr(config, "LOG_DIR", str(tmp_path / "logs"))


@pytest.fixture
def fixture_path() -> Path:
    return FIXTURES


@pytest.fixture(params=[2, 3, 4, 5])
def lambda_quiver(request):
    return preprojective_quiver(request.param)


@pytest.fixture
def ex5():
    return load_rep(FIXTURES / "modules" / "ex5.json")


@pytest.fixture
def m31():
    return load_rep(FIXTURES / "modules" / "m31.json")


@pytest.fixture
def m32():
    return load_rep(FIXTURES / "modules" / "m32.json")


@pytest.fixture
def printed_polynomial() -> WordPoly:
    return WordPoly.from_json(load_fixture("m31_polynomial.json")["terms"])


@pytest.fixture
def lattice():
    return window_lattice()
