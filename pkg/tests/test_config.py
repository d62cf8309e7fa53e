import pytest
from pydantic import ValidationError

from src.config import REPO_ROOT, ToolkitConfig, config


def test_properties():
    assert config.fixture_path in (REPO_ROOT / "fixtures", config.FIXTURE_DIR)
    low, high = config.sample_range
    assert low == -config.COORD_BOUND and high == config.COORD_BOUND + 1
    assert not hasattr(config, "is_production")


@pytest.mark.parametrize("field, value", [
    ("CRITICAL_READING", "loose"),
    ("POINT_COUNT_PRIMES", [3]),
    ("POINT_COUNT_PRIMES", [3, 4, 5]),
])
def test_invalid_settings_are_rejected(field, value):
    with pytest.raises(ValidationError):
        ToolkitConfig(**{field: value})
