"""
Configuration management for the preprojective toolkit
"""
from pathlib import Path
from typing import List, Optional, Tuple
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, validator


REPO_ROOT = Path(__file__).resolve().parent.parent


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % k for k in range(2, int(p ** 0.5) + 1))


class ToolkitConfig(BaseSettings):
    """Sampling, fixture and reporting settings"""

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=True
    )

    # Generic sampling
    SEED: int = Field(default=20240611, ge=1)
    TRIALS: int = Field(default=5, ge=1)
    ESCALATION_TRIALS: int = Field(default=25, ge=1)
    COORD_BOUND: int = Field(default=10_000, ge=1)

    # Fixtures
    FIXTURE_DIR: Optional[Path] = None

    # Root system
    CRITICAL_READING: str = "literal"
    SLICE_MAX_NUMERATOR: int = Field(default=3, ge=0)
    SLICE_MAX_DENOMINATOR: int = Field(default=3, ge=0)
    SLICE_MAX_QL: int = Field(default=7, ge=1)

    # Finite-field point counting
    POINT_COUNT_PRIMES: List[int] = Field(default=[3, 5, 7, 11, 13, 17, 19, 23])

    # Environment
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"
    LOG_DIR: str = "logs"

    @validator("ESCALATION_TRIALS")
    def validate_escalation(cls, v, values):
        trials = values.get("TRIALS", 1)
        if v < trials:
            raise ValueError("ESCALATION_TRIALS must be at least TRIALS")
        return v

    @validator("CRITICAL_READING")
    def validate_critical_reading(cls, v):
        if v not in ("literal", "relaxed"):
            raise ValueError("CRITICAL_READING must be 'literal' or 'relaxed'")
        return v

    @validator("POINT_COUNT_PRIMES")
    def validate_primes(cls, v):
        if len(v) < 2:
            raise ValueError("At least two primes are needed for point counting")
        if any(not _is_prime(p) for p in v):
            raise ValueError("POINT_COUNT_PRIMES must contain primes only")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError("POINT_COUNT_PRIMES must be strictly increasing")
        return v

    @property
    def fixture_path(self) -> Path:
        """Directory holding the transcribed tables"""
        return self.FIXTURE_DIR if self.FIXTURE_DIR is not None else REPO_ROOT / "fixtures"

    @property
    def sample_range(self) -> Tuple[int, int]:
        """Half-open integer range used for random coordinates"""
        return -self.COORD_BOUND, self.COORD_BOUND + 1


# Singleton instance
config = ToolkitConfig()
