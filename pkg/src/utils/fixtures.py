"""
Loading of the transcribed fixture tables
"""
import hashlib
import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from src.config import config
from src.models import FixtureError, FixtureManifest
from src.utils.logger import toolkit_logger


MANIFEST_NAME = "manifest.json"


def fixture_dir(override: Optional[Path] = None) -> Path:
    return Path(override) if override is not None else config.fixture_path


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


@lru_cache(maxsize=None)
def load_manifest(directory: Path) -> FixtureManifest:
    path = directory / MANIFEST_NAME
    if not path.exists():
        raise FixtureError(f"Fixture manifest not found: {path}")
    try:
        return FixtureManifest(**json.loads(path.read_text()))
    except (json.JSONDecodeError, ValidationError) as e:
        raise FixtureError(f"Malformed fixture manifest {path}: {e}")


def load_fixture(name: str, directory: Optional[Path] = None, verify: bool = True) -> Dict[str, Any]:
    """
    Load a fixture file and check it against the manifest checksum

    Args:
        name: File name relative to the fixture directory (e.g. "rootlist.json")
        directory: Fixture directory, defaults to the configured one
        verify: Whether to compare the SHA-256 digest with the manifest

    Returns:
        Parsed JSON document
    """
    base = fixture_dir(directory)
    path = base / name
    if not path.exists():
        raise FixtureError(f"Fixture not found: {path}")

    if verify:
        manifest = load_manifest(base)
        entry = next((e for e in manifest.fixtures if e.file == name), None)
        if entry is None:
            raise FixtureError(f"Fixture {name} is not listed in {MANIFEST_NAME}")
        digest = file_digest(path)
        if digest != entry.sha256:
            raise FixtureError(f"Checksum mismatch for {name}: expected {entry.sha256}, got {digest}")

    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise FixtureError(f"Malformed fixture {path}: {e}")

    toolkit_logger.debug(f"Loaded fixture {name} from {base}")
    return data
