"""
Shared data models, enums and errors for the preprojective toolkit
"""
from enum import Enum
from typing import Dict, List, Optional
from pydantic import BaseModel, Field, RootModel, field_validator, validator


class ExportFormat(str, Enum):
    """Graph export formats"""
    DOT = "dot"
    JSON = "json"


class CriticalReading(str, Enum):
    """How the quasi-length condition of a critical pair is read"""
    LITERAL = "literal"
    RELAXED = "relaxed"


class SlopeBand(str, Enum):
    """Piece of the positive roots a slope belongs to"""
    INFINITY = "infinity"
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


class CountingMode(str, Enum):
    """How flag Euler characteristics are evaluated"""
    AUTO = "auto"
    COORDINATE = "coordinate"
    POINT_COUNT = "point_count"


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""


class QuiverError(ToolkitError):
    """Loop, unknown vertex or arrow, or mismatched quivers"""


class ShapeMismatchError(ToolkitError):
    """Arrow matrix shape does not match the dimension vector"""


class RelationError(ToolkitError):
    """A module fails the relations it is required to satisfy"""


class ContentMismatchError(ToolkitError):
    """Word content does not match the dimension vector"""


class MultisegmentError(ToolkitError):
    """Segment with i > j, outside 1..n, or unreadable multisegment text"""


class NotTreeBasisError(ToolkitError):
    """Coordinate flag counting was asked for on a module without a tree basis"""


class PointCountError(ToolkitError):
    """Finite-field flag counts do not come from an integer polynomial"""


class RootError(ToolkitError):
    """Vector outside the positive roots, singular form or empty root class"""


class FixtureError(ToolkitError):
    """Missing, malformed or tampered fixture file"""


class ExportFormatError(ToolkitError):
    """Unknown graph export format"""


# ---------------------------------------------------------------------------
# Serialization models
# ---------------------------------------------------------------------------

class RepFile(BaseModel):
    """JSON form of a module: quiver name, dimension vector, one matrix per arrow"""
    quiver: str
    dims: List[int]
    arrows: Dict[str, List[List[str]]]

    @validator("dims")
    def validate_dims(cls, v):
        if any(d < 0 for d in v):
            raise ValueError("Dimensions must be nonnegative")
        return v


class MultisegmentFile(RootModel[List[List[int]]]):
    """Multisegment as [[i, j, multiplicity], ...]"""

    @field_validator("root")
    @classmethod
    def validate_triples(cls, v):
        if any(len(t) != 3 for t in v):
            raise ValueError("Each entry must be [i, j, multiplicity]")
        return v


class TildeDimFile(RootModel[List[List[int]]]):
    """Covering dimension vector as [[i, level, count], ...]"""

    @field_validator("root")
    @classmethod
    def validate_triples(cls, v):
        if any(len(t) != 3 for t in v):
            raise ValueError("Each entry must be [i, level, count]")
        return v


class WordPolyTerm(BaseModel):
    """One term of a word polynomial"""
    word: List[int]
    coeff: int

    @validator("coeff")
    def validate_coeff(cls, v):
        if v == 0:
            raise ValueError("Zero coefficients are not stored")
        return v


class RootRecord(BaseModel):
    """A vector of the rank-10 lattice"""
    v: List[int] = Field(min_length=10, max_length=10)


class RootClassRecord(BaseModel):
    """A set R^lambda_l(i) with its parameters"""
    slope: str
    rank: int
    ql: int = Field(ge=1)
    roots: List[List[int]]


class GraphDocument(BaseModel):
    """Component graph as exported to JSON"""
    vertices: List[str]
    edges: List[List[str]]
    loops: List[str] = Field(default_factory=list)


class FixtureEntry(BaseModel):
    """One file of the fixture directory"""
    file: str
    source: str
    sha256: str


class FixtureManifest(BaseModel):
    """Index of the transcribed tables"""
    fixtures: List[FixtureEntry]


class RunConfig(BaseModel):
    """Validated command-line run configuration"""
    subcommand: str
    n: Optional[int] = Field(default=None, ge=2, le=5)
    seed: int = Field(ge=1)
    trials: int = Field(ge=1)
    max_numerator: int = Field(default=3, ge=0)
    max_denominator: int = Field(default=3, ge=0)
    max_ql: int = Field(default=7, ge=1)
    slope: Optional[str] = None
    output: Optional[str] = None
    format: ExportFormat = ExportFormat.JSON

    @validator("slope")
    def validate_slope(cls, v):
        if v is None or v in ("inf", "infinity"):
            return v
        parts = v.split("/")
        if len(parts) > 2 or not all(p.strip().lstrip("-").isdigit() for p in parts):
            raise ValueError(f"Slope must be an integer, a fraction b/a or 'inf', got {v!r}")
        return v


