"""
Dimension vectors on the covering quiver of the n = 5 preprojective algebra

Vertices are pairs (i, j), written i_j, with 1 <= i <= 5 and j an integer level.
Arrows: (i+1)_j -> i_j and i_j -> (i+1)_{j-1}. The value c(i_j) = i + 2j drops
by one along every arrow.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from pydantic import ValidationError

from src.models import MultisegmentError, TildeDimFile
from src.multiseg.multisegments import Multisegment, msm_max, parse_multisegment
from src.quiver.core import GradedDim
from src.utils.fixtures import load_fixture


RANK = 5

Vertex = Tuple[int, int]

# Ten vertices of the fundamental window, in lattice coordinate order
WINDOW: Tuple[Vertex, ...] = (
    (2, 2), (4, 1), (1, 2), (3, 1), (5, 0),
    (2, 1), (4, 0),
    (1, 1), (3, 0), (5, -1),
)
WINDOW_C_RANGE = (3, 6)

# Indecomposable projectives p_1..p_5: (top vertex, support)
_PROJECTIVES: Dict[int, Tuple[Vertex, Tuple[Vertex, ...]]] = {
    1: ((1, 3), ((1, 3), (2, 2), (3, 1), (4, 0), (5, -1))),
    2: ((2, 2), ((2, 2), (1, 2), (3, 1), (2, 1), (4, 0), (3, 0), (5, -1), (4, -1))),
    3: ((3, 2), ((3, 2), (2, 2), (4, 1), (1, 2), (3, 1), (5, 0), (2, 1), (4, 0), (3, 0))),
    4: ((4, 1), ((4, 1), (3, 1), (5, 0), (2, 1), (4, 0), (1, 1), (3, 0), (2, 0))),
    5: ((5, 1), ((5, 1), (4, 1), (3, 1), (2, 1), (1, 1))),
}


def c_value(vertex: Vertex) -> int:
    i, j = vertex
    return i + 2 * j


def covering_arrows(vertices: Iterable[Vertex]) -> List[Tuple[Vertex, Vertex]]:
    """Arrows of the covering quiver with both ends in the given set, as (source, target)"""
    present = set(vertices)
    arrows = []
    for v in sorted(present, key=lambda u: (-c_value(u), u)):
        i, j = v
        for w in ((i - 1, j), (i + 1, j - 1)):
            if w in present:
                arrows.append((v, w))
    return arrows


@dataclass(frozen=True, eq=False)
class TildeDim:
    """
    Finitely supported dimension vector on the covering quiver

    Levels are kept as given; equality and hashing compare shift classes.
    """
    entries: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        merged: Dict[Vertex, int] = {}
        for i, j, count in self.entries:
            if not 1 <= i <= RANK:
                raise MultisegmentError(f"Covering vertex {i}_{j} outside 1..{RANK}")
            if count <= 0:
                raise MultisegmentError(f"Nonpositive count {count} at {i}_{j}")
            merged[(i, j)] = merged.get((i, j), 0) + count
        object.__setattr__(self, "entries", tuple((i, j, c) for (i, j), c in sorted(merged.items())))

    @classmethod
    def from_dict(cls, values: Dict[Vertex, int]) -> "TildeDim":
        negative = {v: c for v, c in values.items() if c < 0}
        if negative:
            raise MultisegmentError(f"Negative entries {negative} in a dimension vector")
        return cls(tuple((i, j, c) for (i, j), c in sorted(values.items()) if c))

    def as_dict(self) -> Dict[Vertex, int]:
        return {(i, j): c for i, j, c in self.entries}

    def shift(self, z: int) -> "TildeDim":
        return TildeDim(tuple((i, j + z, c) for i, j, c in self.entries))

    def canonical(self) -> "TildeDim":
        """Representative whose lowest occupied level is 0"""
        if not self.entries:
            return self
        return self.shift(-min(j for _, j, _ in self.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TildeDim):
            return NotImplemented
        return self.canonical().entries == other.canonical().entries

    def __hash__(self) -> int:
        return hash(self.canonical().entries)

    def same_levels(self, other: "TildeDim") -> bool:
        """Equality without identifying shifts"""
        return self.entries == other.entries

    def __add__(self, other: "TildeDim") -> "TildeDim":
        total = self.as_dict()
        for v, c in other.as_dict().items():
            total[v] = total.get(v, 0) + c
        return TildeDim.from_dict(total)

    def levels(self) -> List[int]:
        return sorted({j for _, j, _ in self.entries})

    def level(self, j: int) -> GradedDim:
        d = [0] * RANK
        for i, lvl, c in self.entries:
            if lvl == j:
                d[i - 1] += c
        return tuple(d)

    def push_down(self) -> GradedDim:
        """Dimension vector of the pushed-down module: the sum over levels"""
        d = [0] * RANK
        for i, _, c in self.entries:
            d[i - 1] += c
        return tuple(d)

    @property
    def total(self) -> int:
        return sum(c for _, _, c in self.entries)

    def to_json(self) -> List[List[int]]:
        return [list(t) for t in self.entries]

    @classmethod
    def from_json(cls, data) -> "TildeDim":
        try:
            triples = TildeDimFile.model_validate(data).root
        except ValidationError as e:
            raise MultisegmentError(f"Malformed covering dimension vector: {e}")
        merged: Dict[Vertex, int] = {}
        for i, j, c in triples:
            merged[(i, j)] = merged.get((i, j), 0) + c
        return cls.from_dict(merged)

    @classmethod
    def from_window(cls, values) -> "TildeDim":
        """Read ten lattice coordinates as a vector on the window vertices"""
        values = [int(v) for v in values]
        if len(values) != len(WINDOW):
            raise MultisegmentError(f"Expected {len(WINDOW)} window coordinates, got {len(values)}")
        return cls.from_dict(dict(zip(WINDOW, values)))

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        ordered = sorted(self.entries, key=lambda t: (-c_value(t[:2]), t[0]))
        return " + ".join(f"{'' if c == 1 else f'{c}*'}{i}_{j}" for i, j, c in ordered)


def projective_vector(i: int, j: int) -> Dict[Vertex, int]:
    """Dimension vector of the projective with top i_j"""
    (ti, tj), support = _PROJECTIVES[i]
    shift = j - tj
    return {(a, b + shift): 1 for a, b in support}


def projective_with_socle(vertex: Vertex) -> Vertex:
    """Top of the projective whose socle is the given vertex"""
    k, level = vertex
    i = RANK + 1 - k
    return i, level + k - 1


def msm_max_tilde(d: TildeDim) -> Multisegment:
    """Level-wise msm_max summed over levels"""
    total = Multisegment()
    for j in d.levels():
        total = total + msm_max(d.level(j))
    return total


@lru_cache(maxsize=1)
def exceptional_vectors() -> Tuple[Tuple[str, TildeDim, Multisegment], ...]:
    """The two shift classes on which psi differs from msm_max_tilde"""
    data = load_fixture("psi_exceptional.json")
    return tuple(
        (item["name"], TildeDim.from_json(item["tilde_dim"]), parse_multisegment(item["multisegment"]))
        for item in data["vectors"]
    )


def psi(d: TildeDim) -> Multisegment:
    """
    Multisegment of the component attached to a Schur dimension vector

    Args:
        d: Schur root of the covering algebra (not verified)

    Returns:
        msm_max_tilde(d), except on the two exceptional shift classes
    """
    for _, vector, value in exceptional_vectors():
        if vector == d:
            return value
    return msm_max_tilde(d)
