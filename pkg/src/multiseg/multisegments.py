"""
Multisegments, their degrees and the dense-orbit recursion
"""
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from src.models import MultisegmentError, MultisegmentFile
from src.quiver.core import GradedDim, Rep, direct_sum_all, linear_quiver, segment_rep


class Segment(NamedTuple):
    """Interval [i, j] of vertices"""
    i: int
    j: int

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


@dataclass(frozen=True)
class Multisegment:
    """
    Finite multiset of segments, stored sorted by (i, j)

    Iterating yields (i, j, multiplicity) triples.
    """
    counts: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        for i, j, mult in self.counts:
            if not 1 <= i <= j:
                raise MultisegmentError(f"Invalid segment [{i},{j}]")
            if mult <= 0:
                raise MultisegmentError(f"Segment [{i},{j}] has nonpositive multiplicity {mult}")
        keys = [(i, j) for i, j, _ in self.counts]
        if keys != sorted(set(keys)):
            raise MultisegmentError("Segments must be sorted and distinct; use Multisegment.of")

    @classmethod
    def of(cls, segments: Union[Dict[Tuple[int, int], int], Iterable[Tuple[int, int]]]) -> "Multisegment":
        """Build from a {(i, j): multiplicity} map or an iterable of segments"""
        merged: Dict[Tuple[int, int], int] = {}
        if isinstance(segments, dict):
            items = segments.items()
        else:
            items = ((tuple(s), 1) for s in segments)
        for (i, j), mult in items:
            merged[(i, j)] = merged.get((i, j), 0) + mult
        return cls(tuple((i, j, m) for (i, j), m in sorted(merged.items()) if m))

    def __iter__(self) -> Iterator[Tuple[int, int, int]]:
        return iter(self.counts)

    def __len__(self) -> int:
        return sum(m for _, _, m in self.counts)

    def __bool__(self) -> bool:
        return bool(self.counts)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        merged = {(i, j): m for i, j, m in self.counts}
        for i, j, m in other.counts:
            merged[(i, j)] = merged.get((i, j), 0) + m
        return Multisegment.of(merged)

    def multiplicity(self, i: int, j: int) -> int:
        return next((m for a, b, m in self.counts if (a, b) == (i, j)), 0)

    def segments(self) -> List[Segment]:
        """Segments repeated by multiplicity"""
        return [Segment(i, j) for i, j, m in self.counts for _ in range(m)]

    @property
    def top(self) -> int:
        """Largest vertex touched, 0 when empty"""
        return max((j for _, j, _ in self.counts), default=0)

    def degree(self, n: Optional[int] = None) -> GradedDim:
        return degree(self, n)

    def __str__(self) -> str:
        return format_multisegment(self)

    def to_json(self) -> List[List[int]]:
        return [[i, j, m] for i, j, m in self.counts]

    @classmethod
    def from_json(cls, data) -> "Multisegment":
        try:
            triples = MultisegmentFile.model_validate(data).root
        except ValidationError as e:
            raise MultisegmentError(f"Malformed multisegment document: {e}")
        return cls.of({(i, j): m for i, j, m in triples})


_TERM = re.compile(r"^\s*(\d*)\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*$")


def parse_multisegment(text: str) -> Multisegment:
    """Read "2[1,1]+[2,3]"; "0" or "" is the empty multisegment"""
    text = text.strip()
    if text in ("", "0"):
        return Multisegment()
    merged: Dict[Tuple[int, int], int] = {}
    for term in text.split("+"):
        match = _TERM.match(term)
        if not match:
            raise MultisegmentError(f"Cannot read multisegment term {term!r} in {text!r}")
        mult = int(match.group(1)) if match.group(1) else 1
        i, j = int(match.group(2)), int(match.group(3))
        merged[(i, j)] = merged.get((i, j), 0) + mult
    return Multisegment.of(merged)


def format_multisegment(m: Multisegment) -> str:
    if not m:
        return "0"
    return "+".join(f"{'' if mult == 1 else mult}[{i},{j}]" for i, j, mult in m)


def degree(m: Multisegment, n: Optional[int] = None) -> GradedDim:
    """d_k = sum of m_ij over segments containing k"""
    n = m.top if n is None else n
    if m.top > n:
        raise MultisegmentError(f"{m} does not fit on {n} vertices")
    d = [0] * n
    for i, j, mult in m:
        for k in range(i, j + 1):
            d[k - 1] += mult
    return tuple(d)


def msm_max(d: Sequence[int]) -> Multisegment:
    """
    Multisegment of the dense orbit in rep(Q_n, d)

    Take a = first nonzero index and b the end of the run of nonzero entries
    starting at a; record [a, b], subtract its indicator and repeat.
    """
    d = list(d)
    if any(x < 0 for x in d):
        raise MultisegmentError(f"Negative entry in {tuple(d)}")
    merged: Dict[Tuple[int, int], int] = {}
    while any(d):
        a = next(k for k, x in enumerate(d) if x)
        b = a
        while b + 1 < len(d) and d[b + 1]:
            b += 1
        merged[(a + 1, b + 1)] = merged.get((a + 1, b + 1), 0) + 1
        for k in range(a, b + 1):
            d[k] -= 1
    return Multisegment.of(merged)


def rep_of(m: Multisegment, n: int) -> Rep:
    """Direct sum of segment modules over Q_n, a point of the orbit O_m"""
    if m.top > n:
        raise MultisegmentError(f"{m} does not fit on {n} vertices")
    return direct_sum_all([segment_rep(s.i, s.j, n) for s in m.segments()], quiver=linear_quiver(n))


def msm_projective(j: int, n: int) -> Multisegment:
    """Sum of the n - j + 1 segments of length j; its component is the projective one"""
    if not 1 <= j <= n:
        raise MultisegmentError(f"Projective length {j} outside 1..{n}")
    return Multisegment.of([(i, i + j - 1) for i in range(1, n - j + 2)])
