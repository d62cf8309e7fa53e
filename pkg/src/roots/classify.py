"""
Positive roots of the window lattice: slope, rank, quasi-length and Schur roots
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import sympy

from pydantic import ValidationError

from src.models import FixtureError, RootClassRecord, RootError, RootRecord, SlopeBand
from src.roots.lattice import QUOTIENT_DROP, RootVec, coxeter, matrix_order, window_lattice
from src.utils.fixtures import load_fixture
from src.utils.logger import toolkit_logger


Slope = Union[Fraction, float]
INFINITY = math.inf
RANKS = (1, 2, 3, 6)
TUBE_RANKS = (2, 3, 6)

ClassKey = Tuple[int, int, int]


def parse_slope(text: Union[str, int, Fraction, float]) -> Slope:
    """Read "b/a", an integer, or "inf" """
    if isinstance(text, (Fraction, int)):
        return Fraction(text)
    if isinstance(text, float):
        if math.isinf(text) and text > 0:
            return INFINITY
        raise RootError(f"Slopes must be rational or infinity, got {text}")
    cleaned = text.strip().lower()
    if cleaned in ("inf", "infinity", "∞"):
        return INFINITY
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError):
        raise RootError(f"Cannot read slope {text!r}")


def format_slope(value: Slope) -> str:
    if value == INFINITY:
        return "inf"
    return str(Fraction(value))


@dataclass(frozen=True)
class RootClass:
    """Slope, Coxeter period and quasi-length of a positive root"""
    slope: Slope
    rank: int
    ql: int

    def __post_init__(self):
        if self.rank not in RANKS:
            raise RootError(f"Rank {self.rank} is not one of {RANKS}")
        if self.ql < 1:
            raise RootError(f"Quasi-length must be positive, got {self.ql}")
        if self.rank > 1 and self.ql % self.rank == 0:
            raise RootError(f"Rank {self.rank} divides quasi-length {self.ql}: the class is empty")

    def __str__(self) -> str:
        return f"(slope={format_slope(self.slope)}, rank={self.rank}, ql={self.ql})"


def _vec(d: Sequence[int]) -> RootVec:
    v = tuple(int(x) for x in d)
    if len(v) != 10:
        raise RootError(f"Root vectors have 10 coordinates, got {len(v)}")
    return v


def is_root(d: Sequence[int]) -> bool:
    d = _vec(d)
    return any(d) and window_lattice().q(d) in (0, 1)


def in_positive_roots(d: Sequence[int]) -> bool:
    """q(d) in {0, 1}, d != 0, and <d,h_inf> > 0 or (<d,h_inf> = 0 and <h0,d> > 0)"""
    d = _vec(d)
    if not is_root(d):
        return False
    left, right = window_lattice().pairings(d)
    return right > 0 or (right == 0 and left > 0)


def require_positive_root(d: Sequence[int]) -> RootVec:
    d = _vec(d)
    if not in_positive_roots(d):
        raise RootError(f"{list(d)} is not a positive root")
    return d


def slope(d: Sequence[int]) -> Slope:
    """<h0,d> / <d,h_inf>, infinity when the denominator vanishes"""
    left, right = window_lattice().pairings(_vec(d))
    if left == 0 and right == 0:
        raise RootError(f"{list(d)} pairs to zero with both radical generators; no slope")
    return INFINITY if right == 0 else Fraction(left, right)


def slope_band(d: Sequence[int]) -> SlopeBand:
    value = slope(d)
    if value == INFINITY:
        return SlopeBand.INFINITY
    if value == 0:
        return SlopeBand.ZERO
    return SlopeBand.POSITIVE if value > 0 else SlopeBand.NEGATIVE


def orbit(d: Sequence[int]) -> List[RootVec]:
    """d, Phi d, ..., up to the Coxeter period"""
    lat = window_lattice()
    start = _vec(d)
    out = [start]
    current = lat.apply(start)
    while current != start:
        out.append(current)
        current = lat.apply(current)
    return out


def rank(d: Sequence[int]) -> int:
    return len(orbit(d))


def h_of(d: Sequence[int]) -> RootVec:
    """Sum of Phi^i d over one period"""
    return tuple(int(x) for x in np.sum(np.array(orbit(d), dtype=np.int64), axis=0))


def radical_coordinates(h: Sequence[int]) -> Tuple[int, int]:
    """(a, b) with h = a h0 + b h_inf"""
    lat = window_lattice()
    a6, b6 = lat.form(h, lat.h_inf), lat.form(lat.h0, h)
    if a6 % 6 or b6 % 6 or tuple(h) != lat.h_ab(a6 // 6, b6 // 6):
        raise RootError(f"{list(h)} is not in the radical")
    return a6 // 6, b6 // 6


def quasi_length(d: Sequence[int]) -> int:
    a, b = radical_coordinates(h_of(d))
    return math.gcd(a, b)


def iso(d: Sequence[int]) -> RootVec:
    h = h_of(d)
    ql = quasi_length(d)
    return tuple(x // ql for x in h)


def classify(d: Sequence[int]) -> RootClass:
    """
    Slope, rank and quasi-length of a positive root

    Raises:
        RootError: If d is not in the positive roots
    """
    d = require_positive_root(d)
    return RootClass(slope=slope(d), rank=rank(d), ql=quasi_length(d))


def class_key(d: Sequence[int]) -> ClassKey:
    """(rank, a, b) with h(d) = a h0 + b h_inf"""
    a, b = radical_coordinates(h_of(d))
    return rank(d), a, b


def is_schur(d: Sequence[int]) -> bool:
    """gcd(<h0,d>, <d,h_inf>) <= 6, equivalently ql <= rank"""
    c = classify(d)
    return c.ql <= c.rank


# ---------------------------------------------------------------------------
# The 240 base roots
# ---------------------------------------------------------------------------

def _embed(v: Sequence[int]) -> RootVec:
    out, it = [], iter(v)
    for k in range(10):
        out.append(0 if k in QUOTIENT_DROP else int(next(it)))
    return tuple(out)


def _reduce(r: RootVec) -> RootVec:
    """Subtract a' h0 + b' h_inf so that both pairings land in 0..5"""
    lat = window_lattice()
    left, right = lat.pairings(r)
    a1 = right // 6
    b1 = left // 6
    return tuple(x - a1 * h - b1 * k for x, h, k in zip(r, lat.h0, lat.h_inf))


def generate_base_roots() -> Dict[ClassKey, Tuple[RootVec, ...]]:
    """
    Orbit the projectives of the subalgebra without 4_1 and 1_1 under its
    Coxeter matrix (order 30), embed, and reduce into the base window.
    """
    lat = window_lattice()
    keep = [k for k in range(10) if k not in QUOTIENT_DROP]
    sub = lat.e[np.ix_(keep, keep)]
    inverse = sympy.Matrix(sub.tolist()).inv()
    projectives = [tuple(int(x) for x in inverse.row(k)) for k in range(len(keep))]
    if any(x < 0 for p in projectives for x in p):
        raise RootError("Subalgebra projective with a negative entry")
    phi = coxeter(sub)
    order = matrix_order(phi)
    if order != 30:
        raise RootError(f"Subalgebra Coxeter matrix has order {order}, expected 30")

    found = set()
    for p in projectives:
        v = np.array(p, dtype=np.int64)
        for _ in range(order):
            found.add(_reduce(_embed(v)))
            v = phi @ v
    classes: Dict[ClassKey, List[RootVec]] = {}
    for r in found:
        classes.setdefault(class_key(r), []).append(r)
    return {k: tuple(sorted(v)) for k, v in sorted(classes.items())}


def fixture_base_roots() -> Dict[ClassKey, Tuple[RootVec, ...]]:
    data = load_fixture("rootlist.json")
    classes = {}
    for item in data["classes"]:
        key = (int(item["rank"]), int(item["m"]), int(item["n"]))
        roots = tuple(sorted(_vec(v) for v in item["roots"]))
        if len(roots) != key[0]:
            raise FixtureError(f"Class {key} lists {len(roots)} roots, expected {key[0]}")
        classes[key] = roots
    return dict(sorted(classes.items()))


@lru_cache(maxsize=1)
def base_roots() -> Dict[ClassKey, Tuple[RootVec, ...]]:
    """
    The 240 base roots keyed by (rank, m, n), where h(r) = m h0 + n h_inf

    Generated and compared with the transcribed table; on any disagreement
    the table is used and a warning logged.
    """
    table = fixture_base_roots()
    try:
        generated = generate_base_roots()
    except RootError as e:
        toolkit_logger.warning(f"Base root generation failed ({e}); using the transcribed table")
        return table
    if generated != table:
        missing = sum(1 for k in table if generated.get(k) != table[k])
        toolkit_logger.warning(f"Generated base roots differ from the table in {missing} classes; using the table")
        return table
    toolkit_logger.info(f"Generated {sum(len(v) for v in generated.values())} base roots, table agrees",
                        extra={'verification': True})
    return generated


def all_base_roots() -> List[RootVec]:
    return [r for roots in base_roots().values() for r in roots]


# ---------------------------------------------------------------------------
# Root classes
# ---------------------------------------------------------------------------

def _radical_pair(value: Slope, ql: int) -> Tuple[int, int]:
    """(a, b) with b/a = value and gcd(a, b) = ql"""
    if value == INFINITY:
        return 0, ql
    value = Fraction(value)
    return ql * value.denominator, ql * value.numerator


def construct_class(value: Slope, ql: int, i: int) -> List[RootVec]:
    """
    All roots of slope value, rank i and quasi-length ql

    Args:
        value: Slope b/a, or INFINITY
        ql: Quasi-length
        i: Rank, one of 1, 2, 3, 6

    Raises:
        RootError: If i divides ql (i > 1) or i is not a rank
    """
    if i not in RANKS:
        raise RootError(f"Rank {i} is not one of {RANKS}")
    if ql < 1:
        raise RootError(f"Quasi-length must be positive, got {ql}")
    a, b = _radical_pair(value, ql)
    lat = window_lattice()
    if i == 1:
        return [lat.h_ab(a, b)]
    if ql % i == 0:
        raise RootError(f"Rank {i} divides quasi-length {ql}: no roots")
    a1, a2 = divmod(a, i)
    b1, b2 = divmod(b, i)
    shift = lat.h_ab(a1, b1)
    base = base_roots().get((i, a2, b2))
    if base is None:
        raise RootError(f"No base class R_[{a2},{b2}]({i})")
    return sorted(tuple(x + y for x, y in zip(shift, r)) for r in base)


def enumerate_class_roots(value: Slope, max_ql: int) -> Dict[RootClass, List[RootVec]]:
    """Every nonempty class of the given slope with quasi-length up to max_ql"""
    value = parse_slope(value)
    out = {}
    for i in RANKS:
        for ql in range(1, max_ql + 1):
            if i > 1 and ql % i == 0:
                continue
            out[RootClass(value, i, ql)] = construct_class(value, ql, i)
    return out


def schur_classes_of_slope(value: Slope, max_ql: int = 6) -> Dict[RootClass, List[RootVec]]:
    """Nonempty classes of one slope with ql <= rank, capped by max_ql"""
    value = parse_slope(value)
    out = {}
    for i in RANKS:
        for ql in range(1, min(i, max_ql) + 1):
            if i > 1 and ql % i == 0:
                continue
            out[RootClass(value, i, ql)] = construct_class(value, ql, i)
    return out


def schur_roots_of_slope(value: Slope, max_ql: int = 6) -> List[RootVec]:
    """Schur roots of one slope (ql <= rank), capped by max_ql"""
    return sorted({r for roots in schur_classes_of_slope(value, max_ql).values() for r in roots})


def slice_slopes(max_numerator: int, max_denominator: int) -> List[Slope]:
    """Slopes b/a with |b| <= max_numerator, 1 <= a <= max_denominator, then infinity"""
    values = {Fraction(b, a) for a in range(1, max_denominator + 1)
              for b in range(-max_numerator, max_numerator + 1)}
    return sorted(values) + [INFINITY]


def slice_roots(max_numerator: int, max_denominator: int, max_ql: int,
                slopes: Union[None, Sequence[Slope]] = None) -> List[RootVec]:
    """Schur roots of the slice, ordered by slope then vector"""
    slopes = slice_slopes(max_numerator, max_denominator) if slopes is None else slopes
    out = []
    for value in slopes:
        out.extend(schur_roots_of_slope(value, max_ql))
    return out


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def root_to_json(d: Sequence[int]) -> dict:
    return RootRecord(v=list(_vec(d))).model_dump()


def root_from_json(data: dict) -> RootVec:
    try:
        return tuple(RootRecord.model_validate(data).v)
    except ValidationError as e:
        raise RootError(f"Malformed root record: {e}")


def class_to_json(root_class: RootClass, roots: Sequence[Sequence[int]]) -> dict:
    """{"slope": "b/a" or "inf", "rank": i, "ql": l, "roots": [...]}"""
    return RootClassRecord(
        slope=format_slope(root_class.slope),
        rank=root_class.rank,
        ql=root_class.ql,
        roots=[list(_vec(r)) for r in roots],
    ).model_dump()


def class_from_json(data: dict) -> Tuple[RootClass, List[RootVec]]:
    """
    Read a class record and check that every listed root belongs to it

    Raises:
        RootError: If the record is malformed or a root classifies elsewhere
    """
    try:
        record = RootClassRecord.model_validate(data)
    except ValidationError as e:
        raise RootError(f"Malformed root class record: {e}")
    root_class = RootClass(parse_slope(record.slope), record.rank, record.ql)
    roots = [_vec(r) for r in record.roots]
    for r in roots:
        found = classify(r)
        if found != root_class:
            raise RootError(f"{list(r)} is in class {found}, not {root_class}")
    return root_class, roots


def base_root_classes() -> Dict[RootClass, List[RootVec]]:
    """The base roots grouped by their class"""
    return {classify(roots[0]): list(roots) for roots in base_roots().values()}
