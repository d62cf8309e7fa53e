"""
Edges of the component graph between Schur roots
"""
from typing import Optional, Sequence

from src.config import config
from src.models import CriticalReading
from src.roots.classify import classify
from src.roots.lattice import window_lattice


def _reading(reading: Optional[CriticalReading]) -> CriticalReading:
    return CriticalReading(config.CRITICAL_READING) if reading is None else CriticalReading(reading)


def critical(d: Sequence[int], e: Sequence[int], reading: Optional[CriticalReading] = None) -> bool:
    """
    Both roots in the rank-6 tube of one slope, both pairings zero, ql(d) + ql(e) >= 7

    The literal reading also asks for equal quasi-lengths; the relaxed one does not.
    """
    lat = window_lattice()
    if lat.form(d, e) != 0 or lat.form(e, d) != 0:
        return False
    cd, ce = classify(d), classify(e)
    if cd.rank != 6 or ce.rank != 6 or cd.slope != ce.slope:
        return False
    if _reading(reading) == CriticalReading.LITERAL and cd.ql != ce.ql:
        return False
    return cd.ql + ce.ql >= 7


def edge(d: Sequence[int], e: Sequence[int], reading: Optional[CriticalReading] = None) -> bool:
    """
    Whether generic extensions between the components of d and e vanish both ways

    Args:
        d: Schur root
        e: Schur root
        reading: Critical-pair reading, defaults to config.CRITICAL_READING

    Returns:
        True iff both pairings are nonnegative and either the pair is not
        critical or <d, Phi^i e> < 0 for the first i >= 1 where it is nonzero.
        A critical pair with <d, Phi^i e> = 0 for every i has no edge.
    """
    lat = window_lattice()
    if lat.form(d, e) < 0 or lat.form(e, d) < 0:
        return False
    if not critical(d, e, reading):
        return True
    current = tuple(e)
    for _ in range(6):
        current = lat.apply(current)
        value = lat.form(d, current)
        if value != 0:
            return value < 0
    return False
