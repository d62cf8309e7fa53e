"""
Passage between window roots and covering dimension vectors
"""
from typing import Dict, Sequence

from src.models import MultisegmentError, RootError, SlopeBand
from src.multiseg.covering import WINDOW, WINDOW_C_RANGE, TildeDim, Vertex, c_value, projective_vector, \
    projective_with_socle
from src.roots.classify import require_positive_root, slope_band
from src.roots.lattice import RootVec


def _coord(r: RootVec, vertex: Vertex) -> int:
    return r[WINDOW.index(vertex)]


def _add(target: Dict[Vertex, int], vector: Dict[Vertex, int], scale: int):
    for v, c in vector.items():
        target[v] = target.get(v, 0) + scale * c


def delta_map(r: Sequence[int]) -> TildeDim:
    """
    Dimension vector of the covering module attached to a positive root

    Band by band:
        slope 0:        r - min(0, r_2_2) p2 - min(0, r_4_1) p4
        slope inf:      r - min(0, r_5_-1) p1 - min(0, r_3_0) p3 - min(0, r_1_1) p5
        positive slope: r
        negative slope: r - r_2_2 p2 - r_4_1 p4

    Raises:
        RootError: If r is not a positive root
    """
    r = require_positive_root(r)
    values = dict(zip(WINDOW, r))
    band = slope_band(r)
    p1, p2, p3 = projective_vector(1, 3), projective_vector(2, 2), projective_vector(3, 2)
    p4, p5 = projective_vector(4, 1), projective_vector(5, 1)
    if band == SlopeBand.ZERO:
        _add(values, p2, -min(0, _coord(r, (2, 2))))
        _add(values, p4, -min(0, _coord(r, (4, 1))))
    elif band == SlopeBand.INFINITY:
        _add(values, p1, -min(0, _coord(r, (5, -1))))
        _add(values, p3, -min(0, _coord(r, (3, 0))))
        _add(values, p5, -min(0, _coord(r, (1, 1))))
    elif band == SlopeBand.NEGATIVE:
        _add(values, p2, -_coord(r, (2, 2)))
        _add(values, p4, -_coord(r, (4, 1)))
    try:
        return TildeDim.from_dict(values)
    except MultisegmentError as e:
        raise RootError(f"Covering vector of {list(r)} is not a dimension vector: {e}")


def xi_map(d: TildeDim) -> RootVec:
    """
    Fold a covering dimension vector into the window

    Support above the window is removed with the projective whose top is the
    highest vertex, support below with the projective whose socle is the
    lowest vertex. Projective classes map to zero.
    """
    low, high = WINDOW_C_RANGE
    values = d.as_dict()

    def outside(test):
        return [v for v, c in values.items() if c and test(c_value(v))]

    while True:
        above = outside(lambda c: c > high)
        if not above:
            break
        v = max(above, key=lambda u: (c_value(u), u))
        _add(values, projective_vector(*v), -values[v])
    while True:
        below = outside(lambda c: c < low)
        if not below:
            break
        v = min(below, key=lambda u: (c_value(u), u))
        _add(values, projective_vector(*projective_with_socle(v)), -values[v])
    return tuple(values.get(v, 0) for v in WINDOW)
