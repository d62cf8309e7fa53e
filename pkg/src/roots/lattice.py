"""
Ringel form, Coxeter matrix and radical of the window algebra

Lattice coordinates follow the window order 2_2, 4_1, 1_2, 3_1, 5_0, 2_1, 4_0,
1_1, 3_0, 5_-1 (rows of the printed diamond, top to bottom).
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import sympy

from src.models import RootError
from src.multiseg.covering import WINDOW, Vertex, covering_arrows
from src.utils.logger import toolkit_logger


RootVec = Tuple[int, ...]

H0: RootVec = (0, 0, 1, 2, 1, 3, 3, 1, 2, 1)
H_INF: RootVec = (1, 1, 1, 2, 1, 1, 1, 0, 0, 0)

# Coordinates dropped by the E8 quotient and by the subalgebra used for base roots
QUOTIENT_DROP = (WINDOW.index((4, 1)), WINDOW.index((1, 1)))


def window_arrows() -> List[Tuple[Vertex, Vertex]]:
    return covering_arrows(WINDOW)


def window_relations() -> List[Tuple[Vertex, Vertex]]:
    """One relation from i_j to i_{j-1} whenever both lie in the window"""
    return [(v, (v[0], v[1] - 1)) for v in WINDOW if (v[0], v[1] - 1) in WINDOW]


def ringel_form(
    vertices: Sequence[Vertex],
    arrows: Iterable[Tuple[Vertex, Vertex]],
    relations: Iterable[Tuple[Vertex, Vertex]],
) -> np.ndarray:
    """
    Matrix E of <d, e> = sum d_i e_i - sum_{arrows i -> k} d_i e_k + sum_{relations i ~> k} d_i e_k

    Args:
        vertices: Coordinate order
        arrows: (source, target) pairs
        relations: (source, target) pairs, one per minimal relation

    Returns:
        Integer matrix with <d, e> = d^T E e
    """
    index = {v: k for k, v in enumerate(vertices)}
    e = np.eye(len(vertices), dtype=np.int64)
    for s, t in arrows:
        e[index[s], index[t]] -= 1
    for s, t in relations:
        e[index[s], index[t]] += 1
    return e


def coxeter(e: np.ndarray) -> np.ndarray:
    """Phi = -E^{-1} E^T, exact"""
    m = sympy.Matrix(e.tolist())
    if m.det() == 0:
        raise RootError("Ringel form is singular")
    phi = -m.inv() * m.T
    if any(not x.is_integer for x in phi):
        raise RootError("Coxeter matrix is not integral")
    return np.array(phi.tolist(), dtype=np.int64)


def matrix_order(m: np.ndarray, limit: int = 120) -> int:
    """Least k >= 1 with m^k = I"""
    ident = np.eye(m.shape[0], dtype=np.int64)
    power = m.copy()
    for k in range(1, limit + 1):
        if np.array_equal(power, ident):
            return k
        power = power @ m
    raise RootError(f"Matrix has no finite order up to {limit}")


@dataclass(frozen=True, eq=False)
class BilinearLattice:
    """
    (Z^n, <-, ->, Phi) with the radical generators h0 and h_inf
    """
    e: np.ndarray
    phi: np.ndarray
    h0: RootVec
    h_inf: RootVec

    def form(self, d: Sequence[int], e: Sequence[int]) -> int:
        return int(np.asarray(d, dtype=np.int64) @ self.e @ np.asarray(e, dtype=np.int64))

    def q(self, d: Sequence[int]) -> int:
        return self.form(d, d)

    def apply(self, d: Sequence[int], power: int = 1) -> RootVec:
        v = np.asarray(d, dtype=np.int64)
        if power >= 0:
            for _ in range(power):
                v = self.phi @ v
        else:
            inverse = self.phi_inverse
            for _ in range(-power):
                v = inverse @ v
        return tuple(int(x) for x in v)

    @cached_property
    def phi_inverse(self) -> np.ndarray:
        return np.linalg.matrix_power(self.phi, matrix_order(self.phi) - 1)

    def h_ab(self, a: int, b: int) -> RootVec:
        return tuple(a * x + b * y for x, y in zip(self.h0, self.h_inf))

    def pairings(self, d: Sequence[int]) -> Tuple[int, int]:
        """(<h0, d>, <d, h_inf>)"""
        return self.form(self.h0, d), self.form(d, self.h_inf)


@lru_cache(maxsize=1)
def window_lattice() -> BilinearLattice:
    e = ringel_form(WINDOW, window_arrows(), window_relations())
    phi = coxeter(e)
    lattice = BilinearLattice(e=e, phi=phi, h0=H0, h_inf=H_INF)
    toolkit_logger.debug(
        f"Window lattice: <h0,h_inf>={lattice.form(H0, H_INF)}, Phi order {matrix_order(phi)}"
    )
    return lattice


def quadratic_form(d: Sequence[int]) -> int:
    return window_lattice().q(d)


def e8_quotient(d: Sequence[int]) -> Tuple[int, ...]:
    """Image in Z^10 / rad(q): subtract the radical part, drop 4_1 and 1_1"""
    lat = window_lattice()
    a = d[QUOTIENT_DROP[1]]
    b = d[QUOTIENT_DROP[0]]
    reduced = [x - a * h - b * k for x, h, k in zip(d, lat.h0, lat.h_inf)]
    return tuple(x for k, x in enumerate(reduced) if k not in QUOTIENT_DROP)


def e8_gram() -> np.ndarray:
    """Symmetrized form on the quotient coordinates"""
    keep = [k for k in range(len(WINDOW)) if k not in QUOTIENT_DROP]
    sub = window_lattice().e[np.ix_(keep, keep)]
    return sub + sub.T


def e8_norm(v: Sequence[int]) -> int:
    x = np.asarray(v, dtype=np.int64)
    return int(x @ e8_gram() @ x)
