"""
Exact linear algebra over the rationals and over prime fields

Matrices are numpy object arrays holding Fraction entries. Ranks are computed
fraction-free on integer rows; kernels come from Gauss-Jordan elimination.
"""
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np


Vector = List[Fraction]
Term = Tuple[Fraction, Optional[np.ndarray], Hashable, Optional[np.ndarray]]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(int(value)) if isinstance(value, (int, np.integer)) else Fraction(value)


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(size: int) -> np.ndarray:
    out = zeros(size, size)
    for i in range(size):
        out[i, i] = Fraction(1)
    return out


def matrix(rows: Sequence[Sequence], shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """
    Build an exact matrix from nested rows

    Args:
        rows: Row-major entries (ints, Fractions or "p/q" strings)
        shape: Expected shape; required when a dimension is zero

    Returns:
        Object array of Fractions
    """
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    out = zeros(*shape)
    if shape[0] and shape[1]:
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise ValueError(f"Entries do not form a {shape[0]}x{shape[1]} matrix")
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                out[i, j] = to_fraction(value)
    return out


def matmul(*factors: np.ndarray) -> np.ndarray:
    """Product of exact matrices, left to right"""
    result = factors[0]
    for factor in factors[1:]:
        if result.shape[1] != factor.shape[0]:
            raise ValueError(f"Cannot multiply {result.shape} by {factor.shape}")
        out = zeros(result.shape[0], factor.shape[1])
        for i in range(result.shape[0]):
            for k in range(result.shape[1]):
                a = result[i, k]
                if a == 0:
                    continue
                for j in range(factor.shape[1]):
                    b = factor[k, j]
                    if b != 0:
                        out[i, j] += a * b
        result = out
    return result


def is_zero(m: np.ndarray) -> bool:
    return all(entry == 0 for entry in m.flat)


def block_diagonal(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    out[:a.shape[0], :a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integer_row(row: Iterable) -> List[int]:
    """Scale a rational row to a primitive integer row"""
    fracs = [to_fraction(x) for x in row]
    denominator = reduce(_lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * denominator) for f in fracs]
    common = reduce(gcd, ints, 0)
    if common > 1:
        ints = [x // common for x in ints]
    return ints


def rank(m) -> int:
    """Rank over the rationals by fraction-free elimination"""
    rows = [integer_row(r) for r in (m.tolist() if isinstance(m, np.ndarray) else m)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            if a == 0:
                continue
            new = [p * x - a * y for x, y in zip(rows[i], rows[r])]
            common = reduce(gcd, new, 0)
            rows[i] = [x // common for x in new] if common > 1 else new
        r += 1
        if r == len(rows):
            break
    return r


def rref(m) -> Tuple[List[Vector], List[int]]:
    """
    Reduced row echelon form over the rationals

    Returns:
        The nonzero reduced rows and the pivot column of each
    """
    rows = [[to_fraction(x) for x in r] for r in (m.tolist() if isinstance(m, np.ndarray) else m)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(m, ncols: Optional[int] = None) -> List[Vector]:
    """
    Basis of the right kernel over the rationals

    Args:
        m: Matrix (array or list of rows)
        ncols: Number of unknowns, needed when m has no rows

    Returns:
        One basis vector per free variable
    """
    if ncols is None:
        ncols = m.shape[1] if isinstance(m, np.ndarray) else len(m[0])
    reduced, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def column_space(m: np.ndarray) -> np.ndarray:
    """Matrix whose columns form a basis of the column space of m"""
    if m.shape[1] == 0 or m.shape[0] == 0:
        return zeros(m.shape[0], 0)
    reduced, pivots = rref(m.T)
    return matrix([list(col) for col in zip(*reduced)], shape=(m.shape[0], len(reduced))) if reduced \
        else zeros(m.shape[0], 0)


class BlockSystem:
    """
    Homogeneous linear system whose unknowns are matrix blocks

    Each equation block reads sum_k c_k * L_k X_k R_k = 0 and contributes one
    scalar row per entry of the result.
    """

    def __init__(self):
        self._blocks: Dict[Hashable, Tuple[int, int, int]] = {}
        self.size = 0
        self._rows: List[Dict[int, Fraction]] = []

    def add_unknown(self, key: Hashable, rows: int, cols: int):
        self._blocks[key] = (self.size, rows, cols)
        self.size += rows * cols

    def block_shape(self, key: Hashable) -> Tuple[int, int]:
        _, r, c = self._blocks[key]
        return r, c

    def add_equation(self, terms: Iterable[Term], shape: Tuple[int, int]):
        p, q = shape
        block = [dict() for _ in range(p * q)]
        for coef, left, key, right in terms:
            offset, r, c = self._blocks[key]
            left = identity(r) if left is None else left
            right = identity(c) if right is None else right
            if left.shape != (p, r) or right.shape != (c, q):
                raise ValueError(f"Term for {key!r} does not produce a {p}x{q} block")
            for i, k in product(range(p), range(r)):
                lv = left[i, k]
                if lv == 0:
                    continue
                for l, j in product(range(c), range(q)):
                    rv = right[l, j]
                    if rv == 0:
                        continue
                    row = block[i * q + j]
                    col = offset + k * c + l
                    row[col] = row.get(col, Fraction(0)) + coef * lv * rv
        self._rows.extend(block)

    def matrix(self) -> List[Vector]:
        dense = []
        for row in self._rows:
            if not any(v != 0 for v in row.values()):
                continue
            vec = [Fraction(0)] * self.size
            for col, v in row.items():
                vec[col] = v
            dense.append(vec)
        return dense

    def rank(self) -> int:
        dense = self.matrix()
        return rank(dense) if dense else 0

    def solution_dim(self) -> int:
        return self.size - self.rank()

    def nullspace(self) -> List[Vector]:
        return nullspace(self.matrix(), ncols=self.size)

    def split(self, vector: Sequence) -> Dict[Hashable, np.ndarray]:
        """Cut a solution vector back into its matrix blocks"""
        out = {}
        for key, (offset, r, c) in self._blocks.items():
            block = zeros(r, c)
            for k in range(r):
                for l in range(c):
                    block[k, l] = to_fraction(vector[offset + k * c + l])
            out[key] = block
        return out


# ---------------------------------------------------------------------------
# Prime fields
# ---------------------------------------------------------------------------

def to_mod_p(m: np.ndarray, p: int) -> List[List[int]]:
    """Reduce an exact matrix modulo p; denominators must be prime to p"""
    out = []
    for row in m.tolist():
        reduced = []
        for x in row:
            f = to_fraction(x)
            if f.denominator % p == 0:
                raise ValueError(f"Entry {f} is not defined modulo {p}")
            reduced.append(f.numerator * pow(f.denominator, -1, p) % p)
        out.append(reduced)
    return out


def kernel_mod_p(rows: List[List[int]], ncols: int, p: int) -> List[List[int]]:
    """Basis of the right kernel of an integer matrix over F_p"""
    rows = [[x % p for x in r] for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        vec = [0] * ncols
        vec[f] = 1
        for row, pc in zip(rows[:r], pivots):
            vec[pc] = -row[f] % p
        basis.append(vec)
    return basis


def projective_points(basis: List[List[int]], p: int) -> Iterator[List[int]]:
    """
    Normalized representatives of the lines in span(basis) over F_p

    Each representative has its first nonzero coordinate equal to 1.
    """
    k = len(basis)
    if k == 0:
        return
    dim = len(basis[0])
    for lead in range(k):
        for tail in product(range(p), repeat=k - lead - 1):
            coeffs = [0] * lead + [1] + list(tail)
            vec = [sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(dim)]
            first = next(x for x in vec if x)
            inv = pow(first, -1, p)
            yield [x * inv % p for x in vec]
