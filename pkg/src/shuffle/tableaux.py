"""
Skew shapes of minors, their standard tableaux and the cell modules
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from src.models import ToolkitError
from src.quiver import linalg
from src.quiver.core import Rep, preprojective_quiver
from src.shuffle.words import WordPoly, check_word

Cell = Tuple[int, int]


@dataclass(frozen=True)
class SkewShape:
    """
    lam / mu with cells (a, b), mu_b < a <= lam_b, for parts b = 1..k

    Cell (a, b) sits at vertex a - b.
    """
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]

    def __post_init__(self):
        lam, mu = tuple(self.lam), tuple(self.mu) + (0,) * (len(self.lam) - len(self.mu))
        if len(mu) != len(lam):
            raise ToolkitError(f"mu {self.mu} is longer than lambda {self.lam}")
        for seq, name in ((lam, "lambda"), (mu, "mu")):
            if any(a < b for a, b in zip(seq, seq[1:])) or any(x < 0 for x in seq):
                raise ToolkitError(f"{name} = {seq} is not a partition")
        if any(m > l for m, l in zip(mu, lam)):
            raise ToolkitError(f"mu = {mu} is not contained in lambda = {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    def cells(self) -> List[Cell]:
        return [(a, b + 1) for b, (l, m) in enumerate(zip(self.lam, self.mu)) for a in range(m + 1, l + 1)]

    def __len__(self) -> int:
        return sum(l - m for l, m in zip(self.lam, self.mu))

    @staticmethod
    def vertex(cell: Cell) -> int:
        a, b = cell
        return a - b


def minor_shape(rows: Sequence[int], cols: Sequence[int]) -> SkewShape:
    """
    lam = (j_k, j_{k-1} + 1, ..., j_1 + k - 1), mu = (i_k, ..., i_1 + k - 1)
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols) or not rows:
        raise ToolkitError(f"Rows {rows} and columns {cols} must be nonempty and of equal length")
    for seq, name in ((rows, "rows"), (cols, "columns")):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ToolkitError(f"{name} {seq} must be strictly increasing")
    k = len(rows)
    lam = tuple(cols[k - 1 - b] + b for b in range(k))
    mu = tuple(rows[k - 1 - b] + b for b in range(k))
    return SkewShape(lam, mu)


def is_zero_minor(rows: Sequence[int], cols: Sequence[int]) -> bool:
    return any(i > j for i, j in zip(rows, cols))


def standard_tableaux(shape: SkewShape) -> Iterator[List[Cell]]:
    """
    Standard fillings, each given as the cells in order of their entries

    Entries increase along a and along b.
    """
    cells = set(shape.cells())
    total = len(cells)
    filled: List[Cell] = []
    used = set()

    def addable(cell: Cell) -> bool:
        a, b = cell
        return all(c not in cells or c in used for c in ((a - 1, b), (a, b - 1)))

    def walk() -> Iterator[List[Cell]]:
        if len(filled) == total:
            yield list(filled)
            return
        for cell in sorted(cells - used):
            if addable(cell):
                used.add(cell)
                filled.append(cell)
                yield from walk()
                filled.pop()
                used.discard(cell)

    yield from walk()


def tableau_word(filling: List[Cell]) -> Tuple[int, ...]:
    """Vertices of the cells read from the largest entry down"""
    return tuple(SkewShape.vertex(c) for c in reversed(filling))


def syt_minor(rows: Sequence[int], cols: Sequence[int], n: int) -> WordPoly:
    """
    Sum of w[tableau word] over the standard tableaux of the minor's skew shape

    Args:
        rows: Row indices i_1 < ... < i_k
        cols: Column indices j_1 < ... < j_k, at most n + 1
        n: Number of letters

    Returns:
        The word polynomial; zero when some i_r > j_r
    """
    if is_zero_minor(rows, cols):
        return WordPoly()
    shape = minor_shape(rows, cols)
    if max(cols) > n + 1 or min(rows) < 1:
        raise ToolkitError(f"Minor rows {tuple(rows)} / columns {tuple(cols)} do not fit n = {n}")
    out: Dict[Tuple[int, ...], int] = {}
    for filling in standard_tableaux(shape):
        word = check_word(tableau_word(filling), n)
        out[word] = out.get(word, 0) + 1
    return WordPoly.from_dict(out)


def laminated_module(rows: Sequence[int], cols: Sequence[int], n: int) -> Rep:
    """
    Cell module of a nonzero minor over Lambda_n

    One basis vector per cell at vertex a - b; a_v sends (a, b) to (a - 1, b)
    and a_v* sends (a, b) to (a, b - 1) whenever the target is a cell.
    """
    if is_zero_minor(rows, cols):
        raise ToolkitError(f"Minor rows {tuple(rows)} / columns {tuple(cols)} vanishes")
    shape = minor_shape(rows, cols)
    quiver = preprojective_quiver(n)
    cells = sorted(shape.cells())
    if any(not 1 <= SkewShape.vertex(c) <= n for c in cells):
        raise ToolkitError(f"Minor rows {tuple(rows)} / columns {tuple(cols)} do not fit n = {n}")
    basis: Dict[int, List[Cell]] = {v: [] for v in quiver.vertices}
    for c in cells:
        basis[SkewShape.vertex(c)].append(c)
    dims = [len(basis[v]) for v in quiver.vertices]

    maps = {}
    for arrow in quiver.arrows:
        m = linalg.zeros(len(basis[arrow.target]), len(basis[arrow.source]))
        for col, (a, b) in enumerate(basis[arrow.source]):
            image = (a, b - 1) if arrow.starred else (a - 1, b)
            if image in basis[arrow.target]:
                m[basis[arrow.target].index(image), col] = linalg.to_fraction(1)
        maps[arrow.id] = m
    return Rep(quiver, dims, maps)
