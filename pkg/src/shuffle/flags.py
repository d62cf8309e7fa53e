"""
Euler characteristics of flag varieties of modules

Two evaluators:
    - coordinate counting for tree-basis modules, where the rescaling torus
      fixes exactly the coordinate composition series;
    - finite-field point counting for integral modules, interpolated over
      several primes and evaluated at q = 1.

Words are read top first: the last letter is the first simple in the socle.
"""
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.config import config
from src.models import ContentMismatchError, CountingMode, NotTreeBasisError, PointCountError, QuiverError
from src.quiver import linalg
from src.quiver.core import Rep, check_relations, direct_sum_all, is_nilpotent, preprojective_quiver
from src.shuffle.words import Word, WordPoly, check_word, content
from src.utils.logger import toolkit_logger


Coordinate = Tuple[int, int]


# ---------------------------------------------------------------------------
# Tree bases
# ---------------------------------------------------------------------------

def coefficient_graph(x: Rep) -> nx.MultiGraph:
    """Basis vectors as nodes, one edge per nonzero matrix entry"""
    g = nx.MultiGraph()
    for v, d in zip(x.quiver.vertices, x.dims):
        g.add_nodes_from((v, k) for k in range(d))
    for arrow in x.quiver.arrows:
        m = x.maps[arrow.id]
        for r in range(m.shape[0]):
            for c in range(m.shape[1]):
                if m[r, c] != 0:
                    g.add_edge((arrow.source, c), (arrow.target, r), arrow=arrow.id)
    return g


def is_tree_basis(x: Rep) -> bool:
    """0/1 partial permutation matrices whose coefficient quiver is a forest"""
    for m in x.maps.values():
        if any(entry not in (0, 1) for entry in m.flat):
            return False
        if any(sum(1 for e in row if e) > 1 for row in m.tolist()):
            return False
        if any(sum(1 for e in col if e) > 1 for col in m.T.tolist()):
            return False
    return nx.is_forest(coefficient_graph(x)) if x.total_dim else True


def _images(x: Rep) -> Dict[Coordinate, FrozenSet[Coordinate]]:
    """Coordinate -> coordinates hit by some arrow"""
    out: Dict[Coordinate, set] = {(v, k): set() for v, d in zip(x.quiver.vertices, x.dims) for k in range(d)}
    for arrow in x.quiver.arrows:
        m = x.maps[arrow.id]
        for r in range(m.shape[0]):
            for c in range(m.shape[1]):
                if m[r, c] != 0:
                    out[(arrow.source, c)].add((arrow.target, r))
    return {k: frozenset(v) for k, v in out.items()}


def _coordinate_expansion(x: Rep) -> Dict[Word, int]:
    images = _images(x)

    @lru_cache(maxsize=None)
    def count(remaining: FrozenSet[Coordinate]) -> Tuple[Tuple[Word, int], ...]:
        if not remaining:
            return (((), 1),)
        out: Counter = Counter()
        for c in remaining:
            if images[c] & remaining:
                continue
            for word, n in count(remaining - {c}):
                out[word + (c[0],)] += n
        return tuple(out.items())

    return dict(count(frozenset(images)))


def _prepare(x: Rep, word: Optional[Sequence[int]] = None) -> Optional[Word]:
    n = len(x.quiver.vertices)
    if word is None:
        return None
    word = check_word(word, n)
    if content(word, n) != x.dims:
        raise ContentMismatchError(f"Word {list(word)} does not have content {x.dims}")
    return word


def flag_count(x: Rep, word: Sequence[int]) -> int:
    """
    Number of coordinate composition series of type word

    Raises:
        NotTreeBasisError: If x has no tree basis
        ContentMismatchError: If content(word) differs from dims of x
    """
    word = _prepare(x, word)
    if not is_tree_basis(x):
        raise NotTreeBasisError(f"{x!r} is not a tree-basis module")
    images = _images(x)

    @lru_cache(maxsize=None)
    def count(remaining: FrozenSet[Coordinate]) -> int:
        if not remaining:
            return 1
        letter = word[len(remaining) - 1]
        return sum(
            count(remaining - {c})
            for c in remaining
            if c[0] == letter and not images[c] & remaining
        )

    return count(frozenset(images))


# ---------------------------------------------------------------------------
# Point counting over F_p
# ---------------------------------------------------------------------------

State = Tuple[Tuple[int, ...], Tuple[Tuple[Tuple[int, ...], ...], ...]]


def _reduce_module(x: Rep, p: int) -> State:
    try:
        mats = tuple(tuple(tuple(row) for row in linalg.to_mod_p(x.maps[a.id], p)) for a in x.quiver.arrows)
    except ValueError as e:
        raise PointCountError(f"Module is not defined modulo {p}: {e}")
    return x.dims, mats


def _point_counts(x: Rep, p: int, word: Optional[Word]) -> Dict[Word, int]:
    quiver = x.quiver
    arrows = quiver.arrows
    position = {v: k for k, v in enumerate(quiver.vertices)}

    @lru_cache(maxsize=None)
    def count(state: State) -> Tuple[Tuple[Word, int], ...]:
        dims, mats = state
        total = sum(dims)
        if total == 0:
            return (((), 1),)
        letters = [word[total - 1]] if word is not None else [v for v in quiver.vertices if dims[position[v]]]
        out: Counter = Counter()
        for v in letters:
            dv = dims[position[v]]
            if dv == 0:
                continue
            rows = [list(row) for a, m in zip(arrows, mats) if a.source == v for row in m]
            kernel = linalg.kernel_mod_p(rows, dv, p)
            for u in linalg.projective_points(kernel, p):
                for w, n in count(_quotient(state, v, u)):
                    out[w + (v,)] += n
        return tuple(out.items())

    def _quotient(state: State, v: int, u: List[int]) -> State:
        dims, mats = state
        k = next(i for i, val in enumerate(u) if val)
        new_mats = []
        for a, m in zip(arrows, mats):
            if a.target == v:
                pivot = m[k]
                m = tuple(
                    tuple((x - u[r] * y) % p for x, y in zip(row, pivot))
                    for r, row in enumerate(m) if r != k
                )
            if a.source == v:
                m = tuple(tuple(val for c, val in enumerate(row) if c != k) for row in m)
            new_mats.append(m)
        new_dims = tuple(d - 1 if position[v] == i else d for i, d in enumerate(dims))
        return new_dims, tuple(new_mats)

    return dict(count(_reduce_module(x, p)))


def flag_dimension_bound(dims: Sequence[int]) -> int:
    """sum d_i (d_i - 1) / 2, the dimension of the graded flag variety"""
    return sum(d * (d - 1) // 2 for d in dims)


def _interpolate(points: List[Tuple[int, int]], at: int) -> Fraction:
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(at - xj, xi - xj)
        total += term
    return total


def _euler_from_counts(counts: List[Tuple[int, int]], degree: int, label: str) -> int:
    """Fit a polynomial of the least degree <= bound through the counts, confirm, evaluate at 1"""
    for k in range(degree + 1):
        fit, rest = counts[:k + 1], counts[k + 1:]
        if not rest:
            break
        if all(_interpolate(fit, p) == n for p, n in rest):
            value = _interpolate(fit, 1)
            if value.denominator != 1:
                raise PointCountError(f"Euler characteristic of {label} is not an integer: {value}")
            return int(value)
    raise PointCountError(f"Point counts of {label} are not polynomial of degree <= {degree}: {counts}")


def _primes_for(degree: int) -> List[int]:
    primes = config.POINT_COUNT_PRIMES
    if len(primes) < degree + 2:
        raise PointCountError(f"Need {degree + 2} primes to confirm a degree {degree} count, have {len(primes)}")
    return primes


def euler_characteristic(x: Rep, word: Sequence[int]) -> int:
    """
    Euler characteristic of the flag variety of type word by counting F_p-points

    Raises:
        PointCountError: If the counts are not those of an integer polynomial
    """
    word = _prepare(x, word)
    degree = flag_dimension_bound(x.dims)
    counts = [(p, _point_counts(x, p, word).get(word, 0)) for p in _primes_for(degree)]
    return _euler_from_counts(counts, degree, f"word {list(word)}")


def _point_count_expansion(x: Rep) -> Dict[Word, int]:
    degree = flag_dimension_bound(x.dims)
    per_prime = [(p, _point_counts(x, p, None)) for p in _primes_for(degree)]
    words = sorted(set().union(*(c.keys() for _, c in per_prime)))
    out = {}
    for w in words:
        value = _euler_from_counts([(p, c.get(w, 0)) for p, c in per_prime], degree, f"word {list(w)}")
        if value:
            out[w] = value
    return out


def delta_expansion(x: Rep, mode: CountingMode = CountingMode.AUTO) -> WordPoly:
    """
    Sum of chi(flags of type i) w[i] over all words i of content dims(x)

    Args:
        x: Nilpotent module
        mode: Coordinate counting (tree-basis modules), point counting, or
            automatic choice between them
    """
    mode = CountingMode(mode)
    if not is_nilpotent(x):
        raise QuiverError(f"{x!r} is not nilpotent")
    tree = is_tree_basis(x)
    if mode == CountingMode.COORDINATE and not tree:
        raise NotTreeBasisError(f"{x!r} is not a tree-basis module")
    if mode == CountingMode.COORDINATE or (mode == CountingMode.AUTO and tree):
        coeffs = _coordinate_expansion(x)
    else:
        toolkit_logger.debug(f"Point counting flags of {x!r}")
        coeffs = _point_count_expansion(x)
    return WordPoly.from_dict(coeffs)


# ---------------------------------------------------------------------------
# String modules
# ---------------------------------------------------------------------------

def string_module(n: int, start: int, steps: Sequence[Tuple[int, bool]]) -> Rep:
    """
    Interval module over Lambda_n along a walk of the vertices

    Args:
        n: Number of vertices
        start: Vertex of the first basis vector
        steps: (direction, forward) per link; direction is -1 or +1 for the
            next vertex, forward says the arrow points to the next basis vector

    Raises:
        QuiverError: If the walk leaves 1..n or the module fails the relations
    """
    quiver = preprojective_quiver(n)
    path = [start]
    for direction, _ in steps:
        if direction not in (-1, 1):
            raise QuiverError(f"Step direction must be -1 or +1, got {direction}")
        path.append(path[-1] + direction)
    if any(not 1 <= v <= n for v in path):
        raise QuiverError(f"Walk {path} leaves the vertices 1..{n}")

    index: List[int] = []
    seen: Dict[int, int] = {}
    for v in path:
        index.append(seen.get(v, 0))
        seen[v] = seen.get(v, 0) + 1
    dims = [seen.get(v, 0) for v in quiver.vertices]

    maps = {a.id: linalg.zeros(dims[a.target - 1], dims[a.source - 1]) for a in quiver.arrows}
    for k, (direction, forward) in enumerate(steps):
        src, dst = (k, k + 1) if forward else (k + 1, k)
        s, t = path[src], path[dst]
        arrow_id = f"a{t}" if t < s else f"a{s}*"
        maps[arrow_id][index[dst], index[src]] = linalg.to_fraction(1)
    x = Rep(quiver, dims, maps)
    if not check_relations(x):
        raise QuiverError(f"String module along {path} fails the preprojective relations")
    return x


def random_string_module(n: int, length: int, rng: np.random.Generator, attempts: int = 200) -> Rep:
    """A random tree-basis string module with the given number of basis vectors"""
    for _ in range(attempts):
        start = int(rng.integers(1, n + 1))
        steps = []
        v = start
        for _ in range(length - 1):
            options = [d for d in (-1, 1) if 1 <= v + d <= n]
            d = int(rng.choice(options))
            steps.append((d, bool(rng.integers(0, 2))))
            v += d
        try:
            x = string_module(n, start, steps)
        except QuiverError:
            continue
        if is_tree_basis(x) and is_nilpotent(x):
            return x
    raise QuiverError(f"No valid string module of length {length} over Lambda_{n} in {attempts} attempts")


def random_tree_module(n: int, total_dim: int, rng: np.random.Generator, max_summand: int = 4) -> Rep:
    """
    Direct sum of random string modules of the given total dimension

    Summands have at most n basis vectors: longer strings over Lambda_n break
    the relations or nilpotency. A length with no string found falls back to
    a shorter one, down to a simple.
    """
    parts = []
    left = total_dim
    while left > 0:
        length = int(rng.integers(1, min(max_summand, left, n) + 1))
        while True:
            try:
                parts.append(random_string_module(n, length, rng))
                break
            except QuiverError:
                if length == 1:
                    raise
                toolkit_logger.debug(f"No string module of length {length} over Lambda_{n}; trying {length - 1}")
                length -= 1
        left -= length
    return direct_sum_all(parts, quiver=preprojective_quiver(n))
