"""
Quivers, relations and modules over exact rationals

Conventions:
    - Q_n has vertices 1..n and arrows a_i: i+1 -> i (1 <= i < n).
    - The double quiver adds a_i*: i -> i+1 for every a_i.
    - A module stores one matrix per arrow with shape dims(target) x dims(source).
    - A path (a_1, ..., a_t) composes right to left: a_t acts first.
"""
import json
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import ValidationError

from src.models import QuiverError, RepFile, ShapeMismatchError, ToolkitError
from src.quiver import linalg
from src.utils.logger import toolkit_logger


GradedDim = Tuple[int, ...]
Path_ = Tuple[str, ...]


@dataclass(frozen=True)
class Arrow:
    """Arrow of a quiver"""
    id: str
    source: int
    target: int
    starred: bool = False


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths of length >= 2"""
    terms: Tuple[Tuple[Fraction, Path_], ...]

    def __post_init__(self):
        if not self.terms:
            raise QuiverError("A relation needs at least one term")
        if any(len(path) < 2 for _, path in self.terms):
            raise QuiverError("Relation paths must have length at least 2")

    def endpoints(self, quiver: "Quiver") -> Tuple[int, int]:
        """Common (source, target) of the relation's paths"""
        ends = {(quiver.arrow(path[-1]).source, quiver.arrow(path[0]).target) for _, path in self.terms}
        if len(ends) != 1:
            raise QuiverError(f"Relation paths do not share endpoints: {sorted(ends)}")
        return ends.pop()

    def __str__(self) -> str:
        parts = []
        for coef, path in self.terms:
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            scalar = "" if mag == 1 else f"{mag}*"
            parts.append(f"{sign} {scalar}{'.'.join(path)}")
        return " ".join(parts).lstrip("+ ")


@dataclass(frozen=True)
class Quiver:
    """Finite quiver, optionally carrying relations"""
    name: str
    vertices: Tuple[int, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[Relation, ...] = ()
    _index: Dict[str, Arrow] = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise QuiverError(f"Arrow {a.id} joins unknown vertices {a.source} -> {a.target}")
            if a.source == a.target:
                raise QuiverError(f"Arrow {a.id} is a loop at vertex {a.source}")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise QuiverError(f"Duplicate arrow ids in quiver {self.name}")
        self._index.clear()
        self._index.update({a.id: a for a in self.arrows})

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._index[arrow_id]
        except KeyError:
            raise QuiverError(f"Quiver {self.name} has no arrow {arrow_id!r}")

    def position(self, vertex: int) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise QuiverError(f"Quiver {self.name} has no vertex {vertex!r}")

    def same_as(self, other: "Quiver") -> bool:
        return self.vertices == other.vertices and self.arrows == other.arrows


def linear_quiver(n: int) -> Quiver:
    """The equioriented quiver Q_n with arrows a_i: i+1 -> i"""
    if n < 1:
        raise QuiverError(f"Q_n needs n >= 1, got {n}")
    arrows = tuple(Arrow(f"a{i}", i + 1, i) for i in range(1, n))
    return Quiver(f"Q{n}", tuple(range(1, n + 1)), arrows)


def double_quiver(q: Quiver) -> Quiver:
    """
    Add a reversed arrow a* for every arrow a

    Args:
        q: Loop-free quiver

    Returns:
        The double quiver, arrows ordered a_1, a_1*, a_2, a_2*, ...
    """
    arrows: List[Arrow] = []
    for a in q.arrows:
        arrows.append(a)
        arrows.append(Arrow(f"{a.id}*", a.target, a.source, starred=True))
    return Quiver(f"{q.name}bar", q.vertices, tuple(arrows))


def gp_relations(q: Quiver) -> List[Relation]:
    """
    Gelfand-Ponomarev relations: r_v = sum_{s(a)=v} a* a - sum_{e(a)=v} a a*

    Vertices without incident arrows give no relation.
    """
    relations = []
    for v in q.vertices:
        terms = []
        for a in q.arrows:
            if a.source == v:
                terms.append((Fraction(1), (f"{a.id}*", a.id)))
        for a in q.arrows:
            if a.target == v:
                terms.append((Fraction(-1), (a.id, f"{a.id}*")))
        if terms:
            relations.append(Relation(tuple(terms)))
    return relations


def preprojective_quiver(n: int) -> Quiver:
    """Double of Q_n with the Gelfand-Ponomarev relations attached"""
    base = linear_quiver(n)
    return replace(double_quiver(base), name=f"Lambda{n}", relations=tuple(gp_relations(base)), _index={})


_NAME_PATTERN = re.compile(r"^(Q|Lambda)(\d+)$")


def quiver_by_name(name: str) -> Quiver:
    """Resolve "Q<n>" or "Lambda<n>" to the corresponding quiver"""
    match = _NAME_PATTERN.match(name)
    if not match:
        raise QuiverError(f"Unknown quiver name {name!r}; expected Q<n> or Lambda<n>")
    kind, n = match.group(1), int(match.group(2))
    return linear_quiver(n) if kind == "Q" else preprojective_quiver(n)


class Rep:
    """
    Finite-dimensional representation of a quiver

    Args:
        quiver: The quiver acted on
        dims: Dimension at each vertex, ordered like quiver.vertices
        maps: Arrow id -> exact matrix of shape dims(target) x dims(source);
            missing arrows act by zero
    """

    def __init__(self, quiver: Quiver, dims: Sequence[int], maps: Optional[Dict[str, np.ndarray]] = None):
        if len(dims) != len(quiver.vertices):
            raise ShapeMismatchError(
                f"Dimension vector {tuple(dims)} does not match the {len(quiver.vertices)} vertices of {quiver.name}"
            )
        if any(d < 0 for d in dims):
            raise ShapeMismatchError(f"Negative dimension in {tuple(dims)}")
        self.quiver = quiver
        self.dims: GradedDim = tuple(int(d) for d in dims)
        maps = dict(maps or {})
        for key in maps:
            quiver.arrow(key)
        self.maps: Dict[str, np.ndarray] = {}
        for a in quiver.arrows:
            shape = (self.dim(a.target), self.dim(a.source))
            m = maps.get(a.id)
            if m is None:
                m = linalg.zeros(*shape)
            elif not isinstance(m, np.ndarray):
                m = linalg.matrix(m, shape=shape)
            if m.shape != shape:
                raise ShapeMismatchError(f"Arrow {a.id} has matrix shape {m.shape}, expected {shape}")
            self.maps[a.id] = m

    def dim(self, vertex: int) -> int:
        return self.dims[self.quiver.position(vertex)]

    def __getitem__(self, arrow_id: str) -> np.ndarray:
        self.quiver.arrow(arrow_id)
        return self.maps[arrow_id]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def offsets(self) -> Dict[int, int]:
        """Start of each vertex block in the total space"""
        out, start = {}, 0
        for v, d in zip(self.quiver.vertices, self.dims):
            out[v] = start
            start += d
        return out

    def with_quiver(self, quiver: Quiver) -> "Rep":
        """Same matrices read over a quiver with the same vertices (missing arrows act by zero)"""
        return Rep(quiver, self.dims, {k: m for k, m in self.maps.items() if k in {a.id for a in quiver.arrows}})

    def __repr__(self) -> str:
        return f"Rep({self.quiver.name}, dims={self.dims})"


def zero_rep(quiver: Quiver) -> Rep:
    return Rep(quiver, [0] * len(quiver.vertices))


def evaluate_path(x: Rep, path: Path_) -> np.ndarray:
    """Matrix of a path, the last arrow acting first"""
    return linalg.matmul(*(x[a] for a in path))


def evaluate_relation(x: Rep, relation: Relation) -> np.ndarray:
    source, target = relation.endpoints(x.quiver)
    total = linalg.zeros(x.dim(target), x.dim(source))
    for coef, path in relation.terms:
        total = total + coef * evaluate_path(x, path)
    return total


def check_relations(x: Rep, relations: Optional[Iterable[Relation]] = None) -> bool:
    """
    Whether every relation evaluates to the zero matrix on x

    Args:
        x: Module to test
        relations: Relations to check, defaults to those carried by x's quiver
    """
    relations = x.quiver.relations if relations is None else relations
    for a in x.quiver.arrows:
        shape = (x.dim(a.target), x.dim(a.source))
        if x.maps[a.id].shape != shape:
            raise ShapeMismatchError(f"Arrow {a.id} has matrix shape {x.maps[a.id].shape}, expected {shape}")
    return all(linalg.is_zero(evaluate_relation(x, r)) for r in relations)


def direct_sum(x: Rep, y: Rep) -> Rep:
    """Block-diagonal sum of two modules over the same quiver"""
    if not x.quiver.same_as(y.quiver):
        raise QuiverError(f"Cannot add modules over {x.quiver.name} and {y.quiver.name}")
    dims = [a + b for a, b in zip(x.dims, y.dims)]
    maps = {a.id: linalg.block_diagonal(x.maps[a.id], y.maps[a.id]) for a in x.quiver.arrows}
    return Rep(x.quiver, dims, maps)


def direct_sum_all(modules: Sequence[Rep], quiver: Optional[Quiver] = None) -> Rep:
    if not modules:
        if quiver is None:
            raise QuiverError("An empty direct sum needs an explicit quiver")
        return zero_rep(quiver)
    total = modules[0]
    for m in modules[1:]:
        total = direct_sum(total, m)
    return total


def segment_rep(i: int, j: int, n: int) -> Rep:
    """
    Indecomposable Q_n-module with socle S_i and top S_j

    Args:
        i: Lower end of the segment
        j: Upper end of the segment
        n: Number of vertices
    """
    if not 1 <= i <= j <= n:
        raise QuiverError(f"Segment [{i},{j}] is not inside 1..{n} with i <= j")
    q = linear_quiver(n)
    dims = [1 if i <= v <= j else 0 for v in q.vertices]
    maps = {f"a{k}": linalg.identity(1) for k in range(i, j)}
    return Rep(q, dims, maps)


def _total_operator(x: Rep, arrow: Arrow) -> np.ndarray:
    size = x.total_dim
    offsets = x.offsets()
    out = linalg.zeros(size, size)
    m = x.maps[arrow.id]
    r0, c0 = offsets[arrow.target], offsets[arrow.source]
    out[r0:r0 + m.shape[0], c0:c0 + m.shape[1]] = m
    return out


def is_nilpotent(x: Rep) -> bool:
    """
    Whether every path of length > dim x acts by zero

    The images W_{k+1} = sum_a a(W_k) start from the whole space; all paths of
    length k land in W_k and span it.
    """
    size = x.total_dim
    if size == 0:
        return True
    operators = [_total_operator(x, a) for a in x.quiver.arrows]
    image = linalg.identity(size)
    for _ in range(size + 1):
        if image.shape[1] == 0:
            return True
        pieces = [linalg.matmul(op, image) for op in operators]
        stacked = np.concatenate(pieces, axis=1) if pieces else linalg.zeros(size, 0)
        nxt = linalg.column_space(stacked)
        if nxt.shape[1] == image.shape[1]:
            return False
        image = nxt
    return image.shape[1] == 0


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _format_entry(value) -> str:
    f = linalg.to_fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def rep_to_file(x: Rep) -> RepFile:
    return RepFile(
        quiver=x.quiver.name,
        dims=list(x.dims),
        arrows={k: [[_format_entry(v) for v in row] for row in m.tolist()] for k, m in x.maps.items()},
    )


def rep_from_file(data: Union[RepFile, dict]) -> Rep:
    """Build a module from its JSON form"""
    try:
        doc = data if isinstance(data, RepFile) else RepFile(**data)
    except ValidationError as e:
        raise ShapeMismatchError(f"Malformed module document: {e}")
    quiver = quiver_by_name(doc.quiver)
    maps = {}
    for arrow_id, rows in doc.arrows.items():
        a = quiver.arrow(arrow_id)
        shape = (doc.dims[quiver.position(a.target)], doc.dims[quiver.position(a.source)])
        try:
            maps[arrow_id] = linalg.matrix(rows, shape=shape)
        except (ValueError, ZeroDivisionError) as e:
            raise ShapeMismatchError(f"Arrow {arrow_id}: {e}")
    return Rep(quiver, doc.dims, maps)


def load_rep(path: Union[str, Path]) -> Rep:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ToolkitError(f"Cannot read module file {path}: {e}")
    x = rep_from_file(data)
    toolkit_logger.debug(f"Loaded module {x!r} from {path}")
    return x


def save_rep(x: Rep, path: Union[str, Path]):
    Path(path).write_text(rep_to_file(x).model_dump_json(indent=2))
