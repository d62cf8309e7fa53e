"""
Hom and Ext^1 dimensions over quivers with relations
"""
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Sequence, Tuple

from src.models import QuiverError, RelationError
from src.quiver import linalg
from src.quiver.core import Quiver, Rep, check_relations, evaluate_path
from src.utils.logger import toolkit_logger

if TYPE_CHECKING:
    from src.multiseg.multisegments import Multisegment


def _require_same_quiver(x: Rep, y: Rep):
    if not x.quiver.same_as(y.quiver):
        raise QuiverError(f"Modules live over different quivers: {x.quiver.name} and {y.quiver.name}")


def _hom_system(x: Rep, y: Rep) -> linalg.BlockSystem:
    """Intertwiner equations phi_{e(a)} x_a - y_a phi_{s(a)} = 0"""
    system = linalg.BlockSystem()
    for v in x.quiver.vertices:
        system.add_unknown(("phi", v), y.dim(v), x.dim(v))
    for a in x.quiver.arrows:
        system.add_equation(
            [
                (Fraction(1), None, ("phi", a.target), x[a.id]),
                (Fraction(-1), y[a.id], ("phi", a.source), None),
            ],
            shape=(y.dim(a.target), x.dim(a.source)),
        )
    return system


def hom_dim(x: Rep, y: Rep) -> int:
    """
    Dimension of Hom(x, y) as the kernel of the intertwiner system

    Args:
        x: Source module
        y: Target module over the same quiver

    Returns:
        Exact dimension over the rationals
    """
    _require_same_quiver(x, y)
    return _hom_system(x, y).solution_dim()


def _relation_system(x: Rep, y: Rep) -> linalg.BlockSystem:
    """
    Linearized relations: psi -> sum_k y_{a_1}..y_{a_{k-1}} psi_{a_k} x_{a_{k+1}}..x_{a_t}
    """
    q = x.quiver
    system = linalg.BlockSystem()
    for a in q.arrows:
        system.add_unknown(("psi", a.id), y.dim(a.target), x.dim(a.source))
    for relation in q.relations:
        source, target = relation.endpoints(q)
        terms = []
        for coef, path in relation.terms:
            for k, arrow_id in enumerate(path):
                left = evaluate_path(y, path[:k]) if k > 0 else None
                right = evaluate_path(x, path[k + 1:]) if k + 1 < len(path) else None
                terms.append((coef, left, ("psi", arrow_id), right))
        system.add_equation(terms, shape=(y.dim(target), x.dim(source)))
    return system


def ext1_dim(x: Rep, y: Rep) -> int:
    """
    Dimension of Ext^1(x, y) as the middle homology of

        (+)_v Hom(X_v, Y_v) -> (+)_a Hom(X_s(a), Y_e(a)) -> (+)_r Hom(X_s(r), Y_e(r))

    built from the relations carried by the quiver.

    Raises:
        RelationError: If either module fails the relations
    """
    _require_same_quiver(x, y)
    for label, m in (("first", x), ("second", y)):
        if not check_relations(m):
            raise RelationError(f"The {label} module {m!r} does not satisfy the relations of {m.quiver.name}")

    c0 = sum(dx * dy for dx, dy in zip(x.dims, y.dims))
    rank_d0 = c0 - hom_dim(x, y)
    d1 = _relation_system(x, y)
    value = d1.size - d1.rank() - rank_d0
    toolkit_logger.debug(f"ext1 {x.dims} -> {y.dims}: C1={d1.size}, rank d0={rank_d0}, value={value}")
    return value


def euler_form(d: Sequence[int], e: Sequence[int], quiver: Quiver) -> int:
    """Euler form of the unstarred quiver: sum d_i e_i - sum_{a: i -> j} d_i e_j"""
    value = sum(a * b for a, b in zip(d, e))
    for arrow in quiver.arrows:
        if not arrow.starred:
            value -= d[quiver.position(arrow.source)] * e[quiver.position(arrow.target)]
    return value


def ext1_dim_from_hom(x: Rep, y: Rep) -> int:
    """Ext^1 over a preprojective algebra through hom(x,y) + hom(y,x) - (d_x,d_y) - (d_y,d_x)"""
    _require_same_quiver(x, y)
    q = x.quiver
    return hom_dim(x, y) + hom_dim(y, x) - euler_form(x.dims, y.dims, q) - euler_form(y.dims, x.dims, q)


def rank_profile(x: Rep) -> Dict[Tuple[int, int], int]:
    """
    Rank of every unstarred path V_j -> V_i, i < j

    Assumes the linear orientation a_i: i+1 -> i.
    """
    n = len(x.quiver.vertices)
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            path = tuple(f"a{k}" for k in range(i, j))
            out[(i, j)] = linalg.rank(evaluate_path(x, path))
    return out


def expected_rank_profile(m: "Multisegment", n: int) -> Dict[Tuple[int, int], int]:
    """Ranks of the orbit O_m: one per segment [k, l] with k <= i < j <= l"""
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out[(i, j)] = sum(mult for k, l, mult in m if k <= i and l >= j)
    return out


def orbit_dim_check(x: Rep, m: "Multisegment") -> bool:
    """
    Whether x is a point of the dense orbit of the component Z_m

    The orbit of x has dimension sum d_i^2 - hom(x, x); the component has the
    dimension of rep(Q, d). The unstarred part must also lie in the orbit O_m.
    """
    n = len(x.quiver.vertices)
    if tuple(m.degree(n)) != x.dims:
        toolkit_logger.debug(f"Degree of {m} does not match dims {x.dims}")
        return False
    orbit = sum(d * d for d in x.dims) - hom_dim(x, x)
    component = sum(x.dim(a.source) * x.dim(a.target) for a in x.quiver.arrows if not a.starred)
    if orbit != component:
        toolkit_logger.debug(f"Orbit dimension {orbit} differs from component dimension {component} for {m}")
        return False
    return rank_profile(x) == expected_rank_profile(m, n)
