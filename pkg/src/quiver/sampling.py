"""
Random points of the fiber over a representation of the linear quiver

Once the unstarred matrices are fixed, the preprojective relations are linear
in the starred ones, so the fiber is a vector space. A point is drawn as an
integer combination of a primitive integral basis of that space with
coefficients uniform in [-COORD_BOUND, COORD_BOUND].

Genericity: every degeneracy tested downstream (a rank drop of a Hom or Ext
system) is the vanishing of a minor, a polynomial of degree D in the
coefficients with D bounded by the number of unknowns of the system (at most a
few hundred for n <= 5 and total dimension <= 14). By Schwartz-Zippel one
trial lands on it with probability at most D / (2 * COORD_BOUND + 1) < 1/16,
so the minimum over five independent trials is wrong with probability below
2^-20.
"""
from typing import Optional, Sequence, Union

import numpy as np

from src.config import config
from src.quiver import linalg
from src.quiver.core import Rep, preprojective_quiver
from src.utils.logger import toolkit_logger


Seed = Union[int, Sequence[int]]


def fiber_sample(x: Rep, seed: Seed, bound: Optional[int] = None) -> Rep:
    """
    Sample a preprojective module whose unstarred part is x

    Args:
        x: Representation of Q_n (starred arrows, if present, are ignored)
        seed: Integer seed or sequence of integers for numpy's generator
        bound: Coefficient bound, defaults to config.COORD_BOUND

    Returns:
        Module over Lambda_n satisfying every relation
    """
    n = len(x.quiver.vertices)
    target = preprojective_quiver(n)
    bound = config.COORD_BOUND if bound is None else bound

    system = linalg.BlockSystem()
    starred = [a for a in target.arrows if a.starred]
    for a in starred:
        system.add_unknown(a.id, x.dim(a.target), x.dim(a.source))
    for relation in target.relations:
        source, tgt = relation.endpoints(target)
        terms = []
        for coef, (outer, inner) in relation.terms:
            if target.arrow(outer).starred:
                terms.append((coef, None, outer, x[inner]))
            else:
                terms.append((coef, x[outer], inner, None))
        system.add_equation(terms, shape=(x.dim(tgt), x.dim(source)))

    basis = [linalg.integer_row(v) for v in system.nullspace()]
    rng = np.random.default_rng(seed)
    point = [0] * system.size
    if basis:
        coeffs = rng.integers(-bound, bound + 1, size=len(basis))
        for c, vec in zip(coeffs.tolist(), basis):
            if c:
                point = [p + c * v for p, v in zip(point, vec)]

    maps = {a.id: x[a.id] for a in target.arrows if not a.starred}
    maps.update(system.split(point))
    toolkit_logger.debug(f"Sampled fiber of dimension {len(basis)} over dims {x.dims}")
    return Rep(target, x.dims, maps)
