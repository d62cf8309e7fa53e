"""
Indecomposable components and their sampled generic points
"""
from functools import lru_cache
from typing import List, Optional, Tuple

from src.config import config
from src.models import ToolkitError
from src.multiseg.multisegments import Multisegment, msm_projective, parse_multisegment, rep_of
from src.quiver.core import Rep
from src.quiver.homological import ext1_dim
from src.quiver.sampling import fiber_sample
from src.utils.fixtures import load_fixture
from src.utils.logger import toolkit_logger


SUPPORTED_N = (2, 3, 4)


@lru_cache(maxsize=None)
def indec_components(n: int) -> Tuple[Multisegment, ...]:
    """
    Multisegments of the indecomposable irreducible components of Lambda_n

    For n = 4 the order is that of the labels m1..m40; the last four are the
    projective components.
    """
    if n not in SUPPORTED_N:
        raise ToolkitError(f"Component lists exist for n in {SUPPORTED_N}, got {n}")
    data = load_fixture("indec_components.json")
    items = tuple(parse_multisegment(text) for text in data["components"][str(n)])
    if len(set(items)) != len(items):
        raise ToolkitError(f"Duplicate multisegments in the n = {n} component list")
    return items


def component_label(m: Multisegment, n: int) -> str:
    """m<k> for listed components, the multisegment itself otherwise"""
    try:
        return f"m{indec_components(n).index(m) + 1}"
    except (ValueError, ToolkitError):
        return str(m)


def component_seed(seed: int, trial: int, m: Multisegment) -> Tuple[int, ...]:
    """Seed sequence for the sample of one component in one trial"""
    return (seed, trial) + tuple(x for triple in m for x in triple)


@lru_cache(maxsize=4096)
def sample_component(m: Multisegment, n: int, seed: int, trial: int) -> Rep:
    """Generic point of Z_m: a random fiber point over the orbit representative"""
    return fiber_sample(rep_of(m, n), component_seed(seed, trial, m))


def generic_ext(
    m1: Multisegment,
    m2: Multisegment,
    n: int,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> int:
    """
    Minimum of ext1_dim over sampled pairs of generic points

    Args:
        m1: First component
        m2: Second component
        n: Rank of the algebra
        trials: Number of independent samples, defaults to config.TRIALS
        seed: Base seed, defaults to config.SEED

    Returns:
        The generic value; stops early at 0
    """
    trials = config.TRIALS if trials is None else trials
    seed = config.SEED if seed is None else seed
    best = None
    for t in range(trials):
        value = ext1_dim(sample_component(m1, n, seed, t), sample_component(m2, n, seed, t))
        best = value if best is None else min(best, value)
        if best == 0:
            break
    toolkit_logger.debug(f"generic ext({m1}, {m2}) over Lambda_{n} = {best}")
    return best


def projective_components(n: int) -> List[Multisegment]:
    return [msm_projective(j, n) for j in range(1, n + 1)]
