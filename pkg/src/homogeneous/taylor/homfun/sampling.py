#  Copyright 2026 homogeneous-taylor contributors.
import logging
from typing import Optional, Tuple

import numpy as np

from ..utils import DomainError
from .catalog import HomogeneousFunction, segment_in_domain

logger = logging.getLogger(__name__)

POSITIVE_RANGE = (0.5, 2.0)
SIGNED_RANGE = (-2.0, 2.0)
MAX_REJECTIONS = 1000


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """
    Independent generator for one trial, seeded with seed + trial index.
    """
    return np.random.default_rng(seed + trial)


def random_pd_matrix(rng: np.random.Generator, n: int, epsilon: float = 1e-3) -> np.ndarray:
    """
    M^T M + epsilon I with standard normal M, symmetrized so it is exactly symmetric.
    """
    m = rng.standard_normal((n, n))
    matrix = m.T @ m + epsilon * np.eye(n)
    return 0.5 * (matrix + matrix.T)


def _point_dim(f: HomogeneousFunction, dim: Optional[int]) -> int:
    return f.dim if f.dim is not None else (dim or 2)


def sample_point(f: HomogeneousFunction, rng: np.random.Generator, dim: Optional[int] = None) -> np.ndarray:
    """
    Draw a point of the smooth domain: uniform in [0.5, 2]^n on the positive orthant families,
    uniform in [-2, 2]^n (redrawn until inside the domain) for quadratic_root.

    :param f: catalog function
    :param rng: random generator
    :param dim: dimension for families defined in any dimension

    :return: np.ndarray = the point
    """
    n = _point_dim(f, dim)
    if f.spec.base_family() != "quadratic_root":
        return rng.uniform(*POSITIVE_RANGE, size=n)
    for _ in range(MAX_REJECTIONS):
        point = rng.uniform(*SIGNED_RANGE, size=n)
        if f.domain_predicate(point.tolist()):
            return point
    raise DomainError(f"Could not sample a point in the domain of {f.name}")


def sample_pair(
    f: HomogeneousFunction, rng: np.random.Generator, dim: Optional[int] = None, samples: int = 101
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw an expansion point a and a target b whose connecting segment passes the sampled domain check.

    :return: Tuple[np.ndarray, np.ndarray] = the pair (a, b)
    """
    a = sample_point(f, rng, dim)
    for attempt in range(MAX_REJECTIONS):
        b = sample_point(f, rng, a.size)
        if segment_in_domain(f, a, b, samples):
            if attempt:
                logger.debug(f"Rejected {attempt} targets before the segment stayed inside the domain of {f.name}")
            return a, b
    raise DomainError(f"Could not sample a segment inside the domain of {f.name}")
