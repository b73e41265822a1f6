#  Copyright 2026 homogeneous-taylor contributors.
from dataclasses import dataclass
from typing import List

import numpy as np

from ..homfun import FunctionSpec, HomogeneousFunction, euclidean_spec, make_function, power_function, random_pd_matrix


@dataclass(frozen=True)
class CatalogEntry:
    """
    A catalog function together with the dimension its random points are drawn in.
    """

    function: HomogeneousFunction
    dim: int

    @property
    def degree(self) -> int:
        return int(self.function.degree)


MONOMIAL_EXPONENTS = ([1.0, 1.0], [2.0, 1.0], [2.0, 1.0, 1.0], [1.5, 0.5])
PNORM_SHAPES = ((3.0, 2), (2.5, 3))
QUADRATIC_DIMS = (2, 3, 5)


def quadratic_root_entries(seed: int) -> List[CatalogEntry]:
    """
    sqrt(x^T R x) for seeded random positive definite R in 2, 3 and 5 dimensions.
    """
    rng = np.random.default_rng(seed)
    entries = []
    for n in QUADRATIC_DIMS:
        spec = FunctionSpec("quadratic_root", R=random_pd_matrix(rng, n).tolist())
        entries.append(CatalogEntry(make_function(spec), n))
    return entries


def degree_one_catalog(seed: int) -> List[CatalogEntry]:
    """
    The degree-1 functions: Euclidean norm, random quadratic roots and p-norms.
    """
    entries = [CatalogEntry(make_function(euclidean_spec(2)), 2)]
    entries.extend(quadratic_root_entries(seed))
    entries.extend(CatalogEntry(make_function(FunctionSpec("pnorm", p=p)), n) for p, n in PNORM_SHAPES)
    return entries


def monomial_catalog() -> List[CatalogEntry]:
    return [CatalogEntry(make_function(FunctionSpec("monomial", alpha=alpha)), len(alpha)) for alpha in MONOMIAL_EXPONENTS]


def theorem_catalog(seed: int) -> List[CatalogEntry]:
    """
    Integer-degree functions checked against the collapsed form at their own degree: the Euclidean
    norm (m=1), squared quadratic roots (m=2), monomials of degree 2-4, and p-norm powers m=1..4.
    """
    entries = [CatalogEntry(make_function(euclidean_spec(2)), 2)]
    entries.extend(CatalogEntry(power_function(e.function, 2), e.dim) for e in quadratic_root_entries(seed))
    entries.extend(monomial_catalog())
    for p, n in PNORM_SHAPES:
        pnorm = make_function(FunctionSpec("pnorm", p=p))
        entries.extend(CatalogEntry(power_function(pnorm, m), n) for m in range(1, 5))
    return entries


def full_catalog(seed: int) -> List[CatalogEntry]:
    """
    Every catalog function once, for the suites that do not depend on the Taylor order.
    """
    entries = degree_one_catalog(seed) + monomial_catalog()
    entries.extend(CatalogEntry(power_function(e.function, 2), e.dim) for e in degree_one_catalog(seed))
    return entries
