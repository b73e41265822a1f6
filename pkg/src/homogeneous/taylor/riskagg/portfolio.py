#  Copyright 2026 homogeneous-taylor contributors.
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from ..homfun import FunctionSpec, HomogeneousFunction, make_function, random_pd_matrix
from ..utils import NotPositiveDefiniteError, SpecError


@dataclass(frozen=True, eq=False)
class Portfolio:
    """
    Exposures x (currency units) aggregated with a symmetric positive definite, correlation-like
    matrix R. Labels name the risks and are carried through to reports.
    """

    exposures: np.ndarray
    matrix: np.ndarray
    labels: Optional[List[str]] = field(default=None)

    def __post_init__(self) -> None:
        exposures = np.asarray(self.exposures, dtype=np.float64).reshape(-1)
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape != (exposures.size, exposures.size):
            raise SpecError(f"R has shape {matrix.shape}, expected {(exposures.size, exposures.size)}")
        if self.labels is not None and len(self.labels) != exposures.size:
            raise SpecError(f"Got {len(self.labels)} labels for {exposures.size} exposures")
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
            raise NotPositiveDefiniteError("Portfolio matrix R is not symmetric")
        smallest = float(np.linalg.eigvalsh(matrix)[0])
        if not smallest > 0.0:
            raise NotPositiveDefiniteError(f"Portfolio matrix R is not positive definite, min eigenvalue {smallest:.3e}")
        exposures.flags.writeable = False
        matrix.flags.writeable = False
        object.__setattr__(self, "exposures", exposures)
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return int(self.exposures.size)

    def scaled(self, factor: float) -> "Portfolio":
        return Portfolio(self.exposures * factor, self.matrix, self.labels)

    def aggregation_function(self) -> HomogeneousFunction:
        """
        The standard-formula aggregation sqrt(x^T R x) as a catalog function.
        """
        return make_function(FunctionSpec("quadratic_root", R=self.matrix.tolist()))

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"R": self.matrix.tolist(), "exposures": self.exposures.tolist()}
        if self.labels is not None:
            payload["labels"] = list(self.labels)
        return payload

    @classmethod
    def from_json(cls, payload: Any) -> "Portfolio":
        """
        Parse {"R": [[...]], "exposures": [...], "labels": [...]}; labels are optional.

        :param payload: decoded JSON object, or a JSON string

        :return: Portfolio = the validated portfolio
        """
        if isinstance(payload, str):
            try:
                payload = json.loads(payload)
            except json.JSONDecodeError as error:
                raise SpecError(f"Portfolio is not valid JSON: {error}") from error
        if not isinstance(payload, dict) or "R" not in payload or "exposures" not in payload:
            raise SpecError("Portfolio JSON must be an object with 'R' and 'exposures'")
        try:
            labels = payload.get("labels")
            return cls(
                np.asarray(payload["exposures"], dtype=np.float64),
                np.asarray(payload["R"], dtype=np.float64),
                [str(label) for label in labels] if labels is not None else None,
            )
        except (TypeError, ValueError) as error:
            if isinstance(error, SpecError):
                raise
            raise SpecError(f"Malformed portfolio: {error}") from error


def load_portfolio(path: str) -> Portfolio:
    try:
        with open(path, "r") as portfolio_file:
            payload = json.load(portfolio_file)
    except json.JSONDecodeError as error:
        raise SpecError(f"Portfolio file {path} is not valid JSON: {error}") from error
    return Portfolio.from_json(payload)


def random_portfolio(rng: np.random.Generator, n: int) -> Portfolio:
    """
    Exposures uniform in [0.5, 2] with R = M^T M + 1e-3 I.
    """
    return Portfolio(rng.uniform(0.5, 2.0, size=n), random_pd_matrix(rng, n))
