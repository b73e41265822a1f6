#  Copyright 2026 homogeneous-taylor contributors.
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import toml

logger = logging.getLogger(__name__)

# hard size guards, not configurable
MAX_DIM: int = 16
MAX_ORDER: int = 10
MAX_BINOMIAL_ORDER: int = 20
MAX_FD_ORDER: int = 4


@dataclass
class TaylorConfig:
    # tolerances
    TOL: float = float(os.getenv("HOMTAYLOR_TOL", "1e-8"))
    FD_TOL: float = float(os.getenv("HOMTAYLOR_FD_TOL", "1e-4"))
    EULER_TOL: float = float(os.getenv("HOMTAYLOR_EULER_TOL", "1e-9"))

    # random trial configuration
    TRIALS: int = int(os.getenv("HOMTAYLOR_TRIALS", "100"))
    SEED: int = int(os.getenv("HOMTAYLOR_SEED", "42"))
    SEGMENT_SAMPLES: int = int(os.getenv("HOMTAYLOR_SEGMENT_SAMPLES", "101"))

    # logging
    LOG_LEVEL: str = os.getenv("HOMTAYLOR_LOG_LEVEL", "WARNING")

    # optional TOML overrides
    CONFIG_FILE: Optional[str] = os.getenv("HOMTAYLOR_CONFIG")


def load_config(path: Optional[str] = None) -> TaylorConfig:
    """
    Build a TaylorConfig from the environment defaults, then apply the ``[homtaylor]`` table of an
    optional TOML file on top of them.

    :param path: TOML file to read, falls back to HOMTAYLOR_CONFIG when not given

    :return: TaylorConfig = the resolved configuration
    """
    config = TaylorConfig()
    path = path or config.CONFIG_FILE
    if not path:
        return config

    logger.info(f"Loading configuration overrides from {path}")
    overrides: Dict[str, Any] = toml.load(path).get("homtaylor", {})
    for key, value in overrides.items():
        attribute = key.upper()
        if attribute == "CONFIG_FILE" or not hasattr(config, attribute):
            logger.warning(f"Ignoring unknown configuration key '{key}' in {path}")
            continue
        current = getattr(config, attribute)
        setattr(config, attribute, type(current)(value) if current is not None else value)
    config.CONFIG_FILE = path
    return config
