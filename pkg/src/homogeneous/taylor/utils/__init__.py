#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .errors import (
    DegreeMismatchError,
    DomainError,
    HomTaylorError,
    NotPositiveDefiniteError,
    ShapeError,
    SizeGuardError,
    SpecError,
)
from .taylor_config import MAX_BINOMIAL_ORDER, MAX_DIM, MAX_FD_ORDER, MAX_ORDER, TaylorConfig, load_config
