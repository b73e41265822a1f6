#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .finite_difference import CENTRAL_STENCILS, auto_step, fd_tensor
from .jet import (
    Jet,
    Scalar,
    extract_tensor,
    generalized_binomial,
    integer_power,
    jet_arith,
    jet_compose_binomial,
    jet_exponents,
    jet_variable,
)
