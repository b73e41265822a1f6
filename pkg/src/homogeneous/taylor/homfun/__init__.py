#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .catalog import (
    HomogeneousFunction,
    evaluate,
    function_jet,
    homogeneity_residual,
    make_function,
    power_function,
    segment_in_domain,
)
from .function_spec import FAMILIES, FunctionSpec, euclidean_spec, load_function_spec
from .sampling import random_pd_matrix, sample_pair, sample_point, trial_rng
