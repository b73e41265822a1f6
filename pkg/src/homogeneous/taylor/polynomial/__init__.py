#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .binomial import alternating_binomial_sum, binomial_table, is_kronecker_table
from .euler_chain import euler_chain_residual
from .report import ReportMode, TaylorReport, build_report
from .taylor_forms import (
    RemainderStep,
    apply_uniform_mixed,
    derivative_tensors,
    lower_from_top,
    remainder_ratios,
    standard_from_tensors,
    taylor_binomial_form,
    taylor_collapsed,
    taylor_collected_form,
    taylor_power_collapsed,
    taylor_standard,
)
