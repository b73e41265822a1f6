#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .aggregation import (
    AllocationReport,
    QuadraticIdentityReport,
    aggregate_capital,
    allocation_report,
    capital_quadratic_identity,
    euler_allocation,
)
from .portfolio import Portfolio, load_portfolio, random_portfolio
