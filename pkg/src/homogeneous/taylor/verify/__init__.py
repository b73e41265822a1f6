#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .catalog import CatalogEntry, degree_one_catalog, full_catalog, monomial_catalog, theorem_catalog
from .suites import SUITES, SuiteResult, SuiteTracker, remainder_bound, run_suites
