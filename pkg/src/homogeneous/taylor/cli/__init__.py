#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .commands import EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, EXIT_USAGE, cmd_identity, cmd_risk, cmd_taylor, cmd_verify, main
from .run_config import RunConfig, build_parser, normalize_argv, parse_vector, resolve_run_config
