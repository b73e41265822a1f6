#  Copyright 2026 homogeneous-taylor contributors.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .multi_index import MultiIndex, multiset_positions, multisets, storage_size
from .symmetric_tensor import (
    SymmetricTensor,
    Vector,
    apply_uniform,
    contract,
    contract_vectors,
    dense_array,
    relative_residual,
    tensor_close,
    tensor_from_json,
    tensor_get,
    tensor_to_json,
)
