"""Kernel backend selection: compiled extension if built, else pure Python.

Set ``HOCHCALC_PURE=1`` to force the pure-Python kernels (used by the test
suite and the benchmark to exercise both paths).
"""

import os

if os.environ.get("HOCHCALC_PURE"):
    from . import _pyops as _impl
else:
    try:
        from . import _fastops as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pyops as _impl

BACKEND = _impl.BACKEND
inversion_sign = _impl.inversion_sign
merge_terms = _impl.merge_terms
add_into = _impl.add_into
sort_sign = _impl.sort_sign
row_reduce = _impl.row_reduce
