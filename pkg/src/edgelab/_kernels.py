"""Backend selection for the hot kernels.

The compiled extension ``edgelab._core`` is used when it imports; otherwise, or
when ``EDGELAB_PURE_PYTHON`` is set to a non-empty value, the pure-Python
module ``edgelab._pycore`` is used.  Both expose identical functions.
"""

from __future__ import annotations

import os

from . import _pycore

if os.environ.get("EDGELAB_PURE_PYTHON"):
    _impl = _pycore
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pycore

BACKEND = "python" if _impl is _pycore else "cython"

canon_search = _impl.canon_search
max_matching_mate = _impl.max_matching_mate
matching_number = _impl.matching_number
max_independent_set = _impl.max_independent_set
