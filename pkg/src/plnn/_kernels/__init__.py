"""Hot inner loops: exact simplex pivoting and integer max-of-affine evaluation.

The compiled extension ``_fast`` is used when it was built; otherwise the
pure-Python twin ``_pure`` is selected. Set ``PLNN_PURE=1`` to force the
fallback.
"""

import os

from . import _pure

BACKEND = "pure"
simplex_eq = _pure.simplex_eq
max_affine_int = _pure.max_affine_int

if os.environ.get("PLNN_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _fast
    except ImportError:
        _fast = None
    if _fast is not None:
        BACKEND = "compiled"
        simplex_eq = _fast.simplex_eq
        max_affine_int = _fast.max_affine_int

__all__ = ["BACKEND", "simplex_eq", "max_affine_int"]
