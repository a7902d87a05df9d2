"""Integer kernels behind the exact linear algebra and polynomial products.

The GMP extension is used when it was compiled; otherwise the pure-Python
module with identical signatures is loaded. Set ``IMPLICITIZE_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _pure

_compiled = None
if not os.environ.get("IMPLICITIZE_PURE_PYTHON"):
    try:
        from . import _gmp as _compiled
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _pure
BACKEND = "gmp" if _compiled is not None else "python"

det_int = _impl.det_int
det_many = _impl.det_many
echelon_pivots = _impl.echelon_pivots
rref_int = _impl.rref_int
kron_mul = _impl.kron_mul
kron_divexact = _impl.kron_divexact

__all__ = [
    "BACKEND",
    "det_int",
    "det_many",
    "echelon_pivots",
    "rref_int",
    "kron_mul",
    "kron_divexact",
]
