"""Hot-kernel backend selection.

The compiled Cython kernels are used when importable; the pure-Python twins
in :mod:`pykernels` are the fallback.  Set ``SYMDIRAC_PURE=1`` to force the
pure backend (the benchmark and the backend-equivalence tests rely on both
implementations staying importable side by side).
"""

import os

from . import pykernels

if os.environ.get("SYMDIRAC_PURE") == "1":
    _impl = pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = pykernels

BACKEND = _impl.BACKEND
compose_terms = _impl.compose_terms
sparse_rank = _impl.sparse_rank
sparse_nullspace = _impl.sparse_nullspace

__all__ = ["BACKEND", "compose_terms", "sparse_rank", "sparse_nullspace", "pykernels"]
