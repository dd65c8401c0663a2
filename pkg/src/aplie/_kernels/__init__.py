"""Kernel selection: compiled Cython speedups when available, otherwise the
pure-Python twin.  ``APLIE_PURE_PYTHON=1`` forces the fallback (used by the
benchmark and by CI to exercise both paths)."""

import os

if os.environ.get("APLIE_PURE_PYTHON"):
    from aplie._kernels import _pure as _impl
else:
    try:
        from aplie._kernels import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from aplie._kernels import _pure as _impl

BACKEND = _impl.BACKEND
terms_mul = _impl.terms_mul
addmul_terms = _impl.addmul_terms
addmul_sparse = _impl.addmul_sparse
