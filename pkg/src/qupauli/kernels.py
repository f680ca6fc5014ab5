"""Backend selection for the search kernels.

The compiled module is used when it was built and ``QUPAULI_PURE_PYTHON`` is
unset; otherwise the pure-Python module with identical behaviour is used.
"""
import os

from . import _pykernels as python_backend

try:
    if os.environ.get("QUPAULI_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

BACKEND = "compiled" if compiled_backend is not None else "python"
_impl = compiled_backend or python_backend


def closure(gens, d, n, cap):
    try:
        return _impl.closure(gens, d, n, cap)
    except OverflowError:
        return python_backend.closure(gens, d, n, cap)


def max_clique(adj, nv):
    return _impl.max_clique(adj, nv)


def max_pairs(comm, nv, cap_k):
    return _impl.max_pairs(comm, nv, cap_k)


def gamma_search(base, kernel_cols, delta, mu0, d, r, budget, first_lo=0, first_hi=None):
    if d > 3_000_000_000:
        impl = python_backend
    else:
        impl = _impl
    return impl.gamma_search(base, kernel_cols, delta, mu0, d, r, budget, first_lo, first_hi)
