"""Bulk integer kernels with a selectable backend.

The hot inner loops (prime sieving, block factorization, floor-divide
sums) exist twice: numba @njit functions in _numba.py and vectorized
NumPy fallbacks in _numpy.py. The backend is fixed at import time from
the STARSEQ_KERNELS environment variable:

    STARSEQ_KERNELS=numba    force numba, error if it cannot be imported
    STARSEQ_KERNELS=numpy    force the pure NumPy fallback
    STARSEQ_KERNELS=auto     numba when importable, else NumPy (default)

Everything above this layer works on arbitrary-precision Python ints;
only machine-width bulk work is delegated here. benchmarks/bench_kernels.py
compares the two paths.
"""
from __future__ import annotations

import os

import numpy as np

from . import _numpy

_ENV_VAR = "STARSEQ_KERNELS"
_INT64_MAX = np.iinfo(np.int64).max


def _resolve_backend(choice: str):
    choice = choice.strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{_ENV_VAR} must be 'auto', 'numba' or 'numpy', got {choice!r}"
        )
    if choice == "numpy":
        return "numpy", _numpy
    try:
        from . import _numba
    except ImportError:
        if choice == "numba":
            raise RuntimeError(
                f"{_ENV_VAR}=numba but numba is not importable"
            ) from None
        return "numpy", _numpy
    return "numba", _numba


BACKEND, _impl = _resolve_backend(os.environ.get(_ENV_VAR, "auto"))


def _check_int64(value: int, name: str) -> int:
    value = int(value)
    if value > _INT64_MAX:
        raise ValueError(f"{name} exceeds the 64-bit kernel domain")
    return value


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an ascending int64 array."""
    return _impl.primes_upto(_check_int64(limit, "limit"))


def factor_range(lo: int, hi: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Prime-power rows (n, p, e) for every n in [lo, hi), sorted by (n, p)."""
    return _impl.factor_range(_check_int64(lo, "lo"), _check_int64(hi, "hi"))


def floordiv_sum(n: int, primes: np.ndarray) -> int:
    """Sum of n // p over primes <= n in the given ascending array."""
    return int(_impl.floordiv_sum(_check_int64(n, "n"), primes))


def reciprocal_sum(primes: np.ndarray) -> float:
    """Float sum of reciprocals of the array entries."""
    return _impl.reciprocal_sum(primes)
