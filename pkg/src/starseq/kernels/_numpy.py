"""Pure NumPy implementations of the bulk integer kernels.

Every function here has a numba twin in _numba.py with the same signature
and bit-identical output. Backend selection happens in kernels/__init__.py.
"""
from __future__ import annotations

import math

import numpy as np


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, int64. Odd-only Eratosthenes."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit < 3:
        return np.array([2], dtype=np.int64)
    half = (limit + 1) // 2  # index i stands for the odd number 2*i + 1
    sieve = np.ones(half, dtype=bool)
    sieve[0] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if sieve[p // 2]:
            sieve[p * p // 2 :: p] = False
    odds = 2 * np.flatnonzero(sieve).astype(np.int64) + 1
    return np.concatenate((np.array([2], dtype=np.int64), odds))


def factor_range(lo: int, hi: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Factor every n in [lo, hi) into prime powers by sieved trial division.

    Returns parallel int64 arrays (n, p, e), one row per prime power p**e
    dividing n exactly, sorted by (n, p).
    """
    if lo < 2 or hi <= lo:
        raise ValueError("factor_range needs 2 <= lo < hi")
    n_vals = np.arange(lo, hi, dtype=np.int64)
    rem = n_vals.copy()
    col_n, col_p, col_e = [], [], []
    for p in primes_upto(math.isqrt(hi - 1)):
        p = int(p)
        first = ((lo + p - 1) // p) * p
        idx = np.arange(first - lo, hi - lo, p, dtype=np.int64)
        if idx.size == 0:
            continue
        exp = np.zeros(idx.size, dtype=np.int64)
        active = np.arange(idx.size)
        while active.size:
            q, r = np.divmod(rem[idx[active]], p)
            hit = r == 0
            act = active[hit]
            rem[idx[act]] = q[hit]
            exp[act] += 1
            active = act
        col_n.append(n_vals[idx])
        col_p.append(np.full(idx.size, p, dtype=np.int64))
        col_e.append(exp)
    left = rem > 1  # any leftover is a prime larger than sqrt(hi - 1)
    col_n.append(n_vals[left])
    col_p.append(rem[left].copy())
    col_e.append(np.ones(int(left.sum()), dtype=np.int64))
    ns = np.concatenate(col_n)
    ps = np.concatenate(col_p)
    es = np.concatenate(col_e)
    order = np.lexsort((ps, ns))
    return ns[order], ps[order], es[order]


def floordiv_sum(n: int, primes: np.ndarray) -> int:
    """Sum of n // p over the primes in the ascending array that are <= n."""
    k = int(np.searchsorted(primes, n, side="right"))
    if k == 0:
        return 0
    return int((n // primes[:k]).sum())


def reciprocal_sum(primes: np.ndarray) -> float:
    """Float sum of 1/p over the array."""
    if primes.size == 0:
        return 0.0
    return float((1.0 / primes).sum())
