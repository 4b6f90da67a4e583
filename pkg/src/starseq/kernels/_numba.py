"""numba @njit implementations of the bulk integer kernels.

Importing this module requires numba. Outputs are bit-identical to the
NumPy fallback in _numpy.py; tests cross-check the two.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _isqrt(n):
    if n < 4:
        return 1 if n > 0 else 0
    x = int(np.sqrt(n))
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@njit(cache=True)
def primes_upto(limit):
    if limit < 2:
        return np.empty(0, np.int64)
    if limit < 3:
        out = np.empty(1, np.int64)
        out[0] = 2
        return out
    half = (limit + 1) // 2
    sieve = np.ones(half, np.uint8)
    sieve[0] = 0
    r = _isqrt(limit)
    for p in range(3, r + 1, 2):
        if sieve[p // 2]:
            for j in range(p * p // 2, half, p):
                sieve[j] = 0
    count = 1
    for i in range(1, half):
        count += sieve[i]
    out = np.empty(count, np.int64)
    out[0] = 2
    w = 1
    for i in range(1, half):
        if sieve[i]:
            out[w] = 2 * i + 1
            w += 1
    return out


@njit(cache=True)
def factor_range(lo, hi):
    if lo < 2 or hi <= lo:
        raise ValueError("factor_range needs 2 <= lo < hi")
    base = primes_upto(_isqrt(hi - 1))
    # omega(n) <= 15 for n < 2**63, so 15 rows per n is a safe upper bound
    cap = (hi - lo) * 15
    ns = np.empty(cap, np.int64)
    ps = np.empty(cap, np.int64)
    es = np.empty(cap, np.int64)
    w = 0
    for n in range(lo, hi):
        m = n
        for i in range(base.size):
            p = base[i]
            if p * p > m:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                ns[w] = n
                ps[w] = p
                es[w] = e
                w += 1
        if m > 1:
            ns[w] = n
            ps[w] = m
            es[w] = 1
            w += 1
    return ns[:w].copy(), ps[:w].copy(), es[:w].copy()


@njit(cache=True)
def floordiv_sum(n, primes):
    total = 0
    for i in range(primes.size):
        p = primes[i]
        if p > n:
            break
        total += n // p
    return total


@njit(cache=True)
def reciprocal_sum(primes):
    total = 0.0
    for i in range(primes.size):
        total += 1.0 / primes[i]
    return total
