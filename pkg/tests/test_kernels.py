from __future__ import annotations

import numpy as np
import pytest

from starseq import kernels
from starseq.kernels import _numpy

try:
    from starseq.kernels import _numba

    HAS_NUMBA = True
except ImportError:
    _numba = None
    HAS_NUMBA = False

BACKENDS = [_numpy] + ([_numba] if HAS_NUMBA else [])


def naive_primes(limit):
    return [n for n in range(2, limit + 1)
            if all(n % d for d in range(2, int(n**0.5) + 1))]


def naive_factor(n):
    out, m, d = [], n, 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((n, d, e))
        d += 1
    if m > 1:
        out.append((n, m, 1))
    return out


@pytest.mark.parametrize("impl", BACKENDS)
def test_primes_upto_small(impl):
    for limit in (0, 1, 2, 3, 4, 10, 97, 100, 541):
        assert impl.primes_upto(limit).tolist() == naive_primes(limit)


@pytest.mark.parametrize("impl", BACKENDS)
def test_prime_counts(impl):
    assert impl.primes_upto(10**6).size == 78498


@pytest.mark.skipif(not HAS_NUMBA, reason="numba unavailable")
def test_backends_agree_on_primes():
    for limit in (2, 1000, 65_537, 10**6):
        a = _numpy.primes_upto(limit)
        b = _numba.primes_upto(limit)
        assert np.array_equal(a, b)


@pytest.mark.parametrize("impl", BACKENDS)
def test_factor_range_against_naive(impl):
    ns, ps, es = impl.factor_range(2, 2000)
    rows = list(zip(ns.tolist(), ps.tolist(), es.tolist()))
    expect = [row for n in range(2, 2000) for row in naive_factor(n)]
    assert rows == expect


@pytest.mark.parametrize("impl", BACKENDS)
def test_factor_range_windows(impl):
    for lo, hi in ((2, 50), (10**6 - 50, 10**6 + 50), (999_983, 1_000_003)):
        ns, ps, es = impl.factor_range(lo, hi)
        rows = list(zip(ns.tolist(), ps.tolist(), es.tolist()))
        expect = [row for n in range(lo, hi) for row in naive_factor(n)]
        assert rows == expect


@pytest.mark.skipif(not HAS_NUMBA, reason="numba unavailable")
def test_backends_agree_on_factor_range():
    a = _numpy.factor_range(2, 30_000)
    b = _numba.factor_range(2, 30_000)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


@pytest.mark.parametrize("impl", BACKENDS)
def test_factor_range_rejects_bad_bounds(impl):
    with pytest.raises(ValueError):
        impl.factor_range(1, 10)
    with pytest.raises(ValueError):
        impl.factor_range(5, 5)


@pytest.mark.parametrize("impl", BACKENDS)
def test_floordiv_sum(impl):
    primes = impl.primes_upto(1000)
    for n in (1, 2, 10, 999, 1000):
        expect = sum(n // p for p in naive_primes(n))
        assert impl.floordiv_sum(n, primes) == expect


@pytest.mark.parametrize("impl", BACKENDS)
def test_floordiv_sum_counts_omega(impl):
    # sum of floor(N/p) equals the number of prime-power rows below N + 1,
    # tying the two kernels to each other
    N = 3000
    primes = impl.primes_upto(N)
    ns, ps, es = impl.factor_range(2, N + 1)
    assert impl.floordiv_sum(N, primes) == len(ns)


@pytest.mark.parametrize("impl", BACKENDS)
def test_reciprocal_sum(impl):
    primes = impl.primes_upto(10)
    assert impl.reciprocal_sum(primes) == pytest.approx(
        1 / 2 + 1 / 3 + 1 / 5 + 1 / 7
    )


def test_dispatch_layer_matches_active_backend():
    assert kernels.BACKEND in ("numba", "numpy")
    assert kernels.primes_upto(100).tolist() == naive_primes(100)
    assert kernels.floordiv_sum(100, kernels.primes_upto(100)) == sum(
        100 // p for p in naive_primes(100)
    )


def test_dispatch_rejects_oversized_input():
    with pytest.raises(ValueError):
        kernels.floordiv_sum(2**70, kernels.primes_upto(10))


def test_resolve_backend_choices():
    name, impl = kernels._resolve_backend("numpy")
    assert name == "numpy" and impl is _numpy
    with pytest.raises(ValueError):
        kernels._resolve_backend("cuda")
    if HAS_NUMBA:
        name, impl = kernels._resolve_backend("numba")
        assert name == "numba"
    name, _ = kernels._resolve_backend("auto")
    assert name == ("numba" if HAS_NUMBA else "numpy")
