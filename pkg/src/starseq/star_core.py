"""The star map x -> x(x+1), its iterates, and gross sequences.

The gross sequence of a base x >= 1 is the chain of iterate-plus-one
values x+1, star(x)+1, star(star(x))+1, ... It can be produced two
independent ways: by iterating the map itself, or by the running-product
recursion (each new term is one plus the product of the base and all
earlier terms). The two recursions are kept separate so that their
agreement is a real cross-check, not a tautology.

Terms double in decimal length per step, so every generator takes a digit
bound and fails loudly with TermSizeError instead of exhausting memory.
All functions are pure; GrossSeq memoizes append-only and is safe for
concurrent reads once a term is published.
"""
from __future__ import annotations

from math import prod
from typing import Iterable, Optional

from .errors import TermSizeError
from .factoring import is_prime

DEFAULT_MAX_DIGITS = 100_000
DEFAULT_SUFFIX_DEPTH = 12

# bits per decimal digit, rounded up a touch so the guard never under-counts
_BITS_PER_DIGIT = 3.3219280948873626


def _digit_guard(value: int, x: int, k: int, max_digits: int) -> None:
    if value.bit_length() > int(max_digits * _BITS_PER_DIGIT) + 1:
        raise TermSizeError(x, k, max_digits)


def _require_base(x: int) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise ValueError(f"base must be an integer >= 1, got {x!r}")


def star(x: int) -> int:
    """One application of the map: star(x) = x*(x+1).

    The domain is the positive integers; 0 is rejected.

    >>> star(1), star(6)
    (2, 42)
    """
    _require_base(x)
    return x * (x + 1)


def star_pow(x: int, k: int, max_digits: int = DEFAULT_MAX_DIGITS) -> int:
    """k-fold application of the map; star_pow(x, 0) == x.

    >>> star_pow(1, 3)
    42
    """
    _require_base(x)
    if k < 0:
        raise ValueError("iteration count must be >= 0")
    t = x
    for i in range(k):
        t = t * (t + 1)
        _digit_guard(t, x, i + 1, max_digits)
    return t


def gross_prefix(x: int, count: int, max_digits: int = DEFAULT_MAX_DIGITS) -> list[int]:
    """First `count` gross terms of x: star_pow(x, k) + 1 for k = 0..count-1.

    >>> gross_prefix(1, 6)
    [2, 3, 7, 43, 1807, 3263443]
    >>> gross_prefix(3, 5)
    [4, 13, 157, 24493, 599882557]
    """
    _require_base(x)
    if count < 1:
        raise ValueError("count must be >= 1")
    terms = []
    t = x
    for k in range(count):
        _digit_guard(t + 1, x, k, max_digits)
        terms.append(t + 1)
        t = t * (t + 1)
    return terms


def gross_via_product(
    x: int, count: int, max_digits: int = DEFAULT_MAX_DIGITS
) -> list[int]:
    """First `count` gross terms via the running-product recursion.

    Seeding the history with x alone, each new term is one plus the
    product of the whole history so far. Term-by-term equal to
    gross_prefix; computed independently of the map iteration.
    """
    _require_base(x)
    if count < 1:
        raise ValueError("count must be >= 1")
    terms = []
    running = x
    for k in range(count):
        w = running + 1
        _digit_guard(w, x, k, max_digits)
        terms.append(w)
        running *= w
    return terms


def suffix_offset(
    x: int,
    y: int,
    depth: int = DEFAULT_SUFFIX_DEPTH,
    max_digits: int = DEFAULT_MAX_DIGITS,
) -> Optional[int]:
    """Least k <= depth with star_pow(x, k) + 1 == y + 1, else None.

    When an offset k is found, the gross sequence of y is the suffix of
    the gross sequence of x starting at index k. Membership in the full
    infinite chain is only semi-decidable, so absence within `depth` is
    reported as None rather than as an error.
    """
    _require_base(x)
    _require_base(y)
    target = y + 1
    t = x
    for k in range(depth + 1):
        if t + 1 == target:
            return k
        if t + 1 > target:
            return None  # the chain is strictly increasing
        t = t * (t + 1)
        _digit_guard(t, x, k + 1, max_digits)
    return None


def euclid_seed(primes: Iterable[int]) -> int:
    """One plus the product of the given distinct primes.

    Intended as a chain base for hunting new primes beyond a known set.

    >>> euclid_seed([2, 3])
    7
    """
    entries = list(primes)
    if not entries:
        raise ValueError("at least one prime is required")
    seen = set()
    for p in entries:
        if p < 2 or not is_prime(p):
            raise ValueError(f"not prime: {p}")
        if p in seen:
            raise ValueError(f"duplicate prime: {p}")
        seen.add(p)
    return 1 + prod(entries)


class GrossSeq:
    """Memoized gross sequence of one base, grown by map iteration.

    Single-writer append-only cache: published terms are never mutated,
    so concurrent readers are safe. The product recursion deliberately
    does not share this cache (see gross_via_product).
    """

    def __init__(self, base: int, max_digits: int = DEFAULT_MAX_DIGITS):
        _require_base(base)
        self.base = base
        self.max_digits = max_digits
        self._iterate = base  # star_pow(base, k) for k = len(_terms)
        self._terms: list[int] = []

    def term(self, k: int) -> int:
        """The gross term at index k, extending the cache as needed."""
        if k < 0:
            raise ValueError("index must be >= 0")
        while len(self._terms) <= k:
            t = self._iterate
            _digit_guard(t + 1, self.base, len(self._terms), self.max_digits)
            self._terms.append(t + 1)
            self._iterate = t * (t + 1)
        return self._terms[k]

    def prefix(self, count: int) -> list[int]:
        if count < 1:
            raise ValueError("count must be >= 1")
        self.term(count - 1)
        return self._terms[:count]

    def known(self) -> list[int]:
        """Terms computed so far, without extending."""
        return list(self._terms)
