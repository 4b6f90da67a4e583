"""The mother sequence: factorizations of 2, 3, 4, ... flattened in order.

Each integer n >= 2 contributes its prime powers in ascending prime
order; concatenating the contributions gives the mother sequence. Terms
are identified formally by their global index, not by value: the value 2
recurs at indices 0, 4, 9, 15, 21, ... and every prime power recurs
infinitely often.

Two access paths are kept consistent with each other:

  * a materialized prefix, generated lazily in source chunks through the
    bulk factorization kernel, for prefix listings;
  * an analytic occurrence enumerator used by occurrence search, which
    never materializes distant terms. It relies on the identity that the
    number of terms contributed by all sources below n equals
    sum(floor((n-1)/p)) over primes p <= n-1, i.e. the cumulative count
    of distinct prime factors.

Occurrence search would always terminate mathematically; the runtime
still bounds it with a source ceiling so a wrong query produces a
diagnostic instead of an unbounded scan. Generation is single-writer
append-only; published terms and occurrence lists are immutable.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .errors import MotherLimitError
from .factoring import PrimePower

DEFAULT_SOURCE_CEILING = 100_000_000
_CHUNK_SOURCES = 8_192


@dataclass(frozen=True)
class MotherTerm:
    """One formally distinct term: global index, value, and provenance."""

    index: int
    value: PrimePower
    source: int
    slot: int

    def __str__(self) -> str:
        return str(self.value)


class _OccurrenceState:
    """Ascending occurrence indices of one value, extended on demand."""

    __slots__ = ("indices", "next_multiplier")

    def __init__(self):
        self.indices: list[int] = []
        self.next_multiplier = 1


class MotherSequence:
    """Lazy, chunk-memoized access to the mother sequence."""

    def __init__(self, source_ceiling: int = DEFAULT_SOURCE_CEILING):
        if source_ceiling < 2:
            raise ValueError("source ceiling must be >= 2")
        self.source_ceiling = source_ceiling
        self._terms: list[MotherTerm] = []
        self._next_source = 2
        self._occ: dict[PrimePower, _OccurrenceState] = {}
        self._primes = np.empty(0, dtype=np.int64)
        self._prime_limit = 0
        self._cum_cache: dict[int, int] = {}
        # ranking a prime inside a source never needs trial primes beyond
        # the cube root of the ceiling (see _slot_of), 1e4 floor for slack
        slot_limit = max(10_000, round(source_ceiling ** (1 / 3)) + 2)
        self._slot_primes = [int(p) for p in kernels.primes_upto(slot_limit)]

    # -- materialized prefix ------------------------------------------------

    def _extend_terms(self) -> None:
        lo = self._next_source
        if lo > self.source_ceiling:
            raise MotherLimitError(
                f"materialized prefix would need sources beyond the ceiling "
                f"{self.source_ceiling}",
                self.source_ceiling,
            )
        hi = min(lo + _CHUNK_SOURCES, self.source_ceiling + 1)
        ns, ps, es = kernels.factor_range(lo, hi)
        idx = len(self._terms)
        current = None
        slot = 0
        for n, p, e in zip(ns.tolist(), ps.tolist(), es.tolist()):
            slot = slot + 1 if n == current else 0
            current = n
            self._terms.append(MotherTerm(idx, PrimePower(p, e), n, slot))
            idx += 1
        self._next_source = hi

    def prefix(self, count: int) -> list[MotherTerm]:
        """First `count` terms, indices 0..count-1."""
        if count < 1:
            raise ValueError("count must be >= 1")
        while len(self._terms) < count:
            self._extend_terms()
        return self._terms[:count]

    def term(self, index: int) -> MotherTerm:
        if index < 0:
            raise ValueError("index must be >= 0")
        while len(self._terms) <= index:
            self._extend_terms()
        return self._terms[index]

    def value_at(self, index: int) -> PrimePower:
        return self.term(index).value

    # -- analytic occurrence machinery --------------------------------------

    def _ensure_primes(self, n: int) -> None:
        if self._prime_limit >= n:
            return
        target = max(n, 2 * self._prime_limit, 1 << 16)
        self._primes = kernels.primes_upto(target)
        self._prime_limit = target

    def _cum_omega(self, n: int) -> int:
        """Total terms contributed by sources 2..n: sum of floor(n/p)."""
        if n < 2:
            return 0
        hit = self._cum_cache.get(n)
        if hit is not None:
            return hit
        self._ensure_primes(n)
        total = kernels.floordiv_sum(n, self._primes)
        self._cum_cache[n] = total
        return total

    def index_of_source(self, source: int) -> int:
        """Global index of the first term contributed by `source`."""
        if source < 2:
            raise ValueError("sources start at 2")
        return self._cum_omega(source - 1)

    def _slot_of(self, source: int, value: PrimePower) -> int:
        """Rank of value.p among the distinct primes of `source`."""
        p = value.p
        m = source // value.value
        count = 0
        for q in self._slot_primes:
            if q >= p:
                return count  # remaining factors of m are all >= p
            if q * q > m:
                break
            if m % q == 0:
                count += 1
                while m % q == 0:
                    m //= q
        # loop left m equal to 1 or to a single prime
        if 1 < m < p:
            count += 1
        return count

    def _occ_state(self, value: PrimePower) -> _OccurrenceState:
        state = self._occ.get(value)
        if state is None:
            state = _OccurrenceState()
            self._occ[value] = state
        return state

    def _extend_occurrences(self, value: PrimePower) -> None:
        """Append the next occurrence index of `value` to its cache."""
        state = self._occ_state(value)
        v, p = value.value, value.p
        k = state.next_multiplier
        while k % p == 0:
            k += 1
        n = k * v
        if n > self.source_ceiling:
            raise MotherLimitError(
                f"occurrence search for {value} passed the source ceiling "
                f"{self.source_ceiling}",
                self.source_ceiling,
            )
        index = self._cum_omega(n - 1) + self._slot_of(n, value)
        state.indices.append(index)
        state.next_multiplier = k + 1

    def occurrences(self, value: PrimePower, limit: int) -> list[int]:
        """First `limit` indices whose term numerically equals `value`.

        >>> MotherSequence().occurrences(PrimePower(2, 1), 5)
        [0, 4, 9, 15, 21]
        """
        if limit < 1:
            raise ValueError("limit must be >= 1")
        state = self._occ_state(value)
        while len(state.indices) < limit:
            self._extend_occurrences(value)
        return state.indices[:limit]

    def next_matching(
        self,
        value: PrimePower,
        excluded: Iterable[int] = (),
        floor: Optional[int] = None,
    ) -> int:
        """Least index t with term value `value`, t not excluded, t > floor."""
        excluded = excluded if isinstance(excluded, (set, frozenset)) else set(excluded)
        state = self._occ_state(value)
        start = 0
        if floor is not None:
            start = bisect_right(state.indices, floor)
        pos = start
        while True:
            while pos >= len(state.indices):
                self._extend_occurrences(value)
            t = state.indices[pos]
            if t not in excluded and (floor is None or t > floor):
                return t
            pos += 1


_default: Optional[MotherSequence] = None


def default_mother() -> MotherSequence:
    """Shared lazily created instance used by the module-level helpers."""
    global _default
    if _default is None:
        _default = MotherSequence()
    return _default


def mother_prefix(count: int, mother: Optional[MotherSequence] = None) -> list[MotherTerm]:
    return (mother or default_mother()).prefix(count)


def occurrences(
    value: PrimePower, limit: int, mother: Optional[MotherSequence] = None
) -> list[int]:
    return (mother or default_mother()).occurrences(value, limit)


def next_matching(
    value: PrimePower,
    excluded: Iterable[int] = (),
    floor: Optional[int] = None,
    mother: Optional[MotherSequence] = None,
) -> int:
    return (mother or default_mother()).next_matching(value, excluded, floor)
