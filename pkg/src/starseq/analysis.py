"""Exact reciprocal sums and finite-depth divergence diagnostics.

All identity checks run in exact rational arithmetic (stdlib fractions),
so equality means equality. The floating-point estimates at the bottom
(Mertens-style log log n + M, and the two readings of the prime-count
approximation) are descriptive diagnostics attached to reports; at desk
scale the triple logarithm makes the asymptotics meaningless, so nothing
is ever asserted from them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from . import kernels
from .factoring import DEFAULT_BUDGET, FactorBudget
from .star_core import DEFAULT_MAX_DIGITS, star_pow
from .star_stream import StarStream, StarTerm

MEISSEL_MERTENS = 0.26149721
_E_TO_E = math.exp(math.e)  # below this, log log log is undefined or zero


def sigma_partial(values: Iterable[int]) -> Fraction:
    """Exact sum of reciprocals of a finite set of positive integers.

    Duplicates collapse (the sum is over a set). The empty set returns 0
    for the convenience of accumulators, although the function's natural
    domain starts at singletons.
    """
    total = Fraction(0)
    for y in set(values):
        if y < 1:
            raise ValueError("sigma is defined over positive integers")
        total += Fraction(1, y)
    return total


class RecipCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def recip_check(x: int, n: int, max_digits: int = DEFAULT_MAX_DIGITS) -> RecipCheck:
    """Exact check of the telescoped unit-fraction identity at depth n.

    1/x equals the sum of 1/(iterate k of x, plus one) for k < n, plus
    the tail 1/(iterate n of x). Both sides are computed independently
    and exactly.

    >>> recip_check(3, 2)
    RecipCheck(lhs=Fraction(1, 3), rhs=Fraction(1, 3), equal=True)
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = Fraction(1, x)
    rhs = Fraction(0)
    t = x
    for _ in range(n):
        rhs += Fraction(1, t + 1)
        t = t * (t + 1)
    rhs += Fraction(1, t)
    return RecipCheck(lhs, rhs, lhs == rhs)


def tail_bound(x: int, n: int, max_digits: int = DEFAULT_MAX_DIGITS) -> Fraction:
    """The exact gap 1/star_pow(x, n) left after n unit fractions.

    Strictly shrinking in n; equals 1/x minus the n-term partial sum.
    """
    return Fraction(1, star_pow(x, n, max_digits=max_digits))


@dataclass(frozen=True)
class DivergenceRow:
    """One star term's contribution to the running reciprocal sums."""

    j: int
    gross_index: int
    value: int
    prime_base: int
    sum_values: Fraction  # running sum of 1/value
    sum_bases: Fraction  # running sum of 1/prime_base


@dataclass(frozen=True)
class CorPiReadings:
    """Two readings of the prime-reciprocal approximation, side by side.

    pi_reading counts primes up to floor(log log n); ratio_reading is
    (log log n + M) / log log log n. Desk-scale n (below e**e**e) makes
    the ratio fragile, which the flag records.
    """

    n_loglog: float
    pi_reading: int
    ratio_reading: float
    fragile: bool


@dataclass(frozen=True)
class DivergenceReport:
    x: int
    depth: int
    rows: tuple[DivergenceRow, ...]
    estimate_n: Optional[int]
    mertens_estimate: Optional[float]
    cor_pi: Optional[CorPiReadings]
    stalled_at: Optional[int]


def divergence_report(
    x: int, depth: int, budget: FactorBudget = DEFAULT_BUDGET
) -> DivergenceReport:
    """Running reciprocal sums of star terms through gross index `depth`.

    The sums are exact rationals and strictly increasing; the prime-base
    sum dominates the value sum term by term since each base divides its
    value. Estimates are attached for the largest fully processed gross
    term. A stall truncates the rows and is recorded, not raised.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    stream = StarStream(x, budget=budget)
    stream.ensure_gross(depth)
    stalled_at = None
    if stream.stalled and stream.stall.gross_index <= depth:
        stalled_at = stream.stall.gross_index
    rows = []
    sum_values = Fraction(0)
    sum_bases = Fraction(0)
    last_complete = -1
    for t in stream.terms:
        if not isinstance(t, StarTerm) or t.gross_index > depth:
            break
        sum_values += Fraction(1, t.value)
        sum_bases += Fraction(1, t.pp.p)
        rows.append(
            DivergenceRow(t.position, t.gross_index, t.value, t.pp.p,
                          sum_values, sum_bases)
        )
        last_complete = max(last_complete, t.gross_index)
    estimate_n = None
    mertens = None
    cor_pi = None
    if last_complete >= 0:
        estimate_n = star_pow(x, last_complete) + 1
        if estimate_n >= 3:
            mertens = mertens_estimate(estimate_n)
        if estimate_n > _E_TO_E:
            cor_pi = cor_pi_estimate(estimate_n)
    return DivergenceReport(
        x, depth, tuple(rows), estimate_n, mertens, cor_pi, stalled_at
    )


def mertens_estimate(n: int) -> float:
    """log log n plus the Meissel-Mertens constant, natural logs.

    The classical estimate of the reciprocal sum of the primes up to n.
    Rejects n < 3, where the double logarithm is not positive.
    """
    if n < 3:
        raise ValueError("mertens_estimate needs n >= 3")
    return math.log(math.log(n)) + MEISSEL_MERTENS


def _small_prime_count(limit: int) -> int:
    if limit < 2:
        return 0
    count = 0
    for m in range(2, limit + 1):
        if all(m % d for d in range(2, int(math.isqrt(m)) + 1)):
            count += 1
    return count


def cor_pi_estimate(n: int) -> CorPiReadings:
    """Both readings of the prime-reciprocal-sum approximation at n.

    Requires n > e**e so that the triple logarithm is positive. Neither
    reading is asserted anywhere; they are reported side by side.
    """
    if n <= _E_TO_E:
        raise ValueError("cor_pi_estimate needs n > e**e")
    loglog = math.log(math.log(n))
    logloglog = math.log(loglog)
    pi_reading = _small_prime_count(math.floor(loglog))
    ratio = (loglog + MEISSEL_MERTENS) / logloglog
    fragile = n < math.exp(_E_TO_E)  # log log log n < 1
    return CorPiReadings(loglog, pi_reading, ratio, fragile)


def prime_reciprocal_sum(limit: int) -> float:
    """Float sum of 1/p over all primes p <= limit, via the sieve kernel."""
    if limit < 2:
        return 0.0
    return kernels.reciprocal_sum(kernels.primes_upto(limit))
