"""Primality testing and budget-limited factorization into prime powers.

The factor ladder is: trial division by sieved primes up to the budget's
trial bound, then perfect-power extraction, then Pollard rho with Brent
cycle detection, recursing on split factors. Runs are deterministic for a
fixed budget: the rho polynomial constant and start point are derived from
the round index, and Miller-Rabin witnesses above the deterministic range
are drawn from a generator seeded by the number under test.

A factorization that cannot be completed within budget is returned as a
partial result carrying the composite cofactor, never silently truncated.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from random import Random
from typing import NamedTuple, Optional

from . import kernels

# Miller-Rabin with the first twelve primes as witnesses is deterministic
# below this bound (about 3.3e24).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_FIXED_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROBABLE_ROUNDS = 64  # error < 4**-64 = 2**-128 for composites
_RHO_BATCH = 128

REGIME_DETERMINISTIC = "deterministic"
REGIME_PROBABILISTIC = "probabilistic"


class PrimalityResult(NamedTuple):
    is_prime: bool
    regime: str


def _mr_composite_witness(n: int, a: int, d: int, s: int) -> bool:
    """True when base a proves n composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = (x * x) % n
        if x == n - 1:
            return False
    return True


def primality(n: int) -> PrimalityResult:
    """Primality of n with the certification regime that applied.

    Below 3.3e24 the fixed-witness Miller-Rabin test is a proof. Above,
    64 rounds with witnesses seeded by n give error below 2**-128.
    """
    if n < 2:
        raise ValueError("primality is defined for n >= 2")
    if n < 4:
        return PrimalityResult(True, REGIME_DETERMINISTIC)
    if n % 2 == 0:
        return PrimalityResult(False, REGIME_DETERMINISTIC)
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_BOUND:
        for a in _MR_FIXED_WITNESSES:
            if a % n == 0:
                continue
            if _mr_composite_witness(n, a, d, s):
                return PrimalityResult(False, REGIME_DETERMINISTIC)
        return PrimalityResult(True, REGIME_DETERMINISTIC)
    rng = Random(n)
    for _ in range(_MR_PROBABLE_ROUNDS):
        a = rng.randrange(2, n - 1)
        if _mr_composite_witness(n, a, d, s):
            # a compositeness witness is a proof either way
            return PrimalityResult(False, REGIME_DETERMINISTIC)
    return PrimalityResult(True, REGIME_PROBABILISTIC)


def is_prime(n: int) -> bool:
    return primality(n).is_prime


@dataclass(frozen=True)
class FactorBudget:
    """Effort limits for the factor ladder; all fields must be positive."""

    trial_bound: int = 100_000
    rho_rounds: int = 64
    rho_iterations: int = 10_000_000

    def __post_init__(self):
        for name in ("trial_bound", "rho_rounds", "rho_iterations"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True, order=True)
class PrimePower:
    """A prime p raised to e >= 1. Producers certify primality of p."""

    p: int
    e: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("prime base must be >= 2")
        if self.e < 1:
            raise ValueError("exponent must be >= 1")

    @property
    def value(self) -> int:
        return self.p**self.e

    def __str__(self) -> str:
        return f"{self.p}^{self.e}" if self.e > 1 else str(self.p)


@dataclass(frozen=True)
class Factorization:
    """Ordered prime-power decomposition, complete or stalled-partial.

    parts ascend strictly by prime; the cofactor is present exactly when
    status is 'partial' and is then a composite remainder. The product of
    part values times the cofactor always recomposes the target.
    """

    target: int
    parts: tuple[PrimePower, ...]
    status: str
    cofactor: Optional[int] = None

    STATUS_COMPLETE = "complete"
    STATUS_PARTIAL = "partial"

    def __post_init__(self):
        if self.status not in (self.STATUS_COMPLETE, self.STATUS_PARTIAL):
            raise ValueError(f"bad status {self.status!r}")
        if (self.cofactor is not None) != (self.status == self.STATUS_PARTIAL):
            raise ValueError("cofactor must be present exactly when partial")
        if self.cofactor is not None and self.cofactor < 4:
            raise ValueError("a partial cofactor must be composite")
        for a, b in zip(self.parts, self.parts[1:]):
            if a.p >= b.p:
                raise ValueError("parts must ascend strictly by prime")
        if self.recompose() != self.target:
            raise ValueError("parts and cofactor do not recompose the target")

    @property
    def complete(self) -> bool:
        return self.status == self.STATUS_COMPLETE

    def recompose(self) -> int:
        return prod((pp.value for pp in self.parts), start=1) * (self.cofactor or 1)

    def exponent_of(self, p: int) -> int:
        for pp in self.parts:
            if pp.p == p:
                return pp.e
        return 0

    def __str__(self) -> str:
        body = " * ".join(str(pp) for pp in self.parts) or "1"
        if self.cofactor is not None:
            body += f" * [composite {self.cofactor}]"
        return f"{self.target} = {body}"


@lru_cache(maxsize=8)
def _trial_primes(bound: int) -> tuple[int, ...]:
    return tuple(int(p) for p in kernels.primes_upto(bound))


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 1."""
    if k == 1 or n < 2:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << (-(-n.bit_length() // k))  # power of two at or above the root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _perfect_power(n: int) -> Optional[tuple[int, int]]:
    """(root, k) with root**k == n and k prime, if n is a perfect power."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61):
        if (1 << k) > n:
            break
        r = _iroot(n, k)
        if r**k == n:
            return r, k
    return None


def _rho_brent(n: int, rounds: int, iterations: int) -> Optional[int]:
    """Deterministic Brent-cycle Pollard rho; a nontrivial factor or None.

    Round r uses the polynomial y*y + (r + 1) from start point r + 2, so a
    fixed budget always walks the same pseudo-random orbits.
    """
    for rnd in range(rounds):
        c = rnd + 1
        y = rnd + 2
        g = q = r = 1
        x = ys = y
        used = 0
        while g == 1 and used < iterations:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            used += r
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(_RHO_BATCH, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                used += min(_RHO_BATCH, r - k)
                g = gcd(q, n)
                k += _RHO_BATCH
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(x - ys, n)
        if 1 < g < n:
            return g
    return None


def _split(m: int, budget: FactorBudget) -> tuple[dict[int, int], list[int]]:
    """Prime exponents plus a list of opaque composite fragments of m."""
    if is_prime(m):
        return {m: 1}, []
    power = _perfect_power(m)
    if power:
        root, k = power
        sub, opaque = _split(root, budget)
        return {p: e * k for p, e in sub.items()}, opaque * k
    d = _rho_brent(m, budget.rho_rounds, budget.rho_iterations)
    if d is None:
        return {}, [m]
    left, left_op = _split(d, budget)
    right, right_op = _split(m // d, budget)
    for p, e in right.items():
        left[p] = left.get(p, 0) + e
    return left, left_op + right_op


def factor(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    """Factor n into prime powers within the given budget.

    Examples:
        factor(1807).parts -> (13, 139)
        factor(4).parts -> (2^2,)
    """
    if n < 2:
        raise ValueError("factor is defined for n >= 2")
    exponents: dict[int, int] = {}
    rem = n
    cut_early = False
    for p in _trial_primes(budget.trial_bound):
        if p * p > rem:
            cut_early = True
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            exponents[p] = e
    opaque: list[int] = []
    if rem > 1:
        if cut_early or rem <= budget.trial_bound * budget.trial_bound:
            # no prime <= sqrt(rem) divides rem, so rem is prime
            exponents[rem] = exponents.get(rem, 0) + 1
        else:
            hard, opaque = _split(rem, budget)
            for p, e in hard.items():
                exponents[p] = exponents.get(p, 0) + e
    parts = tuple(PrimePower(p, e) for p, e in sorted(exponents.items()))
    if opaque:
        return Factorization(n, parts, Factorization.STATUS_PARTIAL, prod(opaque))
    return Factorization(n, parts, Factorization.STATUS_COMPLETE)


class StallGuard(ValueError):
    def __init__(self, n: int):
        super().__init__(
            f"least prime factor of {n} not determined within budget"
        )


def least_prime_factor(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> int:
    """Smallest prime factor of n >= 2, when the budget can certify it."""
    if n < 2:
        raise ValueError("least_prime_factor is defined for n >= 2")
    f = factor(n, budget)
    if not f.parts:
        raise StallGuard(n)
    lpf = f.parts[0].p
    if not f.complete and lpf > budget.trial_bound:
        # the unfactored cofactor could hide a smaller prime
        raise StallGuard(n)
    return lpf


def as_prime_power(value: int) -> PrimePower:
    """Decompose value as p**e with p prime, or raise ValueError."""
    if value < 2:
        raise ValueError(f"{value} is not a prime power")
    for k in range(value.bit_length() - 1, 0, -1):
        r = _iroot(value, k)
        if r**k == value and is_prime(r):
            return PrimePower(r, k)
    raise ValueError(f"{value} is not a prime power")
