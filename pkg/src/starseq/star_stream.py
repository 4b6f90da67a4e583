"""Star sequences: gross terms factored into flattened prime-power streams.

A star sequence replaces each gross term with its prime powers in
ascending prime order and flattens the result. Factoring is budgeted, so
a stream can stall on a term that resists. The default policy is strict:
the stream ends at the first incompletely factored gross term, which
keeps the all-primes-distinct invariant intact. Lenient mode instead
emits the known parts plus a marked opaque cofactor and keeps going; it
exists for exploration and weakens no invariant silently because the
opaque entries are a distinct type.

Gross terms could be factored in parallel; assembly of the stream is
sequential and single-writer, and completed prefixes are safe to share.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import StallError
from .factoring import (
    DEFAULT_BUDGET,
    FactorBudget,
    Factorization,
    PrimePower,
    factor,
    least_prime_factor,
)
from .star_core import DEFAULT_MAX_DIGITS, GrossSeq, star_pow

STRICT = "strict"
LENIENT = "lenient"


@dataclass(frozen=True)
class StarTerm:
    """One prime power of one gross term, placed in the flattened stream."""

    pp: PrimePower
    gross_index: int
    position: int

    @property
    def value(self) -> int:
        return self.pp.value

    def __str__(self) -> str:
        return str(self.pp)


@dataclass(frozen=True)
class OpaqueCofactor:
    """Unfactored composite remainder emitted only in lenient mode."""

    value: int
    gross_index: int
    position: int

    def __str__(self) -> str:
        return f"[composite {self.value}]"


StreamItem = Union[StarTerm, OpaqueCofactor]


@dataclass(frozen=True)
class StallInfo:
    gross_index: int
    term: int
    cofactor: int
    parts_found: tuple[PrimePower, ...]


class StarStream:
    """Lazily factored star sequence of one base.

    terms grows as gross terms are factored; frontier is the next gross
    index to factor; stalled is set when the frontier term resisted the
    budget (in strict mode the stream then stops for good).
    """

    def __init__(
        self,
        base: int,
        budget: FactorBudget = DEFAULT_BUDGET,
        mode: str = STRICT,
        max_digits: int = DEFAULT_MAX_DIGITS,
    ):
        if mode not in (STRICT, LENIENT):
            raise ValueError(f"mode must be '{STRICT}' or '{LENIENT}'")
        self.base = base
        self.budget = budget
        self.mode = mode
        self.terms: list[StreamItem] = []
        self.frontier = 0
        self.stalled = False
        self.stall: Optional[StallInfo] = None
        self._gross = GrossSeq(base, max_digits=max_digits)
        self._factorizations: dict[int, Factorization] = {}

    def advance(self) -> bool:
        """Factor the next gross term and append its parts. False on stall."""
        if self.stalled and self.mode == STRICT:
            return False
        k = self.frontier
        term = self._gross.term(k)
        f = factor(term, self.budget)
        self._factorizations[k] = f
        if not f.complete:
            self.stalled = True
            self.stall = StallInfo(k, term, f.cofactor, f.parts)
            if self.mode == STRICT:
                return False
        for pp in f.parts:
            self.terms.append(StarTerm(pp, k, len(self.terms)))
        if not f.complete and self.mode == LENIENT:
            self.terms.append(OpaqueCofactor(f.cofactor, k, len(self.terms)))
        self.frontier = k + 1
        return True

    def ensure_terms(self, count: int) -> None:
        while len(self.terms) < count:
            if not self.advance():
                return

    def ensure_gross(self, k_max: int) -> None:
        """Factor every gross term with index <= k_max (or stall trying)."""
        while self.frontier <= k_max:
            if not self.advance():
                return

    def take(self, count: int) -> list[StreamItem]:
        self.ensure_terms(count)
        return self.terms[:count]

    def factorization_of(self, k: int) -> Factorization:
        self.ensure_gross(k)
        if k not in self._factorizations:
            raise StallError(
                self.stall.gross_index, self.stall.term, self.stall.cofactor,
                self.stall.parts_found,
            )
        return self._factorizations[k]


def star_prefix(
    x: int, count: int, budget: FactorBudget = DEFAULT_BUDGET
) -> list[StarTerm]:
    """First `count` star terms of x, or fewer if factoring stalls.

    >>> [str(t) for t in star_prefix(1, 7)]
    ['2', '3', '7', '43', '13', '139', '3263443']
    """
    stream = StarStream(x, budget=budget, mode=STRICT)
    return stream.take(count)  # type: ignore[return-value]


def term_set(x: int, k_max: int, budget: FactorBudget = DEFAULT_BUDGET) -> set[int]:
    """Values of the star terms coming from gross indices 0..k_max.

    Raises StallError when some gross term through k_max does not factor
    completely under the budget.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    stream = StarStream(x, budget=budget, mode=STRICT)
    stream.ensure_gross(k_max)
    if stream.stalled and stream.stall.gross_index <= k_max:
        s = stream.stall
        raise StallError(s.gross_index, s.term, s.cofactor, s.parts_found)
    return {
        t.value for t in stream.terms
        if isinstance(t, StarTerm) and t.gross_index <= k_max
    }


def witness_prime(x: int, budget: FactorBudget = DEFAULT_BUDGET) -> int:
    """A prime dividing no gross term of x.

    For x = 1 that is 11 (every prime factor of a term of the 1-chain is
    3 or 1 mod 6). For x > 1 any prime factor of x works, since x is
    coprime to every term of its own chain; the least is chosen so runs
    are deterministic.
    """
    if x < 1:
        raise ValueError("base must be >= 1")
    if x == 1:
        return 11
    return least_prime_factor(x, budget)


def verify_witness(x: int, k_max: int, budget: FactorBudget = DEFAULT_BUDGET) -> bool:
    """Check by modular reduction that the witness divides no term 0..k_max.

    No factoring: the chain is iterated mod the witness prime.
    """
    p = witness_prime(x, budget)
    t = x % p
    for _ in range(k_max + 1):
        if (t + 1) % p == 0:
            return False
        t = (t * t + t) % p
    return True


ODONI_OK = "ok"
ODONI_ANNOTATED = "annotated"
ODONI_VIOLATION = "violation"


@dataclass(frozen=True)
class OdoniEntry:
    p: int
    gross_index: int
    residue_mod_6: int
    status: str
    note: str = ""


@dataclass(frozen=True)
class OdoniReport:
    """Residues mod 6 of the primes found in the 1-chain.

    Expected picture: every prime is 3 or 1 mod 6. The prime 2 appears
    only as the opening term of the chain itself and is annotated, not
    flagged, since the residue constraint concerns the later products.
    """

    k_max: int
    entries: tuple[OdoniEntry, ...]
    stalled_at: Optional[int] = None

    @property
    def violations(self) -> tuple[OdoniEntry, ...]:
        return tuple(e for e in self.entries if e.status == ODONI_VIOLATION)

    @property
    def ok(self) -> bool:
        return not self.violations


def odoni_residue_check(
    k_max: int, budget: FactorBudget = DEFAULT_BUDGET
) -> OdoniReport:
    """Classify every prime of the 1-chain terms 0..k_max by residue mod 6."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    stream = StarStream(1, budget=budget, mode=STRICT)
    stream.ensure_gross(k_max)
    stalled_at = None
    if stream.stalled and stream.stall.gross_index <= k_max:
        stalled_at = stream.stall.gross_index
    entries = []
    for t in stream.terms:
        if t.gross_index > k_max:
            break
        p = t.pp.p
        if p == 2:
            status, note = ODONI_ANNOTATED, (
                "the opening term of the chain is 2 itself; the residue "
                "constraint concerns primes of the later product terms"
            )
        elif p == 3 or p % 6 == 1:
            status, note = ODONI_OK, ""
        else:
            status, note = ODONI_VIOLATION, "odd prime > 3 not 1 mod 6"
        entries.append(OdoniEntry(p, t.gross_index, p % 6, status, note))
    return OdoniReport(k_max, tuple(entries), stalled_at)


def star_pow_factor(
    x: int, k: int, budget: FactorBudget = DEFAULT_BUDGET
) -> Factorization:
    """Factorization of star_pow(x, k) assembled from its chain pieces.

    star_pow(x, k) equals x times the product of the gross terms of x
    with indices 0..k-1, so its factorization is the merge of the piece
    factorizations. The k-th iterate itself is never factored directly,
    which keeps this feasible long after the iterate has grown huge.
    Partial piece factorizations propagate as a partial result.
    """
    if x < 1:
        raise ValueError("base must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    exponents: dict[int, int] = {}
    cofactor = 1
    pieces = []
    if x >= 2:
        pieces.append(factor(x, budget))
    gross = GrossSeq(x)
    for j in range(k):
        pieces.append(factor(gross.term(j), budget))
    for f in pieces:
        for pp in f.parts:
            exponents[pp.p] = exponents.get(pp.p, 0) + pp.e
        if not f.complete:
            cofactor *= f.cofactor
    parts = tuple(PrimePower(p, e) for p, e in sorted(exponents.items()))
    target = star_pow(x, k)
    if cofactor > 1:
        return Factorization(target, parts, Factorization.STATUS_PARTIAL, cofactor)
    return Factorization(target, parts, Factorization.STATUS_COMPLETE)


@dataclass(frozen=True)
class ExtremeRow:
    gross_index: int
    largest: PrimePower
    smallest: PrimePower


@dataclass(frozen=True)
class ExtremeReport:
    """Per-term largest and smallest exactly-dividing prime powers.

    sum_largest and sum_smallest are the exact reciprocal sums of the
    recorded prime-power values; they are evidence about convergence
    questions, never a verdict. stalled_at marks a truncated report.
    """

    x: int
    k_max: int
    rows: tuple[ExtremeRow, ...]
    sum_largest: Fraction
    sum_smallest: Fraction
    stalled_at: Optional[int] = None


def extreme_sums(
    x: int, k_max: int, budget: FactorBudget = DEFAULT_BUDGET
) -> ExtremeReport:
    """Largest/smallest prime-power parts per gross term, with exact sums."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    stream = StarStream(x, budget=budget, mode=STRICT)
    stream.ensure_gross(k_max)
    stalled_at = None
    if stream.stalled and stream.stall.gross_index <= k_max:
        stalled_at = stream.stall.gross_index
    rows = []
    sum_largest = Fraction(0)
    sum_smallest = Fraction(0)
    by_index: dict[int, list[PrimePower]] = {}
    for t in stream.terms:
        if t.gross_index <= k_max:
            by_index.setdefault(t.gross_index, []).append(t.pp)
    for j in sorted(by_index):
        parts = by_index[j]  # ascending by prime already
        small, large = parts[0], parts[-1]
        rows.append(ExtremeRow(j, large, small))
        sum_largest += Fraction(1, large.value)
        sum_smallest += Fraction(1, small.value)
    return ExtremeReport(x, k_max, tuple(rows), sum_largest, sum_smallest, stalled_at)


def squarefree_scan(
    x: int, k_max: int, budget: FactorBudget = DEFAULT_BUDGET
) -> list[tuple[int, PrimePower]]:
    """Every exponent >= 2 among the gross-term factorizations 0..k_max.

    An empty list is evidence (not proof) of squarefreeness through the
    horizon. Raises StallError if some term through k_max resisted; the
    partial findings ride on the exception's `found` attribute.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    stream = StarStream(x, budget=budget, mode=STRICT)
    stream.ensure_gross(k_max)
    hits = [
        (t.gross_index, t.pp)
        for t in stream.terms
        if t.gross_index <= k_max and t.pp.e >= 2
    ]
    if stream.stalled and stream.stall.gross_index <= k_max:
        s = stream.stall
        raise StallError(s.gross_index, s.term, s.cofactor, tuple(hits))
    return hits
