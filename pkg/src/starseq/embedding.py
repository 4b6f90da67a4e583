"""Parallel embeddings: capturing copies of a prime-power sequence in M.

The construction realizes a target sequence eta as many pairwise formally
disjoint subsequences of the mother sequence at once. Captures are
scheduled along antidiagonals of the (row, position) grid: within the
diagonal row + position = d, rows ascend, so every row keeps receiving
terms and row 0 stays ahead. Each capture takes the smallest mother index
holding the needed value that has not been captured by any row yet.

Two modes exist because "take the smallest uncaptured index" can hand a
row indices that are not increasing (a value whose occurrences start late
can be followed by one that started early). Literal mode reproduces that
rule exactly. Monotone mode additionally requires each row's indices to
increase, which every-value-recurs-infinitely-often makes possible.
Neither reading is asserted as the right one; both are checkable.

The scheduler is strictly sequential by definition; finished states are
immutable in practice and safe to share.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import MotherLimitError
from .factoring import PrimePower, as_prime_power, is_prime
from .mother import MotherSequence, default_mother

LITERAL = "literal"
MONOTONE = "monotone"


def diagonal_pair(step: int) -> tuple[int, int]:
    """The step-th (row, position) pair of the antidiagonal schedule.

    >>> [diagonal_pair(s) for s in range(6)]
    [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    """
    if step < 0:
        raise ValueError("step must be >= 0")
    d = 0
    while (d + 1) * (d + 2) // 2 <= step:
        d += 1
    u = step - d * (d + 1) // 2
    return u, d - u


@dataclass(frozen=True)
class CaptureStep:
    """One capture: which row and position took which mother index."""

    step: int
    u: int
    v: int
    captured_index: int
    value: PrimePower

    @property
    def pair(self) -> tuple[int, int]:
        return self.u, self.v


@dataclass
class EmbeddingState:
    """Finite prefix of an embedding run, with its full capture log."""

    mode: str
    eta_terms: list[PrimePower]
    eta_finite: bool
    rows: list[list[CaptureStep]] = field(default_factory=list)
    steps: list[CaptureStep] = field(default_factory=list)
    captured: set[int] = field(default_factory=set)
    diagnostic: Optional[str] = None

    def captured_indices(self) -> list[int]:
        return [s.captured_index for s in self.steps]

    def row_indices(self, u: int) -> list[int]:
        return [s.captured_index for s in self.rows[u]]


class _EtaSource:
    """Materializes and certifies eta terms on demand.

    Accepts PrimePower entries, plain integers (decomposed and certified),
    or an iterator producing either. A non-prime-power entry is rejected
    naming the offending term. A finite source has a fixed length; an
    iterator source freezes its length when exhausted.
    """

    def __init__(self, eta: Union[Sequence, Iterator, Iterable]):
        self._terms: list[PrimePower] = []
        self._iter: Optional[Iterator] = None
        self._length: Optional[int] = None
        if isinstance(eta, Sequence):
            for item in eta:
                self._terms.append(self._certify(item))
            self._length = len(self._terms)
        else:
            self._iter = iter(eta)

    @staticmethod
    def _certify(item) -> PrimePower:
        if isinstance(item, PrimePower):
            if not is_prime(item.p):
                raise ValueError(f"eta term {item} has a composite base")
            return item
        if isinstance(item, int):
            try:
                return as_prime_power(item)
            except ValueError:
                raise ValueError(
                    f"eta term {item} is not a power of a prime"
                ) from None
        raise ValueError(f"eta term {item!r} is neither an int nor a prime power")

    def has(self, v: int) -> bool:
        while self._length is None and len(self._terms) <= v:
            assert self._iter is not None
            try:
                self._terms.append(self._certify(next(self._iter)))
            except StopIteration:
                self._length = len(self._terms)
        return v < len(self._terms)

    def term(self, v: int) -> PrimePower:
        if not self.has(v):
            raise IndexError(v)
        return self._terms[v]

    @property
    def finite(self) -> bool:
        return self._length is not None

    @property
    def terms(self) -> list[PrimePower]:
        return list(self._terms)


def _schedule(source: _EtaSource) -> Iterator[tuple[int, int]]:
    """Antidiagonal pairs, skipping positions the eta source cannot fill."""
    d = 0
    while True:
        for u in range(d + 1):
            v = d - u
            if source.has(v):
                yield u, v
        d += 1


def embed(
    eta,
    steps: int,
    mode: str = MONOTONE,
    mother: Optional[MotherSequence] = None,
) -> EmbeddingState:
    """Run `steps` captures of eta against the mother sequence.

    eta may be a finite sequence or a lazy iterator of prime powers (or
    plain prime-power integers). A finite eta cycles the schedule over
    its positions only. identical inputs always produce identical states;
    hitting the mother source ceiling truncates the run and records a
    diagnostic instead of raising.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if mode not in (LITERAL, MONOTONE):
        raise ValueError(f"mode must be '{LITERAL}' or '{MONOTONE}'")
    source = _EtaSource(eta)
    if not source.has(0):
        raise ValueError("eta has no terms")
    mom = mother if mother is not None else default_mother()
    state = EmbeddingState(mode=mode, eta_terms=[], eta_finite=source.finite)
    pairs = _schedule(source)
    for step_no in range(steps):
        u, v = next(pairs)
        value = source.term(v)
        floor = None
        if mode == MONOTONE and u < len(state.rows) and state.rows[u]:
            floor = state.rows[u][-1].captured_index
        try:
            t = mom.next_matching(value, state.captured, floor)
        except MotherLimitError as exc:
            state.diagnostic = f"truncated at step {step_no}: {exc}"
            break
        capture = CaptureStep(step_no, u, v, t, value)
        if u == len(state.rows):
            state.rows.append([])
        state.rows[u].append(capture)
        state.steps.append(capture)
        state.captured.add(t)
    state.eta_terms = source.terms
    state.eta_finite = source.finite
    return state


def verify_pfd(state: EmbeddingState) -> bool:
    """True iff no mother index is captured by two different steps.

    Scans the capture log itself rather than trusting the captured set.
    """
    seen: set[int] = set()
    for row in state.rows:
        for step in row:
            if step.captured_index in seen:
                return False
            seen.add(step.captured_index)
    return True


def verify_numeric(state: EmbeddingState) -> bool:
    """True iff every row is, term by term, a numerical copy of eta."""
    for row in state.rows:
        for position, step in enumerate(row):
            if step.v != position:
                return False
            if position >= len(state.eta_terms):
                return False
            if step.value != state.eta_terms[position]:
                return False
    return True


@dataclass(frozen=True)
class PartitionReport:
    """Coverage evidence from embedding the mother sequence into itself.

    Full coverage is a limit statement; a finite run only reports the
    trend (covered fraction below the capture frontier) plus the hard
    fact that no index was captured twice.
    """

    steps: int
    frontier: int
    captured_count: int
    covered_below_frontier: int
    coverage_fraction: float
    duplicates: tuple[int, ...]

    @property
    def disjoint(self) -> bool:
        return not self.duplicates


def partition_check(
    steps: int, mother: Optional[MotherSequence] = None
) -> PartitionReport:
    """Embed M into itself (literal mode) and report index coverage."""
    mom = mother if mother is not None else default_mother()

    def eta_of_mother() -> Iterator[PrimePower]:
        v = 0
        while True:
            yield mom.value_at(v)
            v += 1

    state = embed(eta_of_mother(), steps, mode=LITERAL, mother=mom)
    log = state.captured_indices()
    seen: set[int] = set()
    dup: set[int] = set()
    for t in log:
        (dup if t in seen else seen).add(t)
    duplicates = tuple(sorted(dup))
    frontier = max(log) + 1 if log else 0
    covered = sum(1 for t in set(log) if t < frontier)
    fraction = covered / frontier if frontier else 1.0
    return PartitionReport(
        steps=len(log),
        frontier=frontier,
        captured_count=len(set(log)),
        covered_below_frontier=covered,
        coverage_fraction=fraction,
        duplicates=duplicates,
    )
