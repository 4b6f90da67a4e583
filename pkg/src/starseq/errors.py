"""Exception types shared across the package.

Plain domain violations (x = 0, n < 2, malformed values) raise ValueError.
The classes here mark structured outcomes a caller may want to catch and
report rather than treat as bugs.
"""
from __future__ import annotations


class StarseqError(Exception):
    """Base class for the package's structured failures."""


class TermSizeError(StarseqError):
    """A requested term would exceed the configured decimal-digit bound.

    Chain terms double in digit count per step, so generation must fail
    loudly instead of exhausting memory.
    """

    def __init__(self, x: int, k: int, max_digits: int):
        self.x = x
        self.k = k
        self.max_digits = max_digits
        super().__init__(
            f"term too large: iterate {k} of chain base {x} exceeds "
            f"{max_digits} decimal digits"
        )


class StallError(StarseqError):
    """A gross term resisted complete factorization under the budget."""

    def __init__(self, gross_index: int, term: int, cofactor: int, found=()):
        self.gross_index = gross_index
        self.term = term
        self.cofactor = cofactor
        self.found = tuple(found)
        super().__init__(
            f"factorization stalled at gross index {gross_index}: "
            f"composite cofactor with {len(str(cofactor))} digits remains"
        )


class MotherLimitError(StarseqError):
    """Occurrence search or generation hit the mother-sequence source ceiling."""

    def __init__(self, message: str, ceiling: int):
        self.ceiling = ceiling
        super().__init__(message)
