"""starseq: the star map x -> x(x+1) and everything it drags along.

Gross chains and their prime-power star sequences, the mother sequence
with formal term identity, parallel embeddings, exact unit-fraction
identities, and finite-depth divergence diagnostics. Exact integer and
rational arithmetic throughout; floating point appears only in clearly
labelled descriptive estimates.
"""
from __future__ import annotations

from .analysis import (
    CorPiReadings,
    DivergenceReport,
    DivergenceRow,
    RecipCheck,
    cor_pi_estimate,
    divergence_report,
    mertens_estimate,
    prime_reciprocal_sum,
    recip_check,
    sigma_partial,
    tail_bound,
)
from .config import Config
from .embedding import (
    CaptureStep,
    EmbeddingState,
    PartitionReport,
    diagonal_pair,
    embed,
    partition_check,
    verify_numeric,
    verify_pfd,
)
from .errors import MotherLimitError, StallError, StarseqError, TermSizeError
from .factoring import (
    DEFAULT_BUDGET,
    FactorBudget,
    Factorization,
    PrimePower,
    as_prime_power,
    factor,
    is_prime,
    primality,
)
from .mother import MotherSequence, MotherTerm, mother_prefix, next_matching, occurrences
from .oeis import BFile, OeisReport, oeis_check
from .star_core import (
    GrossSeq,
    euclid_seed,
    gross_prefix,
    gross_via_product,
    star,
    star_pow,
    suffix_offset,
)
from .star_stream import (
    ExtremeReport,
    OdoniReport,
    StarStream,
    StarTerm,
    extreme_sums,
    odoni_residue_check,
    squarefree_scan,
    star_pow_factor,
    star_prefix,
    term_set,
    verify_witness,
    witness_prime,
)

__version__ = "0.1.0"

__all__ = [
    "BFile",
    "CaptureStep",
    "Config",
    "CorPiReadings",
    "DEFAULT_BUDGET",
    "DivergenceReport",
    "DivergenceRow",
    "EmbeddingState",
    "ExtremeReport",
    "FactorBudget",
    "Factorization",
    "GrossSeq",
    "MotherLimitError",
    "MotherSequence",
    "MotherTerm",
    "OdoniReport",
    "OeisReport",
    "PartitionReport",
    "PrimePower",
    "RecipCheck",
    "StallError",
    "StarseqError",
    "StarStream",
    "StarTerm",
    "TermSizeError",
    "as_prime_power",
    "cor_pi_estimate",
    "diagonal_pair",
    "divergence_report",
    "embed",
    "euclid_seed",
    "extreme_sums",
    "factor",
    "gross_prefix",
    "gross_via_product",
    "is_prime",
    "mertens_estimate",
    "mother_prefix",
    "next_matching",
    "occurrences",
    "odoni_residue_check",
    "oeis_check",
    "partition_check",
    "primality",
    "prime_reciprocal_sum",
    "recip_check",
    "sigma_partial",
    "squarefree_scan",
    "star",
    "star_pow",
    "star_pow_factor",
    "star_prefix",
    "suffix_offset",
    "tail_bound",
    "term_set",
    "verify_numeric",
    "verify_pfd",
    "verify_witness",
    "witness_prime",
]
